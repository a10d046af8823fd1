#ifndef PDR_CLI_HPP
#define PDR_CLI_HPP

#include <string>
#include <vector>

namespace pdr {

// Global knobs shared by the subcommands.
struct CliConfig {
  std::size_t cap = 0;       // recon order cap, 0 = library default
  int workers = 0;           // 0 = leave the OpenMP default alone
  std::string format;        // dot | json | edgelist | table, "" = per-command default
  std::string output;        // output path, "" = stdout
};

// Runs one command line (argv without the program name) and returns the
// process exit code: 0 success, 1 failed check or negative query,
// 2 usage or input error, 3 resource cap exceeded.
int dispatch(const std::vector<std::string>& args);
int dispatch(int argc, char** argv);

}  // namespace pdr

#endif
