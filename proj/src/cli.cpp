#include "pdr/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pdr/graph.hpp"
#include "pdr/iso.hpp"
#include "pdr/kernels.hpp"
#include "pdr/properties.hpp"
#include "pdr/recon.hpp"
#include "pdr/verify.hpp"

namespace pdr {

namespace {

int cap_exit_code(Errc c) {
  switch (c) {
    case Errc::ReconTooLarge:
    case Errc::OrderTooLargeForExhaustive:
    case Errc::TooLargeForCanonical:
    case Errc::OrderTooLargeForEnumeration:
    case Errc::SearchTooLarge:
      return 3;
    default:
      return 2;  // bad input of one kind or another
  }
}

// "-" reads stdin, an existing file is parsed, anything else is a family spec
Graph load_graph(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return parse_graph(ss.str());
  }
  std::ifstream in(arg);
  if (in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
  }
  return generate(arg);
}

void emit(const CliConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot open " + cfg.output);
  out << text;
}

std::string graph_text(const Graph& g, const std::string& format) {
  if (format == "json") return to_json(g);
  if (format == "dot") return to_dot(g);
  if (format == "table") {
    GraphStats st = analyze(g);
    std::ostringstream os;
    os << "name " << g.name() << "\norder " << g.n() << "\nsize "
       << g.ecount() << "\ndegrees " << st.min_degree << ".." << st.max_degree
       << "\ncomponents " << st.component_count << "\nbipartite "
       << (st.bipartite ? "true" : "false") << '\n';
    return os.str();
  }
  return to_edge_list(g);
}

std::string set_line(Mask m) {
  std::string s;
  for (Mask r = m; r; r &= r - 1) {
    if (!s.empty()) s += ' ';
    s += std::to_string(lowbit(r));
  }
  return s;
}

std::string family_text(const SetFamily& f, const std::string& format) {
  if (format == "json") return to_json(f);
  std::ostringstream os;
  os << f.role << ' ' << f.kind << " sets: " << f.sets.size() << '\n';
  for (Mask m : f.sets) os << set_line(m) << '\n';
  return os.str();
}

std::string recon_text(const ReconGraph& t, const std::string& format,
                       bool metrics, bool thresholds, const Thresholds* th) {
  if (format == "dot") return to_dot(t);
  if (format == "edgelist") {
    std::ostringstream os;
    os << t.verts.size() << ' ' << t.adj.size() << '\n';
    for (std::size_t v = 0; v < t.verts.size(); ++v)
      for (std::uint32_t i = t.adj.off[v]; i < t.adj.off[v + 1]; ++i)
        if (t.adj.nbr[i] > v) os << v << ' ' << t.adj.nbr[i] << '\n';
    return os.str();
  }
  const char* model = t.model == ReconModel::TJ
                          ? "tj"
                          : (t.model == ReconModel::TarFull ? "tar_full"
                                                            : "tar_k");
  if (format == "json") {
    auto j = nlohmann::ordered_json::parse(to_json(t));
    if (metrics) {
      ReconMetrics m = recon_metrics(t);
      nlohmann::ordered_json jm;
      jm["max_degree"] = m.max_degree;
      jm["min_degree"] = m.min_degree;
      jm["components"] = m.components;
      if (m.diameter) {
        jm["diameter"] = *m.diameter;
        jm["diameter_sampled"] = m.diameter_sampled;
      }
      jm["bipartite"] = m.bipartite;
      j["metrics"] = jm;
    }
    if (thresholds && th) {
      j["thresholds"] = {{"under_threshold", th->under_x0},
                         {"threshold", th->x0}};
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "model " << model << "\nkind " << kind_name(t.kind) << "\nk " << t.k
     << "\norder " << t.verts.size() << "\nsize " << t.adj.size() << '\n';
  if (metrics) {
    ReconMetrics m = recon_metrics(t);
    os << "max_degree " << m.max_degree << "\nmin_degree " << m.min_degree
       << "\ncomponents " << m.components << '\n';
    if (m.diameter)
      os << "diameter " << (m.diameter_sampled ? ">= " : "") << *m.diameter
         << '\n';
    os << "bipartite " << (m.bipartite ? "true" : "false") << '\n';
  }
  if (thresholds && th)
    os << "under_threshold " << th->under_x0 << "\nthreshold " << th->x0
       << '\n';
  return os.str();
}

}  // namespace

int dispatch(const std::vector<std::string>& args) {
  CLI::App app{"power domination and reconfiguration toolkit"};
  app.require_subcommand(1);

  CliConfig cfg;
  app.add_option("--cap", cfg.cap, "reconfiguration order cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", cfg.workers, "parallel worker count");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"edgelist", "json", "dot", "table"}));
  app.add_option("-o,--output", cfg.output, "write output to a file");

  std::string spec, spec_b, sets_mode, kind_name_opt = "pd";
  int tar_k = kFull, unique_n = 0;
  bool want_metrics = false, want_thresholds = false;
  double budget = 0.0;
  std::vector<std::string> only;

  CLI::App* gen = app.add_subcommand("gen", "generate a graph and print it");
  gen->add_option("spec", spec, "family spec, file path, or -")->required();

  CLI::App* kinds[3];
  const char* kind_cmd[3] = {"pd", "dom", "zf"};
  const char* kind_help[3] = {"power domination", "domination", "zero forcing"};
  for (int i = 0; i < 3; ++i) {
    CLI::App* s = app.add_subcommand(
        kind_cmd[i], std::string(kind_help[i]) + " number or set families");
    s->add_option("graph", spec, "family spec, file path, or -")->required();
    s->add_option("--sets", sets_mode, "which family to list")
        ->check(CLI::IsMember({"minimum", "minimal", "upper"}));
    kinds[i] = s;
  }

  CLI::App* tar = app.add_subcommand("tar", "token addition/removal graph");
  tar->add_option("graph", spec, "family spec, file path, or -")->required();
  tar->add_option("--k", tar_k, "cardinality budget (default: no budget)");
  tar->add_flag("--metrics", want_metrics, "degree/component/diameter summary");
  tar->add_flag("--thresholds", want_thresholds,
                "least budgets giving a connected budgeted graph");
  tar->add_option("--kind", kind_name_opt, "property kind (pd, dom, zf)");

  CLI::App* tj = app.add_subcommand("tj", "token jumping graph on minimum sets");
  tj->add_option("graph", spec, "family spec, file path, or -")->required();
  tj->add_flag("--metrics", want_metrics, "degree/component/diameter summary");
  tj->add_option("--kind", kind_name_opt, "property kind (pd, dom, zf)");

  CLI::App* iso = app.add_subcommand("iso", "isomorphism test with certificate");
  iso->add_option("a", spec, "first graph")->required();
  iso->add_option("b", spec_b, "second graph")->required();

  CLI::App* unique = app.add_subcommand(
      "unique", "graphs of a given order sharing the target's tar graph");
  unique->add_option("graph", spec, "target graph")->required();
  unique->add_option("--n", unique_n, "order of the search space")->required();
  unique->add_option("--kind", kind_name_opt, "property kind (pd, dom, zf)");

  CLI::App* verify = app.add_subcommand("verify", "run the check suite");
  verify->add_option("--only", only, "run selected check ids")->delimiter(',');
  verify->add_option("--budget", budget, "per-check budget in seconds");

  CLI::App* exp = app.add_subcommand("export", "re-emit a graph in a format");
  exp->add_option("graph", spec, "family spec, file path, or -")->required();

  for (CLI::App* s : {gen, kinds[0], kinds[1], kinds[2], tar, tj, iso, unique,
                      verify, exp})
    s->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // helps are 0, every real parse error is usage
  }

  if (cfg.workers > 0) set_worker_count(cfg.workers);

  try {
    if (*gen) {
      emit(cfg, graph_text(load_graph(spec),
                           cfg.format.empty() ? "edgelist" : cfg.format));
      return 0;
    }
    for (int i = 0; i < 3; ++i) {
      if (!*kinds[i]) continue;
      PropertyKind k = kind_from_name(kind_cmd[i]);
      Graph g = load_graph(spec);
      if (sets_mode.empty()) {
        emit(cfg, std::to_string(x_number(g, k)));
      } else if (sets_mode == "upper") {
        emit(cfg, std::to_string(upper_x(g, k)));
      } else {
        SetFamily f = sets_mode == "minimum" ? minimum_x_sets(g, k)
                                             : minimal_x_sets(g, k);
        emit(cfg, family_text(f, cfg.format));
      }
      return 0;
    }
    if (*tar) {
      Graph g = load_graph(spec);
      PropertyKind k = kind_from_name(kind_name_opt);
      ReconGraph t = build_tar(g, k, tar_k, cfg.cap);
      Thresholds th;
      if (want_thresholds) th = connectivity_thresholds(g, k, cfg.cap);
      emit(cfg, recon_text(t, cfg.format.empty() ? "table" : cfg.format,
                           want_metrics, want_thresholds, &th));
      return 0;
    }
    if (*tj) {
      Graph g = load_graph(spec);
      ReconGraph t = build_tj(g, kind_from_name(kind_name_opt), cfg.cap);
      emit(cfg, recon_text(t, cfg.format.empty() ? "table" : cfg.format,
                           want_metrics, false, nullptr));
      return 0;
    }
    if (*iso) {
      Graph a = load_graph(spec), b = load_graph(spec_b);
      auto m = are_isomorphic(a, b);
      if (!m) {
        emit(cfg, "not isomorphic");
        return 1;
      }
      std::string line = "isomorphic";
      for (int v = 0; v < a.n(); ++v)
        line += (v ? " " : "\n") + std::to_string(v) + "->" +
                std::to_string((*m)[v]);
      emit(cfg, line);
      return 0;
    }
    if (*unique) {
      Graph target = load_graph(spec);
      std::vector<Graph> found =
          uniqueness_search(target, unique_n, kind_from_name(kind_name_opt));
      std::ostringstream os;
      os << "matches " << found.size() << '\n';
      for (const Graph& g : found) {
        os << g.name() << ':';
        for (auto [u, v] : g.edges()) os << ' ' << u << '-' << v;
        os << '\n';
      }
      emit(cfg, os.str());
      return 0;
    }
    if (*verify) {
      SuiteOptions opt;
      opt.only = only;
      opt.budget_sec = budget;
      std::vector<CheckResult> results = run_suite(opt);
      emit(cfg, cfg.format == "json" ? report_jsonl(results)
                                     : report_table(results));
      return all_passed(results) ? 0 : 1;
    }
    if (*exp) {
      if (cfg.format.empty())
        throw Error(Errc::ParseError, "export needs --format");
      emit(cfg, graph_text(load_graph(spec), cfg.format));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cap_exit_code(e.code);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;  // no subcommand matched; require_subcommand should prevent this
}

int dispatch(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return dispatch(args);
}

}  // namespace pdr
