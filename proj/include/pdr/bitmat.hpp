#ifndef PDR_BITMAT_HPP
#define PDR_BITMAT_HPP

#include <cstdint>
#include <vector>

#include "pdr/core.hpp"

namespace pdr {

// Symmetric adjacency matrix as packed bit rows, for graphs past the
// 64-vertex word limit (reconfiguration graphs, product comparison targets).
class Bitmat {
public:
  Bitmat() = default;
  explicit Bitmat(int n)
      : n_(n), words_((n + 63) / 64), rows_((std::size_t)n * ((n + 63) / 64), 0) {}

  int n() const { return n_; }
  int words() const { return words_; }

  bool get(int i, int j) const {
    return (rows_[(std::size_t)i * words_ + (j >> 6)] >> (j & 63)) & 1;
  }
  void set_edge(int i, int j) {
    rows_[(std::size_t)i * words_ + (j >> 6)] |= Mask{1} << (j & 63);
    rows_[(std::size_t)j * words_ + (i >> 6)] |= Mask{1} << (i & 63);
  }
  const Mask* row(int i) const { return rows_.data() + (std::size_t)i * words_; }

  int degree(int i) const {
    int d = 0;
    const Mask* r = row(i);
    for (int w = 0; w < words_; ++w) d += popcnt(r[w]);
    return d;
  }

  std::size_t ecount() const {
    std::size_t s = 0;
    for (int i = 0; i < n_; ++i) s += degree(i);
    return s / 2;
  }

private:
  int n_ = 0;
  int words_ = 0;
  std::vector<Mask> rows_;
};

// same vertex numbering convention as the word-sized product: (a,b) -> a*h.n()+b
Bitmat cartesian_product(const Bitmat& g, const Bitmat& h);

}  // namespace pdr

#endif
