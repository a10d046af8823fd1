#ifndef PDR_CORE_HPP
#define PDR_CORE_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdr {

// Vertex sets are 64-bit masks; vertex v corresponds to bit v.
using Mask = std::uint64_t;

inline constexpr Mask bit(int v) { return Mask{1} << v; }

inline constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline int popcnt(Mask m) { return std::popcount(m); }

// index of the lowest set bit; undefined for m == 0
inline int lowbit(Mask m) { return std::countr_zero(m); }

// next k-subset in ascending numeric order (Gosper); wraps past the last one
inline Mask gosper_next(Mask m) {
  Mask c = m & -m;
  Mask r = m + c;
  return r | (((m ^ r) >> 2) / c);
}

enum class Errc {
  OrderOutOfRange,
  SelfLoop,
  VertexOutOfRange,
  ParamOutOfRange,
  SetOutOfRange,
  ReconTooLarge,
  KBelowXNumber,
  NotAVertex,
  OrderTooLargeForExhaustive,
  TooLargeForCanonical,
  OrderTooLargeForEnumeration,
  SearchTooLarge,
  UnknownCheckId,
  ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
  Errc code;
};

// A vertex set tied to a graph order, for API boundaries and serialization.
// Library internals pass raw masks plus the owning graph.
struct VertexSet {
  Mask bits = 0;
  int n = 0;

  bool contains(int v) const { return v >= 0 && v < n && (bits >> v) & 1; }
  int count() const { return popcnt(bits); }
  std::vector<int> members() const {
    std::vector<int> out;
    for (Mask m = bits; m; m &= m - 1) out.push_back(lowbit(m));
    return out;
  }
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::OrderOutOfRange: return "OrderOutOfRange";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::ParamOutOfRange: return "ParamOutOfRange";
    case Errc::SetOutOfRange: return "SetOutOfRange";
    case Errc::ReconTooLarge: return "ReconTooLarge";
    case Errc::KBelowXNumber: return "KBelowXNumber";
    case Errc::NotAVertex: return "NotAVertex";
    case Errc::OrderTooLargeForExhaustive: return "OrderTooLargeForExhaustive";
    case Errc::TooLargeForCanonical: return "TooLargeForCanonical";
    case Errc::OrderTooLargeForEnumeration: return "OrderTooLargeForEnumeration";
    case Errc::SearchTooLarge: return "SearchTooLarge";
    case Errc::UnknownCheckId: return "UnknownCheckId";
    case Errc::ParseError: return "ParseError";
  }
  return "Error";
}

}  // namespace pdr

#endif
