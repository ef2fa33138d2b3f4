#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace clutterlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Error kinds surface through the CLI as stable exit codes:
//   2 = malformed input, 3 = configured bound exceeded, 4 = hypotheses not met,
//   1 = failed check / internal contradiction.
enum class errc {
  parse,
  sperner_violation,
  out_of_range,
  empty_edge,
  isolated_vertex,
  empty_minor,
  not_a_graph,
  zero_matrix,
  rank_mismatch,
  bound_exceeded,
  hypothesis_failed,
  degenerate_lift,
  empty_polyhedron,
  internal_contradiction,
};

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }
  int exit_code() const {
    switch (kind_) {
      case errc::bound_exceeded: return 3;
      case errc::hypothesis_failed: return 4;
      case errc::internal_contradiction: return 1;
      default: return 2;
    }
  }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

// Divides every entry by the gcd of all entries; the zero vector stays zero.
inline void primitivize(std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
}

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline int popcount64(std::uint64_t m) { return __builtin_popcountll(m); }

}  // namespace clutterlab
