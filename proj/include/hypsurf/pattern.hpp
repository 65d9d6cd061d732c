#ifndef HYPSURF_PATTERN_HPP
#define HYPSURF_PATTERN_HPP

// Vertex patterns and their exact combinatorics: curvature, the tail-aligned
// partial order, the minimal-pattern admissibility table and the range
// tables that enumerate admissible degree triples.

#include "hypsurf/bignum.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace hypsurf {

// Sorted face degrees around a vertex. Unsorted input is sorted.
class Pattern {
 public:
  explicit Pattern(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.size() < 3) {
      throw DomainError("a pattern needs at least 3 faces, got " +
                        std::to_string(degrees_.size()));
    }
    for (int d : degrees_) {
      if (d < 3) throw DomainError("face degree must be >= 3, got " + std::to_string(d));
    }
    std::sort(degrees_.begin(), degrees_.end());
  }
  Pattern(std::initializer_list<int> degrees) : Pattern(std::vector<int>(degrees)) {}

  std::span<const int> degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  int operator[](std::size_t i) const { return degrees_[i]; }
  int max_degree() const noexcept { return degrees_.back(); }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(degrees_[i]);
    }
    return s + ")";
  }

  friend auto operator<=>(const Pattern&, const Pattern&) = default;

 private:
  std::vector<int> degrees_;
};

// A sorted degree triple; the currency of the cubic (vertex degree 3) search.
using Triple = std::array<int, 3>;

inline Triple sorted_triple(int a, int b, int c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

inline Pattern to_pattern(const Triple& t) { return Pattern{t[0], t[1], t[2]}; }

inline std::string triple_str(const Triple& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
         std::to_string(t[2]) + ")";
}

// Φ(p) = 1 - Σ (1/2 - 1/f_i), exactly.
inline Rational phi(std::span<const int> degrees) {
  Rational sum(1);
  for (int f : degrees) sum += Rational(1, f) - Rational(1, 2);
  return sum;
}

inline Rational phi(const Pattern& p) { return phi(p.degrees()); }
inline Rational phi(const Triple& t) { return phi(std::span<const int>(t)); }

// Exact sign of Φ with integer arithmetic when the common denominator fits
// in 128 bits, falling back to rationals otherwise.
inline int phi_sign(std::span<const int> degrees) {
  using i128 = __int128;
  constexpr i128 kLimit = static_cast<i128>(1) << 100;
  i128 lcm = 2;
  bool fits = true;
  for (int f : degrees) {
    i128 g = std::gcd(static_cast<long long>(lcm % f), static_cast<long long>(f));
    lcm = lcm / g * f;
    if (lcm > kLimit) {
      fits = false;
      break;
    }
  }
  if (!fits) {
    Rational v = phi(degrees);
    return v < 0 ? -1 : (v > 0 ? 1 : 0);
  }
  // Φ·lcm = lcm - n·lcm/2 + Σ lcm/f
  i128 n = static_cast<i128>(degrees.size());
  i128 scaled = lcm - n * (lcm / 2);
  for (int f : degrees) scaled += lcm / f;
  return scaled < 0 ? -1 : (scaled > 0 ? 1 : 0);
}

// p ⪯ q: p is no longer than q and its degrees, aligned at the tail, are
// componentwise no larger.
inline bool pattern_leq(std::span<const int> p, std::span<const int> q) {
  if (p.size() > q.size()) return false;
  const std::size_t offset = q.size() - p.size();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > q[i + offset]) return false;
  }
  return true;
}

inline bool pattern_leq(const Pattern& p, const Pattern& q) {
  return pattern_leq(p.degrees(), q.degrees());
}

namespace detail {

inline constexpr std::array<std::array<int, 4>, 7> kMinimalQuads{{
    {3, 3, 4, 13}, {3, 3, 5, 8}, {3, 3, 6, 7}, {3, 4, 4, 7},
    {3, 4, 5, 5}, {3, 5, 5, 5}, {4, 4, 4, 5},
}};

inline constexpr std::array<std::array<int, 5>, 3> kMinimalQuints{{
    {3, 3, 3, 3, 7}, {3, 3, 3, 4, 5}, {3, 3, 4, 4, 4},
}};

inline constexpr std::array<Triple, 14> kMinimalTriples{{
    {3, 7, 43}, {3, 8, 25}, {3, 9, 19}, {3, 10, 16}, {3, 11, 14},
    {3, 12, 13}, {4, 5, 21}, {4, 6, 13}, {4, 7, 10}, {4, 8, 9},
    {5, 5, 11}, {5, 6, 8}, {5, 7, 7}, {6, 6, 7},
}};

template <std::size_t N, std::size_t M>
bool dominates_any(std::span<const int> p, const std::array<std::array<int, N>, M>& minimal) {
  return std::any_of(minimal.begin(), minimal.end(), [&](const auto& m) {
    return pattern_leq(std::span<const int>(m), p);
  });
}

}  // namespace detail

// Table of minimal negatively curved patterns; expects sorted
// degrees. Agrees with phi(p) < 0.
inline bool is_negative_curv(std::span<const int> sorted) {
  switch (sorted.size()) {
    case 0:
    case 1:
    case 2:
      throw DomainError("a pattern needs at least 3 faces");
    case 3:
      return detail::dominates_any(sorted, detail::kMinimalTriples);
    case 4:
      return detail::dominates_any(sorted, detail::kMinimalQuads);
    case 5:
      return detail::dominates_any(sorted, detail::kMinimalQuints);
    case 6: {
      constexpr std::array<int, 6> m{3, 3, 3, 3, 3, 4};
      return pattern_leq(std::span<const int>(m), sorted);
    }
    default:
      return true;
  }
}

inline bool is_negative_curv(const Pattern& p) { return is_negative_curv(p.degrees()); }

// Smallest second degree j such that some (i, j, k) is negatively curved.
inline int m2(int i) {
  if (i < 3) throw DomainError("m2 expects i >= 3, got " + std::to_string(i));
  switch (i) {
    case 3: return 7;
    case 4:
    case 5: return 5;
    case 6: return 6;
    default: return i;
  }
}

// Smallest third degree k such that (i, j, k) is negatively curved.
inline int m3(int i, int j) {
  if (i < 3 || j < m2(i)) {
    throw DomainError("m3 expects i >= 3 and j >= m2(i), got (" + std::to_string(i) +
                      ", " + std::to_string(j) + ")");
  }
  if (i == 3) {
    switch (j) {
      case 7: return 43;
      case 8: return 25;
      case 9: return 19;
      case 10: return 16;
      case 11: return 14;
      case 12: return 13;
      default: return j;
    }
  }
  if (i == 4) {
    switch (j) {
      case 5: return 21;
      case 6: return 13;
      case 7: return 10;
      case 8: return 9;
      default: return j;
    }
  }
  if (i == 5) {
    switch (j) {
      case 5: return 11;
      case 6: return 8;
      case 7: return 7;
      default: return j;
    }
  }
  if (i == 6 && j == 6) return 7;
  return j;
}

// Admissible triples with maximum degree B, lexicographically ordered.
inline std::vector<Triple> enumerate_adp(int max_degree) {
  if (max_degree < 3) throw DomainError("face-degree bound must be >= 3");
  std::vector<Triple> out;
  for (int i = 3; i <= max_degree; ++i) {
    for (int j = m2(i); j <= max_degree; ++j) {
      for (int k = m3(i, j); k <= max_degree; ++k) out.push_back({i, j, k});
    }
  }
  return out;
}

}  // namespace hypsurf

#endif  // HYPSURF_PATTERN_HPP
