#ifndef HYPSURF_HYPGEOM_HPP
#define HYPSURF_HYPGEOM_HPP

// Regular hyperbolic polygons and the closed-form critical quantities of
// degree-3 vertices.
//
// For a regular n-gon of side a the inner angle β satisfies
//   cosh(a/2) sin(β/2) = cos(π/n).
// A vertex with face degrees (f1, f2, f3) closes up (total angle 2π) at the
// side length a_c with 2 cosh²(a_c/2) = α(f1, f2, f3), where α is a ratio of
// a cuboid volume to a Heron product in the edge lengths C_i = cos(π/f_i).

#include "hypsurf/bignum.hpp"
#include "hypsurf/pattern.hpp"

#include <string>
#include <vector>

namespace hypsurf {

namespace detail {

inline void require_side(const BigReal& a) {
  if (!(a > 0)) throw DomainError("side length must be positive");
}

inline void require_sides(int n) {
  if (n < 3) throw DomainError("polygon needs at least 3 sides, got " + std::to_string(n));
}

}  // namespace detail

/// Inner angle of the regular hyperbolic n-gon with side a.
inline BigReal inner_angle(int n, const BigReal& a) {
  detail::require_sides(n);
  detail::require_side(a);
  BigReal c = cos(pi() / n);
  return 2 * asin(c / cosh(a / 2));
}

/// Same formula with a real side count x >= 3, used for the concavity
/// argument behind the positive certificate.
inline BigReal inner_angle_real(const BigReal& x, const BigReal& a) {
  if (x < 3) throw DomainError("side count must be >= 3");
  detail::require_side(a);
  return 2 * asin(cos(pi() / x) / cosh(a / 2));
}

inline BigReal polygon_area(int n, const BigReal& a) {
  return (n - 2) * pi() - n * inner_angle(n, a);
}

// cos(π/i), cos²(π/i) and the differences cos(π/k) - cos(π/j) for all
// degrees up to a cap, computed once per precision.
class DegreeTable {
 public:
  explicit DegreeTable(int max_degree) : max_(max_degree) {
    if (max_degree < 3) throw DomainError("degree table needs max degree >= 3");
    const std::size_t n = static_cast<std::size_t>(max_degree) + 1;
    c_.resize(n);
    s_.resize(n);
    d_.resize(n * n);
    BigReal p = pi();
    for (int i = 3; i <= max_degree; ++i) {
      c_[i] = cos(p / i);
      s_[i] = c_[i] * c_[i];
    }
    for (int j = 3; j <= max_degree; ++j) {
      for (int k = j + 1; k <= max_degree; ++k) d_[index(j, k)] = c_[k] - c_[j];
    }
  }

  int max_degree() const noexcept { return max_; }
  const BigReal& c(int i) const { return c_[check(i)]; }
  const BigReal& s(int i) const { return s_[check(i)]; }
  // cos(π/k) - cos(π/j), for j <= k.
  const BigReal& d(int j, int k) const {
    check(j);
    check(k);
    return d_[index(j, k)];
  }

 private:
  std::size_t index(int j, int k) const {
    return static_cast<std::size_t>(j) * (static_cast<std::size_t>(max_) + 1) +
           static_cast<std::size_t>(k);
  }
  std::size_t check(int i) const {
    if (i < 3 || i > max_) {
      throw DomainError("degree " + std::to_string(i) + " outside table [3, " +
                        std::to_string(max_) + "]");
    }
    return static_cast<std::size_t>(i);
  }

  int max_;
  std::vector<BigReal> c_, s_, d_;
};

namespace detail {

// Kahan's ordering of the Heron product: (C3+(C2+C1))(C1-D23)(C1+D23)(C3+D12),
// where C1 <= C2 <= C3 and D_jk = C_k - C_j.
inline BigReal alpha_from_table(const DegreeTable& t, int i, int j, int k) {
  BigReal num = 8 * t.s(i) * t.s(j) * t.s(k);
  BigReal den = (t.c(k) + (t.c(j) + t.c(i))) * (t.c(i) - t.d(j, k)) *
                (t.c(i) + t.d(j, k)) * (t.c(k) + t.d(i, j));
  return num / den;
}

inline Triple require_admissible(int f1, int f2, int f3) {
  Triple t = sorted_triple(f1, f2, f3);
  if (t[0] < 3) throw DomainError("face degree must be >= 3");
  if (phi_sign(t) >= 0) {
    throw DomainError("pattern " + triple_str(t) +
                      " is not negatively curved; no critical side length");
  }
  return t;
}

inline void require_alpha(const BigReal& alpha, const Triple& t) {
  if (alpha < 2) {
    throw DomainError("alpha" + triple_str(t) + " fell below 2");
  }
}

}  // namespace detail

/// α = 2 cosh²(a_c/2) from a precomputed table; p must be sorted and
/// negatively curved.
inline BigReal alpha_triple(const DegreeTable& table, const Triple& p) {
  BigReal a = detail::alpha_from_table(table, p[0], p[1], p[2]);
  detail::require_alpha(a, p);
  return a;
}

inline BigReal alpha_triple(int f1, int f2, int f3) {
  Triple t = detail::require_admissible(f1, f2, f3);
  return alpha_triple(DegreeTable(t[2]), t);
}

/// Closed-form critical side length arccosh(α - 1).
inline BigReal ac_triple(int f1, int f2, int f3) {
  return acosh(alpha_triple(f1, f2, f3) - 1);
}

/// Total angle Σ arccos(1 - 4 cos²(π/f_i)/A) at the side a with
/// 2 cosh²(a/2) = A.
inline BigReal theta_at(const BigReal& A, int f1, int f2, int f3) {
  if (A < 2) throw DomainError("theta_at expects A >= 2");
  detail::require_sides(f1);
  detail::require_sides(f2);
  detail::require_sides(f3);
  BigReal p = pi();
  auto term = [&](int f) {
    BigReal c = cos(p / f);
    return acos(1 - 4 * c * c / A);
  };
  return (term(f1) + term(f2)) + term(f3);
}

inline BigReal theta_at(const DegreeTable& table, const BigReal& A, const Triple& q) {
  if (A < 2) throw DomainError("theta_at expects A >= 2");
  return (acos(1 - 4 * table.s(q[0]) / A) + acos(1 - 4 * table.s(q[1]) / A)) +
         acos(1 - 4 * table.s(q[2]) / A);
}

}  // namespace hypsurf

#endif  // HYPSURF_HYPGEOM_HPP
