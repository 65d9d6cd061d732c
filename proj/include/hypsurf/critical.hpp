#ifndef HYPSURF_CRITICAL_HPP
#define HYPSURF_CRITICAL_HPP

// Angle defect of a vertex pattern and its critical side length for any
// vertex degree.

#include "hypsurf/bignum.hpp"
#include "hypsurf/hypgeom.hpp"
#include "hypsurf/pattern.hpp"

#include <cmath>
#include <map>

namespace hypsurf {

/// K_a(p) = 2π - Σ 2 arcsin(cos(π/f_i) / cosh(a/2)). Strictly increasing in a.
inline BigReal angle_defect(const Pattern& p, const BigReal& a) {
  detail::require_side(a);
  BigReal ch = cosh(a / 2);
  BigReal pi_value = pi();
  BigReal total = 0;
  // Group equal degrees so each distinct arcsin is evaluated once.
  std::map<int, int> counts;
  for (int f : p.degrees()) ++counts[f];
  for (auto [f, count] : counts) total += count * (2 * asin(cos(pi_value / f) / ch));
  return 2 * pi_value - total;
}

namespace detail {

inline int bisection_cap(Precision w) {
  return static_cast<int>(std::ceil(4.0 * w.digits() * 3.321928094887362));
}

}  // namespace detail

/// Root of K_a(p) = 0 by bracketed bisection, to relative width 10^-(W-5).
/// Works for any vertex degree; independent of the closed form for triples.
inline BigReal solve_critical_side_length(const Pattern& p) {
  if (phi_sign(p.degrees()) >= 0) {
    throw DomainError("pattern " + p.str() + " has Φ >= 0; no critical side length");
  }
  const Precision w = current_precision();
  const int cap = detail::bisection_cap(w);

  BigReal lo = pow10(-6);
  if (angle_defect(p, lo) >= 0) {
    throw NumericError("critical side length: K is not negative at the lower bracket for " +
                       p.str());
  }
  BigReal hi = 1;
  int iterations = 0;
  while (angle_defect(p, hi) <= 0) {
    lo = hi;
    hi *= 2;
    if (++iterations > cap) {
      throw NonConvergenceError("critical side length bracket",
                                "no sign change found for " + p.str());
    }
  }
  const BigReal rel = pow10(-(w.digits() - 5));
  iterations = 0;
  while (hi - lo > rel * lo) {
    if (++iterations > cap) {
      throw NonConvergenceError("critical side length bisection",
                                "iteration cap hit for " + p.str());
    }
    BigReal mid = (lo + hi) / 2;
    if (angle_defect(p, mid) <= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

/// a_c(p): closed form for triples, bisection otherwise.
inline BigReal critical_side_length(const Pattern& p) {
  if (phi_sign(p.degrees()) >= 0) {
    throw DomainError("pattern " + p.str() + " has Φ >= 0; no critical side length");
  }
  if (p.size() == 3) return ac_triple(p[0], p[1], p[2]);
  return solve_critical_side_length(p);
}

}  // namespace hypsurf

#endif  // HYPSURF_CRITICAL_HPP
