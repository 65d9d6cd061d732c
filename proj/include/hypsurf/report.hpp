#ifndef HYPSURF_REPORT_HPP
#define HYPSURF_REPORT_HPP

// Plain-text reports. Every decimal is truncated to the digits that survive
// a re-evaluation at doubled precision, and every report states W.

#include "hypsurf/bignum.hpp"
#include "hypsurf/critical.hpp"
#include "hypsurf/kappa.hpp"
#include "hypsurf/pattern.hpp"
#include "hypsurf/surface.hpp"
#include "hypsurf/tessellation.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hypsurf {

// Decimal truncated to the stable digits, with at least one digit shown.
inline std::string stable_decimal(const BigReal& x, int stable_digits) {
  return to_decimal(x, std::max(1, stable_digits));
}

inline std::string stable_decimal(const Stable<BigReal>& s) {
  return stable_decimal(s.value, s.agreed_digits);
}

// Short scientific form for residuals and tolerances.
inline std::string short_decimal(const BigReal& x) { return to_decimal(x, 3); }

inline std::string kappa_text(const KappaReport& r) {
  std::ostringstream out;
  out << "B = " << r.face_bound << "\n";
  out << "mode = " << to_string(r.mode) << "\n";
  out << "precision W = " << r.precision.digits() << "\n";
  out << "stable digits = " << r.stable_digits << "\n";
  out << "kappa = " << stable_decimal(r.kappa, r.stable_digits) << "\n";
  for (const auto& [p, q] : r.attaining_pairs) {
    out << "attained at p = " << triple_str(p) << ", q = " << triple_str(q) << "\n";
  }
  out << "evaluations = " << r.evaluations << "\n";
  return out.str();
}

inline std::string table4_text(const std::vector<Table4Row>& rows, Precision w) {
  std::ostringstream out;
  out << "precision W = " << w.digits() << "\n";
  out << "range\tkappa\tp\tq\tstable digits\n";
  for (const auto& row : rows) {
    out << row.lo << "--" << row.hi << "\t" << stable_decimal(row.kappa, row.stable_digits)
        << "\t" << triple_str(row.p) << "\t" << triple_str(row.q) << "\t" << row.stable_digits
        << "\n";
  }
  return out.str();
}

inline std::string verify_text(const Tessellation& t) {
  std::ostringstream out;
  out << "valid tessellation\n";
  out << "vertices " << t.vertex_count() << ", edges " << t.edge_count() << ", faces "
      << t.face_count() << "\n";
  out << "Euler characteristic " << t.euler_characteristic() << ", genus " << t.genus() << "\n";
  if (t.multi_edge_face_pairs() > 0) {
    out << "face pairs sharing several edges: " << t.multi_edge_face_pairs() << "\n";
  }
  return out.str();
}

// Curvature table, critical length and area, tiling verdict, Gauss–Bonnet
// residuals and, for negatively curved graphs of genus >= 2, the bounds.
inline std::string graph_report_text(const Tessellation& t, Precision w,
                                     const std::optional<std::string>& side = {}) {
  ScopedPrecision guard(w);
  std::ostringstream out;
  out << verify_text(t);
  out << "precision W = " << w.digits() << "\n";

  const CurvatureReport c = curvature_report(t);
  out << "vertex\tpattern\tΦ\n";
  for (const auto& v : c.vertices) out << v.vertex << "\t" << v.pattern.str() << "\t" << v.phi << "\n";
  out << "sum Φ = " << c.total << " (Euler characteristic " << c.euler_characteristic << ")\n";
  out << "max Φ = " << c.max << "\n";
  out << "min Φ = " << c.min << "\n";
  out << "negative curvature: " << (c.negative_curvature ? "yes" : "no") << "\n";
  out << "curvature <= -1 at some side length: " << (c.curvature_le_minus_one() ? "yes" : "no")
      << "\n";

  std::vector<BigReal> sides;
  if (c.negative_curvature) {
    CriticalSideLength crit = graph_critical_side_length(t);
    auto ac = eval_stable([&] { return graph_critical_side_length(t).value; }, w);
    auto area = eval_stable([&] { return area_at(t, graph_critical_side_length(t).value); }, w);
    out << "a_c(G) = " << stable_decimal(ac) << " (stable digits " << ac.agreed_digits << ")\n";
    out << "attained at vertices";
    for (VertexId x : crit.argmin) out << " " << x;
    out << "\n";
    out << "Area^cri = " << stable_decimal(area) << " (stable digits " << area.agreed_digits
        << ")\n";
    if (t.genus() >= 2) {
      TilingEvidence e = is_tiling(t);
      out << "2π(2g-2) = " << stable_decimal(e.smooth_area, w.digits() - kGuardDigits) << "\n";
      out << "tiling: " << (e.tiling ? "yes" : "no") << "\n";
    }
    sides.push_back(pow10(-1));
    sides.push_back(crit.value);
    sides.push_back(BigReal(1));
  } else {
    sides.push_back(BigReal(1) / 2);
  }

  if (side) {
    BigReal a = parse_real(*side);
    sides.push_back(a);
    auto area = eval_stable([&] { return area_at(t, parse_real(*side)); }, w);
    out << "Area at a = " << *side << ": " << stable_decimal(area) << " (stable digits "
        << area.agreed_digits << ")\n";
  }

  const BigReal tol = gauss_bonnet_tolerance(t, w);
  for (const BigReal& a : sides) {
    BigReal r = gauss_bonnet_hyperbolic_residual(t, a);
    out << "Gauss-Bonnet residual at a = " << to_decimal(a, 6) << ": " << short_decimal(r)
        << (r <= tol ? " ok" : " FAILED") << " (tolerance " << short_decimal(tol) << ")\n";
  }

  if (c.negative_curvature && t.genus() >= 2) {
    BoundsReport b = bounds_check(t);
    out << "bounds (genus " << b.genus << "): |V| = " << b.vertex_count
        << " <= " << b.vertex_count_bound << "; max deg(x) = " << b.max_vertex_degree
        << " <= " << b.vertex_degree_bound << "; max deg(σ) = " << b.max_face_degree
        << " <= " << b.face_degree_bound;
    if (b.cubic) {
      out << "; cubic max deg(σ) = " << b.max_face_degree << " <= " << b.cubic_face_degree_bound;
    }
    out << "\n";
    if (b.cubic) {
      out << "B_" << b.genus << "(3) ∈ [" << b.max_face_degree << ", "
          << b.cubic_face_degree_bound << "]\n";
    }
  }
  return out.str();
}

}  // namespace hypsurf

#endif  // HYPSURF_REPORT_HPP
