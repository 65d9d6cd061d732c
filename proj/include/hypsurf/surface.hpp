#ifndef HYPSURF_SURFACE_HPP
#define HYPSURF_SURFACE_HPP

// Curvature and hyperbolic-metric analyses of a tessellation: exact
// combinatorial curvature, the critical side length and area, Gauss–Bonnet
// residuals, tiling detection and the genus bounds for negatively curved
// graphs.

#include "hypsurf/bignum.hpp"
#include "hypsurf/critical.hpp"
#include "hypsurf/hypgeom.hpp"
#include "hypsurf/pattern.hpp"
#include "hypsurf/tessellation.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hypsurf {

// A bound that every negatively curved graph of its genus satisfies was
// violated.
class ContradictionError : public Error {
 public:
  explicit ContradictionError(const std::string& what) : Error(what) {}
};

struct VertexCurvature {
  VertexId vertex;
  Pattern pattern;
  Rational phi;
};

struct CurvatureReport {
  std::vector<VertexCurvature> vertices;  // by vertex id
  Rational total;
  Rational max;
  Rational min;
  long long euler_characteristic = 0;
  // Φ < 0 at every vertex; the same class as "some side length makes the
  // surface locally CAT(-1)".
  bool negative_curvature = false;
  // Only decided for negatively curved graphs of genus >= 2.
  std::optional<bool> tiling;

  bool curvature_le_minus_one() const noexcept { return negative_curvature; }
};

struct CriticalSideLength {
  BigReal value;
  std::vector<VertexId> argmin;
};

struct TilingEvidence {
  bool tiling = false;
  bool equal_critical_lengths = false;  // a_c(x) the same at every vertex
  bool critical_area_matches = false;   // Area^cri = 2π(2g - 2)
  BigReal critical_area;
  BigReal smooth_area;
};

struct BoundsReport {
  int genus = 0;
  std::size_t vertex_count = 0;
  long long vertex_count_bound = 0;  // 3612(g - 1)
  int max_vertex_degree = 0;
  int vertex_degree_bound = 0;       // 12g - 7
  int max_face_degree = 0;
  int face_degree_bound = 0;         // 84g - 43
  bool cubic = false;
  int cubic_face_degree_bound = 0;   // 40g - 21, for cubic graphs
};

namespace detail {

// Distinct patterns with the vertices that carry them.
inline std::map<Pattern, std::vector<VertexId>> group_by_pattern(const Tessellation& t) {
  std::map<Pattern, std::vector<VertexId>> groups;
  for (VertexId x : t.vertices()) groups[vertex_pattern(t, x)].push_back(x);
  return groups;
}

inline std::map<int, long long> face_degree_counts(const Tessellation& t) {
  std::map<int, long long> counts;
  for (std::size_t f = 0; f < t.face_count(); ++f) ++counts[t.face_degree(f)];
  return counts;
}

}  // namespace detail

inline CriticalSideLength graph_critical_side_length(const Tessellation& t);
inline TilingEvidence is_tiling(const Tessellation& t);

/// Exact Φ at every vertex; throws NumericError if ΣΦ != χ.
inline CurvatureReport curvature_report(const Tessellation& t) {
  CurvatureReport r;
  r.euler_characteristic = t.euler_characteristic();
  r.total = 0;
  bool first = true;
  for (VertexId x : t.vertices()) {
    Pattern p = vertex_pattern(t, x);
    Rational value = phi(p);
    r.total += value;
    if (first || value > r.max) r.max = value;
    if (first || value < r.min) r.min = value;
    first = false;
    r.vertices.push_back({x, std::move(p), value});
  }
  if (r.total != Rational(r.euler_characteristic)) {
    throw NumericError("curvature sum " + r.total.str() + " differs from Euler characteristic " +
                       std::to_string(r.euler_characteristic));
  }
  r.negative_curvature = r.max < 0;
  if (r.negative_curvature && t.genus() >= 2) r.tiling = is_tiling(t).tiling;
  return r;
}

/// a_c(G) = min over vertices of a_c(pattern), with every vertex attaining it.
inline CriticalSideLength graph_critical_side_length(const Tessellation& t) {
  const Precision w = current_precision();
  std::vector<std::pair<BigReal, std::vector<VertexId>>> per_pattern;
  for (auto& [pattern, vertices] : detail::group_by_pattern(t)) {
    if (phi_sign(pattern.degrees()) >= 0) {
      throw DomainError("vertex " + std::to_string(vertices.front()) + " has pattern " +
                        pattern.str() + " with Φ >= 0; the graph has no critical side length");
    }
    per_pattern.emplace_back(critical_side_length(pattern), vertices);
  }
  BigReal best = per_pattern.front().first;
  for (const auto& [ac, vs] : per_pattern) {
    if (ac < best) best = ac;
  }
  CriticalSideLength out{best, {}};
  for (const auto& [ac, vs] : per_pattern) {
    if (approx_eq(ac, best, w)) out.argmin.insert(out.argmin.end(), vs.begin(), vs.end());
  }
  std::sort(out.argmin.begin(), out.argmin.end());
  return out;
}

/// Area of the hyperbolic polyhedral surface with side a.
inline BigReal area_at(const Tessellation& t, const BigReal& a) {
  detail::require_side(a);
  BigReal total = 0;
  for (auto [degree, count] : detail::face_degree_counts(t)) {
    total += count * polygon_area(degree, a);
  }
  return total;
}

/// |-Area_a + Σ K_a(x) - 2πχ|; zero up to rounding for every a > 0.
inline BigReal gauss_bonnet_hyperbolic_residual(const Tessellation& t, const BigReal& a) {
  BigReal defects = 0;
  for (auto& [pattern, vertices] : detail::group_by_pattern(t)) {
    defects += static_cast<long long>(vertices.size()) * angle_defect(pattern, a);
  }
  return abs(-area_at(t, a) + defects - two_pi() * t.euler_characteristic());
}

inline BigReal gauss_bonnet_tolerance(const Tessellation& t, Precision w) {
  BigReal chi = abs(BigReal(t.euler_characteristic()));
  return tolerance(w) * (1 + 4 * pi() * chi);
}

/// Tiling test by equal vertex critical lengths, cross-checked against the
/// critical area reaching 2π(2g - 2).
inline TilingEvidence is_tiling(const Tessellation& t) {
  if (t.genus() < 2) throw DomainError("tiling test needs genus >= 2");
  const Precision w = current_precision();
  TilingEvidence e;
  std::optional<BigReal> first;
  e.equal_critical_lengths = true;
  BigReal min_ac;
  for (auto& [pattern, vertices] : detail::group_by_pattern(t)) {
    if (phi_sign(pattern.degrees()) >= 0) {
      throw DomainError("tiling test needs Φ < 0 at every vertex; pattern " + pattern.str() +
                        " is not negatively curved");
    }
    BigReal ac = critical_side_length(pattern);
    if (!first) {
      first = ac;
      min_ac = ac;
    } else {
      if (!approx_eq(ac, *first, w)) e.equal_critical_lengths = false;
      if (ac < min_ac) min_ac = ac;
    }
  }
  e.critical_area = area_at(t, min_ac);
  e.smooth_area = 2 * pi() * (2 * t.genus() - 2);
  e.critical_area_matches = approx_eq(e.critical_area, e.smooth_area, w);
  if (e.equal_critical_lengths != e.critical_area_matches) {
    throw NumericError("tiling criteria disagree: equal critical lengths = " +
                       std::string(e.equal_critical_lengths ? "yes" : "no") +
                       ", critical area = " + to_decimal(e.critical_area, 30) + " vs 2π(2g-2) = " +
                       to_decimal(e.smooth_area, 30));
  }
  e.tiling = e.equal_critical_lengths;
  return e;
}

/// Vertex-count, vertex-degree and face-degree bounds for negatively curved
/// graphs of genus g >= 2. Throws ContradictionError on a violation.
inline BoundsReport bounds_check(const Tessellation& t) {
  const int g = t.genus();
  if (g < 2) throw DomainError("bounds apply to genus >= 2 only");
  for (VertexId x : t.vertices()) {
    if (phi_sign(vertex_pattern(t, x).degrees()) >= 0) {
      throw DomainError("bounds apply to negatively curved graphs; vertex " + std::to_string(x) +
                        " has Φ >= 0");
    }
  }
  BoundsReport r;
  r.genus = g;
  r.vertex_count = t.vertex_count();
  r.vertex_count_bound = 3612LL * (g - 1);
  r.max_vertex_degree = t.max_vertex_degree();
  r.vertex_degree_bound = 12 * g - 7;
  r.max_face_degree = t.max_face_degree();
  r.face_degree_bound = 84 * g - 43;
  r.cubic = t.is_cubic();
  r.cubic_face_degree_bound = 40 * g - 21;

  auto fail = [](const std::string& what) { throw ContradictionError(what); };
  if (static_cast<long long>(r.vertex_count) > r.vertex_count_bound) {
    fail(std::to_string(r.vertex_count) + " vertices exceed 3612(g-1) = " +
         std::to_string(r.vertex_count_bound));
  }
  if (r.max_vertex_degree > r.vertex_degree_bound) {
    fail("vertex degree " + std::to_string(r.max_vertex_degree) + " exceeds 12g-7 = " +
         std::to_string(r.vertex_degree_bound));
  }
  if (r.max_face_degree > r.face_degree_bound) {
    fail("face degree " + std::to_string(r.max_face_degree) + " exceeds 84g-43 = " +
         std::to_string(r.face_degree_bound));
  }
  if (r.cubic && r.max_face_degree > r.cubic_face_degree_bound) {
    fail("cubic graph has face degree " + std::to_string(r.max_face_degree) +
         " exceeding 40g-21 = " + std::to_string(r.cubic_face_degree_bound));
  }
  return r;
}

}  // namespace hypsurf

#endif  // HYPSURF_SURFACE_HPP
