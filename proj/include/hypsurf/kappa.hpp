#ifndef HYPSURF_KAPPA_HPP
#define HYPSURF_KAPPA_HPP

// The extremal angle-defect search for cubic vertices.
//
// kappa(B) is the largest negative K_{a_c(p)}(q) over admissible triples p, q
// with maximum face degree B and a_c(p) < a_c(q). It lower-bounds (in
// modulus) the area gap between non-tiling cubic genus-2 graphs and 4π.
//
// Two searches are provided: the pruned search walks candidate pairs in the
// order that makes three monotonicity arguments usable (comparable pairs are
// dominated by a seed pair, a combinatorial certificate rules out pairs with
// K > 0, and a shrinking third degree only lowers K), and the brute search
// evaluates every ordered pair through an independent numeric route.

#include "hypsurf/bignum.hpp"
#include "hypsurf/critical.hpp"
#include "hypsurf/hypgeom.hpp"
#include "hypsurf/pattern.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace hypsurf {

inline constexpr int kMinFaceBound = 7;
inline constexpr int kMaxFaceBound = 59;
inline constexpr int kBruteDefaultCap = 20;

enum class SearchMode { pruned, brute };

inline std::string to_string(SearchMode m) { return m == SearchMode::pruned ? "pruned" : "brute"; }

using TriplePair = std::pair<Triple, Triple>;

struct KappaReport {
  int face_bound = 0;
  Precision precision;
  SearchMode mode = SearchMode::pruned;
  BigReal kappa;
  // Every pair within tolerance of the maximum, lexicographically sorted.
  std::vector<TriplePair> attaining_pairs;
  int stable_digits = 0;
  // Number of K evaluations performed; a rough cost measure.
  long long evaluations = 0;

  const TriplePair& canonical_pair() const { return attaining_pairs.front(); }
};

// Thrown when a brute search is requested beyond its runtime budget.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error(what) {}
};

/// K_{a_c(p)}(q) through the total-angle form, cross-checked against the
/// inner-angle difference Σβ(f_i, a_c(p)) - Σβ(g_i, a_c(p)).
inline BigReal k_at_critical(const Triple& p, const Triple& q) {
  const Precision w = current_precision();
  BigReal alpha = alpha_triple(p[0], p[1], p[2]);
  BigReal via_theta = two_pi() - theta_at(alpha, q[0], q[1], q[2]);

  BigReal ac = acosh(alpha - 1);
  BigReal via_angles = 0;
  for (int f : p) via_angles += inner_angle(f, ac);
  for (int g : q) via_angles -= inner_angle(g, ac);

  if (!approx_eq(via_theta, via_angles, w)) {
    throw NumericError("K_{a_c" + triple_str(p) + "}" + triple_str(q) +
                       " disagrees between routes: " + to_decimal(via_theta, 30) + " vs " +
                       to_decimal(via_angles, 30));
  }
  return via_theta;
}

/// True when the degrees certify K_{a_c(p)}(q) > 0 by concavity of the
/// inner angle in the side count: for some l and m < n with {l, m, n} =
/// {1, 2, 3}, f_l >= g_l and f_m - g_m >= g_n - f_n > 0.
inline bool k_positive_certificate(const Triple& p, const Triple& q) {
  auto fires = [&](int l, int m, int n) {
    return p[l] >= q[l] && q[n] - p[n] > 0 && p[m] - q[m] >= q[n] - p[n];
  };
  return fires(0, 1, 2) || fires(1, 0, 2) || fires(2, 0, 1);
}

/// The pair whose K is maximal among comparable pairs p ≺ q.
inline TriplePair seed_pair(int face_bound) {
  if (face_bound < 8) throw DomainError("seed pair needs B >= 8");
  return {Triple{face_bound - 1, face_bound, face_bound},
          Triple{face_bound, face_bound, face_bound}};
}

namespace detail {

inline void require_face_bound(int b) {
  if (b < kMinFaceBound || b > kMaxFaceBound) {
    throw DomainError("face-degree bound must lie in [" + std::to_string(kMinFaceBound) + ", " +
                      std::to_string(kMaxFaceBound) + "], got " + std::to_string(b));
  }
}

inline bool incomparable(const Triple& p, const Triple& q) {
  bool below = false;
  bool above = false;
  for (int i = 0; i < 3; ++i) {
    below = below || p[i] < q[i];
    above = above || p[i] > q[i];
  }
  return below && above;
}

// Accumulates the maximum of K (equivalently the minimum total angle) with
// ties within tolerance kept together. Starts from a seed pair or empty.
class BestPairs {
 public:
  explicit BestPairs(Precision w) : w_(w) {}
  BestPairs(BigReal theta, TriplePair pair, Precision w) : theta_(std::move(theta)), w_(w) {
    pairs_.push_back(std::move(pair));
  }

  bool empty() const noexcept { return !theta_.has_value(); }
  const BigReal& theta() const { return *theta_; }
  const std::vector<TriplePair>& pairs() const noexcept { return pairs_; }

  enum class Outcome { improved, tied, worse };

  Outcome offer(const BigReal& theta, const TriplePair& pair) {
    if (theta_ && approx_eq(theta, *theta_, w_)) {
      pairs_.push_back(pair);
      return Outcome::tied;
    }
    if (!theta_ || theta < *theta_) {
      theta_ = theta;
      pairs_.assign(1, pair);
      return Outcome::improved;
    }
    return Outcome::worse;
  }

  void merge(const BestPairs& other) {
    if (other.empty()) return;
    if (theta_ && approx_eq(*other.theta_, *theta_, w_)) {
      pairs_.insert(pairs_.end(), other.pairs_.begin(), other.pairs_.end());
    } else if (!theta_ || *other.theta_ < *theta_) {
      theta_ = other.theta_;
      pairs_ = other.pairs_;
    }
  }

  std::vector<TriplePair> sorted_pairs() const {
    std::vector<TriplePair> out = pairs_;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  std::optional<BigReal> theta_;
  std::vector<TriplePair> pairs_;
  Precision w_;
};

}  // namespace detail

// Trig table plus α for every admissible triple up to a face bound. Built
// once per precision and reusable across smaller bounds.
class AlphaCache {
 public:
  explicit AlphaCache(int face_bound)
      : bound_(face_bound), table_(face_bound), slot_(cube(face_bound + 1), -1) {
    for (const Triple& t : enumerate_adp(face_bound)) {
      slot_[index(t)] = static_cast<int>(values_.size());
      values_.push_back(alpha_triple(table_, t));
    }
  }

  int face_bound() const noexcept { return bound_; }
  const DegreeTable& table() const noexcept { return table_; }

  const BigReal& alpha(const Triple& t) const {
    int s = slot_[index(t)];
    if (s < 0) throw DomainError("triple " + triple_str(t) + " is not admissible");
    return values_[static_cast<std::size_t>(s)];
  }

 private:
  static std::size_t cube(int n) {
    std::size_t m = static_cast<std::size_t>(n);
    return m * m * m;
  }
  std::size_t index(const Triple& t) const {
    const std::size_t n = static_cast<std::size_t>(bound_) + 1;
    for (int v : t) {
      if (v < 0 || v > bound_) throw DomainError("triple " + triple_str(t) + " exceeds cache bound");
    }
    return (static_cast<std::size_t>(t[0]) * n + static_cast<std::size_t>(t[1])) * n +
           static_cast<std::size_t>(t[2]);
  }

  int bound_;
  DegreeTable table_;
  std::vector<int> slot_;
  std::vector<BigReal> values_;
};

namespace detail {

// Smallest A with theta(A, q) <= target, by Newton's method from α(q).
// Total angle decreases in A, so any p with α(p) below this threshold
// (minus a margin) cannot beat the target. Returns nothing if Newton fails to
// settle, in which case callers evaluate every candidate.
inline std::optional<BigReal> alpha_threshold(const DegreeTable& table, const Triple& q,
                                              const BigReal& alpha_q, const BigReal& target,
                                              Precision w) {
  const BigReal step_tol = pow10(-(w.digits() / 2)) * alpha_q;
  BigReal a = alpha_q;
  for (int iter = 0; iter < 60; ++iter) {
    BigReal f = theta_at(table, a, q) - target;
    BigReal df = 0;
    for (int g : q) {
      BigReal r = 4 * table.s(g) / a;
      BigReal u = 1 - r;
      df -= (r / a) / sqrt(1 - u * u);
    }
    BigReal step = f / df;
    BigReal next = a - step;
    if (next < 2) next = (a + 2) / 2;
    if (abs(next - a) <= step_tol) return next;
    a = next;
  }
  return std::nullopt;
}

struct PrunedWorkerResult {
  std::optional<BestPairs> best;
  long long evaluations = 0;
};

// Walks the q-triples with index ≡ worker (mod workers).
inline PrunedWorkerResult pruned_worker(const AlphaCache& cache, int b,
                                        const std::vector<Triple>& qs, std::size_t worker,
                                        std::size_t workers, const BestPairs& start,
                                        Precision w) {
  ScopedPrecision guard(w);
  const DegreeTable& table = cache.table();
  BestPairs best = start;
  long long evaluations = 0;
  const BigReal margin_rel = pow10(-(w.digits() / 2 - 5));
  const BigReal tol = tolerance(w);

  for (std::size_t qi = worker; qi < qs.size(); qi += workers) {
    const Triple& q = qs[qi];
    const BigReal& alpha_q = cache.alpha(q);
    std::optional<BigReal> floor_alpha;
    bool floor_stale = true;

    for (int f1 = q[2] - 1; f1 >= 3; --f1) {
      const int f2_min = m2(f1);
      for (int f2 = b; f2 >= f2_min; --f2) {
        const int f3_min = std::max(q[0] + 1, m3(f1, f2));
        for (int f3 = b; f3 >= f3_min; --f3) {
          const Triple p{f1, f2, f3};
          if (!incomparable(p, q) || k_positive_certificate(p, q)) continue;
          const BigReal& alpha_p = cache.alpha(p);
          if (!(alpha_p < alpha_q)) continue;

          if (floor_stale && !best.empty()) {
            floor_alpha = alpha_threshold(table, q, alpha_q, best.theta(), w);
            if (floor_alpha) *floor_alpha -= margin_rel * *floor_alpha;
            floor_stale = false;
          }
          // Well below the threshold the total angle exceeds the current
          // best by far more than the tie tolerance, so the full evaluation
          // would end this f3 run anyway.
          if (floor_alpha && alpha_p < *floor_alpha) break;
          if (approx_eq(alpha_p, alpha_q, tol)) continue;

          ++evaluations;
          BigReal theta = theta_at(table, alpha_p, q);
          auto outcome = best.offer(theta, {p, q});
          if (outcome == BestPairs::Outcome::improved) {
            floor_stale = true;
          } else if (outcome == BestPairs::Outcome::worse) {
            break;
          }
        }
      }
    }
  }
  return {std::move(best), evaluations};
}

inline int report_stable_digits(const TriplePair& pair, Precision w) {
  auto stable = eval_stable([&] { return k_at_critical(pair.first, pair.second); }, w);
  return stable.agreed_digits;
}

}  // namespace detail

/// Pruned search reusing a prebuilt α cache (whose bound must be >= B).
inline KappaReport kappa_search_pruned(const AlphaCache& cache, int face_bound, Precision w,
                                       unsigned jobs = 1) {
  detail::require_face_bound(face_bound);
  if (cache.face_bound() < face_bound) throw DomainError("alpha cache bound below B");
  ScopedPrecision guard(w);

  // Below B = 8 there is no seed pair and the search starts empty.
  detail::BestPairs start(w);
  if (face_bound >= 8) {
    const TriplePair seed = seed_pair(face_bound);
    start.offer(theta_at(cache.table(), cache.alpha(seed.first), seed.second), seed);
  }
  const std::vector<Triple> qs = enumerate_adp(face_bound);

  const std::size_t workers = std::max<unsigned>(1, jobs);
  std::vector<detail::PrunedWorkerResult> results(workers);
  if (workers == 1) {
    results[0] = detail::pruned_worker(cache, face_bound, qs, 0, 1, start, w);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < workers; ++i) {
      threads.emplace_back([&, i] {
        results[i] = detail::pruned_worker(cache, face_bound, qs, i, workers, start, w);
      });
    }
    for (auto& t : threads) t.join();
  }

  detail::BestPairs best = *results[0].best;
  long long evaluations = results[0].evaluations;
  for (std::size_t i = 1; i < workers; ++i) {
    best.merge(*results[i].best);
    evaluations += results[i].evaluations;
  }
  if (best.empty()) {
    throw NumericError("no pair with negative K for B = " + std::to_string(face_bound));
  }

  KappaReport report;
  report.face_bound = face_bound;
  report.precision = w;
  report.mode = SearchMode::pruned;
  report.kappa = two_pi() - best.theta();
  report.attaining_pairs = best.sorted_pairs();
  report.evaluations = evaluations;
  report.stable_digits = detail::report_stable_digits(report.canonical_pair(), w);
  return report;
}

/// Brute-force oracle: every ordered pair of negatively curved triples with
/// entries <= B, critical lengths by bisection and K in arcsin form.
inline KappaReport kappa_search_brute(int face_bound, Precision w, bool allow_large = false) {
  detail::require_face_bound(face_bound);
  if (face_bound > kBruteDefaultCap && !allow_large) {
    const double n = static_cast<double>(enumerate_adp(face_bound).size());
    // About 10 ms per bisection and 1 µs per pair at 80 digits.
    const double seconds = (n * 1e-2 + n * n * 1e-6) * (w.digits() / 80.0);
    throw BudgetError("brute search for B = " + std::to_string(face_bound) +
                      " exceeds the default cap B <= " + std::to_string(kBruteDefaultCap) +
                      " (estimated " + std::to_string(static_cast<long long>(seconds)) +
                      " s); pass the override to run it anyway");
  }
  ScopedPrecision guard(w);

  std::vector<Triple> triples;
  for (int i = 3; i <= face_bound; ++i) {
    for (int j = i; j <= face_bound; ++j) {
      for (int k = j; k <= face_bound; ++k) {
        Triple t{i, j, k};
        if (phi_sign(t) < 0) triples.push_back(t);
      }
    }
  }
  if (triples.empty()) throw DomainError("no admissible triples for B = " + std::to_string(face_bound));

  struct Entry {
    BigReal ac;
    std::vector<BigReal> beta;  // indexed by side count
  };
  std::vector<Entry> entries;
  entries.reserve(triples.size());
  for (const Triple& t : triples) {
    Entry e;
    e.ac = solve_critical_side_length(to_pattern(t));
    e.beta.resize(static_cast<std::size_t>(face_bound) + 1);
    for (int x = 3; x <= face_bound; ++x) e.beta[x] = inner_angle(x, e.ac);
    entries.push_back(std::move(e));
  }

  const BigReal full_turn = two_pi();
  std::optional<BigReal> best_k;
  std::vector<TriplePair> best_pairs;
  long long evaluations = 0;
  for (std::size_t pi_ = 0; pi_ < triples.size(); ++pi_) {
    const Entry& ep = entries[pi_];
    for (std::size_t qi = 0; qi < triples.size(); ++qi) {
      const Entry& eq = entries[qi];
      if (!(ep.ac < eq.ac) || approx_eq(ep.ac, eq.ac, w)) continue;
      const Triple& q = triples[qi];
      ++evaluations;
      BigReal k = full_turn - ((ep.beta[q[0]] + ep.beta[q[1]]) + ep.beta[q[2]]);
      if (!(k < 0)) continue;
      const TriplePair pair{triples[pi_], q};
      if (best_k && approx_eq(k, *best_k, w)) {
        best_pairs.push_back(pair);
      } else if (!best_k || k > *best_k) {
        best_k = k;
        best_pairs.assign(1, pair);
      }
    }
  }
  if (!best_k) throw NumericError("brute search found no pair with negative K");

  std::sort(best_pairs.begin(), best_pairs.end());
  KappaReport report;
  report.face_bound = face_bound;
  report.precision = w;
  report.mode = SearchMode::brute;
  report.kappa = *best_k;
  report.attaining_pairs = std::move(best_pairs);
  report.evaluations = evaluations;
  report.stable_digits = detail::report_stable_digits(report.canonical_pair(), w);
  return report;
}

struct KappaOptions {
  SearchMode mode = SearchMode::pruned;
  Precision precision;
  unsigned jobs = 1;
  bool allow_large_brute = false;
};

inline KappaReport kappa_search(int face_bound, const KappaOptions& options = {}) {
  if (options.mode == SearchMode::brute) {
    return kappa_search_brute(face_bound, options.precision, options.allow_large_brute);
  }
  detail::require_face_bound(face_bound);
  ScopedPrecision guard(options.precision);
  AlphaCache cache(face_bound);
  return kappa_search_pruned(cache, face_bound, options.precision, options.jobs);
}

struct Table4Row {
  int lo = 0;
  int hi = 0;
  BigReal kappa;
  Triple p{};
  Triple q{};
  int stable_digits = 0;
};

/// Pruned searches for every B in [lo, hi], with consecutive bounds merged
/// while kappa and the canonical attaining pair stay the same.
inline std::vector<Table4Row> table4(int lo, int hi, Precision w, unsigned jobs = 1,
                                     std::vector<KappaReport>* reports = nullptr) {
  if (lo < 11 || hi > kMaxFaceBound || lo > hi) {
    throw DomainError("table range must satisfy 11 <= lo <= hi <= 59");
  }
  ScopedPrecision guard(w);
  AlphaCache cache(hi);
  std::vector<Table4Row> rows;
  for (int b = lo; b <= hi; ++b) {
    KappaReport r = kappa_search_pruned(cache, b, w, jobs);
    const TriplePair& pair = r.canonical_pair();
    if (!rows.empty() && approx_eq(rows.back().kappa, r.kappa, w) && rows.back().p == pair.first &&
        rows.back().q == pair.second) {
      rows.back().hi = b;
      rows.back().stable_digits = std::min(rows.back().stable_digits, r.stable_digits);
    } else {
      rows.push_back({b, b, r.kappa, pair.first, pair.second, r.stable_digits});
    }
    if (reports) reports->push_back(std::move(r));
  }
  return rows;
}

struct AreaGapBound {
  BigReal gap_lower;   // -kappa
  BigReal area_upper;  // 4π + kappa
};

inline AreaGapBound area_gap_bound(const KappaReport& report) {
  ScopedPrecision guard(report.precision);
  return {-report.kappa, 4 * pi() + report.kappa};
}

inline AreaGapBound area_gap_bound(int face_bound, Precision w = Precision()) {
  if (face_bound < 11 || face_bound > kMaxFaceBound) {
    throw DomainError("area gap bound needs B in [11, 59]");
  }
  return area_gap_bound(kappa_search(face_bound, {SearchMode::pruned, w}));
}

}  // namespace hypsurf

#endif  // HYPSURF_KAPPA_HPP
