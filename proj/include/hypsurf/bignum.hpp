#ifndef HYPSURF_BIGNUM_HPP
#define HYPSURF_BIGNUM_HPP

// Working-precision arithmetic shared by every numeric routine in hypsurf.
//
// BigReal is an MPFR-backed variable-precision float. New values pick up the
// process-wide default precision, so numeric code runs inside a
// ScopedPrecision and never mixes values created under different scopes.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace hypsurf {

// Expression templates are off so that `auto` and lambdas never capture
// dangling temporaries.
using BigReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::mpq_rational;

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Two routes that must agree did not, or a result is untrustworthy.
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what) : Error(what) {}
};

// An iterative stage hit its iteration cap.
class NonConvergenceError : public NumericError {
 public:
  NonConvergenceError(std::string stage, const std::string& what)
      : NumericError(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

inline constexpr int kMinDigits = 40;
inline constexpr int kDefaultDigits = 80;
// Equality decisions leave this many decimal digits below working precision.
inline constexpr int kGuardDigits = 10;

// Working precision W in significant decimal digits.
class Precision {
 public:
  constexpr Precision() = default;
  explicit Precision(int digits) : digits_(digits) {
    if (digits < kMinDigits) {
      throw DomainError("precision must be at least " +
                        std::to_string(kMinDigits) + " digits, got " +
                        std::to_string(digits));
    }
  }

  constexpr int digits() const noexcept { return digits_; }
  Precision doubled() const { return Precision(2 * digits_); }

  friend constexpr bool operator==(Precision, Precision) = default;

 private:
  int digits_ = kDefaultDigits;
};

// Sets the default BigReal precision for the lifetime of the guard.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(Precision w)
      : saved_(BigReal::default_precision()), active_(w) {
    BigReal::default_precision(static_cast<unsigned>(w.digits()));
  }
  ~ScopedPrecision() { BigReal::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

  Precision precision() const noexcept { return active_; }

 private:
  unsigned saved_;
  Precision active_;
};

inline Precision current_precision() {
  return Precision(std::max<int>(kMinDigits, BigReal::default_precision()));
}

// Thin wrappers so every transcendental comes straight from MPFR.
inline BigReal pi() {
  BigReal r(0);
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

inline BigReal two_pi() { return 2 * pi(); }

inline BigReal acosh(const BigReal& x) {
  BigReal r(0);
  mpfr_acosh(r.backend().data(), x.backend().data(), MPFR_RNDN);
  return r;
}

inline BigReal pow10(int e) {
  BigReal r(10);
  return boost::multiprecision::pow(r, e);
}

// 10^-(W-10): the absolute floor of the single equality rule.
inline BigReal tolerance(Precision w) { return pow10(-(w.digits() - kGuardDigits)); }

// |x - y| <= tol * max(1, |x|, |y|), with tol = tolerance(W) precomputed.
inline bool approx_eq(const BigReal& x, const BigReal& y, const BigReal& tol) {
  BigReal scale = 1;
  BigReal ax = abs(x);
  BigReal ay = abs(y);
  if (ax > scale) scale = ax;
  if (ay > scale) scale = ay;
  BigReal diff = abs(x - y);
  return diff <= tol * scale;
}

// |x - y| <= 10^-(W-10) * max(1, |x|, |y|). The only float-equality gate.
inline bool approx_eq(const BigReal& x, const BigReal& y, Precision w) {
  return approx_eq(x, y, tolerance(w));
}

// Decimal or scientific literal at the current precision.
inline BigReal parse_real(const std::string& text) {
  static constexpr const char* kAllowed = "0123456789+-.eE";
  if (text.empty() || text.find_first_not_of(kAllowed) != std::string::npos) {
    throw DomainError("'" + text + "' is not a real number");
  }
  try {
    return BigReal(text);
  } catch (const std::exception&) {
    throw DomainError("'" + text + "' is not a real number");
  }
}

// Significant digits in scientific notation, truncated (not rounded).
// Zero prints as "0".
inline std::string to_decimal(const BigReal& x, int digits) {
  if (digits < 1) digits = 1;
  if (x == 0) return "0";
  // Extra digits so that truncation is not affected by the final rounding.
  std::string s = x.str(digits + 8, std::ios_base::scientific);
  auto epos = s.find('e');
  std::string mantissa = s.substr(0, epos);
  std::string exponent = s.substr(epos);
  std::string sign;
  if (!mantissa.empty() && mantissa[0] == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  std::string all_digits;
  for (char c : mantissa) {
    if (c != '.') all_digits.push_back(c);
  }
  all_digits.resize(static_cast<std::size_t>(digits));
  std::string out = sign + all_digits.substr(0, 1);
  if (digits > 1) out += "." + all_digits.substr(1);
  return out + exponent;
}

// Number of leading significant decimal digits on which x and y agree,
// capped at W.
inline int agreed_digits(const BigReal& x, const BigReal& y, Precision w) {
  const int cap = w.digits();
  if (x == y) return cap;
  if (to_decimal(x, cap) == to_decimal(y, cap)) return cap;
  if (x == 0 || y == 0) return 0;
  if ((x < 0) != (y < 0)) return 0;
  BigReal ax = abs(x);
  BigReal ay = abs(y);
  BigReal rel = abs(x - y) / (ax > ay ? ax : ay);
  BigReal digits = -log10(rel);
  if (digits <= 0) return 0;
  int d = static_cast<int>(floor(digits).convert_to<long>());
  return std::clamp(d, 0, cap);
}

template <class T>
struct Stable {
  T value;
  int agreed_digits = 0;
  Precision precision;
};

// Runs a deterministic computation at W and 2W digits. The value is the 2W
// result rounded to W digits; agreed_digits measures how many leading digits
// survived the doubling.
template <class Computation>
Stable<BigReal> eval_stable(Computation&& computation, Precision w) {
  BigReal hi = [&] {
    ScopedPrecision guard(w.doubled());
    return BigReal(computation());
  }();
  ScopedPrecision guard(w);
  BigReal lo = computation();
  BigReal hi_rounded(hi, static_cast<unsigned>(w.digits()));
  return {hi_rounded, agreed_digits(lo, hi, w), w};
}

}  // namespace hypsurf

#endif  // HYPSURF_BIGNUM_HPP
