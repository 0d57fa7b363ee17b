#ifndef MONOKIT_SCALAR_HPP
#define MONOKIT_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace monokit {

// Expression templates are disabled so arithmetic yields values directly;
// the generic scalar code treats Rational exactly like double.
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::backends::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

// Thrown for precondition/validation failures. Maps to exit code 2 at the
// tool boundary; a false verdict is a normal return value, never an error.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an iterative search hits its cap without certifying the
// requested tolerance. Carries the best residual seen.
class SearchExhausted : public std::runtime_error {
 public:
  SearchExhausted(const std::string& what, double residual)
      : std::runtime_error(what), residual(residual) {}
  double residual;
};

struct Tolerance {
  double abs = 1e-9;
  double rel = 1e-9;

  void validate() const {
    if (!(std::isfinite(abs) && std::isfinite(rel) && abs >= 0 && rel >= 0))
      throw InvalidInput("tolerance components must be finite and nonnegative");
  }
};

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool is_exact = false;
  static double from_int(long long n) { return static_cast<double>(n); }
  static double from_ratio(long long p, long long q) {
    return static_cast<double>(p) / static_cast<double>(q);
  }
  static double to_double(double v) { return v; }
  static bool finite(double v) { return std::isfinite(v); }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool is_exact = true;
  static Rational from_int(long long n) { return Rational(n); }
  static Rational from_ratio(long long p, long long q) { return Rational(p, q); }
  static double to_double(const Rational& v) { return v.template convert_to<double>(); }
  static bool finite(const Rational&) { return true; }
};

// Nonnegativity with one-sided slack: the floating backend accepts values
// down to -abs so roundoff cannot produce spurious violations.
inline bool nonneg(double v, const Tolerance& tol) { return v >= -tol.abs; }
inline bool nonneg(const Rational& v, const Tolerance&) { return v >= 0; }

inline bool nonpos(double v, const Tolerance& tol) { return v <= tol.abs; }
inline bool nonpos(const Rational& v, const Tolerance&) { return v <= 0; }

inline bool scalar_close(double a, double b, const Tolerance& tol) {
  double m = std::max(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= tol.abs + tol.rel * m;
}
inline bool scalar_close(const Rational& a, const Rational& b, const Tolerance&) {
  return a == b;
}

template <class S>
S abs_val(const S& v) {
  return v < S(0) ? S(-v) : v;
}

// Parses "p/q", "p", or a plain decimal like "-0.125" into an exact rational.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw InvalidInput("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) return Rational(s);
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (frac_len == 0) return Rational(s.substr(0, dot));
    bool negative = !digits.empty() && digits[0] == '-';
    if (negative || (!digits.empty() && digits[0] == '+')) digits.erase(0, 1);
    // strip leading zeros so cpp_int does not read the digits as octal
    size_t first = digits.find_first_not_of('0');
    digits = first == std::string::npos ? "0" : digits.substr(first);
    Rational num{boost::multiprecision::cpp_int(digits)};
    if (negative) num = -num;
    boost::multiprecision::cpp_int den = 1;
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    return num / Rational(den);
  } catch (const std::exception&) {
    throw InvalidInput("malformed rational literal: " + s);
  }
}

inline std::string format_rational(const Rational& v) { return v.str(); }

}  // namespace monokit

#endif
