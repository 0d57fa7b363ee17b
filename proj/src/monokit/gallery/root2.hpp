#ifndef MONOKIT_GALLERY_ROOT2_HPP
#define MONOKIT_GALLERY_ROOT2_HPP

#include <string>

#include "monokit/scalar.hpp"

namespace monokit {

// Element of the quadratic field Q(sqrt 2): a + b*sqrt(2). Lets the gallery
// state half-integer powers of two exactly.
struct Root2 {
  Rational a{0}, b{0};

  Root2() = default;
  Root2(Rational a, Rational b) : a(std::move(a)), b(std::move(b)) {}
  explicit Root2(const Rational& r) : a(r) {}

  friend Root2 operator+(const Root2& x, const Root2& y) { return {x.a + y.a, x.b + y.b}; }
  friend Root2 operator-(const Root2& x, const Root2& y) { return {x.a - y.a, x.b - y.b}; }
  friend Root2 operator-(const Root2& x) { return {-x.a, -x.b}; }
  friend Root2 operator*(const Root2& x, const Root2& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const Root2& x, const Root2& y) { return x.a == y.a && x.b == y.b; }

  Root2 inverse() const {
    Rational n = a * a - 2 * b * b;
    if (n == 0) throw InvalidInput("zero has no inverse");
    return {a / n, -b / n};
  }

  // The rational square; exact, and rational-valued for any a + b*sqrt(2)
  // with ab = 0.
  Root2 squared() const { return *this * *this; }

  bool negative() const {
    // sign of a + b*sqrt2: compare a^2 with 2 b^2 on the dominating side
    if (a == 0) return b < 0;
    if (b == 0) return a < 0;
    if (a > 0 && b > 0) return false;
    if (a < 0 && b < 0) return true;
    bool a_dominates = a * a > 2 * b * b;
    return a_dominates ? a < 0 : b < 0;
  }

  std::string str() const {
    if (b == 0) return a.str();
    std::string s;
    if (a != 0) s += a.str() + (b > 0 ? "+" : "");
    if (b == 1)
      s += "sqrt(2)";
    else if (b == -1)
      s += "-sqrt(2)";
    else
      s += b.str() + "*sqrt(2)";
    return s;
  }
};

inline Rational rational_pow2(long long k) {
  Rational r(1);
  for (long long i = 0; i < (k >= 0 ? k : -k); ++i) r *= 2;
  return k >= 0 ? r : Rational(1) / r;
}

// 2^{e/2} for integer e: rational for even e, a pure sqrt(2) multiple
// otherwise.
inline Root2 pow2_half(long long e) {
  if (e % 2 == 0) return Root2(rational_pow2(e / 2));
  long long k = (e - 1) / 2;  // 2^{e/2} = 2^k * sqrt(2)
  return Root2(Rational(0), rational_pow2(k));
}

}  // namespace monokit

#endif
