#ifndef MONOKIT_GALLERY_SEQ_HPP
#define MONOKIT_GALLERY_SEQ_HPP

#include <cstddef>
#include <vector>

#include "monokit/scalar.hpp"

namespace monokit {

// Exact sequence with explicit leading coordinates and a constant-plus-
// geometric tail:  x_{h+m} = tail_const + tail_coeff * ratio^(m-1), m >= 1,
// where h = head.size(). Summability (an l1 role) requires tail_const = 0
// and |ratio| < 1. Coordinates are 1-indexed.
struct GeomSeq {
  std::vector<Rational> head;
  Rational tail_const{0};
  Rational tail_coeff{0};
  Rational ratio{0};

  void validate() const {
    if (tail_coeff != 0 && !(abs_val(ratio) < 1))
      throw InvalidInput("geometric tail requires |ratio| < 1");
  }

  static GeomSeq finite(std::vector<Rational> coords) {
    GeomSeq s;
    s.head = std::move(coords);
    return s;
  }
  static GeomSeq geometric(std::vector<Rational> head, Rational first_term, Rational ratio) {
    GeomSeq s;
    s.head = std::move(head);
    s.tail_coeff = std::move(first_term);
    s.ratio = std::move(ratio);
    s.validate();
    return s;
  }

  bool summable() const { return tail_const == 0; }

  Rational at(size_t n) const {
    if (n == 0) throw InvalidInput("sequence coordinates are 1-indexed");
    if (n <= head.size()) return head[n - 1];
    size_t m = n - head.size();
    Rational q_pow(1);
    for (size_t i = 1; i < m; ++i) q_pow *= ratio;
    return tail_const + tail_coeff * q_pow;
  }

  // Sum of all coordinates; requires a summable tail.
  Rational sum() const {
    if (!summable()) throw InvalidInput("non-summable tail");
    Rational s{0};
    for (const auto& v : head) s += v;
    if (tail_coeff != 0) s += tail_coeff / (1 - ratio);
    return s;
  }

  Rational partial_sum(size_t n) const {
    Rational s{0};
    for (size_t k = 1; k <= n; ++k) s += at(k);
    return s;
  }

  // sup_n |x_n|; the tail is monotone for ratio >= 0 and alternates
  // otherwise, so its sup is attained among the first two terms and the
  // limit tail_const.
  Rational sup_abs() const {
    Rational s{0};
    for (const auto& v : head) s = std::max(s, abs_val(v));
    s = std::max(s, abs_val(tail_const));
    s = std::max(s, abs_val(tail_const + tail_coeff));
    s = std::max(s, abs_val(tail_const + tail_coeff * ratio));
    return s;
  }

  std::vector<Rational> truncate(size_t n) const {
    std::vector<Rational> out(n);
    for (size_t k = 1; k <= n; ++k) out[k - 1] = at(k);
    return out;
  }

  GeomSeq with_head_size(size_t h) const {
    if (h < head.size()) throw InvalidInput("cannot shrink a sequence head");
    GeomSeq s = *this;
    Rational q_pow(1);
    while (s.head.size() < h) {
      s.head.push_back(tail_const + tail_coeff * q_pow);
      q_pow *= ratio;
    }
    s.tail_coeff = tail_coeff * q_pow;
    s.ratio = ratio;
    return s;
  }
};

inline GeomSeq seq_scale(const Rational& t, const GeomSeq& x) {
  GeomSeq s = x;
  for (auto& v : s.head) v *= t;
  s.tail_const *= t;
  s.tail_coeff *= t;
  return s;
}

inline GeomSeq seq_add(const GeomSeq& a, const GeomSeq& b) {
  size_t h = std::max(a.head.size(), b.head.size());
  GeomSeq x = a.with_head_size(h), y = b.with_head_size(h);
  if (x.tail_coeff != 0 && y.tail_coeff != 0 && x.ratio != y.ratio)
    throw InvalidInput("sum of sequences with different tail ratios");
  GeomSeq s;
  s.head.resize(h);
  for (size_t i = 0; i < h; ++i) s.head[i] = x.head[i] + y.head[i];
  s.tail_const = x.tail_const + y.tail_const;
  s.tail_coeff = x.tail_coeff + y.tail_coeff;
  s.ratio = x.tail_coeff != 0 ? x.ratio : y.ratio;
  s.validate();
  return s;
}

inline GeomSeq seq_sub(const GeomSeq& a, const GeomSeq& b) {
  return seq_add(a, seq_scale(Rational(-1), b));
}

// (Ax)_n = -sum_{k<n} x_k + sum_{k>n} x_k. With P_n the partial sums and S
// the total, (Ax)_n = S - P_{n-1} - P_n; past the head P is affine in
// ratio^m, so A maps this class to itself with the same ratio.
inline GeomSeq gossez_apply(const GeomSeq& x) {
  if (!x.summable()) throw InvalidInput("the operator needs a summable sequence");
  Rational s = x.sum();
  size_t h = x.head.size();
  GeomSeq out;
  out.head.resize(h);
  for (size_t n = 1; n <= h; ++n)
    out.head[n - 1] = s - x.partial_sum(n - 1) - x.partial_sum(n);
  Rational ph = x.partial_sum(h);
  if (x.tail_coeff == 0) {
    out.tail_const = s - 2 * ph;  // equals -P_h for finitely supported x
    out.tail_coeff = 0;
    out.ratio = 0;
  } else {
    Rational b = x.tail_coeff / (1 - x.ratio);
    Rational a = ph + b;
    out.tail_const = s - 2 * a;
    out.tail_coeff = b * (1 + x.ratio);
    out.ratio = x.ratio;
  }
  out.validate();
  return out;
}

// sum_n a_n b_n in closed form; requires the product tail to be summable,
// i.e. at least one of the tail constants must vanish.
inline Rational seq_pairing(const GeomSeq& a, const GeomSeq& b) {
  size_t h = std::max(a.head.size(), b.head.size());
  GeomSeq x = a.with_head_size(h), y = b.with_head_size(h);
  if (x.tail_const != 0 && y.tail_const != 0)
    throw InvalidInput("pairing of two non-summable tails");
  Rational s{0};
  for (size_t i = 0; i < h; ++i) s += x.head[i] * y.head[i];
  // tail: sum_m (cx + ax qx^{m-1})(cy + ay qy^{m-1})
  if (x.tail_const != 0 && y.tail_coeff != 0) s += x.tail_const * y.tail_coeff / (1 - y.ratio);
  if (y.tail_const != 0 && x.tail_coeff != 0) s += y.tail_const * x.tail_coeff / (1 - x.ratio);
  if (x.tail_coeff != 0 && y.tail_coeff != 0)
    s += x.tail_coeff * y.tail_coeff / (1 - x.ratio * y.ratio);
  return s;
}

}  // namespace monokit

#endif
