#ifndef MONOKIT_DENSE_HPP
#define MONOKIT_DENSE_HPP

#include <cmath>
#include <optional>
#include <vector>

#include "monokit/scalar.hpp"

namespace monokit {

template <class S>
using Matrix = std::vector<std::vector<S>>;

template <class S>
void validate_square(const Matrix<S>& m, const char* what) {
  if (m.empty()) throw InvalidInput(std::string(what) + " must be nonempty");
  for (const auto& row : m)
    if (row.size() != m.size()) throw InvalidInput(std::string(what) + " must be square");
}

template <class S>
std::vector<S> mat_vec(const Matrix<S>& m, const std::vector<S>& v) {
  std::vector<S> r(m.size(), S{});
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw InvalidInput("matrix/vector dimension mismatch");
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  }
  return r;
}

namespace dense_detail {
template <class S>
bool negligible(const S& v, const S& scale) {
  if constexpr (scalar_traits<S>::is_exact)
    return v == 0;
  else
    return std::fabs(v) <= 1e-12 * (1.0 + std::fabs(scale));
}
}  // namespace dense_detail

// Gaussian elimination with full pivoting. Solves A x = b when the system is
// consistent (free variables set to zero), returns nullopt otherwise.
template <class S>
std::optional<std::vector<S>> solve_consistent(Matrix<S> a, std::vector<S> b) {
  size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
  if (b.size() != n) throw InvalidInput("solver rhs dimension mismatch");
  std::vector<size_t> col_of_row;
  std::vector<bool> col_used(m, false);
  S scale{};
  for (const auto& row : a)
    for (const S& v : row) scale = std::max(scale, abs_val(v));
  size_t r = 0;
  for (size_t step = 0; step < m && r < n; ++step) {
    size_t pr = r, pc = m;
    S best{};
    for (size_t i = r; i < n; ++i)
      for (size_t j = 0; j < m; ++j) {
        if (col_used[j]) continue;
        S mag = abs_val(a[i][j]);
        if (mag > best) {
          best = mag;
          pr = i;
          pc = j;
        }
      }
    if (pc == m || dense_detail::negligible(best, scale)) break;
    std::swap(a[pr], a[r]);
    std::swap(b[pr], b[r]);
    col_used[pc] = true;
    col_of_row.push_back(pc);
    for (size_t i = 0; i < n; ++i) {
      if (i == r) continue;
      if (dense_detail::negligible(a[i][pc], scale)) continue;
      S f = a[i][pc] / a[r][pc];
      for (size_t j = 0; j < m; ++j) a[i][j] -= f * a[r][j];
      a[i][pc] = S{};
      b[i] -= f * b[r];
    }
    ++r;
  }
  S bscale{};
  for (const S& v : b) bscale = std::max(bscale, abs_val(v));
  for (size_t i = r; i < n; ++i)
    if (!dense_detail::negligible(b[i], bscale)) return std::nullopt;
  std::vector<S> x(m, S{});
  for (size_t i = 0; i < r; ++i) x[col_of_row[i]] = b[i] / a[i][col_of_row[i]];
  return x;
}

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> symmetric_eigenvalues(Matrix<double> a) {
  validate_square(a, "matrix");
  size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-26) break;
    for (size_t p = 0; p < n; ++p)
      for (size_t q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (size_t k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (size_t k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> eig(n);
  for (size_t i = 0; i < n; ++i) eig[i] = a[i][i];
  return eig;
}

}  // namespace monokit

#endif
