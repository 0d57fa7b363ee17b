#ifndef MONOKIT_PROJECTION_HPP
#define MONOKIT_PROJECTION_HPP

#include <cmath>
#include <functional>
#include <vector>

#include "monokit/linalg.hpp"
#include "monokit/scalar.hpp"

namespace monokit {

struct HalfspaceRow {
  std::vector<double> a;
  double b = 0;
};

inline std::vector<double> project_halfspace(const HalfspaceRow& h, std::vector<double> p) {
  double an = 0, viol = -h.b;
  for (size_t i = 0; i < h.a.size(); ++i) {
    an += h.a[i] * h.a[i];
    viol += h.a[i] * p[i];
  }
  if (viol <= 0 || an == 0) return p;
  double f = viol / an;
  for (size_t i = 0; i < h.a.size(); ++i) p[i] -= f * h.a[i];
  return p;
}

// Dykstra's alternating projections onto an intersection of halfspaces.
// Unlike plain cyclic projection, the correction vectors make the iterates
// converge to the metric projection of the starting point, which is what the
// variational-inequality checks require. Throws when the residual target is
// not reached within the sweep cap.
inline std::vector<double> dykstra_halfspaces(const std::vector<HalfspaceRow>& rows,
                                              std::vector<double> x0,
                                              double residual_tol = 1e-12,
                                              int max_sweeps = 100000) {
  if (rows.empty()) return x0;
  size_t d = x0.size();
  std::vector<std::vector<double>> corr(rows.size(), std::vector<double>(d, 0.0));
  std::vector<double> p = x0;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double moved = 0;
    for (size_t k = 0; k < rows.size(); ++k) {
      std::vector<double> y(d);
      for (size_t i = 0; i < d; ++i) y[i] = p[i] + corr[k][i];
      std::vector<double> q = project_halfspace(rows[k], y);
      for (size_t i = 0; i < d; ++i) {
        double c = y[i] - q[i];
        moved += (q[i] - p[i]) * (q[i] - p[i]);
        corr[k][i] = c;
        p[i] = q[i];
      }
    }
    double worst = 0;
    for (const auto& h : rows) {
      double viol = -h.b;
      for (size_t i = 0; i < d; ++i) viol += h.a[i] * p[i];
      worst = std::max(worst, viol);
    }
    if (worst <= residual_tol && moved <= residual_tol * residual_tol) return p;
  }
  double worst = 0;
  for (const auto& h : rows) {
    double viol = -h.b;
    for (size_t i = 0; i < d; ++i) viol += h.a[i] * p[i];
    worst = std::max(worst, viol);
  }
  throw SearchExhausted("halfspace projection did not converge", worst);
}

// Dykstra over arbitrary convex-set projectors; converges to the projection
// of x0 onto the intersection when it is nonempty.
inline std::vector<double> dykstra_projectors(
    const std::vector<std::function<std::vector<double>(std::vector<double>)>>& projectors,
    std::vector<double> x0, double residual_tol = 1e-12, int max_sweeps = 100000) {
  if (projectors.empty()) return x0;
  size_t d = x0.size();
  std::vector<std::vector<double>> corr(projectors.size(), std::vector<double>(d, 0.0));
  std::vector<double> p = x0;
  double moved = 0;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    moved = 0;
    for (size_t k = 0; k < projectors.size(); ++k) {
      std::vector<double> y(d);
      for (size_t i = 0; i < d; ++i) y[i] = p[i] + corr[k][i];
      std::vector<double> q = projectors[k](y);
      for (size_t i = 0; i < d; ++i) {
        moved += (q[i] - p[i]) * (q[i] - p[i]);
        corr[k][i] = y[i] - q[i];
        p[i] = q[i];
      }
    }
    double drift = 0;
    for (size_t k = 0; k < projectors.size(); ++k) {
      std::vector<double> q = projectors[k](p);
      for (size_t i = 0; i < d; ++i) drift = std::max(drift, std::fabs(q[i] - p[i]));
    }
    if (drift <= residual_tol && moved <= residual_tol * residual_tol) return p;
  }
  throw SearchExhausted("projector intersection did not converge", std::sqrt(moved));
}

}  // namespace monokit

#endif
