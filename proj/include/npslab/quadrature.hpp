#pragma once

#include <functional>
#include <span>

namespace nps {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
};

/// Adaptive 15-point Gauss-Kronrod on each interval [pts[k], pts[k+1]].
/// A subinterval is accepted once its error estimate is below
/// max(abs_tol share, rel_tol * |value|), or at max_depth bisections.
/// pts must be sorted; empty and zero-length intervals contribute nothing.
QuadratureResult integrate_pieces(const std::function<double(double)>& f, std::span<const double> pts,
                                  double rel_tol = 1e-10, unsigned max_depth = 12, double abs_tol = 0.0);

}  // namespace nps
