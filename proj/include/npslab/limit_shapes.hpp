#pragma once

#include "npslab/partition.hpp"
#include "npslab/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace nps {

struct CurvePoint {
    double x = 0.0;
    double y = 0.0;
};

/// Piecewise-linear boundary gamma in Russian coordinates, equal to |x|
/// outside the breakpoint span.  The constructor enforces membership in Gamma:
/// strictly increasing x, endpoints on y = |x|, slopes in [-1, 1] and
/// gamma >= |x|.  Comparisons use an absolute slack of 1e-9.
class LimitCurve {
public:
    static constexpr double kSlack = 1e-9;

    explicit LimitCurve(std::vector<CurvePoint> breakpoints);

    /// gamma_sq: the boundary of the unit square.
    static LimitCurve unit_square();
    /// gamma(x) = |x|, not normalized.
    static LimitCurve trivial();

    const std::vector<CurvePoint>& breakpoints() const { return pts_; }
    double span_begin() const { return pts_.front().x; }
    double span_end() const { return pts_.back().x; }

    double operator()(double x) const;
    /// Derivative away from breakpoints; at a breakpoint it is the slope to the right.
    double slope(double x) const;

    /// Integral of gamma - |x| over the line.
    double area() const;
    bool is_normalized(double tol = 1e-9) const;

    /// x -> -x.
    LimitCurve mirror() const;

    /// Breakpoints plus (0, 0) when 0 lies outside the span, so the list
    /// covers every place gamma can bend.
    std::vector<CurvePoint> extended_vertices() const;

private:
    std::vector<CurvePoint> pts_;
};

/// u scales by n^alpha and v by n^beta, alpha + beta = 1.  beta = 0 is the
/// unscaled second direction (q = infinity).
struct ScalingExponents {
    Rational alpha{1, 2};
    Rational beta{1, 2};

    ScalingExponents() = default;
    ScalingExponents(Rational a, Rational b);
    static ScalingExponents balanced() { return {}; }
    /// alpha = 1/p, beta = 1 - 1/p.
    static ScalingExponents from_p(const Rational& p);
};

/// Boundary of the rescaled diagram of lambda.  Throws DomainError if
/// |lambda| != n or n = 0.
LimitCurve partition_boundary(const Partition& lambda, long n, const ScalingExponents& s = {});

/// sup_x |gamma(x) - eta(x)| over the merged breakpoints.
double sup_distance(const LimitCurve& gamma, const LimitCurve& eta);

struct HookDistances {
    double arm = 0.0;
    double leg = 0.0;
    double d = 0.0;
};

/// a, l and d at (x, y); all zero outside the open domain under gamma.
HookDistances hook_distances(const LimitCurve& gamma, double x, double y);

struct HookCoordinates {
    double s = 0.0;
    double t = 0.0;
};

/// s = x - l/sqrt2, t = x + a/sqrt2.
HookCoordinates hook_coordinates(const LimitCurve& gamma, double x, double y);
/// The inverse: x = (s + t + g(s) - g(t))/2, y = (s - t + g(s) + g(t))/2.
CurvePoint point_from_hook_coordinates(const LimitCurve& gamma, double s, double t);

/// Integral of d over the domain under gamma.
double worst_case_integral(const LimitCurve& gamma, double tol = 1e-4);

/// Area form: (1/2) times the integral of (a^2 + l^2) / (a + l).
double avg_lower_integral(const LimitCurve& gamma, double tol = 1e-4);
/// Hook-coordinate form:
/// (sqrt2/8) int_{s<t} ((t-s) + (g(t)-g(s))^2/(t-s)) (1+g'(s)) (1-g'(t)) dt ds.
double avg_lower_integral_hook(const LimitCurve& gamma, double tol = 1e-4);

struct ImbalancedIntegrals {
    double i1 = 0.0;
    double i2 = 0.0;
};

/// I1 = integral of a, I2 = integral of l over the domain under gamma.
ImbalancedIntegrals imbalanced_integrals(const LimitCurve& gamma, double tol = 1e-4);
/// Same quantities through (sqrt2/4) int_{s<t} (t - s +- (g(t) - g(s))) (1+g'(s)) (1-g'(t)).
ImbalancedIntegrals imbalanced_integrals_hook(const LimitCurve& gamma, double tol = 1e-4);

/// n^{3/2} times the integral of d over the rescaled diagram of lambda,
/// evaluated exactly cell by cell from the boundary vertices.
Rational scaled_distance_integral_exact(const Partition& lambda);

/// lambda_i = #{ j : cell centre ((j-1/2)/sqrt n, (i-1/2)/sqrt n) lies under gamma }
/// in (u, v) coordinates.  The size of the result is only close to n.
Partition partition_from_curve(const LimitCurve& gamma, long n);

/// {"breakpoints": [[x, y], ...]} with numbers or "p/q" / decimal strings.
/// Errors are DomainError naming the first violated invariant.
LimitCurve parse_curve_json(std::string_view text);
LimitCurve load_curve_file(const std::string& path);

}  // namespace nps
