#include "npslab/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

namespace nps {

namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;

void bisect(const std::function<double(double)>& f, double a, double b, double rel_tol, unsigned depth, double abs_tol,
            QuadratureResult& out) {
    double err = 0.0;
    const double v = Rule::integrate(f, a, b, 0, 0.0, &err);
    if (depth == 0 || err <= std::max(abs_tol, rel_tol * std::abs(v))) {
        out.value += v;
        out.error += err;
        return;
    }
    const double m = 0.5 * (a + b);
    bisect(f, a, m, rel_tol, depth - 1, 0.5 * abs_tol, out);
    bisect(f, m, b, rel_tol, depth - 1, 0.5 * abs_tol, out);
}

}  // namespace

QuadratureResult integrate_pieces(const std::function<double(double)>& f, std::span<const double> pts,
                                  double rel_tol, unsigned max_depth, double abs_tol) {
    QuadratureResult total;
    const double span = pts.empty() ? 0.0 : pts.back() - pts.front();
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        const double a = pts[k];
        const double b = pts[k + 1];
        if (!(b > a)) continue;
        bisect(f, a, b, rel_tol, max_depth, span > 0.0 ? abs_tol * (b - a) / span : 0.0, total);
    }
    return total;
}

}  // namespace nps
