#include "npslab/limit_shapes.hpp"

#include "npslab/errors.hpp"
#include "npslab/quadrature.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace nps {

namespace {

const double kSqrt2 = std::sqrt(2.0);

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

// The boundary in (P, Q) = ((x+y)/sqrt2, (y-x)/sqrt2): P is nondecreasing and
// Q nonincreasing along the path, from (0, Qmax) down to (Pmax, 0).
struct Path {
    std::vector<double> p;
    std::vector<double> q;

    explicit Path(const LimitCurve& gamma) {
        for (const CurvePoint& v : gamma.extended_vertices()) {
            p.push_back((v.x + v.y) / kSqrt2);
            q.push_back((v.y - v.x) / kSqrt2);
        }
        // Clean rounding so that the path is exactly monotone.
        for (std::size_t k = 1; k < p.size(); ++k) {
            p[k] = std::max(p[k], p[k - 1]);
            q[k] = std::min(q[k], q[k - 1]);
        }
        p.front() = std::max(0.0, p.front());
        q.back() = std::max(0.0, q.back());
    }

    double p_end() const { return p.back(); }
    double q_top() const { return q.front(); }

    // Height of the boundary above P, or -inf past the end.
    double beta(double P) const {
        if (P < 0.0 || P > p.back()) return -std::numeric_limits<double>::infinity();
        const auto it = std::lower_bound(p.begin(), p.end(), P);
        const auto k = static_cast<std::size_t>(it - p.begin());
        if (k == 0) return q[0];
        const double w = (P - p[k - 1]) / (p[k] - p[k - 1]);
        return q[k - 1] + w * (q[k] - q[k - 1]);
    }

    // Extent of the boundary to the right of height Q.
    double p_at(double Q) const {
        if (Q < 0.0 || Q > q.front()) return -std::numeric_limits<double>::infinity();
        std::size_t k = q.size() - 1;
        while (k > 0 && q[k] < Q) --k;
        if (k == q.size() - 1) return p[k];
        if (q[k] == q[k + 1]) return p[k + 1];
        const double w = (q[k] - Q) / (q[k] - q[k + 1]);
        return p[k] + w * (p[k + 1] - p[k]);
    }

    HookDistances distances(double P, double Q) const {
        if (!(P > 0.0) || !(Q > 0.0) || P >= p.back()) return {};
        const double top = beta(P);
        if (!(Q < top - 1e-13)) return {};
        const double right = p_at(Q);
        HookDistances h;
        h.arm = std::max(0.0, right - P);
        h.leg = std::max(0.0, top - Q);
        double best = std::max(P + top, right + Q);
        for (std::size_t k = 0; k < p.size(); ++k)
            if (p[k] >= P && q[k] >= Q) best = std::max(best, p[k] + q[k]);
        h.d = std::max(0.0, best - P - Q);
        return h;
    }
};

template <class F>
double integrate_domain(const LimitCurve& gamma, double tol, const char* name, F&& integrand) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    const Path path(gamma);
    std::vector<double> ps(path.p.begin(), path.p.end());
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    std::vector<double> qs(path.q.begin(), path.q.end());
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());

    double inner_error = 0.0;
    auto outer = [&](double P) {
        const double top = path.beta(P);
        if (!(top > 0.0)) return 0.0;
        std::vector<double> cuts{0.0};
        for (double v : qs)
            if (v > 0.0 && v < top) cuts.push_back(v);
        cuts.push_back(top);
        const auto r = integrate_pieces([&](double Q) { return integrand(path.distances(P, Q)); }, cuts, 1e-10, 14,
                                        0.05 * tol / std::max(1.0, path.p_end()));
        inner_error = std::max(inner_error, r.error);
        return r.value;
    };
    const auto r = integrate_pieces(outer, ps, 1e-10, 14, 0.05 * tol);
    const double err = r.error + inner_error * path.p_end();
    if (err > tol)
        throw NonConvergenceError(std::string(name) + ": quadrature error estimate " + fmt(err) +
                                      " exceeds tolerance " + fmt(tol),
                                  r.value, err);
    return r.value;
}

struct Segment {
    double x0, x1, y0, slope;
    double at(double x) const { return y0 + slope * (x - x0); }
};

std::vector<Segment> segments(const LimitCurve& gamma) {
    const auto v = gamma.extended_vertices();
    std::vector<Segment> segs;
    for (std::size_t k = 0; k + 1 < v.size(); ++k)
        segs.push_back({v[k].x, v[k + 1].x, v[k].y, (v[k + 1].y - v[k].y) / (v[k + 1].x - v[k].x)});
    return segs;
}

// Sum over segment pairs (i <= j) of w(i,j) times the integral over s in
// segment i, t in segment j, s < t, of F.
template <class F>
double integrate_hook(const LimitCurve& gamma, double tol, const char* name, F&& integrand) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    const auto segs = segments(gamma);
    double total = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        for (std::size_t j = i; j < segs.size(); ++j) {
            const Segment& si = segs[i];
            const Segment& sj = segs[j];
            const double weight = (1.0 + si.slope) * (1.0 - sj.slope);
            if (std::abs(weight) < 1e-15) continue;
            double inner_error = 0.0;
            auto outer = [&](double s) {
                const double lo = std::max(s, sj.x0);
                if (!(sj.x1 > lo)) return 0.0;
                const double gs = si.at(s);
                const double pts[2] = {lo, sj.x1};
                const auto r = integrate_pieces([&](double t) { return integrand(s, t, gs, sj.at(t), si.slope, sj.slope); },
                                                pts, 1e-10, 14, 0.01 * tol / std::max(1.0, sj.x1 - sj.x0));
                inner_error = std::max(inner_error, r.error);
                return r.value;
            };
            const double pts[2] = {si.x0, si.x1};
            const auto r = integrate_pieces(outer, pts, 1e-10, 14, 0.01 * tol);
            total += weight * r.value;
            error += std::abs(weight) * (r.error + inner_error * (si.x1 - si.x0));
        }
    }
    if (error > tol)
        throw NonConvergenceError(std::string(name) + ": quadrature error estimate " + fmt(error) +
                                      " exceeds tolerance " + fmt(tol),
                                  total, error);
    return total;
}

double parse_coordinate(const nlohmann::json& v, std::size_t index) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        try {
            return to_double(parse_rational(v.get<std::string>()));
        } catch (const DomainError&) {
        }
    }
    throw DomainError("breakpoint " + std::to_string(index) + " has a coordinate that is neither a number nor a rational string");
}

}  // namespace

LimitCurve::LimitCurve(std::vector<CurvePoint> breakpoints) : pts_(std::move(breakpoints)) {
    if (pts_.empty()) throw DomainError("curve needs at least one breakpoint");
    for (const CurvePoint& p : pts_)
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw DomainError("breakpoints must be finite");
    for (std::size_t k = 1; k < pts_.size(); ++k)
        if (!(pts_[k].x > pts_[k - 1].x))
            throw DomainError("breakpoints must be strictly increasing in x (breakpoint " + std::to_string(k) + ")");
    if (std::abs(pts_.front().y - std::abs(pts_.front().x)) > kSlack)
        throw DomainError("first breakpoint must lie on y = |x|");
    if (std::abs(pts_.back().y - std::abs(pts_.back().x)) > kSlack)
        throw DomainError("last breakpoint must lie on y = |x|");
    for (std::size_t k = 1; k < pts_.size(); ++k) {
        const double s = (pts_[k].y - pts_[k - 1].y) / (pts_[k].x - pts_[k - 1].x);
        if (std::abs(s) > 1.0 + kSlack)
            throw DomainError("segment " + std::to_string(k - 1) + " has slope " + fmt(s) + " outside [-1, 1]");
    }
    for (std::size_t k = 0; k < pts_.size(); ++k)
        if (pts_[k].y < std::abs(pts_[k].x) - kSlack)
            throw DomainError("curve falls below |x| at breakpoint " + std::to_string(k));
    // Snap the endpoints onto |x| exactly.
    pts_.front().y = std::abs(pts_.front().x);
    pts_.back().y = std::abs(pts_.back().x);
}

LimitCurve LimitCurve::unit_square() {
    const double h = 1.0 / kSqrt2;
    return LimitCurve({{-h, h}, {0.0, kSqrt2}, {h, h}});
}

LimitCurve LimitCurve::trivial() { return LimitCurve({{-1.0, 1.0}, {0.0, 0.0}, {1.0, 1.0}}); }

double LimitCurve::operator()(double x) const {
    if (x <= pts_.front().x || x >= pts_.back().x) {
        if (x == pts_.front().x) return pts_.front().y;
        if (x == pts_.back().x) return pts_.back().y;
        return std::abs(x);
    }
    const auto it = std::upper_bound(pts_.begin(), pts_.end(), x, [](double v, const CurvePoint& p) { return v < p.x; });
    const CurvePoint& b = *it;
    const CurvePoint& a = *(it - 1);
    return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

double LimitCurve::slope(double x) const {
    if (x < pts_.front().x || x >= pts_.back().x) return x < 0.0 ? -1.0 : 1.0;
    const auto it = std::upper_bound(pts_.begin(), pts_.end(), x, [](double v, const CurvePoint& p) { return v < p.x; });
    const CurvePoint& b = *it;
    const CurvePoint& a = *(it - 1);
    return (b.y - a.y) / (b.x - a.x);
}

double LimitCurve::area() const {
    auto abs_primitive = [](double x) { return x * std::abs(x) / 2.0; };
    double total = 0.0;
    for (std::size_t k = 1; k < pts_.size(); ++k) {
        const CurvePoint& a = pts_[k - 1];
        const CurvePoint& b = pts_[k];
        total += (a.y + b.y) / 2.0 * (b.x - a.x) - (abs_primitive(b.x) - abs_primitive(a.x));
    }
    return total;
}

bool LimitCurve::is_normalized(double tol) const { return std::abs(area() - 1.0) <= tol; }

LimitCurve LimitCurve::mirror() const {
    std::vector<CurvePoint> m;
    m.reserve(pts_.size());
    for (auto it = pts_.rbegin(); it != pts_.rend(); ++it) m.push_back({-it->x, it->y});
    return LimitCurve(std::move(m));
}

std::vector<CurvePoint> LimitCurve::extended_vertices() const {
    std::vector<CurvePoint> v;
    if (pts_.front().x > 0.0) v.push_back({0.0, 0.0});
    v.insert(v.end(), pts_.begin(), pts_.end());
    if (pts_.back().x < 0.0) v.push_back({0.0, 0.0});
    return v;
}

ScalingExponents::ScalingExponents(Rational a, Rational b) : alpha(std::move(a)), beta(std::move(b)) {
    if (alpha < 0 || beta < 0 || alpha > 1 || beta > 1) throw DomainError("scaling exponents must lie in [0, 1]");
    if (alpha + beta != 1) throw DomainError("scaling exponents must satisfy alpha + beta = 1");
}

ScalingExponents ScalingExponents::from_p(const Rational& p) {
    if (p < 1) throw DomainError("p must be at least 1");
    Rational a = 1 / p;
    a.canonicalize();
    Rational b = 1 - a;
    return ScalingExponents(a, b);
}

LimitCurve partition_boundary(const Partition& lambda, long n, const ScalingExponents& s) {
    if (lambda.size() != n)
        throw DomainError("partition of size " + std::to_string(lambda.size()) + " does not match n = " + std::to_string(n));
    if (n == 0) throw DomainError("boundary of the empty partition is undefined");
    const double su = std::pow(static_cast<double>(n), to_double(s.alpha));
    const double sv = std::pow(static_cast<double>(n), to_double(s.beta));
    std::vector<std::pair<long, long>> uv{{0, lambda.length()}};
    for (int i = lambda.length(); i >= 1; --i) {
        uv.emplace_back(lambda.row_length(i), i);
        uv.emplace_back(lambda.row_length(i), i - 1);
    }
    uv.erase(std::unique(uv.begin(), uv.end()), uv.end());
    std::vector<CurvePoint> pts;
    for (const auto& [u, v] : uv) {
        const double P = static_cast<double>(u) / su;
        const double Q = static_cast<double>(v) / sv;
        pts.push_back({(P - Q) / kSqrt2, (P + Q) / kSqrt2});
    }
    // Drop interior points on straight runs.
    std::vector<CurvePoint> clean;
    for (const CurvePoint& p : pts) {
        if (clean.size() >= 2) {
            const CurvePoint& a = clean[clean.size() - 2];
            const CurvePoint& b = clean.back();
            const double cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
            if (std::abs(cross) < 1e-15) clean.pop_back();
        }
        clean.push_back(p);
    }
    return LimitCurve(std::move(clean));
}

double sup_distance(const LimitCurve& gamma, const LimitCurve& eta) {
    std::vector<double> xs{0.0};
    for (const auto& p : gamma.breakpoints()) xs.push_back(p.x);
    for (const auto& p : eta.breakpoints()) xs.push_back(p.x);
    double best = 0.0;
    for (double x : xs) best = std::max(best, std::abs(gamma(x) - eta(x)));
    return best;
}

HookDistances hook_distances(const LimitCurve& gamma, double x, double y) {
    if (y <= std::abs(x)) return {};
    const Path path(gamma);
    return path.distances((x + y) / kSqrt2, (y - x) / kSqrt2);
}

HookCoordinates hook_coordinates(const LimitCurve& gamma, double x, double y) {
    const HookDistances h = hook_distances(gamma, x, y);
    return {x - h.leg / kSqrt2, x + h.arm / kSqrt2};
}

CurvePoint point_from_hook_coordinates(const LimitCurve& gamma, double s, double t) {
    const double gs = gamma(s);
    const double gt = gamma(t);
    return {(s + t + gs - gt) / 2.0, (s - t + gs + gt) / 2.0};
}

double worst_case_integral(const LimitCurve& gamma, double tol) {
    return integrate_domain(gamma, tol, "worst-case integral", [](const HookDistances& h) { return h.d; });
}

double avg_lower_integral(const LimitCurve& gamma, double tol) {
    return integrate_domain(gamma, tol, "average-case lower integral", [](const HookDistances& h) {
        const double sum = h.arm + h.leg;
        return sum > 0.0 ? 0.5 * (h.arm * h.arm + h.leg * h.leg) / sum : 0.0;
    });
}

double avg_lower_integral_hook(const LimitCurve& gamma, double tol) {
    const double v = integrate_hook(gamma, tol * 8.0 / kSqrt2, "average-case lower integral",
                                    [](double s, double t, double gs, double gt, double ms, double mt) {
                                        const double w = t - s;
                                        if (w <= 0.0) return 0.0;
                                        // Same segment: the difference quotient is the slope.
                                        if (ms == mt && w < 1e-12) return 0.0;
                                        const double dg = gt - gs;
                                        return w + dg * dg / w;
                                    });
    return kSqrt2 / 8.0 * v;
}

ImbalancedIntegrals imbalanced_integrals(const LimitCurve& gamma, double tol) {
    return {integrate_domain(gamma, tol, "arm integral", [](const HookDistances& h) { return h.arm; }),
            integrate_domain(gamma, tol, "leg integral", [](const HookDistances& h) { return h.leg; })};
}

ImbalancedIntegrals imbalanced_integrals_hook(const LimitCurve& gamma, double tol) {
    const double scaled = tol * 4.0 / kSqrt2;
    const double i1 = integrate_hook(gamma, scaled, "arm integral",
                                     [](double s, double t, double gs, double gt, double, double) { return t - s + gt - gs; });
    const double i2 = integrate_hook(gamma, scaled, "leg integral",
                                     [](double s, double t, double gs, double gt, double, double) { return t - s - gt + gs; });
    return {kSqrt2 / 4.0 * i1, kSqrt2 / 4.0 * i2};
}

Rational scaled_distance_integral_exact(const Partition& lambda) {
    // Boundary vertices in unscaled (u, v): (lambda_i, i) and (lambda_i, i-1).
    struct V {
        long u, v;
    };
    std::vector<V> verts;
    const int l = lambda.length();
    verts.push_back({0, l});
    for (int i = l; i >= 1; --i) {
        verts.push_back({lambda.row_length(i), i});
        verts.push_back({lambda.row_length(i), i - 1});
    }
    Rational total = 0;
    for (const Cell& c : lambda.cells()) {
        // On the open cell u in (j-1, j), v in (i-1, i), a vertex is a feasible
        // upper corner for every point iff u' >= j and v' >= i.
        long vertex_best = std::numeric_limits<long>::min();
        for (const V& w : verts)
            if (w.u >= c.col && w.v >= c.row) vertex_best = std::max(vertex_best, w.u + w.v);
        // The two endpoints (u, beta(u)) and (P(v), v): their sums over the cell
        // stay strictly below these bounds.
        const long top = c.col + lambda.column_length(c.col);
        const long right = lambda.row_length(c.row) + c.row;
        if (vertex_best < top || vertex_best < right)
            throw InvariantViolation("distance maximum not attained at a boundary vertex for cell (" +
                                     std::to_string(c.row) + "," + std::to_string(c.col) + ")");
        // n^{3/2} * (1/n) * n^{-1/2} * integral over the unit cell of (M - u - v).
        total += Rational(vertex_best - (c.row + c.col - 1));
    }
    return total;
}

Partition partition_from_curve(const LimitCurve& gamma, long n) {
    if (n < 1) throw DomainError("n must be positive");
    const Path path(gamma);
    const double scale = std::sqrt(static_cast<double>(n));
    std::vector<int> parts;
    for (long i = 1;; ++i) {
        const double Q = (static_cast<double>(i) - 0.5) / scale;
        long count = 0;
        while (path.beta((static_cast<double>(count) + 0.5) / scale) >= Q) ++count;
        if (count == 0) break;
        parts.push_back(static_cast<int>(count));
    }
    return Partition(parts);
}

LimitCurve parse_curve_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DomainError(std::string("curve file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw DomainError("curve file must be a JSON object");
    if (!doc.contains("breakpoints")) throw DomainError("curve file has no \"breakpoints\" field");
    const auto& list = doc["breakpoints"];
    if (!list.is_array()) throw DomainError("\"breakpoints\" must be a list of [x, y] pairs");
    std::vector<CurvePoint> pts;
    for (std::size_t k = 0; k < list.size(); ++k) {
        const auto& item = list[k];
        if (!item.is_array() || item.size() != 2)
            throw DomainError("breakpoint " + std::to_string(k) + " is not an [x, y] pair");
        pts.push_back({parse_coordinate(item[0], k), parse_coordinate(item[1], k)});
    }
    return LimitCurve(std::move(pts));
}

LimitCurve load_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open curve file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_curve_json(buffer.str());
}

}  // namespace nps
