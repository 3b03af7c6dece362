#include "cli.hpp"

#include "npslab/counting.hpp"
#include "npslab/errors.hpp"
#include "npslab/exact_complexity.hpp"
#include "npslab/limit_shapes.hpp"
#include "npslab/sampling.hpp"
#include "npslab/two_row.hpp"
#include "npslab/verification.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace nps::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::string format = "text";
    int jobs = 1;
    int max_tableau_size = 9;
    std::uint64_t max_hook_product = 10'000'000;
    int chicago_max_size = 30;
    double tol = 1e-4;

    EnumerationLimits limits() const { return {max_tableau_size, max_hook_product, jobs}; }
    bool json() const { return format == "json"; }
};

std::string num(double v) {
    if (std::isnan(v)) return "";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string with_decimal(const Rational& q) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", to_double(q));
    return to_string(q) + " (" + buf + ")";
}

Partition shape_arg(const std::string& text) {
    try {
        return parse_partition(text);
    } catch (const DomainError& e) {
        throw UsageError(std::string("bad --shape: ") + e.what());
    }
}

// ---- exact -----------------------------------------------------------------

struct MethodValue {
    std::string name;
    Rational value;
    bool computes_c = true;
};

std::optional<MethodValue> compute_method(const std::string& method, const Partition& p, const Settings& st,
                                          bool required) {
    if (method == "brute") {
        if (p.size() > st.max_tableau_size) {
            if (required)
                throw RefusalError("brute force refuses size " + std::to_string(p.size()) + " > " +
                                   std::to_string(st.max_tableau_size));
            return std::nullopt;
        }
        return MethodValue{"brute", average_case_bruteforce(p, st.limits())};
    }
    if (method == "chicago") {
        if (p.size() > st.chicago_max_size) {
            if (required) return MethodValue{"chicago", average_case_chicago(p, st.chicago_max_size)};
            return std::nullopt;
        }
        return MethodValue{"chicago", average_case_chicago(p, st.chicago_max_size)};
    }
    if (method == "two-row") {
        if (p.empty() || p.length() > 2) {
            if (required) throw UsageError("method two-row needs a shape with one or two rows");
            return std::nullopt;
        }
        return MethodValue{"two-row", c_closed(TwoRowShape::from_partition(p))};
    }
    if (method == "two-row-double-sums") {
        if (p.length() != 2) return std::nullopt;
        return MethodValue{"two-row-double-sums", c_double_sums(TwoRowShape::from_partition(p))};
    }
    if (method == "e-abs-h") return MethodValue{"e-abs-h", expected_hook_abs(p), false};
    throw UsageError("unknown method " + method);
}

int cmd_exact(const std::string& shape_text, const std::string& method, bool all, const Settings& st,
              std::ostream& out, std::ostream& err) {
    const Partition p = shape_arg(shape_text);
    std::vector<MethodValue> values;
    if (all) {
        for (const char* m : {"brute", "chicago", "two-row", "two-row-double-sums", "e-abs-h"})
            if (auto v = compute_method(m, p, st, false)) values.push_back(*v);
    } else {
        std::string m = method;
        if (m.empty()) m = p.size() <= st.max_tableau_size ? "brute" : "chicago";
        values.push_back(*compute_method(m, p, st, true));
    }
    bool agree = true;
    const MethodValue* ref = nullptr;
    for (const MethodValue& v : values) {
        if (!v.computes_c) continue;
        if (!ref) ref = &v;
        else if (v.value != ref->value) agree = false;
    }
    if (st.json()) {
        json doc;
        doc["shape"] = format_partition(p);
        for (const MethodValue& v : values) doc["results"][v.name] = to_string(v.value);
        if (all) doc["agree"] = agree;
        out << doc.dump(2) << "\n";
    } else if (!all) {
        out << with_decimal(values.front().value) << "\n";
    } else {
        for (const MethodValue& v : values)
            out << v.name << (v.computes_c ? "" : " (lower bound)") << ": " << with_decimal(v.value) << "\n";
        out << (agree ? "agree" : "DISAGREE") << "\n";
    }
    if (!agree) {
        err << "methods disagree on (" << format_partition(p) << ")\n";
        return kVerificationFailure;
    }
    return kOk;
}

// ---- worst -----------------------------------------------------------------

int cmd_worst(const std::string& shape_text, bool witness, const Settings& st, std::ostream& out, std::ostream& err) {
    const Partition p = shape_arg(shape_text);
    const long w = worst_case(p);
    std::optional<Tableau> t;
    long achieved = 0;
    if (witness) {
        try {
            t = worst_case_witness(p);
        } catch (const InvariantViolation& e) {
            err << "witness self-check failed: " << e.what() << "\n";
            return kVerificationFailure;
        }
        achieved = nps_sort(*t).exchanges;
    }
    if (st.json()) {
        json doc;
        doc["shape"] = format_partition(p);
        doc["worst_case"] = w;
        if (t) {
            doc["witness"] = format_tableau(*t);
            doc["exchanges"] = achieved;
        }
        out << doc.dump(2) << "\n";
    } else {
        out << w << "\n";
        if (t) out << format_tableau(*t) << "\n" << "exchanges=" << achieved << "\n";
    }
    return kOk;
}

// ---- sweep -----------------------------------------------------------------

std::vector<long> parse_sizes(const std::string& text, bool& is_range) {
    std::vector<long> sizes;
    is_range = false;
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    if (s.empty()) return sizes;
    auto to_long = [](const std::string& v) {
        std::size_t used = 0;
        long x = 0;
        try {
            x = std::stol(v, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != v.size() || v.empty() || x < 1) throw UsageError("bad size '" + v + "'");
        return x;
    };
    if (const auto dots = s.find(".."); dots != std::string::npos) {
        const long a = to_long(s.substr(0, dots));
        const long b = to_long(s.substr(dots + 2));
        if (b < a) throw UsageError("size range must be ascending");
        is_range = true;
        for (long v = a; v <= b; ++v) sizes.push_back(v);
        return sizes;
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) sizes.push_back(to_long(item));
    for (std::size_t k = 1; k < sizes.size(); ++k)
        if (sizes[k] <= sizes[k - 1]) throw UsageError("sizes must be strictly ascending");
    return sizes;
}

LimitCurve staircase_curve() { return LimitCurve({{-1.0, 1.0}, {1.0, 1.0}}); }

LimitCurve curve_arg(const std::string& name) {
    if (name == "square" && !std::filesystem::exists(name)) return LimitCurve::unit_square();
    if (name == "staircase" && !std::filesystem::exists(name)) return staircase_curve();
    try {
        return load_curve_file(name);
    } catch (const DomainError& e) {
        throw UsageError(std::string("bad curve: ") + e.what());
    }
}

struct SweepOptions {
    std::string family;
    std::string sizes;
    std::uint64_t seed = 1;
    std::string out_path;
    long c = 5;
    std::string curve;
    std::uint64_t samples = 200;
};

long isqrt_exact(long n) {
    long m = static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
    while (m * m > n) --m;
    while ((m + 1) * (m + 1) <= n) ++m;
    return m * m == n ? m : -1;
}

long triangular_root(long n) {
    long k = static_cast<long>(std::llround((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0));
    while (k > 0 && k * (k + 1) / 2 > n) --k;
    while ((k + 1) * (k + 2) / 2 <= n) ++k;
    return k * (k + 1) / 2 == n ? k : -1;
}

int cmd_sweep(const SweepOptions& o, const Settings& st, std::ostream& out, std::ostream& err) {
    bool is_range = false;
    const std::vector<long> sizes = parse_sizes(o.sizes, is_range);
    const bool balanced = o.family != "two-row";

    // Shapes first, so usage problems surface before any heavy work.
    std::vector<std::pair<long, Partition>> rows;
    for (long n : sizes) {
        if (o.family == "square") {
            const long m = isqrt_exact(n);
            if (m < 0) {
                if (is_range) continue;
                throw UsageError("square family needs perfect-square sizes, got " + std::to_string(n));
            }
            rows.emplace_back(n, Partition(std::vector<int>(static_cast<std::size_t>(m), static_cast<int>(m))));
        } else if (o.family == "staircase") {
            const long k = triangular_root(n);
            if (k < 0) {
                if (is_range) continue;
                throw UsageError("staircase family needs triangular sizes, got " + std::to_string(n));
            }
            std::vector<int> parts;
            for (long i = k; i >= 1; --i) parts.push_back(static_cast<int>(i));
            rows.emplace_back(n, Partition(parts));
        } else if (o.family == "two-row") {
            if (n - o.c < o.c || o.c < 0) {
                if (is_range) continue;
                throw UsageError("two-row family needs n >= 2c, got n = " + std::to_string(n));
            }
            std::vector<int> parts{static_cast<int>(n - o.c)};
            if (o.c > 0) parts.push_back(static_cast<int>(o.c));
            rows.emplace_back(n, Partition(parts));
        } else if (o.family == "curve-file") {
            rows.emplace_back(n, Partition());
        } else {
            throw UsageError("unknown family " + o.family);
        }
    }

    std::optional<LimitCurve> gamma;
    if (o.family == "square" || o.family == "two-row") gamma = LimitCurve::unit_square();
    else if (o.family == "staircase") gamma = staircase_curve();
    else {
        if (o.curve.empty()) throw UsageError("curve-file family needs --curve");
        gamma = curve_arg(o.curve);
        for (auto& [n, p] : rows) p = partition_from_curve(*gamma, n);
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file) {
            err << "cannot open " << o.out_path << " for writing\n";
            return kUsageError;
        }
        sink = &file;
    }
    std::ostream& csv = *sink;
    csv << "n,size,W,W_scaled,W_integral,C,C_stderr,C_source,C_scaled,C_integral,C_over_W\n";
    if (rows.empty()) return kOk;

    double w_integral = 0.0;
    double c_integral = 0.0;
    if (balanced) {
        w_integral = worst_case_integral(*gamma, st.tol);
        c_integral = avg_lower_integral(*gamma, st.tol);
    } else {
        w_integral = imbalanced_integrals(*gamma, st.tol).i1;
        c_integral = w_integral / 2.0;
    }

    for (const auto& [n, p] : rows) {
        const long size = p.size();
        const long w = worst_case(p);
        const double scale = balanced ? std::pow(static_cast<double>(size), 1.5)
                                      : static_cast<double>(size) * static_cast<double>(size);
        double c = 0.0;
        double c_err = 0.0;
        std::string source;
        if (!balanced) {
            c = to_double(c_closed(TwoRowShape::from_partition(p)));
            source = "exact";
        } else if (size <= st.chicago_max_size) {
            c = to_double(average_case_chicago(p, st.chicago_max_size));
            source = "exact";
        } else {
            const auto e = estimate_avg_case(p, std::max<std::uint64_t>(o.samples, 2), o.seed, static_cast<unsigned>(st.jobs));
            c = e.mean;
            c_err = e.stderr_;
            source = "monte-carlo";
        }
        csv << n << ',' << size << ',' << w << ',' << num(size > 0 ? static_cast<double>(w) / scale : 0.0) << ','
            << num(w_integral) << ',' << num(c) << ',' << num(c_err) << ',' << source << ','
            << num(size > 0 ? c / scale : 0.0) << ',' << num(c_integral) << ','
            << (w > 0 ? num(c / static_cast<double>(w)) : std::string()) << "\n";
    }
    return kOk;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& level, const Settings& st, std::ostream& out, std::ostream& err) {
    VerifyLevel lv;
    if (level == "fast") lv = VerifyLevel::fast;
    else if (level == "full") lv = VerifyLevel::full;
    else throw UsageError("level must be fast or full");
    const VerifyReport r = run_verification(lv, {}, st.jobs);
    if (st.json()) {
        json doc;
        doc["level"] = level;
        doc["passed"] = r.passed();
        for (const SuiteResult& s : r.suites)
            doc["suites"].push_back({{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}, {"seconds", s.seconds}});
        out << doc.dump(2) << "\n";
    } else {
        for (const SuiteResult& s : r.suites) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.2fs", s.seconds);
            out << (s.passed ? "PASS " : "FAIL ") << s.name << " [" << buf << "]";
            if (!s.passed) out << ": " << s.detail;
            out << "\n";
        }
    }
    if (const SuiteResult* f = r.first_failure()) {
        err << "verification failed: " << f->name << ": " << f->detail << "\n";
        return kVerificationFailure;
    }
    return kOk;
}

// ---- sample ----------------------------------------------------------------

int cmd_sample(const std::string& shape_text, std::uint64_t m, std::uint64_t seed, bool uniformity, const Settings& st,
               std::ostream& out) {
    const Partition p = shape_arg(shape_text);
    if (uniformity) {
        const UniformityResult r = syt_uniformity_test(p, m, seed, static_cast<unsigned>(st.jobs));
        const double q = chi_square_quantile(0.999, r.dof);
        if (st.json()) {
            out << json{{"shape", format_partition(p)}, {"samples", m}, {"seed", seed}, {"chi_square", r.chi_square},
                        {"dof", r.dof}, {"quantile_0.999", q}}
                       .dump(2)
                << "\n";
        } else {
            out << "chi_square=" << num(r.chi_square) << "\n"
                << "dof=" << r.dof << "\n"
                << "quantile_0.999=" << num(q) << "\n";
        }
        return kOk;
    }
    const AvgCaseEstimate e = estimate_avg_case(p, m, seed, static_cast<unsigned>(st.jobs));
    if (st.json()) {
        out << json{{"shape", format_partition(p)}, {"samples", m}, {"seed", seed}, {"mean", e.mean},
                    {"stderr", e.stderr_}, {"max_exchanges", e.max_exchanges}}
                   .dump(2)
            << "\n";
    } else {
        out << "mean=" << num(e.mean) << "\n"
            << "stderr=" << num(e.stderr_) << "\n"
            << "max_exchanges=" << e.max_exchanges << "\n";
    }
    return kOk;
}

// ---- limit -----------------------------------------------------------------

int cmd_limit(const std::string& curve_name, const std::string& integral, double tol, const Settings& st,
              std::ostream& out) {
    const LimitCurve gamma = curve_arg(curve_name);
    if (!gamma.is_normalized(1e-6))
        throw UsageError("curve is not normalized: area under gamma - |x| is " + num(gamma.area()) + ", expected 1");
    double value = 0.0;
    if (integral == "W") value = worst_case_integral(gamma, tol);
    else if (integral == "C") value = avg_lower_integral(gamma, tol);
    else if (integral == "I1") value = imbalanced_integrals(gamma, tol).i1;
    else if (integral == "I2") value = imbalanced_integrals(gamma, tol).i2;
    else throw UsageError("integral must be one of W, C, I1, I2");
    if (st.json())
        out << json{{"integral", integral}, {"value", value}, {"tol", tol}}.dump(2) << "\n";
    else
        out << num(value) << "\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and asymptotic exchange counts of NPS tableau sorting", "npslab-cli"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "File of key = value lines for the global options");

    Settings st;
    app.add_option("--format", st.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", st.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--max-tableau-size", st.max_tableau_size, "Largest shape for full enumeration");
    app.add_option("--max-hook-product", st.max_hook_product, "Largest hook product for hook-tableau enumeration");
    app.add_option("--chicago-max-size", st.chicago_max_size, "Largest shape for the subshape formula");
    app.add_option("--tol", st.tol, "Default quadrature tolerance")->check(CLI::PositiveNumber);

    std::string shape;
    std::string method;
    bool all = false;
    auto* exact = app.add_subcommand("exact", "Exact average-case complexity C(lambda)");
    exact->add_option("--shape", shape, "Partition, e.g. 3,2,1")->required();
    auto* method_opt = exact->add_option("--method", method, "brute | chicago | two-row | e-abs-h")
                           ->check(CLI::IsMember({"brute", "chicago", "two-row", "e-abs-h"}));
    exact->add_flag("--all", all, "Every applicable method, checked for agreement")->excludes(method_opt);

    bool witness = false;
    auto* worst = app.add_subcommand("worst", "Exact worst case W(lambda)");
    worst->add_option("--shape", shape, "Partition")->required();
    worst->add_flag("--witness", witness, "Also build a tableau attaining W");

    SweepOptions sw;
    auto* sweep = app.add_subcommand("sweep", "Convergence table for a family of shapes");
    sweep->add_option("--family", sw.family, "square | two-row | staircase | curve-file")
        ->required()
        ->check(CLI::IsMember({"square", "two-row", "staircase", "curve-file"}));
    sweep->add_option("--sizes", sw.sizes, "Sizes n: a list 4,9,16 or a range 4..400");
    sweep->add_option("--seed", sw.seed, "Seed for Monte Carlo rows");
    sweep->add_option("--out", sw.out_path, "CSV file (default stdout)");
    sweep->add_option("--c", sw.c, "Second row length for the two-row family");
    sweep->add_option("--curve", sw.curve, "Curve file for the curve-file family");
    sweep->add_option("--samples", sw.samples, "Monte Carlo samples per row");

    std::string level = "fast";
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("--level", level, "fast | full")->check(CLI::IsMember({"fast", "full"}));

    std::uint64_t samples = 10000;
    std::uint64_t seed = 1;
    bool uniformity = false;
    auto* sample = app.add_subcommand("sample", "Monte Carlo estimate of C or SYT uniformity test");
    sample->add_option("--shape", shape, "Partition")->required();
    sample->add_option("--samples", samples, "Number of random fillings");
    sample->add_option("--seed", seed, "Seed");
    sample->add_flag("--uniformity", uniformity, "Chi-square test of the output SYT");

    std::string curve;
    std::string integral = "W";
    std::optional<double> tol;
    auto* limit = app.add_subcommand("limit", "Asymptotic integrals of a limit curve");
    limit->add_option("--curve", curve, "Curve JSON file, or square / staircase")->required();
    limit->add_option("--integral", integral, "W | C | I1 | I2")->check(CLI::IsMember({"W", "C", "I1", "I2"}));
    limit->add_option("--tol", tol, "Absolute tolerance");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (exact->parsed()) return cmd_exact(shape, method, all, st, out, err);
        if (worst->parsed()) return cmd_worst(shape, witness, st, out, err);
        if (sweep->parsed()) return cmd_sweep(sw, st, out, err);
        if (verify->parsed()) return cmd_verify(level, st, out, err);
        if (sample->parsed()) return cmd_sample(shape, samples, seed, uniformity, st, out);
        if (limit->parsed()) return cmd_limit(curve, integral, tol.value_or(st.tol), st, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const RefusalError& e) {
        err << "refused: " << e.what() << "\n";
        return kUsageError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const NonConvergenceError& e) {
        err << "no convergence: " << e.what() << " (best estimate " << num(e.best_estimate()) << ")\n";
        return kVerificationFailure;
    } catch (const InvariantViolation& e) {
        err << "invariant violated: " << e.what() << "\n";
        return kVerificationFailure;
    }
    return kUsageError;
}

}  // namespace nps::cli
