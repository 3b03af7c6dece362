#include "npslab/verification.hpp"

#include "npslab/counting.hpp"
#include "npslab/errors.hpp"
#include "npslab/exact_complexity.hpp"
#include "npslab/limit_shapes.hpp"
#include "npslab/two_row.hpp"

#include <chrono>
#include <map>

namespace nps {

bool VerifyReport::passed() const { return first_failure() == nullptr; }

const SuiteResult* VerifyReport::first_failure() const {
    for (const SuiteResult& s : suites)
        if (!s.passed) return &s;
    return nullptr;
}

namespace {

struct Grid {
    int shape_size;
    int bijection_size;
    long two_row;
    long s0;
    long fixed_distance;
};

std::string shape_name(const Partition& p) { return "(" + format_partition(p) + ")"; }

class Runner {
public:
    Runner(VerifyLevel level, const VerifyHooks& hooks, int jobs) : hooks_(hooks) {
        grid_ = level == VerifyLevel::fast ? Grid{6, 6, 15, 15, 10} : Grid{8, 7, 30, 50, 25};
        limits_.jobs = jobs;
    }

    VerifyReport run() {
        suite("chicago-vs-brute", [&] { return chicago_vs_brute(); });
        suite("worst-case-tightness", [&] { return worst_case_tightness(); });
        suite("bijection", [&] { return bijection(); });
        suite("two-row-closed-vs-double-sums", [&] { return two_row_grid(); });
        suite("two-row-vs-brute", [&] { return two_row_vs_brute(); });
        suite("s0-representations", [&] { return s0_representations(); });
        suite("fixed-distance", [&] { return fixed_distance(); });
        suite("distance-integral-identity", [&] { return distance_identity(); });
        suite("hook-lower-bound", [&] { return hook_lower_bound(); });
        suite("conjugation-symmetry", [&] { return conjugation(); });
        suite("fixed-entry-normalization", [&] { return normalization(); });
        return std::move(report_);
    }

private:
    template <class Fn>
    void suite(const std::string& name, Fn&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        SuiteResult r;
        r.name = name;
        try {
            r.detail = fn();
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report_.suites.push_back(std::move(r));
    }

    std::vector<Partition> shapes() const {
        std::vector<Partition> all;
        for (int n = 1; n <= grid_.shape_size; ++n)
            for (auto& p : partitions_of(n)) all.push_back(std::move(p));
        return all;
    }

    const Rational& brute(const Partition& p) {
        auto it = brute_.find(p.parts());
        if (it == brute_.end()) it = brute_.emplace(p.parts(), average_case_bruteforce(p, limits_)).first;
        return it->second;
    }

    std::string chicago_vs_brute() {
        for (const Partition& p : shapes()) {
            const Rational c = hooks_.chicago ? hooks_.chicago(p) : average_case_chicago(p);
            if (c != brute(p))
                return "subshape formula gives " + to_string(c) + " but brute force gives " + to_string(brute(p)) +
                       " on " + shape_name(p);
        }
        return {};
    }

    std::string worst_case_tightness() {
        for (const Partition& p : shapes()) {
            const long w = worst_case(p);
            const long b = worst_case_bruteforce(p, limits_);
            if (w != b)
                return "W = " + std::to_string(w) + " but brute-force maximum is " + std::to_string(b) + " on " +
                       shape_name(p);
            const long x = nps_sort(worst_case_witness(p)).exchanges;
            if (x != w) return "witness performs " + std::to_string(x) + " exchanges on " + shape_name(p);
        }
        return {};
    }

    std::string bijection() {
        for (int n = 1; n <= grid_.bijection_size; ++n)
            for (const Partition& p : partitions_of(n)) {
                const BijectionReport r = verify_bijection(p, limits_, hooks_.sorter);
                if (!r.passed()) {
                    std::string why = !r.injective            ? "not injective"
                                      : !r.cardinality_match ? "cardinality mismatch"
                                      : !r.uniform           ? "SYT not equidistributed"
                                                             : "invalid output";
                    return why + " on " + shape_name(p) + " (" + std::to_string(r.distinct_pairs) +
                           " distinct pairs, expected " + to_string(r.expected) + ")";
                }
            }
        return {};
    }

    std::string two_row_grid() {
        for (long l1 = 1; l1 <= grid_.two_row; ++l1)
            for (long l2 = 1; l2 <= l1; ++l2) {
                const TwoRowShape s(l1, l2);
                if (c_closed(s) != c_double_sums(s))
                    return "closed form and double sums differ at (" + std::to_string(l1) + "," + std::to_string(l2) + ")";
            }
        return {};
    }

    std::string two_row_vs_brute() {
        for (const Partition& p : shapes()) {
            if (p.length() > 2) continue;
            const TwoRowShape s = TwoRowShape::from_partition(p);
            if (c_closed(s) != brute(p)) return "closed form differs from brute force on " + shape_name(p);
            if (s.lambda2 >= 1 && c_double_sums(s) != brute(p))
                return "double sums differ from brute force on " + shape_name(p);
        }
        return {};
    }

    std::string s0_representations() {
        for (long l1 = 1; l1 <= grid_.s0; ++l1)
            for (long l2 = 1; l2 <= l1; ++l2)
                if (s0(TwoRowShape(l1, l2), S0Form::direct) != s0(TwoRowShape(l1, l2), S0Form::nested))
                    return "direct and nested S0 differ at (" + std::to_string(l1) + "," + std::to_string(l2) + ")";
        for (long l2 = 1; l2 <= grid_.s0; ++l2) {
            if (s0(TwoRowShape(l2, l2)) != s0_equal_rows(l2))
                return "equal-rows S0 differs at " + std::to_string(l2);
            if (c_equal_rows(l2) != c_closed(TwoRowShape(l2, l2)))
                return "equal-rows C differs at " + std::to_string(l2);
            const auto ids = auxiliary_identities(l2);
            for (std::size_t k = 0; k < ids.size(); ++k)
                if (!ids[k].holds())
                    return "auxiliary identity " + std::to_string(k + 1) + " fails at " + std::to_string(l2);
        }
        return {};
    }

    std::string fixed_distance() {
        for (long l2 = 1; l2 <= grid_.fixed_distance; ++l2)
            for (long d = 0; d <= grid_.fixed_distance; ++d)
                if (c_fixed_distance(l2, d) != c_closed(TwoRowShape(l2 + d, l2)))
                    return "fixed-distance form differs at lambda2=" + std::to_string(l2) + ", delta=" + std::to_string(d);
        return {};
    }

    std::string distance_identity() {
        for (const Partition& p : shapes())
            if (scaled_distance_integral_exact(p) != Rational(p.size() + worst_case(p)))
                return "cell-wise distance integral differs from n + W on " + shape_name(p);
        return {};
    }

    std::string hook_lower_bound() {
        for (const Partition& p : shapes())
            if (brute(p) < expected_hook_abs(p))
                return "C < E|H| on " + shape_name(p);
        return {};
    }

    std::string conjugation() {
        for (const Partition& p : shapes())
            if (brute(p) != brute(conjugate(p))) return "C differs from its conjugate on " + shape_name(p);
        return {};
    }

    std::string normalization() {
        for (const Partition& p : shapes()) {
            const BigInt f = syt_count(p);
            const auto table = fixed_entry_table(p);
            for (const Cell& x : p.cells()) {
                BigInt sum = 0;
                for (const BigInt& v : table[static_cast<std::size_t>(p.index_of(x))]) sum += v;
                if (sum != f) return "fixed-entry counts do not sum to f on " + shape_name(p);
            }
        }
        return {};
    }

    const VerifyHooks& hooks_;
    Grid grid_{};
    EnumerationLimits limits_;
    VerifyReport report_;
    std::map<std::vector<int>, Rational> brute_;
};

}  // namespace

VerifyReport run_verification(VerifyLevel level, const VerifyHooks& hooks, int jobs) {
    return Runner(level, hooks, jobs).run();
}

}  // namespace nps
