#pragma once

#include "npslab/partition.hpp"
#include "npslab/rational.hpp"
#include "npslab/tableau.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nps {

/// How one entry travelled while the NPS algorithm processed its cell.
struct TraceRecord {
    int value = 0;
    Cell start;
    Cell end;
    int exchanges = 0;

    friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct NpsOutcome {
    Tableau output;
    HookTableau hooks;
    long exchanges = 0;  // n(T)
    std::vector<TraceRecord> trace;
};

/// Column-wise NPS sort for one fixed shape.  Neighbor tables are built once
/// so that exhaustive loops do not rebuild them per filling.
class NpsSorter {
public:
    explicit NpsSorter(Partition shape);

    const Partition& shape() const noexcept { return shape_; }

    NpsOutcome sort(const Tableau& t) const;

    /// Sorts a row-major filling in place and overwrites `hooks` (row-major,
    /// same length) with the hook tableau.  Returns the number of exchanges.
    /// The filling is not validated.
    long sort_in_place(std::span<int> entries, std::span<int> hooks,
                       std::vector<TraceRecord>* trace = nullptr) const;

    /// Row-major cell indices in processing order (largest cell first).
    const std::vector<int>& processing_order() const noexcept { return order_; }

private:
    Partition shape_;
    std::vector<int> order_;
    std::vector<int> south_;
    std::vector<int> east_;
    std::vector<int> offsets_;
    std::vector<Cell> cell_of_;
};

/// Throws DomainError for an invalid tableau (construction of Tableau
/// already enforces bijectivity).
NpsOutcome nps_sort(const Tableau& t);

struct EnumerationLimits {
    int max_tableau_size = 9;
    std::uint64_t max_hook_product = 10'000'000;
    int jobs = 1;
};

/// All n! fillings of a shape.  Permutations are produced in lexicographic
/// order of the value sequence read along reverse_lex_cells(shape).
/// A stream may be restricted to the shard of first values v with
/// (v - 1) % shards == shard, which partitions the enumeration.
class TableauStream {
public:
    TableauStream(Partition shape, const EnumerationLimits& limits, int shard = 0, int shards = 1);

    /// Next filling in row-major layout, or std::nullopt when exhausted.
    const std::vector<int>* next_entries();
    std::optional<Tableau> next();

    const Partition& shape() const noexcept { return shape_; }
    /// The current value sequence in processing order.
    const std::vector<int>& sequence() const noexcept { return sequence_; }

private:
    bool advance_first_value();

    Partition shape_;
    std::vector<int> order_;
    std::vector<int> sequence_;
    std::vector<int> entries_;
    int shard_;
    int shards_;
    int first_value_ = 0;
    bool started_ = false;
    bool done_ = false;
};

inline TableauStream enumerate_tableaux(const Partition& shape, const EnumerationLimits& limits = {}) {
    return TableauStream(shape, limits);
}

/// All hook tableaux, as an odometer over the independent per-cell windows
/// [-leg, arm] (last row-major cell fastest).
class HookTableauStream {
public:
    HookTableauStream(Partition shape, const EnumerationLimits& limits);
    std::optional<HookTableau> next();

private:
    Partition shape_;
    std::vector<int> low_;
    std::vector<int> high_;
    std::vector<int> current_;
    bool started_ = false;
    bool done_ = false;
};

inline HookTableauStream enumerate_hook_tableaux(const Partition& shape, const EnumerationLimits& limits = {}) {
    return HookTableauStream(shape, limits);
}

/// Aggregate exchange statistics over every filling.
struct ExhaustiveStats {
    std::uint64_t count = 0;
    std::uint64_t total_exchanges = 0;
    long max_exchanges = 0;
    /// First filling (in enumeration order) attaining the maximum.
    std::vector<int> argmax_entries;
};

ExhaustiveStats exhaustive_exchange_stats(const Partition& shape, const EnumerationLimits& limits = {});

struct BijectionReport {
    std::uint64_t distinct_pairs = 0;
    BigInt expected;         // n!
    BigInt syt_expected;     // f^lambda
    BigInt hook_tableaux;    // prod h(i,j)
    bool injective = false;
    bool cardinality_match = false;  // distinct_pairs == n! == f * prod h
    bool uniform = false;            // every SYT hit exactly prod h times
    bool outputs_valid = false;      // every output standard, every hook tableau in bounds
    std::map<std::string, std::uint64_t> each_syt_count;

    bool passed() const noexcept { return injective && cardinality_match && uniform && outputs_valid; }
};

using SortFunction = std::function<NpsOutcome(const Tableau&)>;

/// Runs the sorter on every filling and checks that (SYT, hook tableau)
/// pairs are distinct and equidistributed.  `sorter` defaults to nps_sort;
/// substituting it lets tests certify that a faulty variant is caught.
BijectionReport verify_bijection(const Partition& shape, const EnumerationLimits& limits = {},
                                 const SortFunction& sorter = {});

}  // namespace nps
