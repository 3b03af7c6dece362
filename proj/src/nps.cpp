#include "npslab/nps.hpp"

#include "npslab/counting.hpp"
#include "npslab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <unordered_set>

namespace nps {

NpsSorter::NpsSorter(Partition shape) : shape_(std::move(shape)) {
    const auto n = static_cast<std::size_t>(shape_.size());
    south_.assign(n, -1);
    east_.assign(n, -1);
    cell_of_.resize(n);
    for (int i = 1; i <= shape_.length(); ++i) offsets_.push_back(shape_.index_of({i, 1}));
    for (const Cell& c : shape_.cells()) {
        const auto idx = static_cast<std::size_t>(shape_.index_of(c));
        cell_of_[idx] = c;
        if (shape_.contains(Cell{c.row + 1, c.col})) south_[idx] = shape_.index_of({c.row + 1, c.col});
        if (shape_.contains(Cell{c.row, c.col + 1})) east_[idx] = shape_.index_of({c.row, c.col + 1});
    }
    for (const Cell& c : reverse_lex_cells(shape_)) order_.push_back(shape_.index_of(c));
}

long NpsSorter::sort_in_place(std::span<int> entries, std::span<int> hooks, std::vector<TraceRecord>* trace) const {
    std::fill(hooks.begin(), hooks.end(), 0);
    if (trace) trace->clear();
    long total = 0;
    for (const int start : order_) {
        const int value = entries[static_cast<std::size_t>(start)];
        int at = start;
        int moves = 0;
        // E1-E5: slide the entry South-East while a smaller neighbor exists.
        for (;;) {
            const int s = south_[static_cast<std::size_t>(at)];
            const int e = east_[static_cast<std::size_t>(at)];
            if (s < 0 && e < 0) break;
            int m;
            if (s < 0) m = e;
            else if (e < 0) m = s;
            else m = entries[static_cast<std::size_t>(s)] < entries[static_cast<std::size_t>(e)] ? s : e;
            if (value < entries[static_cast<std::size_t>(m)]) break;
            entries[static_cast<std::size_t>(at)] = entries[static_cast<std::size_t>(m)];
            entries[static_cast<std::size_t>(m)] = value;
            at = m;
            ++moves;
        }
        total += moves;

        // H1-H2: shift the start column segment up, decremented, then record
        // the horizontal displacement in the row where the entry stopped.
        const Cell from = cell_of_[static_cast<std::size_t>(start)];
        const Cell to = cell_of_[static_cast<std::size_t>(at)];
        const int col = from.col - 1;
        for (int s = from.row; s < to.row; ++s) {
            hooks[static_cast<std::size_t>(offsets_[static_cast<std::size_t>(s - 1)] + col)] =
                hooks[static_cast<std::size_t>(offsets_[static_cast<std::size_t>(s)] + col)] - 1;
        }
        hooks[static_cast<std::size_t>(offsets_[static_cast<std::size_t>(to.row - 1)] + col)] = to.col - from.col;

        if (trace) trace->push_back({value, from, to, moves});
    }
    return total;
}

NpsOutcome NpsSorter::sort(const Tableau& t) const {
    if (!(t.shape() == shape_)) throw DomainError("tableau shape does not match sorter shape");
    std::vector<int> entries = t.entries();
    std::vector<int> hooks(entries.size(), 0);
    NpsOutcome out;
    out.exchanges = sort_in_place(entries, hooks, &out.trace);
    out.output = Tableau(shape_, std::move(entries));
    out.hooks = HookTableau(shape_, std::move(hooks));
    return out;
}

NpsOutcome nps_sort(const Tableau& t) { return NpsSorter(t.shape()).sort(t); }

// ---------------------------------------------------------------------------

TableauStream::TableauStream(Partition shape, const EnumerationLimits& limits, int shard, int shards)
    : shape_(std::move(shape)), shard_(shard), shards_(std::max(1, shards)) {
    if (shape_.size() > limits.max_tableau_size)
        throw RefusalError("refusing to enumerate " + std::to_string(shape_.size()) +
                           "! fillings: size exceeds cutoff " + std::to_string(limits.max_tableau_size));
    for (const Cell& c : reverse_lex_cells(shape_)) order_.push_back(shape_.index_of(c));
    sequence_.resize(order_.size());
    entries_.resize(order_.size());
}

bool TableauStream::advance_first_value() {
    const int n = shape_.size();
    if (n == 0) {
        if (first_value_ == 0 && shard_ == 0) {
            first_value_ = 1;
            return true;
        }
        return false;
    }
    int v = first_value_ == 0 ? shard_ + 1 : first_value_ + shards_;
    if (v > n) return false;
    first_value_ = v;
    sequence_[0] = v;
    int k = 1;
    for (int x = 1; x <= n; ++x)
        if (x != v) sequence_[static_cast<std::size_t>(k++)] = x;
    return true;
}

const std::vector<int>* TableauStream::next_entries() {
    if (done_) return nullptr;
    bool ok;
    if (!started_) {
        started_ = true;
        ok = advance_first_value();
    } else {
        ok = sequence_.size() > 1 && std::next_permutation(sequence_.begin() + 1, sequence_.end());
        if (!ok) ok = advance_first_value();
    }
    if (!ok) {
        done_ = true;
        return nullptr;
    }
    for (std::size_t r = 0; r < order_.size(); ++r)
        entries_[static_cast<std::size_t>(order_[r])] = sequence_[r];
    return &entries_;
}

std::optional<Tableau> TableauStream::next() {
    const auto* e = next_entries();
    if (!e) return std::nullopt;
    return Tableau(shape_, *e);
}

HookTableauStream::HookTableauStream(Partition shape, const EnumerationLimits& limits) : shape_(std::move(shape)) {
    const BigInt count = hook_product(shape_);
    if (count > BigInt(std::to_string(limits.max_hook_product)))
        throw RefusalError("refusing to enumerate " + count.get_str() + " hook tableaux: exceeds cutoff " +
                           std::to_string(limits.max_hook_product));
    for (const Cell& c : shape_.cells()) {
        const auto s = cell_stats(shape_, c);
        low_.push_back(-s.leg);
        high_.push_back(s.arm);
    }
    current_ = low_;
}

std::optional<HookTableau> HookTableauStream::next() {
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        return HookTableau(shape_, current_);
    }
    for (std::size_t k = current_.size(); k-- > 0;) {
        if (current_[k] < high_[k]) {
            ++current_[k];
            return HookTableau(shape_, current_);
        }
        current_[k] = low_[k];
    }
    done_ = true;
    return std::nullopt;
}

// ---------------------------------------------------------------------------

ExhaustiveStats exhaustive_exchange_stats(const Partition& shape, const EnumerationLimits& limits) {
    const int n = shape.size();
    const int workers = std::clamp(limits.jobs, 1, std::max(1, n));
    // Validate the cutoff on the calling thread so the refusal propagates.
    TableauStream probe(shape, limits);
    const NpsSorter sorter(shape);

    struct Partial {
        ExhaustiveStats stats;
        std::vector<int> argmax_sequence;
    };
    std::vector<Partial> partials(static_cast<std::size_t>(workers));

    auto work = [&](int w) {
        TableauStream stream(shape, limits, w, workers);
        std::vector<int> entries(static_cast<std::size_t>(n));
        std::vector<int> hooks(static_cast<std::size_t>(n));
        Partial& p = partials[static_cast<std::size_t>(w)];
        p.stats.max_exchanges = -1;
        while (const auto* e = stream.next_entries()) {
            entries = *e;
            const long ex = sorter.sort_in_place(entries, hooks);
            ++p.stats.count;
            p.stats.total_exchanges += static_cast<std::uint64_t>(ex);
            if (ex > p.stats.max_exchanges) {
                p.stats.max_exchanges = ex;
                p.stats.argmax_entries = *e;
                p.argmax_sequence = stream.sequence();
            }
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
        for (auto& t : threads) t.join();
    }

    ExhaustiveStats total;
    total.max_exchanges = -1;
    std::vector<int> best_sequence;
    for (const Partial& p : partials) {
        total.count += p.stats.count;
        total.total_exchanges += p.stats.total_exchanges;
        if (p.stats.count == 0) continue;
        const bool better = p.stats.max_exchanges > total.max_exchanges ||
                            (p.stats.max_exchanges == total.max_exchanges && p.argmax_sequence < best_sequence);
        if (better) {
            total.max_exchanges = p.stats.max_exchanges;
            total.argmax_entries = p.stats.argmax_entries;
            best_sequence = p.argmax_sequence;
        }
    }
    if (total.max_exchanges < 0) total.max_exchanges = 0;
    return total;
}

namespace {

std::string pair_key(const std::vector<int>& syt, const std::vector<int>& hooks) {
    std::string key;
    key.reserve(2 * syt.size());
    for (int v : syt) key.push_back(static_cast<char>(v));
    for (int h : hooks) key.push_back(static_cast<char>(h));
    return key;
}

}  // namespace

BijectionReport verify_bijection(const Partition& shape, const EnumerationLimits& limits, const SortFunction& sorter) {
    BijectionReport report;
    const auto n = static_cast<unsigned>(shape.size());
    report.expected = factorial(n);
    report.syt_expected = syt_count(shape);
    report.hook_tableaux = hook_product(shape);
    report.outputs_valid = true;

    const NpsSorter fast(shape);
    std::unordered_set<std::string> seen;
    TableauStream stream(shape, limits);
    std::uint64_t runs = 0;
    while (auto t = stream.next()) {
        NpsOutcome out = sorter ? sorter(*t) : fast.sort(*t);
        ++runs;
        if (!out.output.is_standard() || !within_hook_bounds(shape, out.hooks.entries())) report.outputs_valid = false;
        seen.insert(pair_key(out.output.entries(), out.hooks.entries()));
        ++report.each_syt_count[format_tableau(out.output)];
    }
    report.distinct_pairs = seen.size();
    report.injective = report.distinct_pairs == runs;
    const BigInt distinct(std::to_string(report.distinct_pairs));
    report.cardinality_match = distinct == report.expected && report.expected == report.syt_expected * report.hook_tableaux;
    report.uniform = BigInt(std::to_string(report.each_syt_count.size())) == report.syt_expected;
    for (const auto& [syt, count] : report.each_syt_count)
        if (BigInt(std::to_string(count)) != report.hook_tableaux) report.uniform = false;
    return report;
}

}  // namespace nps
