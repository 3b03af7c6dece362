#include "npslab/partition.hpp"

#include "npslab/errors.hpp"

#include <algorithm>
#include <charconv>

namespace nps {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
    offsets_.reserve(parts_.size());
    for (int p : parts_) {
        offsets_.push_back(size_);
        size_ += p;
    }
    const int width = parts_.empty() ? 0 : parts_.front();
    columns_.assign(static_cast<std::size_t>(width), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++columns_[static_cast<std::size_t>(j)];
}

bool Partition::contains(const Partition& mu) const noexcept {
    if (mu.length() > length()) return false;
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.row_length(i) > row_length(i)) return false;
    return true;
}

Cell Partition::cell_at(int index) const {
    if (index < 0 || index >= size_) throw DomainError("cell index out of range");
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
    const int row = static_cast<int>(it - offsets_.begin());
    return {row, index - offsets_[static_cast<std::size_t>(row - 1)] + 1};
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= row_length(i); ++j) out.push_back({i, j});
    return out;
}

std::vector<Cell> Partition::corners() const {
    std::vector<Cell> out;
    for (int i = 1; i <= length(); ++i)
        if (row_length(i + 1) < row_length(i)) out.push_back({i, row_length(i)});
    return out;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols;
    for (int j = 1; j <= lambda.row_length(1); ++j) cols.push_back(lambda.column_length(j));
    return Partition(std::move(cols));
}

CellStats cell_stats(const Partition& lambda, Cell c) {
    if (!lambda.contains(c)) throw DomainError("cell outside shape");
    CellStats s;
    s.arm = lambda.row_length(c.row) - c.col;
    s.leg = lambda.column_length(c.col) - c.row;
    s.hook = s.arm + s.leg + 1;
    s.is_corner = s.hook == 1;
    return s;
}

std::vector<Cell> reverse_lex_cells(const Partition& lambda) {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(lambda.size()));
    for (int j = lambda.row_length(1); j >= 1; --j)
        for (int i = lambda.column_length(j); i >= 1; --i) out.push_back({i, j});
    return out;
}

Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    auto trimmed = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    if (trimmed(text).empty()) return Partition{};
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto token = trimmed(text.substr(pos, comma - pos));
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw DomainError("malformed partition \"" + std::string(text) + "\"");
        parts.push_back(value);
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string format_partition(const Partition& lambda) {
    std::string out;
    for (int p : lambda.parts()) {
        if (!out.empty()) out += ',';
        out += std::to_string(p);
    }
    return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        prefix.push_back(k);
        partitions_rec(remaining - k, k, prefix, out);
        prefix.pop_back();
    }
}

void subpartitions_rec(const Partition& lambda, int row, int bound, std::vector<int>& prefix,
                       const std::function<void(const Partition&)>& fn) {
    fn(Partition(prefix));
    if (row > lambda.length()) return;
    const int cap = std::min(bound, lambda.row_length(row));
    for (int k = 1; k <= cap; ++k) {
        prefix.push_back(k);
        subpartitions_rec(lambda, row + 1, k, prefix, fn);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> prefix;
    partitions_rec(n, n, prefix, out);
    return out;
}

void for_each_subpartition(const Partition& lambda, const std::function<void(const Partition&)>& fn) {
    std::vector<int> prefix;
    subpartitions_rec(lambda, 1, lambda.row_length(1), prefix, fn);
}

Partition remove_corner(const Partition& lambda, Cell c) {
    if (!lambda.contains(c) || !cell_stats(lambda, c).is_corner) throw DomainError("not a corner");
    std::vector<int> parts = lambda.parts();
    --parts[static_cast<std::size_t>(c.row - 1)];
    if (parts.back() == 0) parts.pop_back();
    return Partition(std::move(parts));
}

}  // namespace nps
