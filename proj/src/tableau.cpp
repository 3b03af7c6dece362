#include "npslab/tableau.hpp"

#include "npslab/errors.hpp"

#include <charconv>
#include <cstdlib>

namespace nps {

Tableau::Tableau(Partition shape, std::vector<int> row_major_entries)
    : shape_(std::move(shape)), entries_(std::move(row_major_entries)) {
    const auto n = static_cast<std::size_t>(shape_.size());
    if (entries_.size() != n) throw DomainError("tableau has wrong number of entries");
    std::vector<bool> seen(n + 1, false);
    for (int v : entries_) {
        if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)])
            throw DomainError("tableau entries must be a permutation of 1..n");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

bool Tableau::is_standard() const noexcept {
    for (const Cell& c : shape_.cells()) {
        const int v = at(c);
        if (shape_.contains(Cell{c.row, c.col + 1}) && at({c.row, c.col + 1}) < v) return false;
        if (shape_.contains(Cell{c.row + 1, c.col}) && at({c.row + 1, c.col}) < v) return false;
    }
    return true;
}

bool within_hook_bounds(const Partition& shape, const std::vector<int>& entries) {
    if (entries.size() != static_cast<std::size_t>(shape.size())) return false;
    for (const Cell& c : shape.cells()) {
        const auto s = cell_stats(shape, c);
        const int h = entries[static_cast<std::size_t>(shape.index_of(c))];
        if (h < -s.leg || h > s.arm) return false;
    }
    return true;
}

HookTableau::HookTableau(Partition shape)
    : shape_(std::move(shape)), entries_(static_cast<std::size_t>(shape_.size()), 0) {}

HookTableau::HookTableau(Partition shape, std::vector<int> row_major_entries)
    : shape_(std::move(shape)), entries_(std::move(row_major_entries)) {
    if (!within_hook_bounds(shape_, entries_)) throw DomainError("hook tableau entry outside [-leg, arm]");
}

HookTableau HookTableau::unchecked(Partition shape, std::vector<int> row_major_entries) {
    HookTableau h;
    h.shape_ = std::move(shape);
    h.entries_ = std::move(row_major_entries);
    return h;
}

long HookTableau::abs_sum() const noexcept {
    long s = 0;
    for (int h : entries_) s += std::abs(h);
    return s;
}

bool HookTableau::is_zero() const noexcept {
    for (int h : entries_)
        if (h != 0) return false;
    return true;
}

Tableau parse_tableau(std::string_view text) {
    std::vector<int> rows;
    std::vector<int> entries;
    if (text.empty()) return Tableau(Partition(), {});
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto semi = text.find(';', pos);
        if (semi == std::string_view::npos) semi = text.size();
        const auto row_text = text.substr(pos, semi - pos);
        int count = 0;
        std::size_t p = 0;
        while (p <= row_text.size()) {
            auto comma = row_text.find(',', p);
            if (comma == std::string_view::npos) comma = row_text.size();
            auto tok = row_text.substr(p, comma - p);
            while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
            while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
            int v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
                throw DomainError("malformed tableau \"" + std::string(text) + "\"");
            entries.push_back(v);
            ++count;
            p = comma + 1;
        }
        rows.push_back(count);
        pos = semi + 1;
    }
    return Tableau(Partition(std::move(rows)), std::move(entries));
}

std::string format_filling(const Partition& shape, const std::vector<int>& entries) {
    std::string out;
    std::size_t k = 0;
    for (int i = 1; i <= shape.length(); ++i) {
        if (i > 1) out += ';';
        for (int j = 1; j <= shape.row_length(i); ++j) {
            if (j > 1) out += ',';
            out += std::to_string(entries[k++]);
        }
    }
    return out;
}

}  // namespace nps
