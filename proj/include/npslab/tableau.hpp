#pragma once

#include "npslab/partition.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace nps {

/// A bijective filling T : lambda -> {1..n}.  Entries are stored row-major.
class Tableau {
public:
    Tableau() = default;
    /// Throws DomainError unless entries is a permutation of 1..n of the
    /// right length.
    Tableau(Partition shape, std::vector<int> row_major_entries);

    const Partition& shape() const noexcept { return shape_; }
    const std::vector<int>& entries() const noexcept { return entries_; }
    int at(Cell c) const { return entries_[static_cast<std::size_t>(shape_.index_of(c))]; }

    /// Increasing along rows and down columns.
    bool is_standard() const noexcept;

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    Partition shape_;
    std::vector<int> entries_;
};

/// An integer filling H with -leg(i,j) <= H(i,j) <= arm(i,j) at every cell.
class HookTableau {
public:
    HookTableau() = default;
    /// All-zero hook tableau of the given shape.
    explicit HookTableau(Partition shape);
    /// Throws DomainError when an entry leaves its [-leg, arm] window.
    HookTableau(Partition shape, std::vector<int> row_major_entries);
    /// Skips the window check; for diagnosing faulty sorters only.
    static HookTableau unchecked(Partition shape, std::vector<int> row_major_entries);

    const Partition& shape() const noexcept { return shape_; }
    const std::vector<int>& entries() const noexcept { return entries_; }
    int at(Cell c) const { return entries_[static_cast<std::size_t>(shape_.index_of(c))]; }

    /// Sum of |H(i,j)|.
    long abs_sum() const noexcept;
    bool is_zero() const noexcept;

    friend bool operator==(const HookTableau&, const HookTableau&) = default;

private:
    Partition shape_;
    std::vector<int> entries_;
};

/// True when every entry of a hook filling lies in its window.
bool within_hook_bounds(const Partition& shape, const std::vector<int>& row_major_entries);

/// Rows separated by ';', entries by ',': "4,2;3,1".  The shape is read
/// from the row lengths.
Tableau parse_tableau(std::string_view text);
std::string format_filling(const Partition& shape, const std::vector<int>& row_major_entries);
inline std::string format_tableau(const Tableau& t) { return format_filling(t.shape(), t.entries()); }
inline std::string format_hook_tableau(const HookTableau& h) { return format_filling(h.shape(), h.entries()); }

}  // namespace nps
