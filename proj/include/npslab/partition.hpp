#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace nps {

/// A cell (i, j) of a Young diagram, 1-based row and column.
struct Cell {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// |x| = i + j - 2, the distance from the top-left cell.
inline int distance_from_origin(Cell c) { return c.row + c.col - 2; }

/// Reverse lexicographic comparison: (i,j) < (i',j') iff j < j', or j = j'
/// and i < i'.  This is the order in which NPS processes cells (largest first).
inline bool revlex_less(Cell a, Cell b) {
    return a.col < b.col || (a.col == b.col && a.row < b.row);
}

/// A weakly decreasing sequence of positive integers.  The empty partition
/// is allowed and has size 0.  Rows and columns are 1-based in the accessors.
class Partition {
public:
    Partition() = default;
    /// Throws DomainError unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// lambda_i, zero for i > length().
    int row_length(int i) const noexcept {
        return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }
    /// lambda'_j, zero for j > lambda_1.
    int column_length(int j) const noexcept {
        return j >= 1 && j <= static_cast<int>(columns_.size()) ? columns_[static_cast<std::size_t>(j - 1)] : 0;
    }
    bool contains(Cell c) const noexcept {
        return c.row >= 1 && c.row <= length() && c.col >= 1 && c.col <= row_length(c.row);
    }
    /// mu is contained in *this componentwise.
    bool contains(const Partition& mu) const noexcept;

    /// Row-major index of a cell, 0-based.
    int index_of(Cell c) const noexcept { return offsets_[static_cast<std::size_t>(c.row - 1)] + c.col - 1; }
    Cell cell_at(int index) const;

    /// All cells in row-major order.
    std::vector<Cell> cells() const;
    std::vector<Cell> corners() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    std::vector<int> columns_;
    std::vector<int> offsets_;
    int size_ = 0;
};

struct CellStats {
    int arm = 0;
    int leg = 0;
    int hook = 0;
    bool is_corner = false;

    friend bool operator==(const CellStats&, const CellStats&) = default;
};

Partition conjugate(const Partition& lambda);

/// Throws DomainError when c is not a cell of lambda.
CellStats cell_stats(const Partition& lambda, Cell c);

/// Cells sorted in decreasing reverse-lex order: rightmost column first and,
/// within a column, bottom cell first.  This is the NPS processing order.
std::vector<Cell> reverse_lex_cells(const Partition& lambda);

/// Parses "4,4,2,1,1,1"; the empty string is the empty partition.
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& lambda);

/// All partitions of n, in reverse lexicographic order of parts ((n) first).
std::vector<Partition> partitions_of(int n);

/// Calls fn for every partition mu contained in lambda (including the empty
/// one and lambda itself).
void for_each_subpartition(const Partition& lambda, const std::function<void(const Partition&)>& fn);

/// lambda with the corner cell c removed.  Throws DomainError unless c is a
/// corner.
Partition remove_corner(const Partition& lambda, Cell c);

}  // namespace nps
