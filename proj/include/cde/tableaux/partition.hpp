#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cde {

// 1-based (row, column) position in English notation.
struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Weakly decreasing list of positive parts.
class Partition {
public:
    Partition() = default;
    // Trailing zeros are dropped; throws DomainError if parts increase or are negative.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // "3,1,1"; the empty string (or "0") is the empty partition.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    // 1-based row length, zero beyond the last row.
    int row(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
    bool contains(const Cell& c) const { return c.col >= 1 && c.col <= row(c.row); }
    bool contains(const Partition& mu) const;

    Partition transpose() const;
    // Cells x outside the diagram such that adding x gives a partition,
    // top to bottom (the last one is (length+1, 1)).
    std::vector<Cell> outer_corners() const;
    // Cells x of the diagram whose removal gives a partition, top to bottom.
    std::vector<Cell> inner_corners() const;
    Partition add(const Cell& c) const;
    Partition remove(const Cell& c) const;
    std::vector<Cell> cells() const;  // row-major

    int hook(const Cell& c) const;

    std::string str() const;
    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// Strictly decreasing list of positive parts, drawn as a shifted diagram.
class ShiftedPartition {
public:
    ShiftedPartition() = default;
    explicit ShiftedPartition(std::vector<int> parts);
    ShiftedPartition(std::initializer_list<int> parts) : ShiftedPartition(std::vector<int>(parts)) {}
    static ShiftedPartition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    std::string str() const;
    friend bool operator==(const ShiftedPartition&, const ShiftedPartition&) = default;
    friend auto operator<=>(const ShiftedPartition&, const ShiftedPartition&) = default;

private:
    std::vector<int> parts_;
};

// delta_d with every cell replaced by an a x b rectangle: a(d-1) rows, the
// i-th block of a rows (from the top) having length b(d-1-i).
Partition rect_staircase(int d, int a, int b);

struct StaircaseParams {
    int d = 0, a = 0, b = 0;
};
// Recovers (d,a,b) with d >= 2 when lambda is a nonempty rectangular staircase.
std::optional<StaircaseParams> as_rect_staircase(const Partition& lambda);

// (l, l-2, ..., l-2k); DomainError unless l >= 1 and 0 <= 2k < l.
ShiftedPartition shifted_falling_by_twos(int l, int k);
// delta_d + rect_staircase(e, a, a), added part by part; DomainError unless
// a, d, e >= 1 and d > a(e-1) + 1.
ShiftedPartition shifted_square_staircase(int d, int e, int a);

std::vector<Partition> partitions_of(int n);
// All mu contained in lambda, in lexicographic order of part lists.
std::vector<Partition> subpartitions(const Partition& lambda);

}  // namespace cde
