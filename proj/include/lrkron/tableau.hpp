#pragma once

#include "lrkron/partition.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace lrkron {

/**
 Triangular integer array with rows of n, n-1, ..., 1 entries, top row first.
 Zero rows are stored, equality is entrywise. Construction checks the triangle
 shape and nonnegativity; the interleaving conditions are a separate predicate
 so that invalid candidates can be represented and rejected.
 */
class GelfandPattern {
public:
    explicit GelfandPattern(std::vector<std::vector<int>> rows);

    int size() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    /// Row with k entries (the U(k) level), k = 1..size().
    const std::vector<int>& level(int k) const;
    /// m_{ik}: entry i (1-based) of the row with k entries.
    int entry(int i, int k) const { return level(k)[static_cast<std::size_t>(i - 1)]; }

    bool operator==(const GelfandPattern&) const = default;

private:
    std::vector<std::vector<int>> rows_;
};

/// True iff every adjacent row pair interleaves:
/// upper[i] >= lower[i] >= upper[i+1].
bool check_betweenness(const GelfandPattern& g);

/**
 Young diagram filled with symbols 1..n, weakly increasing along rows and
 strictly increasing down columns. Construction validates.
 */
class WeylTableau {
public:
    WeylTableau(Partition shape, std::vector<std::vector<int>> entries);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& entries() const { return entries_; }
    int max_symbol() const;

    bool operator==(const WeylTableau&) const = default;

private:
    Partition shape_;
    std::vector<std::vector<int>> entries_;
};

/// Row k of the result is the shape left after deleting all boxes holding
/// symbols larger than k; the top row is w's shape padded to n.
GelfandPattern gelfand_from_weyl(const WeylTableau& w, int n);

/// Inverse of gelfand_from_weyl. Throws std::invalid_argument if g does not
/// satisfy betweenness.
WeylTableau weyl_from_gelfand(const GelfandPattern& g);

/**
 A skew augmentation of `inner` up to `outer`; symbols live on the skew boxes
 only (the inner boxes carry no symbol). Engine output always satisfies the
 skew-tableau and lattice-word conditions; hand-built instances may violate
 either, which the predicates below detect.
 */
struct LRFilling {
    Partition inner;
    Partition outer;
    std::vector<std::vector<int>> symbols; // per outer row, skew entries left to right

    /// counts[k-1] = number of boxes holding symbol k, k = 1..n.
    std::vector<int> symbol_counts(int n) const;
    /// The content partition; throws if the counts do not weakly decrease.
    Partition content() const;

    auto operator<=>(const LRFilling&) const = default;
};

/// Shapes nest, symbol rows have the right lengths, rows weakly increase and
/// columns strictly increase on the skew region.
bool is_skew_tableau(const LRFilling& f);

/// Reads the skew symbols row by row top to bottom, right to left within a
/// row; true iff every prefix satisfies count(1) >= count(2) >= ...
bool is_lattice_word(const LRFilling& f);

namespace detail {

template <typename Visitor>
void fill_rows_below(std::vector<std::vector<int>>& rows, std::size_t level, int n, Visitor& visit) {
    if (level == static_cast<std::size_t>(n)) {
        visit(GelfandPattern(rows));
        return;
    }
    const std::vector<int>& upper = rows[level - 1];
    std::vector<int>& lower = rows[level];

    // Choose entries left to right, each between its two upper neighbours;
    // ascending choice order makes the whole stream lexicographic.
    auto fill_entry = [&](auto&& self, std::size_t i) -> void {
        if (i == lower.size()) {
            fill_rows_below(rows, level + 1, n, visit);
            return;
        }
        for (int v = upper[i + 1]; v <= upper[i]; ++v) {
            lower[i] = v;
            self(self, i + 1);
        }
    };
    fill_entry(fill_entry, 0);
}

} // namespace detail

/// Calls visit(pattern) once for every betweenness-valid pattern whose top row
/// is `top` padded to n, in lexicographic order of the entries below the top
/// row. Streaming: only one pattern is alive at a time.
template <typename Visitor>
void enumerate_patterns(const Partition& top, int n, Visitor&& visit) {
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int k = n; k >= 1; --k) rows.emplace_back(static_cast<std::size_t>(k), 0);
    rows[0] = top.padded(n);
    if (n == 1) {
        visit(GelfandPattern(rows));
        return;
    }
    detail::fill_rows_below(rows, 1, n, visit);
}

std::vector<GelfandPattern> all_patterns(const Partition& top, int n);
std::uint64_t count_patterns(const Partition& top, int n);

} // namespace lrkron
