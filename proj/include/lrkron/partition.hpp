#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrkron {

/// Thrown by parse_partition, both for malformed text and for rows that increase.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/**
 Weakly decreasing sequence of nonnegative integers: the universal irrep label.
 Canonical form strips trailing zeros, so [3,1,0] and [3,1] compare and hash as
 the same value; padded(n) recovers a fixed-length view when the rank matters.
 Immutable after construction.
 */
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> rows);
    explicit Partition(std::vector<int> rows);

    int rows() const { return static_cast<int>(rows_.size()); }
    /// Row length, zero beyond the last nonzero row.
    int row(int i) const { return i >= 0 && i < rows() ? rows_[static_cast<std::size_t>(i)] : 0; }
    int boxes() const;
    bool empty() const { return rows_.empty(); }
    /// The first n rows, zero padded. Requires n >= rows().
    std::vector<int> padded(int n) const;
    const std::vector<int>& raw() const { return rows_; }
    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> rows_;
};

/// Accepts "[a,b,c]" or "a,b,c" with decimal nonnegative integers.
Partition parse_partition(const std::string& text);

/// Removes the full n-box columns: [m1..mn] -> [m1-mn, ..., m(n-1)-mn].
/// Idempotent; the result has at most n-1 nonzero rows.
Partition reduce_sun(const Partition& p, int n);

/// Exact dimension of the U(n) irrep labeled p, as the content/hook product
/// over the boxes of p. Computed in checked 128-bit arithmetic; throws
/// std::overflow_error rather than wrapping.
std::uint64_t dimension(const Partition& p, int n);

/// An SU(n) irrep label, stored in reduced form (nth row removed).
struct SunIrrep {
    int n;
    Partition partition;
    SunIrrep(int n_, const Partition& p) : n(n_), partition(reduce_sun(p, n_)) {}
    auto operator<=>(const SunIrrep&) const = default;
};

/// SU(3) labels (lam, mu); equivalent to the two-rowed partition [lam+mu, mu].
struct Su3Dynkin {
    int lam = 0;
    int mu = 0;
    auto operator<=>(const Su3Dynkin&) const = default;
};

Partition dynkin_to_partition(const Su3Dynkin& d);
/// Inverse of dynkin_to_partition; p must have at most 2 nonzero rows.
Su3Dynkin partition_to_dynkin(const Partition& p);

} // namespace lrkron
