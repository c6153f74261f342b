#include "lrkron/tableau.hpp"

#include <algorithm>

namespace lrkron {

GelfandPattern::GelfandPattern(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("malformed triangle: no rows");
    const std::size_t n = rows_.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (rows_[j].size() != n - j)
            throw std::invalid_argument("malformed triangle: row sizes must decrease by one");
        for (int v : rows_[j])
            if (v < 0) throw std::invalid_argument("pattern entries must be nonnegative");
    }
}

const std::vector<int>& GelfandPattern::level(int k) const {
    if (k < 1 || k > size()) throw std::out_of_range("no such pattern level");
    return rows_[static_cast<std::size_t>(size() - k)];
}

bool check_betweenness(const GelfandPattern& g) {
    const auto& rows = g.rows();
    for (std::size_t j = 0; j + 1 < rows.size(); ++j) {
        const auto& upper = rows[j];
        const auto& lower = rows[j + 1];
        for (std::size_t i = 0; i < lower.size(); ++i)
            if (upper[i] < lower[i] || lower[i] < upper[i + 1]) return false;
    }
    return true;
}

WeylTableau::WeylTableau(Partition shape, std::vector<std::vector<int>> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != shape_.rows())
        throw std::invalid_argument("tableau rows do not match the shape");
    for (int r = 0; r < shape_.rows(); ++r) {
        const auto& row = entries_[static_cast<std::size_t>(r)];
        if (static_cast<int>(row.size()) != shape_.row(r))
            throw std::invalid_argument("tableau row length does not match the shape");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1) throw std::invalid_argument("tableau symbols start at 1");
            if (c > 0 && row[c] < row[c - 1])
                throw std::invalid_argument("tableau rows must weakly increase");
            if (r > 0 && row[c] <= entries_[static_cast<std::size_t>(r - 1)][c])
                throw std::invalid_argument("tableau columns must strictly increase");
        }
    }
}

int WeylTableau::max_symbol() const {
    int m = 0;
    for (const auto& row : entries_)
        for (int v : row) m = std::max(m, v);
    return m;
}

GelfandPattern gelfand_from_weyl(const WeylTableau& w, int n) {
    if (w.max_symbol() > n)
        throw std::invalid_argument("tableau uses symbols beyond the rank");
    if (w.shape().rows() > n)
        throw std::invalid_argument("tableau shape has more rows than the rank");

    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int k = n; k >= 1; --k) {
        std::vector<int> shape_k(static_cast<std::size_t>(k), 0);
        for (int r = 0; r < w.shape().rows() && r < k; ++r) {
            const auto& row = w.entries()[static_cast<std::size_t>(r)];
            // Rows weakly increase: boxes with symbol <= k form a prefix.
            auto it = std::upper_bound(row.begin(), row.end(), k);
            shape_k[static_cast<std::size_t>(r)] = static_cast<int>(it - row.begin());
        }
        rows.push_back(std::move(shape_k));
    }
    return GelfandPattern(std::move(rows));
}

WeylTableau weyl_from_gelfand(const GelfandPattern& g) {
    if (!check_betweenness(g))
        throw std::invalid_argument("pattern violates betweenness");
    const int n = g.size();
    const auto& top = g.level(n);

    std::vector<std::vector<int>> entries;
    for (int i = 1; i <= n; ++i) {
        if (top[static_cast<std::size_t>(i - 1)] == 0) break;
        std::vector<int> row;
        int prev = 0;
        for (int k = i; k <= n; ++k) {
            int cur = g.entry(i, k);
            row.insert(row.end(), static_cast<std::size_t>(cur - prev), k);
            prev = cur;
        }
        entries.push_back(std::move(row));
    }
    return WeylTableau(Partition(top), std::move(entries));
}

std::vector<int> LRFilling::symbol_counts(int n) const {
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    for (const auto& row : symbols)
        for (int s : row)
            if (s >= 1 && s <= n) ++counts[static_cast<std::size_t>(s - 1)];
    return counts;
}

Partition LRFilling::content() const {
    int n = 0;
    for (const auto& row : symbols)
        for (int s : row) n = std::max(n, s);
    return Partition(symbol_counts(n));
}

bool is_skew_tableau(const LRFilling& f) {
    if (f.inner.rows() > f.outer.rows()) return false;
    if (static_cast<int>(f.symbols.size()) != f.outer.rows()) return false;
    for (int r = 0; r < f.outer.rows(); ++r) {
        int in = f.inner.row(r);
        int out = f.outer.row(r);
        if (in > out) return false;
        const auto& row = f.symbols[static_cast<std::size_t>(r)];
        if (static_cast<int>(row.size()) != out - in) return false;
        for (int c = in; c < out; ++c) {
            int s = row[static_cast<std::size_t>(c - in)];
            if (s < 1) return false;
            if (c > in && s < row[static_cast<std::size_t>(c - in - 1)]) return false;
            // Column check against the box above, when that box is skew too.
            if (r > 0 && c >= f.inner.row(r - 1)) {
                if (c >= f.outer.row(r - 1)) return false; // outer not a diagram here
                int above = f.symbols[static_cast<std::size_t>(r - 1)]
                                     [static_cast<std::size_t>(c - f.inner.row(r - 1))];
                if (s <= above) return false;
            }
        }
    }
    return true;
}

bool is_lattice_word(const LRFilling& f) {
    int n = 0;
    for (const auto& row : f.symbols)
        for (int s : row) n = std::max(n, s);
    std::vector<int> counts(static_cast<std::size_t>(n + 1), 0);
    for (const auto& row : f.symbols) {
        for (auto it = row.rbegin(); it != row.rend(); ++it) {
            int s = *it;
            if (s < 1) return false;
            ++counts[static_cast<std::size_t>(s)];
            if (s >= 2 && counts[static_cast<std::size_t>(s)] > counts[static_cast<std::size_t>(s - 1)])
                return false;
        }
    }
    return true;
}

std::vector<GelfandPattern> all_patterns(const Partition& top, int n) {
    std::vector<GelfandPattern> out;
    enumerate_patterns(top, n, [&](const GelfandPattern& g) { out.push_back(g); });
    return out;
}

std::uint64_t count_patterns(const Partition& top, int n) {
    std::uint64_t count = 0;
    enumerate_patterns(top, n, [&](const GelfandPattern&) { ++count; });
    return count;
}

} // namespace lrkron
