#include "lrkron/partition.hpp"

#include <cctype>
#include <limits>
#include <numeric>

namespace lrkron {

namespace {

using u128 = unsigned __int128;

u128 mul_checked(u128 a, u128 b) {
    if (a != 0 && b > std::numeric_limits<u128>::max() / a)
        throw std::overflow_error("dimension product exceeds 128-bit range");
    return a * b;
}

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::vector<int> canonicalize(std::vector<int> rows) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 0)
            throw std::invalid_argument("partition rows must be nonnegative");
        if (i > 0 && rows[i] > rows[i - 1])
            throw std::invalid_argument("partition rows must be weakly decreasing");
    }
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return rows;
}

} // namespace

Partition::Partition(std::initializer_list<int> rows) : rows_(canonicalize(std::vector<int>(rows))) {}

Partition::Partition(std::vector<int> rows) : rows_(canonicalize(std::move(rows))) {}

int Partition::boxes() const {
    return std::accumulate(rows_.begin(), rows_.end(), 0);
}

std::vector<int> Partition::padded(int n) const {
    if (n < rows())
        throw std::invalid_argument("cannot pad " + to_string() + " to fewer rows than it has");
    std::vector<int> out(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < rows(); ++i) out[static_cast<std::size_t>(i)] = rows_[static_cast<std::size_t>(i)];
    return out;
}

std::string Partition::to_string() const {
    if (rows_.empty()) return "[0]";
    std::string s = "[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(rows_[i]);
    }
    s += ']';
    return s;
}

Partition parse_partition(const std::string& text) {
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };

    skip_ws();
    bool bracketed = pos < text.size() && text[pos] == '[';
    if (bracketed) ++pos;

    std::vector<int> rows;
    bool expect_number = true;
    for (;;) {
        skip_ws();
        if (pos >= text.size()) break;
        char c = text[pos];
        if (c == ']') break;
        if (c == ',') {
            if (expect_number) throw parse_error("expected a number before ',' in '" + text + "'");
            expect_number = true;
            ++pos;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw parse_error("unexpected character '" + std::string(1, c) + "' in '" + text + "'");
        if (!expect_number) throw parse_error("missing ',' between numbers in '" + text + "'");
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > std::numeric_limits<int>::max()) throw parse_error("row value out of range in '" + text + "'");
            ++pos;
        }
        rows.push_back(static_cast<int>(value));
        expect_number = false;
    }

    if (bracketed) {
        skip_ws();
        if (pos >= text.size() || text[pos] != ']') throw parse_error("missing ']' in '" + text + "'");
        ++pos;
        skip_ws();
        if (pos != text.size()) throw parse_error("trailing characters after ']' in '" + text + "'");
    } else {
        if (pos != text.size()) throw parse_error("unexpected ']' in '" + text + "'");
    }
    if (expect_number && !rows.empty()) throw parse_error("dangling ',' in '" + text + "'");
    if (rows.empty()) {
        if (!bracketed) throw parse_error("empty partition text");
        return Partition{};
    }

    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i] > rows[i - 1])
            throw parse_error("rows increase in '" + text + "'");
    return Partition(std::move(rows));
}

Partition reduce_sun(const Partition& p, int n) {
    if (n < 1) throw std::invalid_argument("rank must be at least 1");
    if (p.rows() > n)
        throw std::invalid_argument(p.to_string() + " has more than n=" + std::to_string(n) + " rows");
    int last = p.row(n - 1);
    if (last == 0) return p;
    std::vector<int> rows;
    rows.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 0; i + 1 < n; ++i) rows.push_back(p.row(i) - last);
    return Partition(std::move(rows));
}

std::uint64_t dimension(const Partition& p, int n) {
    if (n < 1) throw std::invalid_argument("rank must be at least 1");
    if (p.rows() > n)
        throw std::invalid_argument(p.to_string() + " has more than n=" + std::to_string(n) + " rows");

    // Column lengths of p: col[j] = #{i : p.row(i) > j}.
    std::vector<int> col(static_cast<std::size_t>(p.row(0)), 0);
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.row(i); ++j) ++col[static_cast<std::size_t>(j)];

    u128 num = 1, den = 1;
    for (int i = 0; i < p.rows(); ++i) {
        for (int j = 0; j < p.row(i); ++j) {
            int content = j - i;
            int hook = (p.row(i) - j) + (col[static_cast<std::size_t>(j)] - i) - 1;
            num = mul_checked(num, static_cast<u128>(n + content));
            den = mul_checked(den, static_cast<u128>(hook));
            u128 g = gcd128(num, den);
            num /= g;
            den /= g;
        }
    }
    if (den != 1) throw std::logic_error("content/hook product failed to divide exactly");
    if (num > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("dimension exceeds 64-bit range");
    return static_cast<std::uint64_t>(num);
}

Partition dynkin_to_partition(const Su3Dynkin& d) {
    if (d.lam < 0 || d.mu < 0) throw std::invalid_argument("Dynkin labels must be nonnegative");
    return Partition{d.lam + d.mu, d.mu};
}

Su3Dynkin partition_to_dynkin(const Partition& p) {
    if (p.rows() > 2)
        throw std::invalid_argument(p.to_string() + " has more than two rows");
    return Su3Dynkin{p.row(0) - p.row(1), p.row(1)};
}

} // namespace lrkron
