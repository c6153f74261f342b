#include "lrkron/lr_engine.hpp"

#include "lrkron/closed_form.hpp"

#include <algorithm>
#include <limits>

namespace lrkron {

namespace {

// Depth-first enumeration. Species k (symbol k+1) is placed as a horizontal
// strip on top of the shape left by species k-1, row by row from the top.
// Incremental pruning per row r:
//   - strip:   new row r must not pass the end of the pre-species row r-1
//   - lattice: boxes of species k in rows 1..r never exceed boxes of
//              species k-1 in rows 1..r-1
//   - cap:     optional outer bound for targeted coefficient queries
struct FillingSearch {
    int n = 0;
    const Partition* lambda = nullptr;
    const Partition* mu = nullptr;
    const std::vector<int>* cap = nullptr; // nu padded to n, or null
    std::vector<int> shape;                // current shape, length n
    std::vector<std::vector<int>> strips;  // strips[k][r]: species k boxes in row r
    std::vector<LRFilling>* out = nullptr;

    void run() {
        place_species(0);
    }

    void place_species(std::size_t k) {
        if (k == strips.size()) {
            emit();
            return;
        }
        std::vector<int> base = shape; // shape before this species
        place_row(k, 0, mu->row(static_cast<int>(k)), 0, 0, base);
    }

    // placed_prev: boxes of species k-1 in rows above r; placed_here: boxes of
    // species k already placed in rows above r.
    void place_row(std::size_t k, int r, int remaining, int placed_prev, int placed_here,
                   const std::vector<int>& base) {
        if (r == n) {
            if (remaining == 0) place_species(k + 1);
            return;
        }
        int cap_row = cap ? (*cap)[static_cast<std::size_t>(r)] : std::numeric_limits<int>::max();
        int max_add = remaining;
        if (r > 0) max_add = std::min(max_add, base[static_cast<std::size_t>(r - 1)] - shape[static_cast<std::size_t>(r)]);
        if (k > 0) max_add = std::min(max_add, placed_prev - placed_here);
        max_add = std::min(max_add, cap_row - shape[static_cast<std::size_t>(r)]);

        int prev_next = placed_prev + (k > 0 ? strips[k - 1][static_cast<std::size_t>(r)] : 0);
        for (int add = 0; add <= max_add; ++add) {
            shape[static_cast<std::size_t>(r)] += add;
            strips[k][static_cast<std::size_t>(r)] = add;
            place_row(k, r + 1, remaining - add, prev_next, placed_here + add, base);
            shape[static_cast<std::size_t>(r)] -= add;
            strips[k][static_cast<std::size_t>(r)] = 0;
        }
    }

    void emit() {
        Partition outer{std::vector<int>(shape)};
        if (cap) {
            for (int r = 0; r < n; ++r)
                if (outer.row(r) != (*cap)[static_cast<std::size_t>(r)]) return;
        }
        LRFilling f;
        f.inner = *lambda;
        f.outer = outer;
        f.symbols.resize(static_cast<std::size_t>(outer.rows()));
        for (int r = 0; r < outer.rows(); ++r) {
            auto& row = f.symbols[static_cast<std::size_t>(r)];
            for (std::size_t k = 0; k < strips.size(); ++k)
                row.insert(row.end(), static_cast<std::size_t>(strips[k][static_cast<std::size_t>(r)]),
                           static_cast<int>(k + 1));
        }
        out->push_back(std::move(f));
    }
};

std::vector<LRFilling> enumerate(const Partition& lambda, const Partition& mu, int n,
                                 const std::vector<int>* cap) {
    if (n < 1) throw std::invalid_argument("rank must be at least 1");
    if (lambda.rows() > n || mu.rows() > n)
        throw std::invalid_argument("factors must fit in n rows");

    std::vector<LRFilling> out;
    FillingSearch search;
    search.n = n;
    search.lambda = &lambda;
    search.mu = &mu;
    search.cap = cap;
    search.shape = lambda.padded(n);
    search.strips.assign(static_cast<std::size_t>(mu.rows()), std::vector<int>(static_cast<std::size_t>(n), 0));
    search.out = &out;
    if (cap) {
        // Quick reject: the outer bound must contain lambda.
        for (int r = 0; r < n; ++r)
            if ((*cap)[static_cast<std::size_t>(r)] < lambda.row(r)) return out;
    }
    search.run();

    std::sort(out.begin(), out.end(), [](const LRFilling& a, const LRFilling& b) {
        if (a.outer != b.outer) return a.outer > b.outer;
        return a.symbols < b.symbols;
    });
    return out;
}

} // namespace

std::vector<LRFilling> lr_fillings(const Partition& lambda, const Partition& mu, int n) {
    return enumerate(lambda, mu, n, nullptr);
}

std::vector<LRFilling> lr_fillings_to(const Partition& lambda, const Partition& mu,
                                      const Partition& nu, int n) {
    if (nu.rows() > n) return {};
    if (nu.boxes() != lambda.boxes() + mu.boxes()) return {};
    std::vector<int> cap = nu.padded(n);
    return enumerate(lambda, mu, n, &cap);
}

const DecompositionTerm* Decomposition::find(const Partition& nu) const {
    for (const auto& t : terms)
        if (t.nu == nu) return &t;
    return nullptr;
}

int Decomposition::multiplicity_of(const Partition& nu) const {
    const DecompositionTerm* t = find(nu);
    return t ? t->multiplicity : 0;
}

std::uint64_t Decomposition::total_dimension() const {
    unsigned __int128 sum = 0;
    for (const auto& t : terms) {
        unsigned __int128 add = static_cast<unsigned __int128>(t.multiplicity) * dimension(t.nu, n);
        sum += add;
        if (sum > std::numeric_limits<std::uint64_t>::max())
            throw std::overflow_error("total dimension exceeds 64-bit range");
    }
    return static_cast<std::uint64_t>(sum);
}

Decomposition decompose(const Partition& lambda, const Partition& mu, int n) {
    Decomposition d;
    d.lambda = lambda;
    d.mu = mu;
    d.n = n;

    std::vector<LRFilling> fillings = lr_fillings(lambda, mu, n);
    bool attach_labels = (n == 3 || n == 4) && lambda.rows() < n && mu.rows() < n;

    for (auto& f : fillings) {
        if (d.terms.empty() || d.terms.back().nu != f.outer) {
            d.terms.push_back(DecompositionTerm{});
            d.terms.back().nu = f.outer;
        }
        DecompositionTerm& term = d.terms.back();
        ++term.multiplicity;
        if (attach_labels) term.labels.push_back(eta_from_filling(f, n));
        term.fillings.push_back(std::move(f));
    }
    return d;
}

int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu, int n) {
    return static_cast<int>(lr_fillings_to(lambda, mu, nu, n).size());
}

} // namespace lrkron
