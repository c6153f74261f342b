#include "lrkron/closed_form.hpp"

#include <algorithm>
#include <map>

namespace lrkron {

namespace {

// Floor division by 2 (toward minus infinity).
int floor_half(int x) { return x >= 0 ? x / 2 : (x - 1) / 2; }

void check_su3_inputs(const Su3Dynkin& a, const Su3Dynkin& b, const Partition& m) {
    if (a.lam < 0 || a.mu < 0 || b.lam < 0 || b.mu < 0)
        throw std::invalid_argument("Dynkin labels must be nonnegative");
    if (m.rows() > 3)
        throw std::invalid_argument("SU(3) result shape must have at most 3 rows");
    int total = a.lam + 2 * a.mu + b.lam + 2 * b.mu;
    if (m.boxes() != total)
        throw std::invalid_argument("box count mismatch: " + m.to_string() + " has " +
                                    std::to_string(m.boxes()) + " boxes, factors supply " +
                                    std::to_string(total));
}

Decomposition from_term_map(Partition lambda, Partition mu, int n,
                            const std::map<Partition, int, std::greater<Partition>>& counts) {
    Decomposition d;
    d.lambda = std::move(lambda);
    d.mu = std::move(mu);
    d.n = n;
    for (const auto& [nu, count] : counts) {
        DecompositionTerm t;
        t.nu = nu;
        t.multiplicity = count;
        d.terms.push_back(std::move(t));
    }
    return d;
}

} // namespace

Su3Bounds su3_bounds(const Su3Dynkin& a, const Su3Dynkin& b, const Partition& m) {
    check_su3_inputs(a, b, m);
    const int lam1 = a.lam, mu1 = a.mu, lam2 = b.lam, mu2 = b.mu;
    const int m1 = m.row(0), m2 = m.row(1), m3 = m.row(2);

    Su3Bounds out;
    out.max_args = {BoundArg{"m1-lam1-mu1", m1 - lam1 - mu1},
                    BoundArg{"mu2", mu2},
                    BoundArg{"m2-mu1", m2 - mu1},
                    BoundArg{"lam2+mu2-m3", lam2 + mu2 - m3},
                    BoundArg{"mu1+mu2-m3", mu1 + mu2 - m3},
                    BoundArg{"m2-m3", m2 - m3}};
    out.min_args = {BoundArg{"0", 0},
                    BoundArg{"mu2-m3", mu2 - m3},
                    BoundArg{"m2-lam1-mu1", m2 - lam1 - mu1}};
    out.eta_max = out.max_args[0].value;
    for (const auto& arg : out.max_args) out.eta_max = std::min(out.eta_max, arg.value);
    out.eta_min = out.min_args[0].value;
    for (const auto& arg : out.min_args) out.eta_min = std::max(out.eta_min, arg.value);
    return out;
}

int su3_multiplicity(const Su3Dynkin& a, const Su3Dynkin& b, const Partition& m) {
    return su3_bounds(a, b, m).multiplicity();
}

std::vector<EtaLabels> su3_eta_labels(const Su3Dynkin& a, const Su3Dynkin& b, const Partition& m) {
    Su3Bounds bounds = su3_bounds(a, b, m);
    std::vector<EtaLabels> out;
    for (int eta = bounds.eta_min; eta <= bounds.eta_max; ++eta) out.push_back(EtaLabels{{eta}});
    return out;
}

GeneratedDecomposition su3_decompose_sum(const Su3Dynkin& a, const Su3Dynkin& b) {
    if (a.lam < 0 || a.mu < 0 || b.lam < 0 || b.mu < 0)
        throw std::invalid_argument("Dynkin labels must be nonnegative");
    const int lam1 = a.lam, mu1 = a.mu, lam2 = b.lam, mu2 = b.mu;

    std::map<Partition, int, std::greater<Partition>> counts;
    std::size_t discarded = 0;

    // Five indices, two constraints: k3 and n2 are determined, their printed
    // upper limits act as filters.
    for (int k1 = 0; k1 <= lam2 + mu2; ++k1) {
        for (int k2 = 0; k2 <= std::min(lam1, lam2 + mu2 - k1); ++k2) {
            int k3 = lam2 + mu2 - k1 - k2;
            if (k3 > mu1) continue;
            for (int n1 = 0; n1 <= std::min({lam1 + k1 - k2, mu2, k1}); ++n1) {
                int n2 = mu2 - n1;
                if (n2 > std::min(mu1 + k2 - k3, k1 + k2 - n1)) continue;
                std::vector<int> nu{lam1 + mu1 + k1, mu1 + k2 + n1, k3 + n2};
                if (nu[0] < nu[1] || nu[1] < nu[2] || nu[2] < 0) {
                    ++discarded;
                    continue;
                }
                ++counts[Partition(std::move(nu))];
            }
        }
    }

    GeneratedDecomposition out;
    out.decomposition = from_term_map(dynkin_to_partition(a), dynkin_to_partition(b), 3, counts);
    out.discarded = discarded;
    return out;
}

GeneratedDecomposition su4_decompose_sum(const Partition& lambda, const Partition& mu) {
    if (lambda.rows() > 3 || mu.rows() > 3)
        throw std::invalid_argument("SU(4) factors must have at most 3 rows");
    const auto l = lambda.padded(3);
    const auto m = mu.padded(3);
    const int lam1 = l[0], lam2 = l[1], lam3 = l[2];
    const int mu1 = m[0], mu2 = m[1], mu3 = m[2];

    std::map<Partition, int, std::greater<Partition>> counts;
    std::size_t discarded = 0;

    // Nine indices, three constraints: k4, l3 and n2 are determined and their
    // printed upper limits act as filters.
    for (int k1 = 0; k1 <= mu1; ++k1)
        for (int k2 = 0; k2 <= std::min(mu1 - k1, lam1 - lam2); ++k2)
            for (int k3 = 0; k3 <= std::min(lam2 - lam3, mu1 - k1 - k2); ++k3) {
                int k4 = mu1 - k1 - k2 - k3;
                if (k4 > lam3) continue;
                for (int l1 = 0; l1 <= std::min({lam1 + k1 - lam2 - k2, mu2, k1}); ++l1)
                    for (int l2 = 0; l2 <= std::min({lam2 + k2 - lam3 - k3, mu2 - l1, k1 + k2 - l1}); ++l2) {
                        int l3 = mu2 - l1 - l2;
                        if (l3 > std::min(lam3 + k3 - k4, k1 + k2 + k3 - l1 - l2)) continue;
                        for (int n1 = 0; n1 <= std::min({lam2 + k2 + l1 - lam3 - k3 - l2, mu3, l1}); ++n1) {
                            int n2 = mu3 - n1;
                            if (n2 > std::min(lam3 + k3 + l2 - k4 - l3, l1 + l2 - n1)) continue;
                            std::vector<int> nu{lam1 + k1, lam2 + k2 + l1, lam3 + k3 + l2 + n1,
                                                k4 + l3 + n2};
                            if (nu[0] < nu[1] || nu[1] < nu[2] || nu[2] < nu[3] || nu[3] < 0) {
                                ++discarded;
                                continue;
                            }
                            ++counts[Partition(std::move(nu))];
                        }
                    }
            }

    GeneratedDecomposition out;
    out.decomposition = from_term_map(lambda, mu, 4, counts);
    out.discarded = discarded;
    return out;
}

Su4Bounds::Su4Bounds(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.rows() > 3 || mu.rows() > 3)
        throw std::invalid_argument("SU(4) factors must have at most 3 rows");
    if (nu.rows() > 4)
        throw std::invalid_argument("SU(4) result shape must have at most 4 rows");
    if (nu.boxes() != lambda.boxes() + mu.boxes())
        throw std::invalid_argument("box count mismatch: " + nu.to_string() + " has " +
                                    std::to_string(nu.boxes()) + " boxes, factors supply " +
                                    std::to_string(lambda.boxes() + mu.boxes()));
    lam_ = lambda.padded(3);
    mu_ = mu.padded(3);
    nu_ = nu.padded(4);
}

LevelBounds Su4Bounds::eta1() const {
    LevelBounds b;
    b.lo_args = {BoundArg{"0", 0}, BoundArg{"nu2-lam1", nu_[1] - lam_[0]}};
    b.hi_args = {BoundArg{"nu2-lam2", nu_[1] - lam_[1]}, BoundArg{"nu1-lam1", nu_[0] - lam_[0]}};
    b.lo = std::max(b.lo_args[0].value, b.lo_args[1].value);
    b.hi = std::min(b.hi_args[0].value, b.hi_args[1].value);
    return b;
}

LevelBounds Su4Bounds::eta2(int eta1) const {
    LevelBounds b;
    b.lo_args = {BoundArg{"nu3-nu2+eta1", nu_[2] - nu_[1] + eta1}, BoundArg{"0", 0}};
    b.hi_args = {BoundArg{"eta1", eta1}, BoundArg{"mu3", mu_[2]},
                 BoundArg{"nu3-nu4", nu_[2] - nu_[3]}};
    b.lo = std::max(b.lo_args[0].value, b.lo_args[1].value);
    b.hi = std::min({b.hi_args[0].value, b.hi_args[1].value, b.hi_args[2].value});
    return b;
}

LevelBounds Su4Bounds::eta3(int eta1, int eta2) const {
    const int lam1 = lam_[0], lam2 = lam_[1], lam3 = lam_[2];
    const int mu2 = mu_[1], mu3 = mu_[2];
    const int nu1 = nu_[0], nu2 = nu_[1], nu3 = nu_[2], nu4 = nu_[3];

    LevelBounds b;
    int across = eta2 + lam1 + lam2 + lam3 + 2 * mu2 - nu1 - nu2 - nu3;
    b.lo_args = {BoundArg{"2eta2-eta1+mu2+nu4-nu3-mu3", 2 * eta2 - eta1 + mu2 + nu4 - nu3 - mu3},
                 BoundArg{"eta2-eta1+lam3+mu2-nu3", eta2 - eta1 + lam3 + mu2 - nu3},
                 BoundArg{"eta2+nu4-lam3-mu3", eta2 + nu4 - lam3 - mu3},
                 BoundArg{"eta2+lam1+lam2+lam3+2mu2-nu1-nu2-nu3", across},
                 BoundArg{"eta1+lam1+lam2+mu2-nu1-nu2", eta1 + lam1 + lam2 + mu2 - nu1 - nu2},
                 BoundArg{"0", 0},
                 BoundArg{"int[(eta2+lam1+lam2+lam3+2mu2-nu1-nu2-nu3)/2]", floor_half(across)}};
    b.hi_args = {BoundArg{"mu2-eta1", mu2 - eta1},
                 BoundArg{"nu4-mu3+eta2", nu4 - mu3 + eta2},
                 BoundArg{"mu2-mu3", mu2 - mu3},
                 BoundArg{"lam2-nu3+mu2-eta1+eta2", lam2 - nu3 + mu2 - eta1 + eta2},
                 BoundArg{"mu2-eta2", mu2 - eta2}};
    b.lo = b.lo_args[0].value;
    for (const auto& arg : b.lo_args) b.lo = std::max(b.lo, arg.value);
    b.hi = b.hi_args[0].value;
    for (const auto& arg : b.hi_args) b.hi = std::min(b.hi, arg.value);
    return b;
}

int Su4Bounds::multiplicity() const {
    int count = 0;
    LevelBounds b1 = eta1();
    for (int e1 = b1.lo; e1 <= b1.hi; ++e1) {
        LevelBounds b2 = eta2(e1);
        for (int e2 = b2.lo; e2 <= b2.hi; ++e2) count += eta3(e1, e2).width();
    }
    return count;
}

std::vector<EtaLabels> Su4Bounds::labels() const {
    std::vector<EtaLabels> out;
    LevelBounds b1 = eta1();
    for (int e1 = b1.lo; e1 <= b1.hi; ++e1) {
        LevelBounds b2 = eta2(e1);
        for (int e2 = b2.lo; e2 <= b2.hi; ++e2) {
            LevelBounds b3 = eta3(e1, e2);
            for (int e3 = b3.lo; e3 <= b3.hi; ++e3) out.push_back(EtaLabels{{e1, e2, e3}});
        }
    }
    return out;
}

Su4Bounds su4_bounds(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return Su4Bounds(lambda, mu, nu);
}

int su4_multiplicity(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return Su4Bounds(lambda, mu, nu).multiplicity();
}

std::vector<EtaLabels> su4_eta_labels(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return Su4Bounds(lambda, mu, nu).labels();
}

EtaLabels eta_from_filling(const LRFilling& f, int n) {
    auto count_in_row = [&](int row, int symbol) {
        if (row >= static_cast<int>(f.symbols.size())) return 0;
        int c = 0;
        for (int s : f.symbols[static_cast<std::size_t>(row)])
            if (s == symbol) ++c;
        return c;
    };
    if (n == 3) return EtaLabels{{count_in_row(1, 2)}};
    if (n == 4) return EtaLabels{{count_in_row(1, 2), count_in_row(2, 3), count_in_row(3, 2)}};
    throw std::invalid_argument("label readout is defined for n = 3 and n = 4 only");
}

} // namespace lrkron
