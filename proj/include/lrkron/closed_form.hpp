#pragma once

#include "lrkron/eta_labels.hpp"
#include "lrkron/lr_engine.hpp"
#include "lrkron/partition.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace lrkron {

/// One named argument of a min()/max() bound list.
struct BoundArg {
    const char* name;
    int value;
};

/**
 Window for the SU(3) label eta in the coupling (lam1 mu1) x (lam2 mu2) -> m.
 Every argument of the two bound lists is kept individually addressable so
 that a mismatch can be pinned on a specific term.
 */
struct Su3Bounds {
    int eta_min = 0;
    int eta_max = -1;
    std::array<BoundArg, 3> min_args{};
    std::array<BoundArg, 6> max_args{};

    int multiplicity() const { return eta_max >= eta_min ? eta_max - eta_min + 1 : 0; }
};

Su3Bounds su3_bounds(const Su3Dynkin& a, const Su3Dynkin& b, const Partition& m);
int su3_multiplicity(const Su3Dynkin& a, const Su3Dynkin& b, const Partition& m);
/// [eta_min, eta_min+1, ..., eta_max]; empty when the window is empty.
std::vector<EtaLabels> su3_eta_labels(const Su3Dynkin& a, const Su3Dynkin& b, const Partition& m);

/// Decomposition produced by a closed-form generator. `discarded` counts
/// emitted shapes rejected for not being weakly decreasing (expected 0).
struct GeneratedDecomposition {
    Decomposition decomposition;
    std::size_t discarded = 0;
};

/// Quintuple-sum generator for (lam1 mu1) x (lam2 mu2) over SU(3).
GeneratedDecomposition su3_decompose_sum(const Su3Dynkin& a, const Su3Dynkin& b);

/// Nine-index generator for [l1 l2 l3] x [m1 m2 m3] over SU(4).
GeneratedDecomposition su4_decompose_sum(const Partition& lambda, const Partition& mu);

struct LevelBounds {
    int lo = 0;
    int hi = -1;
    std::vector<BoundArg> lo_args;
    std::vector<BoundArg> hi_args;

    int width() const { return hi >= lo ? hi - lo + 1 : 0; }
    bool contains(int v) const { return v >= lo && v <= hi; }
};

/**
 Nested label windows for SU(4): eta1 free, eta2 conditioned on eta1, eta3 on
 both. The multiplicity is the number of tuples the three windows admit.
 */
class Su4Bounds {
public:
    Su4Bounds(const Partition& lambda, const Partition& mu, const Partition& nu);

    LevelBounds eta1() const;
    LevelBounds eta2(int eta1) const;
    LevelBounds eta3(int eta1, int eta2) const;

    int multiplicity() const;
    std::vector<EtaLabels> labels() const;

private:
    std::vector<int> lam_, mu_, nu_; // padded to 3, 3, 4
};

Su4Bounds su4_bounds(const Partition& lambda, const Partition& mu, const Partition& nu);
int su4_multiplicity(const Partition& lambda, const Partition& mu, const Partition& nu);
std::vector<EtaLabels> su4_eta_labels(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Reads the label tuple off a filling: for n=3 the count of symbol 2 in
/// row 2; for n=4 the tuple (symbol 2 in row 2, symbol 3 in row 3, symbol 2
/// in row 4). Rows are 1-based; n must be 3 or 4.
EtaLabels eta_from_filling(const LRFilling& f, int n);

} // namespace lrkron
