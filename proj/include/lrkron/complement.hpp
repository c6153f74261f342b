#pragma once

#include "lrkron/closed_form.hpp"
#include "lrkron/eta_labels.hpp"
#include "lrkron/partition.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lrkron {

/**
 Partially specified Gel'fand pattern of the group U(2n-2) whose sublabels
 carry the outer multiplicity. Levels are stored top row first; levels the
 construction leaves free (the intrinsic sublabels of the lower chain) hold
 nullopt and are never synthesized.
 */
struct ComplementaryPattern {
    int group_size = 0;                                  // 2n-2
    std::vector<std::optional<std::vector<int>>> levels; // levels[j] = U(group_size - j) row
    EtaLabels eta;

    /// Betweenness restricted to adjacent pairs of fully specified levels.
    bool betweenness_ok() const;
    const std::optional<std::vector<int>>& level(int k) const; // U(k) row
};

/// Raw constructions, no range or betweenness validation (probing tools).
ComplementaryPattern make_su3_pattern(const Su3Dynkin& a, const Su3Dynkin& b,
                                      const Partition& m, int eta);
ComplementaryPattern make_su4_pattern(const Partition& lambda, const Partition& mu,
                                      const Partition& nu, const EtaLabels& eta);

/// U(4) pattern for the coupled SU(3) state: rows [m,0] / [m1, m2-eta,
/// m3-mu2+eta] / [lam1+mu1, mu1] / free. eta must lie in the su3_bounds
/// window; the result must interleave (a violation signals an inconsistent
/// bound and is reported as std::logic_error).
ComplementaryPattern coupled_pattern_su3(const Su3Dynkin& a, const Su3Dynkin& b,
                                         const Partition& m, int eta);

/// U(6) analogue for SU(4) with the (eta1, eta2, eta3) tuple.
ComplementaryPattern coupled_pattern_su4(const Partition& lambda, const Partition& mu,
                                         const Partition& nu, const EtaLabels& eta);

/// The two uncoupled U(2n-2) symbols: the first factor repeats [lambda, 0...]
/// down to the U(n-1) level; the second factor loses one row per level until
/// it reaches the zero row at U(n-1).
std::pair<ComplementaryPattern, ComplementaryPattern>
uncoupled_patterns(const Partition& lambda, const Partition& mu, int n);

enum class BoundOrigin { Betweenness, Littlewood };

struct BoundClassification {
    std::string bound;
    BoundOrigin origin;
    /// Interleaving-valid tuples that violate this bound (none is realized by
    /// an actual filling when `sound`).
    std::vector<EtaLabels> witnesses;
};

enum class Group { Su3, Su4 };

struct ClassificationReport {
    Group group;
    Partition lambda, mu, nu;
    std::vector<BoundClassification> entries;
    bool sound = true;
};

/**
 Tags every bound argument either Betweenness (implied by interleaving of the
 coupled pattern) or Littlewood (cuts deeper), determined constructively: a
 bound is Littlewood when some integer tuple passes the pattern's betweenness
 check yet violates it. Each such witness is checked against the filling
 enumeration; `sound` records that none is realized.
 */
ClassificationReport classify_bounds(Group group, const Partition& lambda,
                                     const Partition& mu, const Partition& nu);

} // namespace lrkron
