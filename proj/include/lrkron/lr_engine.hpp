#pragma once

#include "lrkron/eta_labels.hpp"
#include "lrkron/partition.hpp"
#include "lrkron/tableau.hpp"

#include <cstdint>
#include <vector>

namespace lrkron {

/**
 Enumerates every filling of `lambda` by the symbol content `mu` inside at
 most n rows: symbols are added species by species as horizontal strips (no
 two equal symbols in a column, every intermediate shape a diagram) with the
 lattice-word condition enforced incrementally on the running prefix.
 Ordered by outer shape lexicographically descending, then symbols ascending.
 */
std::vector<LRFilling> lr_fillings(const Partition& lambda, const Partition& mu, int n);

/// Same enumeration restricted to one outer shape.
std::vector<LRFilling> lr_fillings_to(const Partition& lambda, const Partition& mu,
                                      const Partition& nu, int n);

struct DecompositionTerm {
    Partition nu;
    int multiplicity = 0;
    std::vector<LRFilling> fillings; // one per multiplicity instance (engine output)
    std::vector<EtaLabels> labels;   // attached for reduced inputs when n is 3 or 4
};

struct Decomposition {
    Partition lambda;
    Partition mu;
    int n = 0;
    std::vector<DecompositionTerm> terms; // outer shapes lexicographically descending

    const DecompositionTerm* find(const Partition& nu) const;
    int multiplicity_of(const Partition& nu) const;
    /// Sum of multiplicity * dimension(nu, n) over all terms, checked.
    std::uint64_t total_dimension() const;
};

/// Full product decomposition with one filling kept per multiplicity
/// instance. Inputs are taken as given (no equivalence reduction here); eta
/// labels are attached when n is 3 or 4 and both inputs are already reduced.
Decomposition decompose(const Partition& lambda, const Partition& mu, int n);

/// Number of fillings with outer shape nu; 0 when box counts do not match.
int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu, int n);

} // namespace lrkron
