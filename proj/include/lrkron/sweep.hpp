#pragma once

#include "lrkron/json_io.hpp"
#include "lrkron/partition.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace lrkron {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SweepGroup { Su3, Su4, Both };

struct SweepConfig {
    SweepGroup group = SweepGroup::Both;
    int max_boxes = 0;       // cap on total boxes of the factor pair
    bool strict = false;     // callers decide what strict means for exit codes
    std::string output_path; // empty: no report file
    int parallelism = 1;
};

/// One JSON-lines record per mismatch; diagnostics (kind, implicated bound
/// arguments, label sets) ride inside "bounds".
struct DiscrepancyRecord {
    std::string group;
    Partition lambda, mu, nu;
    long long formula = 0;
    long long oracle = 0;
    Json bounds;
};

Json to_json(const DiscrepancyRecord& r);

struct SweepStats {
    long pairs = 0;
    long terms = 0;
    long multiplicity_mismatches = 0; // closed-form count vs filling count
    long multiset_mismatches = 0;     // generator multiset vs oracle decomposition
    long label_mismatches = 0;        // label set/bijectivity failures
    long betweenness_failures = 0;    // coupled patterns that fail to interleave
    long dimension_failures = 0;      // dimension sum-rule violations
    std::size_t discarded_tuples = 0; // generator shapes rejected as non-partitions
    double seconds = 0;
    std::vector<DiscrepancyRecord> records;

    long total_mismatches() const {
        return multiplicity_mismatches + multiset_mismatches + label_mismatches +
               betweenness_failures + dimension_failures;
    }
};

/**
 Compares the closed-form machinery against the filling enumeration over every
 reduced factor pair within the box budget: decomposition multisets, per-shape
 multiplicities, label sets and bijectivity, coupled-pattern betweenness, and
 the dimension sum rule. Pairs are distributed over `parallelism` workers;
 the record order is the canonical pair order regardless of worker count.
 Writes a JSON-lines report to `output_path` when set (io_error on failure).
 */
SweepStats run_sweep(const SweepConfig& cfg);

} // namespace lrkron
