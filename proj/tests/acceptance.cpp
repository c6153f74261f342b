// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include "lrkron/closed_form.hpp"
#include "lrkron/complement.hpp"
#include "lrkron/json_io.hpp"
#include "lrkron/lr_engine.hpp"
#include "lrkron/sweep.hpp"

#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

using namespace lrkron;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::cout << "criterion " << id << " [" << (pass ? "PASS" : "FAIL") << "] " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!pass) ++failures;
}

std::vector<Su3Dynkin> dynkin_labels_up_to(int boxes) {
    std::vector<Su3Dynkin> out;
    for (int total = 0; total <= boxes; ++total)
        for (int mu = 0; 2 * mu <= total; ++mu) out.push_back(Su3Dynkin{total - 2 * mu, mu});
    return out;
}

std::vector<Partition> partitions_up_to(int boxes, int max_rows) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        out.push_back(Partition(cur));
        if (remaining == 0 || static_cast<int>(cur.size()) == max_rows) return;
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, boxes, boxes);
    return out;
}

std::map<Partition, int> multiplicity_map(const Decomposition& d, int max_rows) {
    std::map<Partition, int> m;
    for (const auto& t : d.terms)
        if (t.nu.rows() <= max_rows) m[t.nu] = t.multiplicity;
    return m;
}

GelfandPattern random_pattern(std::mt19937& rng, int n, int max_boxes) {
    int remaining = static_cast<int>(rng() % (max_boxes + 1));
    std::vector<int> top_rows;
    int cap = remaining;
    for (int r = 0; r < n && remaining > 0 && cap > 0; ++r) {
        int v = static_cast<int>(rng() % (std::min(cap, remaining) + 1));
        if (v == 0) break;
        top_rows.push_back(v);
        remaining -= v;
        cap = v;
    }
    std::vector<std::vector<int>> rows;
    rows.push_back(Partition(top_rows).padded(n));
    for (int k = n - 1; k >= 1; --k) {
        const auto& upper = rows.back();
        std::vector<int> lower(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            int lo = upper[static_cast<std::size_t>(i + 1)], hi = upper[static_cast<std::size_t>(i)];
            lower[static_cast<std::size_t>(i)] = lo + static_cast<int>(rng() % (hi - lo + 1));
        }
        rows.push_back(std::move(lower));
    }
    return GelfandPattern(std::move(rows));
}

// ---- criteria ----

void criterion_1() {
    Timer t;
    int oracle = lr_coefficient(Partition{3, 1}, Partition{3, 1}, Partition{4, 2, 2}, 3);
    int formula = su3_multiplicity(Su3Dynkin{2, 1}, Su3Dynkin{2, 1}, Partition{4, 2, 2});
    std::ostringstream detail;
    detail << "oracle=" << oracle << " formula=" << formula << ", " << t.seconds() << "s";
    report(1, "[4,2,2] occurs exactly once in [3,1]x[3,1]",
           oracle == 1 && formula == 1 && t.seconds() < 1.0, detail.str());
}

SweepStats criterion_2() {
    SweepConfig cfg;
    cfg.group = SweepGroup::Su3;
    cfg.max_boxes = 12;
    cfg.parallelism = 1;
    SweepStats stats = run_sweep(cfg);
    std::ostringstream detail;
    detail << "pairs=" << stats.pairs << " terms=" << stats.terms
           << " multiplicity_mismatches=" << stats.multiplicity_mismatches
           << " multiset_mismatches=" << stats.multiset_mismatches << ", " << stats.seconds << "s";
    report(2, "SU(3) formula sweep to 12 boxes is clean",
           stats.multiplicity_mismatches == 0 && stats.multiset_mismatches == 0 &&
               stats.seconds <= 60.0,
           detail.str());
    return stats;
}

SweepStats criterion_3() {
    SweepConfig cfg;
    cfg.group = SweepGroup::Su4;
    cfg.max_boxes = 10;
    cfg.parallelism = 1;
    SweepStats stats = run_sweep(cfg);
    bool localized = true;
    for (const auto& rec : stats.records) {
        const std::string kind = rec.bounds.value("kind", "");
        if ((kind == "multiplicity" || kind == "labels") &&
            (!rec.bounds.contains("implicated") || rec.bounds["implicated"].empty()))
            localized = false;
    }
    std::ostringstream detail;
    detail << "pairs=" << stats.pairs << " terms=" << stats.terms
           << " multiplicity_mismatches=" << stats.multiplicity_mismatches
           << " multiset_mismatches=" << stats.multiset_mismatches
           << " localized=" << (localized ? "yes" : "no") << ", " << stats.seconds << "s";
    report(3, "SU(4) formula sweep to 10 boxes completes with localized findings",
           localized && stats.seconds <= 300.0, detail.str());
    return stats;
}

void criterion_4(const SweepStats& su3, const SweepStats& su4) {
    long failures_seen = su3.dimension_failures + su4.dimension_failures;
    long checked = 0;
    for (int n = 2; n <= 5; ++n) {
        auto factors = partitions_up_to(12, n);
        for (const auto& lam : factors)
            for (const auto& mu : factors) {
                if (lam.boxes() + mu.boxes() > 12) continue;
                Decomposition d = decompose(lam, mu, n);
                if (d.total_dimension() != dimension(lam, n) * dimension(mu, n)) ++failures_seen;
                ++checked;
            }
    }
    std::ostringstream detail;
    detail << "sweep failures=" << su3.dimension_failures + su4.dimension_failures
           << ", rank 2..5 pairs=" << checked;
    report(4, "dimension sum rule holds exactly", failures_seen == 0, detail.str());
}

void criterion_5(const SweepStats& su3, const SweepStats& su4) {
    std::ostringstream detail;
    detail << "label_mismatches=" << su3.label_mismatches + su4.label_mismatches
           << " betweenness_failures=" << su3.betweenness_failures + su4.betweenness_failures;
    report(5, "labels are complete, bijective and interleaving",
           su3.label_mismatches == 0 && su4.label_mismatches == 0 &&
               su3.betweenness_failures == 0 && su4.betweenness_failures == 0,
           detail.str());
}

void criterion_6() {
    std::mt19937 rng(0xBEEF);
    int round_trips = 0;
    bool ok = true;
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        GelfandPattern g = random_pattern(rng, n, 10);
        WeylTableau w = weyl_from_gelfand(g);
        if (!(gelfand_from_weyl(w, n) == g)) ok = false;
        ++round_trips;
    }
    long shapes = 0;
    for (int n = 2; n <= 5; ++n)
        for (const auto& p : partitions_up_to(8, n)) {
            if (count_patterns(p, n) != dimension(p, n)) ok = false;
            ++shapes;
        }
    std::ostringstream detail;
    detail << round_trips << " round trips, " << shapes << " enumeration/dimension checks";
    report(6, "pattern/tableau bijection and dimension oracle", ok, detail.str());
}

void criterion_7() {
    bool ok = true;
    long pairs = 0, label_checks = 0;
    for (const auto& a : dynkin_labels_up_to(12))
        for (const auto& b : dynkin_labels_up_to(12 - (a.lam + 2 * a.mu))) {
            Partition lam = dynkin_to_partition(a), mu = dynkin_to_partition(b);
            Decomposition d3 = decompose(lam, mu, 3);
            Decomposition d4 = decompose(lam, mu, 4);
            Decomposition d5 = decompose(lam, mu, 5);
            if (multiplicity_map(d4, 5) != multiplicity_map(d5, 5)) ok = false;
            if (multiplicity_map(d3, 3) != multiplicity_map(d4, 3)) ok = false;
            ++pairs;

            // two-rowed limit: the triple collapses onto the single label
            for (const auto& term : d3.terms) {
                std::set<int> su3_set;
                for (const auto& l : su3_eta_labels(a, b, term.nu)) su3_set.insert(l.values[0]);
                std::set<int> su4_first;
                for (const auto& l : su4_eta_labels(lam, mu, term.nu)) {
                    if (l.values[1] != 0 || l.values[2] != 0) ok = false;
                    su4_first.insert(l.values[0]);
                }
                if (su3_set != su4_first) ok = false;
                ++label_checks;
            }
        }
    std::ostringstream detail;
    detail << "pairs=" << pairs << " label_checks=" << label_checks;
    report(7, "rank independence and the two-rowed label limit", ok, detail.str());
}

void criterion_8() {
    // Hand-picked instance first: betweenness admits eta = 1 for
    // [2,1] x [1,1] -> [2,2,1] but only eta = 0 is realized.
    Su3Dynkin a{1, 1}, b{0, 1};
    Partition m{2, 2, 1};
    bool hand_ok = make_su3_pattern(a, b, m, 1).betweenness_ok();
    std::set<int> realized;
    for (const auto& f : lr_fillings_to(Partition{2, 1}, Partition{1, 1}, m, 3))
        realized.insert(eta_from_filling(f, 3).values[0]);
    hand_ok = hand_ok && realized == std::set<int>{0};

    // Sweep search: count how many cases admit such unrealized labels.
    long witnesses = 0;
    std::string first_witness;
    for (const auto& da : dynkin_labels_up_to(8))
        for (const auto& db : dynkin_labels_up_to(8 - (da.lam + 2 * da.mu))) {
            Partition lam = dynkin_to_partition(da), mu = dynkin_to_partition(db);
            for (const auto& term : decompose(lam, mu, 3).terms) {
                std::set<int> lr;
                for (const auto& l : term.labels) lr.insert(l.values[0]);
                int span = term.nu.boxes();
                for (int eta = 0; eta <= span; ++eta) {
                    if (!make_su3_pattern(da, db, term.nu, eta).betweenness_ok()) continue;
                    if (lr.count(eta)) continue;
                    ++witnesses;
                    if (first_witness.empty()) {
                        std::ostringstream w;
                        w << lam.to_string() << "x" << mu.to_string() << "->" << term.nu.to_string()
                          << " eta=" << eta;
                        first_witness = w.str();
                    }
                }
            }
        }

    std::ostringstream detail;
    detail << "witnesses=" << witnesses << ", first: " << first_witness;
    report(8, "betweenness alone over-counts (reading-word conditions are necessary)",
           hand_ok && witnesses > 0, detail.str());
}

} // namespace

int main() {
    criterion_1();
    SweepStats su3 = criterion_2();
    SweepStats su4 = criterion_3();
    criterion_4(su3, su4);
    criterion_5(su3, su4);
    criterion_6();
    criterion_7();
    criterion_8();
    return failures;
}
