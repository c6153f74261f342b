#include "lrkron/sweep.hpp"

#include "lrkron/closed_form.hpp"
#include "lrkron/complement.hpp"
#include "lrkron/lr_engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <set>
#include <thread>

namespace lrkron {

Json to_json(const DiscrepancyRecord& r) {
    Json j;
    j["group"] = r.group;
    j["lambda"] = to_json(r.lambda);
    j["mu"] = to_json(r.mu);
    j["nu"] = to_json(r.nu);
    j["formula"] = r.formula;
    j["oracle"] = r.oracle;
    j["bounds"] = r.bounds;
    return j;
}

namespace {

struct PairTask {
    bool su3 = false;
    Partition lambda, mu;
};

struct PairResult {
    long terms = 0;
    long multiplicity_mismatches = 0;
    long multiset_mismatches = 0;
    long label_mismatches = 0;
    long betweenness_failures = 0;
    long dimension_failures = 0;
    std::size_t discarded_tuples = 0;
    std::vector<DiscrepancyRecord> records;
};

Json labels_json(const std::vector<EtaLabels>& labels) {
    Json j = Json::array();
    for (const auto& l : labels) j.push_back(Json(l.values));
    return j;
}

Json su3_args_json(const Su3Bounds& b) {
    Json j;
    j["eta_min"] = b.eta_min;
    j["eta_max"] = b.eta_max;
    Json mins = Json::object(), maxs = Json::object();
    for (const auto& a : b.min_args) mins[a.name] = a.value;
    for (const auto& a : b.max_args) maxs[a.name] = a.value;
    j["min_args"] = std::move(mins);
    j["max_args"] = std::move(maxs);
    return j;
}

// Names of the bound arguments a label tuple violates. A formula undercount
// shows up as realized tuples outside the window; the violated arguments
// localize the faulty term.
std::vector<std::string> su3_violations(const Su3Bounds& b, int eta) {
    std::vector<std::string> out;
    for (const auto& a : b.min_args)
        if (eta < a.value) out.push_back(std::string("eta_min.") + a.name);
    for (const auto& a : b.max_args)
        if (eta > a.value) out.push_back(std::string("eta_max.") + a.name);
    return out;
}

std::vector<std::string> su4_violations(const Su4Bounds& b, const EtaLabels& t) {
    const int e1 = t.values[0], e2 = t.values[1], e3 = t.values[2];
    std::vector<std::string> out;
    auto level = [&](const LevelBounds& lb, int value, const char* prefix_min, const char* prefix_max) {
        for (const auto& a : lb.lo_args)
            if (value < a.value) out.push_back(std::string(prefix_min) + a.name);
        for (const auto& a : lb.hi_args)
            if (value > a.value) out.push_back(std::string(prefix_max) + a.name);
    };
    level(b.eta1(), e1, "eta1_min.", "eta1_max.");
    level(b.eta2(e1), e2, "eta2_min.", "eta2_max.");
    level(b.eta3(e1, e2), e3, "eta3_min.", "eta3_max.");
    return out;
}

// Shared comparison for one result shape: formula multiplicity and labels
// against the filling enumeration, plus coupled-pattern betweenness.
template <typename BoundsDiag, typename Violations, typename MakePattern>
void check_term(PairResult& res, const char* group, const Partition& lambda, const Partition& mu,
                const Partition& nu, int formula_mult, const std::vector<EtaLabels>& formula_labels,
                const std::vector<EtaLabels>& realized_raw, BoundsDiag&& bounds_diag,
                Violations&& violations, MakePattern&& make_pattern) {
    ++res.terms;
    std::vector<EtaLabels> realized = realized_raw;
    std::sort(realized.begin(), realized.end());
    const int oracle_mult = static_cast<int>(realized.size());

    bool distinct = std::adjacent_find(realized.begin(), realized.end()) == realized.end();

    std::vector<EtaLabels> missing, extra;
    std::set_difference(realized.begin(), realized.end(), formula_labels.begin(),
                        formula_labels.end(), std::back_inserter(missing));
    std::set_difference(formula_labels.begin(), formula_labels.end(), realized.begin(),
                        realized.end(), std::back_inserter(extra));

    auto implicated = [&] {
        std::set<std::string> names;
        for (const auto& t : missing)
            for (auto& v : violations(t)) names.insert(std::move(v));
        if (!extra.empty()) names.insert("missing-constraint");
        Json j = Json::array();
        for (const auto& nm : names) j.push_back(nm);
        return j;
    };

    if (formula_mult != oracle_mult) {
        ++res.multiplicity_mismatches;
        DiscrepancyRecord rec{group, lambda, mu, nu, formula_mult, oracle_mult, Json::object()};
        rec.bounds = bounds_diag();
        rec.bounds["kind"] = "multiplicity";
        rec.bounds["implicated"] = implicated();
        rec.bounds["missing"] = labels_json(missing);
        rec.bounds["extra"] = labels_json(extra);
        res.records.push_back(std::move(rec));
    }

    if (!missing.empty() || !extra.empty() || !distinct ||
        static_cast<int>(formula_labels.size()) != formula_mult) {
        ++res.label_mismatches;
        DiscrepancyRecord rec{group, lambda, mu, nu,
                              static_cast<long long>(formula_labels.size()),
                              static_cast<long long>(realized.size()), Json::object()};
        rec.bounds = bounds_diag();
        rec.bounds["kind"] = "labels";
        rec.bounds["implicated"] = implicated();
        rec.bounds["missing"] = labels_json(missing);
        rec.bounds["extra"] = labels_json(extra);
        rec.bounds["distinct"] = distinct;
        res.records.push_back(std::move(rec));
    }

    for (const auto& t : realized) {
        ComplementaryPattern p = make_pattern(t);
        if (!p.betweenness_ok()) {
            ++res.betweenness_failures;
            DiscrepancyRecord rec{group, lambda, mu, nu, 0, 1, Json::object()};
            rec.bounds["kind"] = "betweenness";
            rec.bounds["eta"] = Json(t.values);
            rec.bounds["pattern"] = to_json(p)["levels"];
            res.records.push_back(std::move(rec));
        }
    }
}

void check_multiset(PairResult& res, const char* group, const Decomposition& oracle,
                    const Decomposition& generated) {
    // Both term lists are sorted descending by shape; compare as maps.
    auto describe = [&](const Partition& nu, int gen_count, int lr_count) {
        ++res.multiset_mismatches;
        DiscrepancyRecord rec{group, oracle.lambda, oracle.mu, nu, gen_count, lr_count, Json::object()};
        rec.bounds["kind"] = "multiset";
        res.records.push_back(std::move(rec));
    };
    std::size_t i = 0, k = 0;
    while (i < oracle.terms.size() || k < generated.terms.size()) {
        if (k == generated.terms.size() ||
            (i < oracle.terms.size() && oracle.terms[i].nu > generated.terms[k].nu)) {
            describe(oracle.terms[i].nu, 0, oracle.terms[i].multiplicity);
            ++i;
        } else if (i == oracle.terms.size() || generated.terms[k].nu > oracle.terms[i].nu) {
            describe(generated.terms[k].nu, generated.terms[k].multiplicity, 0);
            ++k;
        } else {
            if (oracle.terms[i].multiplicity != generated.terms[k].multiplicity)
                describe(oracle.terms[i].nu, generated.terms[k].multiplicity,
                         oracle.terms[i].multiplicity);
            ++i;
            ++k;
        }
    }
}

void check_dimension(PairResult& res, const char* group, const Decomposition& oracle) {
    unsigned __int128 sum = 0;
    for (const auto& t : oracle.terms)
        sum += static_cast<unsigned __int128>(t.multiplicity) * dimension(t.nu, oracle.n);
    unsigned __int128 product = static_cast<unsigned __int128>(dimension(oracle.lambda, oracle.n)) *
                                dimension(oracle.mu, oracle.n);
    if (sum != product) {
        ++res.dimension_failures;
        DiscrepancyRecord rec{group, oracle.lambda, oracle.mu, Partition{},
                              static_cast<long long>(sum), static_cast<long long>(product),
                              Json::object()};
        rec.bounds["kind"] = "dimension";
        res.records.push_back(std::move(rec));
    }
}

// Shapes either side mentions: a generated-only shape still gets a full term
// check (against an empty filling set) so that every mismatch is localized.
std::vector<const Partition*> shape_union(const Decomposition& oracle,
                                          const Decomposition& generated) {
    std::vector<const Partition*> shapes;
    std::size_t i = 0, k = 0;
    while (i < oracle.terms.size() || k < generated.terms.size()) {
        if (k == generated.terms.size()) {
            shapes.push_back(&oracle.terms[i++].nu);
        } else if (i == oracle.terms.size()) {
            shapes.push_back(&generated.terms[k++].nu);
        } else if (oracle.terms[i].nu == generated.terms[k].nu) {
            shapes.push_back(&oracle.terms[i].nu);
            ++i;
            ++k;
        } else if (oracle.terms[i].nu > generated.terms[k].nu) {
            shapes.push_back(&oracle.terms[i++].nu);
        } else {
            shapes.push_back(&generated.terms[k++].nu);
        }
    }
    return shapes;
}

PairResult check_su3_pair(const Partition& lambda, const Partition& mu) {
    PairResult res;
    const Su3Dynkin a = partition_to_dynkin(lambda);
    const Su3Dynkin b = partition_to_dynkin(mu);

    Decomposition oracle = decompose(lambda, mu, 3);
    GeneratedDecomposition generated = su3_decompose_sum(a, b);
    res.discarded_tuples += generated.discarded;

    check_multiset(res, "SU3", oracle, generated.decomposition);
    const std::vector<EtaLabels> no_labels;
    for (const Partition* nu : shape_union(oracle, generated.decomposition)) {
        const DecompositionTerm* term = oracle.find(*nu);
        Su3Bounds bounds = su3_bounds(a, b, *nu);
        check_term(
            res, "SU3", lambda, mu, *nu, bounds.multiplicity(), su3_eta_labels(a, b, *nu),
            term ? term->labels : no_labels, [&] { return su3_args_json(bounds); },
            [&](const EtaLabels& t) { return su3_violations(bounds, t.values[0]); },
            [&](const EtaLabels& t) { return make_su3_pattern(a, b, *nu, t.values[0]); });
    }
    check_dimension(res, "SU3", oracle);
    return res;
}

PairResult check_su4_pair(const Partition& lambda, const Partition& mu) {
    PairResult res;

    Decomposition oracle = decompose(lambda, mu, 4);
    GeneratedDecomposition generated = su4_decompose_sum(lambda, mu);
    res.discarded_tuples += generated.discarded;

    check_multiset(res, "SU4", oracle, generated.decomposition);
    const std::vector<EtaLabels> no_labels;
    for (const Partition* nu : shape_union(oracle, generated.decomposition)) {
        const DecompositionTerm* term = oracle.find(*nu);
        Su4Bounds bounds = su4_bounds(lambda, mu, *nu);
        auto diag = [&] {
            Json j;
            LevelBounds b1 = bounds.eta1();
            j["eta1"] = Json{{"lo", b1.lo}, {"hi", b1.hi}};
            return j;
        };
        check_term(
            res, "SU4", lambda, mu, *nu, bounds.multiplicity(), bounds.labels(),
            term ? term->labels : no_labels, diag,
            [&](const EtaLabels& t) { return su4_violations(bounds, t); },
            [&](const EtaLabels& t) { return make_su4_pattern(lambda, mu, *nu, t); });
    }
    check_dimension(res, "SU4", oracle);
    return res;
}

void partitions_up_to_rows(int total, int max_rows, int max_part, std::vector<int>& cur,
                           std::vector<Partition>& out) {
    if (total == 0) {
        out.push_back(Partition(cur));
        return;
    }
    if (max_rows == 0) return;
    for (int part = std::min(total, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_up_to_rows(total - part, max_rows - 1, part, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions_of(int total, int max_rows) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_up_to_rows(total, max_rows, total, cur, out);
    return out;
}

std::vector<PairTask> build_tasks(const SweepConfig& cfg) {
    std::vector<PairTask> tasks;
    if (cfg.group == SweepGroup::Su3 || cfg.group == SweepGroup::Both) {
        // Reduced SU(3) irreps (lam, mu) carry lam + 2 mu boxes.
        for (int ta = 0; ta <= cfg.max_boxes; ++ta)
            for (int mu1 = 0; 2 * mu1 <= ta; ++mu1)
                for (int tb = 0; tb + ta <= cfg.max_boxes; ++tb)
                    for (int mu2 = 0; 2 * mu2 <= tb; ++mu2)
                        tasks.push_back(PairTask{
                            true, dynkin_to_partition(Su3Dynkin{ta - 2 * mu1, mu1}),
                            dynkin_to_partition(Su3Dynkin{tb - 2 * mu2, mu2})});
    }
    if (cfg.group == SweepGroup::Su4 || cfg.group == SweepGroup::Both) {
        for (int ta = 0; ta <= cfg.max_boxes; ++ta)
            for (const auto& lam : partitions_of(ta, 3))
                for (int tb = 0; tb + ta <= cfg.max_boxes; ++tb)
                    for (const auto& mu : partitions_of(tb, 3))
                        tasks.push_back(PairTask{false, lam, mu});
    }
    return tasks;
}

} // namespace

SweepStats run_sweep(const SweepConfig& cfg) {
    if (cfg.max_boxes < 0) throw std::invalid_argument("max_boxes must be nonnegative");
    if (cfg.parallelism < 1) throw std::invalid_argument("parallelism must be at least 1");

    const auto started = std::chrono::steady_clock::now();
    const std::vector<PairTask> tasks = build_tasks(cfg);
    std::vector<PairResult> results(tasks.size());

    auto run_task = [&](std::size_t i) {
        results[i] = tasks[i].su3 ? check_su3_pair(tasks[i].lambda, tasks[i].mu)
                                  : check_su4_pair(tasks[i].lambda, tasks[i].mu);
    };

    if (cfg.parallelism == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> workers;
        for (int w = 0; w < cfg.parallelism; ++w)
            workers.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= tasks.size()) return;
                    run_task(i);
                }
            });
        for (auto& t : workers) t.join();
    }

    SweepStats stats;
    stats.pairs = static_cast<long>(tasks.size());
    for (auto& res : results) {
        stats.terms += res.terms;
        stats.multiplicity_mismatches += res.multiplicity_mismatches;
        stats.multiset_mismatches += res.multiset_mismatches;
        stats.label_mismatches += res.label_mismatches;
        stats.betweenness_failures += res.betweenness_failures;
        stats.dimension_failures += res.dimension_failures;
        stats.discarded_tuples += res.discarded_tuples;
        for (auto& rec : res.records) stats.records.push_back(std::move(rec));
    }
    stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    if (!cfg.output_path.empty()) {
        std::ofstream out(cfg.output_path, std::ios::binary);
        if (!out) throw io_error("cannot open report file: " + cfg.output_path);
        for (const auto& rec : stats.records) out << to_json(rec).dump() << '\n';
        if (!out) throw io_error("failed writing report file: " + cfg.output_path);
    }
    return stats;
}

} // namespace lrkron
