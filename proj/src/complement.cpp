#include "lrkron/complement.hpp"

#include "lrkron/lr_engine.hpp"

#include <algorithm>
#include <set>

namespace lrkron {

bool ComplementaryPattern::betweenness_ok() const {
    for (std::size_t j = 0; j + 1 < levels.size(); ++j) {
        if (!levels[j] || !levels[j + 1]) continue;
        const auto& upper = *levels[j];
        const auto& lower = *levels[j + 1];
        for (std::size_t i = 0; i < lower.size(); ++i)
            if (upper[i] < lower[i] || lower[i] < upper[i + 1]) return false;
    }
    return true;
}

const std::optional<std::vector<int>>& ComplementaryPattern::level(int k) const {
    if (k < 1 || k > group_size) throw std::out_of_range("no such level");
    return levels[static_cast<std::size_t>(group_size - k)];
}

ComplementaryPattern make_su3_pattern(const Su3Dynkin& a, const Su3Dynkin& b,
                                      const Partition& m, int eta) {
    ComplementaryPattern p;
    p.group_size = 4;
    p.eta = EtaLabels{{eta}};
    p.levels.resize(4);
    p.levels[0] = m.padded(4);
    p.levels[1] = std::vector<int>{m.row(0), m.row(1) - eta, m.row(2) - b.mu + eta};
    p.levels[2] = std::vector<int>{a.lam + a.mu, a.mu};
    // U(1) holds the intrinsic sublabel: unconstrained.
    return p;
}

ComplementaryPattern make_su4_pattern(const Partition& lambda, const Partition& mu,
                                      const Partition& nu, const EtaLabels& eta) {
    if (eta.values.size() != 3)
        throw std::invalid_argument("SU(4) labels are triples");
    const int e1 = eta.values[0], e2 = eta.values[1], e3 = eta.values[2];
    const auto l = lambda.padded(3);
    const auto m = mu.padded(3);
    const auto v = nu.padded(4);

    ComplementaryPattern p;
    p.group_size = 6;
    p.eta = eta;
    p.levels.resize(6);
    p.levels[0] = nu.padded(6);
    p.levels[1] = std::vector<int>{v[0], v[1], v[2] - e2, v[3] - m[2] + e2, 0};
    p.levels[2] = std::vector<int>{v[0], v[1] - e1, v[2] - m[1] + e1 + e3 - e2, v[3] - m[2] + e2 - e3};
    p.levels[3] = std::vector<int>{l[0], l[1], l[2]};
    // U(2) and U(1) hold the intrinsic sublabels: unconstrained.
    return p;
}

ComplementaryPattern coupled_pattern_su3(const Su3Dynkin& a, const Su3Dynkin& b,
                                         const Partition& m, int eta) {
    Su3Bounds bounds = su3_bounds(a, b, m);
    if (eta < bounds.eta_min || eta > bounds.eta_max)
        throw std::out_of_range("eta = " + std::to_string(eta) + " outside [" +
                                std::to_string(bounds.eta_min) + ", " +
                                std::to_string(bounds.eta_max) + "]");
    ComplementaryPattern p = make_su3_pattern(a, b, m, eta);
    if (!p.betweenness_ok())
        throw std::logic_error("in-window eta produced a non-interleaving pattern");
    return p;
}

ComplementaryPattern coupled_pattern_su4(const Partition& lambda, const Partition& mu,
                                         const Partition& nu, const EtaLabels& eta) {
    if (eta.values.size() != 3)
        throw std::invalid_argument("SU(4) labels are triples");
    Su4Bounds bounds = su4_bounds(lambda, mu, nu);
    const int e1 = eta.values[0], e2 = eta.values[1], e3 = eta.values[2];
    if (!bounds.eta1().contains(e1) || !bounds.eta2(e1).contains(e2) ||
        !bounds.eta3(e1, e2).contains(e3))
        throw std::out_of_range("label tuple " + eta.to_string() + " outside the nested windows");
    ComplementaryPattern p = make_su4_pattern(lambda, mu, nu, eta);
    if (!p.betweenness_ok())
        throw std::logic_error("in-window labels produced a non-interleaving pattern");
    return p;
}

std::pair<ComplementaryPattern, ComplementaryPattern>
uncoupled_patterns(const Partition& lambda, const Partition& mu, int n) {
    if (n < 3) throw std::invalid_argument("complement construction needs n >= 3");
    if (lambda.rows() > n - 1 || mu.rows() > n - 1)
        throw std::invalid_argument("factors must be reduced (at most n-1 rows)");
    const int size = 2 * n - 2;

    ComplementaryPattern first;
    first.group_size = size;
    first.eta = EtaLabels{{}};
    first.levels.resize(static_cast<std::size_t>(size));
    for (int level = size; level >= n - 1; --level)
        first.levels[static_cast<std::size_t>(size - level)] = lambda.padded(level);

    ComplementaryPattern second;
    second.group_size = size;
    second.eta = EtaLabels{{}};
    second.levels.resize(static_cast<std::size_t>(size));
    for (int level = size; level >= n - 1; --level) {
        int keep = level - (n - 1); // rows of mu surviving at this level
        std::vector<int> row(static_cast<std::size_t>(level), 0);
        for (int i = 0; i < keep && i < n - 1; ++i) row[static_cast<std::size_t>(i)] = mu.row(i);
        second.levels[static_cast<std::size_t>(size - level)] = std::move(row);
    }
    return {std::move(first), std::move(second)};
}

namespace {

// A probed label tuple together with the interleaving verdict of its pattern,
// and the bound-argument values at that tuple (arguments can depend on the
// lower-level labels, so they are evaluated per tuple).
struct Probe {
    EtaLabels tuple;
    bool interleaves = false;
    std::vector<std::vector<int>> min_values; // per level, per argument
    std::vector<std::vector<int>> max_values;
};

void classify_level(ClassificationReport& report, const std::vector<Probe>& probes,
                    const std::set<EtaLabels>& realized, const std::string& prefix,
                    const std::vector<const char*>& names, bool is_max, int level,
                    std::size_t level_index) {
    for (std::size_t ai = 0; ai < names.size(); ++ai) {
        BoundClassification entry;
        entry.bound = prefix + names[ai];
        entry.origin = BoundOrigin::Betweenness;
        for (const auto& probe : probes) {
            if (!probe.interleaves) continue;
            int label = probe.tuple.values[static_cast<std::size_t>(level)];
            int bound = (is_max ? probe.max_values : probe.min_values)[level_index][ai];
            bool ok = is_max ? label <= bound : label >= bound;
            if (!ok) {
                entry.origin = BoundOrigin::Littlewood;
                entry.witnesses.push_back(probe.tuple);
                if (realized.count(probe.tuple)) report.sound = false;
            }
        }
        report.entries.push_back(std::move(entry));
    }
}

} // namespace

ClassificationReport classify_bounds(Group group, const Partition& lambda,
                                     const Partition& mu, const Partition& nu) {
    ClassificationReport report;
    report.group = group;
    report.lambda = lambda;
    report.mu = mu;
    report.nu = nu;

    if (group == Group::Su3) {
        Su3Dynkin a = partition_to_dynkin(lambda);
        Su3Dynkin b = partition_to_dynkin(mu);
        Su3Bounds bounds = su3_bounds(a, b, nu);

        std::set<EtaLabels> realized;
        for (const auto& f : lr_fillings_to(lambda, mu, nu, 3))
            realized.insert(eta_from_filling(f, 3));

        int lo = 0, hi = 0;
        for (const auto& arg : bounds.min_args) lo = std::min(lo, arg.value);
        for (const auto& arg : bounds.max_args) hi = std::max(hi, arg.value);

        std::vector<Probe> probes;
        for (int eta = lo - 1; eta <= hi + 1; ++eta) {
            Probe p;
            p.tuple = EtaLabels{{eta}};
            p.interleaves = make_su3_pattern(a, b, nu, eta).betweenness_ok();
            p.min_values = {{bounds.min_args[0].value, bounds.min_args[1].value, bounds.min_args[2].value}};
            p.max_values = {{bounds.max_args[0].value, bounds.max_args[1].value, bounds.max_args[2].value,
                             bounds.max_args[3].value, bounds.max_args[4].value, bounds.max_args[5].value}};
            probes.push_back(std::move(p));
        }

        std::vector<const char*> min_names, max_names;
        for (const auto& arg : bounds.min_args) min_names.push_back(arg.name);
        for (const auto& arg : bounds.max_args) max_names.push_back(arg.name);
        classify_level(report, probes, realized, "eta_min.", min_names, false, 0, 0);
        classify_level(report, probes, realized, "eta_max.", max_names, true, 0, 0);
        return report;
    }

    Su4Bounds bounds = su4_bounds(lambda, mu, nu);
    std::set<EtaLabels> realized;
    for (const auto& f : lr_fillings_to(lambda, mu, nu, 4))
        realized.insert(eta_from_filling(f, 4));

    // Every interleaving tuple is componentwise within [0, |nu|]; pad a little.
    const int span = nu.boxes() + 1;
    std::vector<Probe> probes;
    std::vector<std::vector<const char*>> min_names(3), max_names(3);
    for (int e1 = -1; e1 <= span; ++e1)
        for (int e2 = -1; e2 <= span; ++e2)
            for (int e3 = -1; e3 <= span; ++e3) {
                EtaLabels tuple{{e1, e2, e3}};
                Probe p;
                p.tuple = tuple;
                p.interleaves = make_su4_pattern(lambda, mu, nu, tuple).betweenness_ok();
                LevelBounds b1 = bounds.eta1();
                LevelBounds b2 = bounds.eta2(e1);
                LevelBounds b3 = bounds.eta3(e1, e2);
                for (int level = 0; level < 3; ++level) {
                    const LevelBounds& b = level == 0 ? b1 : level == 1 ? b2 : b3;
                    std::vector<int> mins, maxs;
                    for (const auto& arg : b.lo_args) mins.push_back(arg.value);
                    for (const auto& arg : b.hi_args) maxs.push_back(arg.value);
                    p.min_values.push_back(std::move(mins));
                    p.max_values.push_back(std::move(maxs));
                    if (probes.empty()) {
                        for (const auto& arg : b.lo_args) min_names[static_cast<std::size_t>(level)].push_back(arg.name);
                        for (const auto& arg : b.hi_args) max_names[static_cast<std::size_t>(level)].push_back(arg.name);
                    }
                }
                probes.push_back(std::move(p));
            }

    const char* prefixes[3][2] = {{"eta1_min.", "eta1_max."},
                                  {"eta2_min.", "eta2_max."},
                                  {"eta3_min.", "eta3_max."}};
    for (int level = 0; level < 3; ++level) {
        classify_level(report, probes, realized, prefixes[level][0],
                       min_names[static_cast<std::size_t>(level)], false, level,
                       static_cast<std::size_t>(level));
        classify_level(report, probes, realized, prefixes[level][1],
                       max_names[static_cast<std::size_t>(level)], true, level,
                       static_cast<std::size_t>(level));
    }
    return report;
}

} // namespace lrkron
