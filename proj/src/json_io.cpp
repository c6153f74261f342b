#include "lrkron/json_io.hpp"

namespace lrkron {

Json to_json(const Partition& p) {
    return Json(p.raw());
}

Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition JSON must be an array");
    return Partition(j.get<std::vector<int>>());
}

Json to_json(const GelfandPattern& g) {
    return Json(g.rows());
}

GelfandPattern gelfand_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("pattern JSON must be an array of arrays");
    return GelfandPattern(j.get<std::vector<std::vector<int>>>());
}

Json to_json(const WeylTableau& w) {
    Json j;
    j["shape"] = to_json(w.shape());
    j["rows"] = Json(w.entries());
    return j;
}

WeylTableau weyl_from_json(const Json& j) {
    return WeylTableau(partition_from_json(j.at("shape")),
                       j.at("rows").get<std::vector<std::vector<int>>>());
}

Json to_json(const Decomposition& d) {
    Json j;
    j["lambda"] = to_json(d.lambda);
    j["mu"] = to_json(d.mu);
    j["n"] = d.n;
    j["terms"] = Json::array();
    for (const auto& t : d.terms) {
        Json jt;
        jt["nu"] = to_json(t.nu);
        jt["multiplicity"] = t.multiplicity;
        if (static_cast<int>(t.labels.size()) == t.multiplicity && t.multiplicity > 0) {
            Json labels = Json::array();
            for (const auto& l : t.labels) labels.push_back(Json(l.values));
            jt["eta_labels"] = std::move(labels);
        } else {
            jt["eta_labels"] = nullptr;
        }
        j["terms"].push_back(std::move(jt));
    }
    return j;
}

Decomposition decomposition_from_json(const Json& j) {
    Decomposition d;
    d.lambda = partition_from_json(j.at("lambda"));
    d.mu = partition_from_json(j.at("mu"));
    d.n = j.at("n").get<int>();
    for (const auto& jt : j.at("terms")) {
        DecompositionTerm t;
        t.nu = partition_from_json(jt.at("nu"));
        t.multiplicity = jt.at("multiplicity").get<int>();
        if (jt.contains("eta_labels") && !jt.at("eta_labels").is_null())
            for (const auto& jl : jt.at("eta_labels"))
                t.labels.push_back(EtaLabels{jl.get<std::vector<int>>()});
        d.terms.push_back(std::move(t));
    }
    return d;
}

Json to_json(const ComplementaryPattern& p) {
    Json j;
    j["group_size"] = p.group_size;
    j["eta"] = Json(p.eta.values);
    j["levels"] = Json::array();
    for (const auto& level : p.levels) {
        if (level)
            j["levels"].push_back(Json(*level));
        else
            j["levels"].push_back(nullptr);
    }
    return j;
}

Json to_json(const ClassificationReport& r) {
    Json j;
    j["group"] = r.group == Group::Su3 ? "SU3" : "SU4";
    j["lambda"] = to_json(r.lambda);
    j["mu"] = to_json(r.mu);
    j["nu"] = to_json(r.nu);
    Json bounds = Json::object();
    Json witnesses = Json::object();
    for (const auto& e : r.entries) {
        bounds[e.bound] = e.origin == BoundOrigin::Betweenness ? "BETWEENNESS" : "LITTLEWOOD";
        if (!e.witnesses.empty()) {
            Json w = Json::array();
            for (const auto& t : e.witnesses) w.push_back(Json(t.values));
            witnesses[e.bound] = std::move(w);
        }
    }
    j["bounds"] = std::move(bounds);
    j["witnesses"] = std::move(witnesses);
    j["sound"] = r.sound;
    return j;
}

} // namespace lrkron
