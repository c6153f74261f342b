#include "lrkron/complement.hpp"

#include "lrkron/json_io.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace lrkron;

namespace {

std::map<std::string, BoundOrigin> origin_map(const ClassificationReport& r) {
    std::map<std::string, BoundOrigin> m;
    for (const auto& e : r.entries) m[e.bound] = e.origin;
    return m;
}

} // namespace

TEST_CASE("coupled U(4) patterns substitute the window label") {
    ComplementaryPattern p0 =
        coupled_pattern_su3(Su3Dynkin{1, 1}, Su3Dynkin{1, 1}, Partition{3, 2, 1}, 0);
    CHECK(*p0.level(4) == std::vector<int>{3, 2, 1, 0});
    CHECK(*p0.level(3) == std::vector<int>{3, 2, 0});
    CHECK(*p0.level(2) == std::vector<int>{2, 1});
    CHECK_FALSE(p0.level(1).has_value());
    CHECK(p0.betweenness_ok());

    ComplementaryPattern p1 =
        coupled_pattern_su3(Su3Dynkin{1, 1}, Su3Dynkin{1, 1}, Partition{3, 2, 1}, 1);
    CHECK(*p1.level(3) == std::vector<int>{3, 1, 1});
    CHECK(p1.betweenness_ok());

    CHECK_THROWS_AS(coupled_pattern_su3(Su3Dynkin{1, 1}, Su3Dynkin{1, 1}, Partition{3, 2, 1}, 2),
                    std::out_of_range);
    CHECK_THROWS_AS(coupled_pattern_su3(Su3Dynkin{1, 1}, Su3Dynkin{1, 1}, Partition{3, 2, 1}, -1),
                    std::out_of_range);
}

TEST_CASE("coupled U(6) patterns") {
    // singlet second factor: all deltas vanish
    ComplementaryPattern p =
        coupled_pattern_su4(Partition{2, 1, 1}, Partition{}, Partition{2, 1, 1}, EtaLabels{{0, 0, 0}});
    CHECK(*p.level(6) == std::vector<int>{2, 1, 1, 0, 0, 0});
    CHECK(*p.level(5) == std::vector<int>{2, 1, 1, 0, 0});
    CHECK(*p.level(4) == std::vector<int>{2, 1, 1, 0});
    CHECK(*p.level(3) == std::vector<int>{2, 1, 1});
    CHECK_FALSE(p.level(2).has_value());
    CHECK_FALSE(p.level(1).has_value());
    CHECK(p.betweenness_ok());

    auto labels = su4_eta_labels(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1});
    REQUIRE(labels.size() == 2);
    std::set<std::vector<int>> level4_rows;
    for (const auto& eta : labels) {
        ComplementaryPattern q =
            coupled_pattern_su4(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}, eta);
        CHECK(q.betweenness_ok());
        level4_rows.insert(*q.level(4));
    }
    CHECK(level4_rows.size() == 2); // the two occurrences get distinct patterns

    CHECK_THROWS_AS(coupled_pattern_su4(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1},
                                        EtaLabels{{2, 0, 0}}),
                    std::out_of_range);
}

TEST_CASE("uncoupled symbols") {
    auto [first, second] = uncoupled_patterns(Partition{3, 2, 1}, Partition{2, 2, 1}, 4);

    CHECK(*first.level(6) == std::vector<int>{3, 2, 1, 0, 0, 0});
    CHECK(*first.level(5) == std::vector<int>{3, 2, 1, 0, 0});
    CHECK(*first.level(4) == std::vector<int>{3, 2, 1, 0});
    CHECK(*first.level(3) == std::vector<int>{3, 2, 1});
    CHECK_FALSE(first.level(2).has_value());
    CHECK(first.betweenness_ok());

    CHECK(*second.level(6) == std::vector<int>{2, 2, 1, 0, 0, 0});
    CHECK(*second.level(5) == std::vector<int>{2, 2, 0, 0, 0});
    CHECK(*second.level(4) == std::vector<int>{2, 0, 0, 0});
    CHECK(*second.level(3) == std::vector<int>{0, 0, 0});
    CHECK_FALSE(second.level(2).has_value());
    CHECK(second.betweenness_ok());

    auto [f3, s3] = uncoupled_patterns(Partition{2, 1}, Partition{1, 1}, 3);
    CHECK(*f3.level(4) == std::vector<int>{2, 1, 0, 0});
    CHECK(*f3.level(2) == std::vector<int>{2, 1});
    CHECK(*s3.level(4) == std::vector<int>{1, 1, 0, 0});
    CHECK(*s3.level(3) == std::vector<int>{1, 0, 0});
    CHECK(*s3.level(2) == std::vector<int>{0, 0});

    CHECK_THROWS_AS(uncoupled_patterns(Partition{1, 1, 1}, Partition{1}, 3), std::invalid_argument);
}

TEST_CASE("classification separates interleaving from deeper conditions") {
    // For this coupling the window equals the interleaving region: every
    // argument is implied by betweenness.
    ClassificationReport all_bet =
        classify_bounds(Group::Su3, Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1});
    CHECK(all_bet.sound);
    for (const auto& e : all_bet.entries) CHECK(e.origin == BoundOrigin::Betweenness);

    // Here betweenness admits eta = 1 but no filling realizes it; the two
    // reading-word arguments must be tagged accordingly.
    ClassificationReport mixed =
        classify_bounds(Group::Su3, Partition{2, 1}, Partition{1, 1}, Partition{2, 2, 1});
    CHECK(mixed.sound);
    auto origins = origin_map(mixed);
    CHECK(origins.at("eta_max.m1-lam1-mu1") == BoundOrigin::Littlewood);
    CHECK(origins.at("eta_max.lam2+mu2-m3") == BoundOrigin::Littlewood);
    CHECK(origins.at("eta_min.0") == BoundOrigin::Betweenness);
    CHECK(origins.at("eta_max.mu2") == BoundOrigin::Betweenness);
    CHECK(origins.at("eta_max.m2-m3") == BoundOrigin::Betweenness);

    bool witness_found = false;
    for (const auto& e : mixed.entries)
        for (const auto& w : e.witnesses)
            if (w == EtaLabels{{1}}) witness_found = true;
    CHECK(witness_found);
}

TEST_CASE("classification is sound over a small SU(4) grid") {
    std::vector<std::pair<Partition, Partition>> pairs = {
        {Partition{2, 1}, Partition{2, 1}},
        {Partition{1, 1, 1}, Partition{1, 1, 1}},
        {Partition{2, 1, 1}, Partition{2, 1}},
        {Partition{2, 2}, Partition{2, 1, 1}},
    };
    for (const auto& [lam, mu] : pairs)
        for (const auto& term : decompose(lam, mu, 4).terms) {
            ClassificationReport r = classify_bounds(Group::Su4, lam, mu, term.nu);
            CHECK(r.sound);
            CHECK(origin_map(r).at("eta1_min.0") == BoundOrigin::Betweenness);
        }
}

TEST_CASE("classification report serializes as a bound-name map") {
    ClassificationReport r =
        classify_bounds(Group::Su3, Partition{2, 1}, Partition{1, 1}, Partition{2, 2, 1});
    Json j = to_json(r);
    CHECK(j["group"] == "SU3");
    CHECK(j["bounds"]["eta_max.m1-lam1-mu1"] == "LITTLEWOOD");
    CHECK(j["bounds"]["eta_min.0"] == "BETWEENNESS");
    CHECK(j["sound"] == true);
}
