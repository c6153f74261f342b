#include "lrkron/tableau.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace lrkron;

namespace {

GelfandPattern random_pattern(std::mt19937& rng, int n, int max_boxes) {
    Partition top = oracle::random_partition(rng, max_boxes, n);
    std::vector<std::vector<int>> rows;
    rows.push_back(top.padded(n));
    for (int k = n - 1; k >= 1; --k) {
        const auto& upper = rows.back();
        std::vector<int> lower(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            std::uniform_int_distribution<int> pick(upper[static_cast<std::size_t>(i + 1)],
                                                    upper[static_cast<std::size_t>(i)]);
            lower[static_cast<std::size_t>(i)] = pick(rng);
        }
        rows.push_back(std::move(lower));
    }
    return GelfandPattern(std::move(rows));
}

} // namespace

TEST_CASE("pattern construction checks the triangle") {
    CHECK_NOTHROW(GelfandPattern({{2, 1, 0}, {2, 1}, {1}}));
    CHECK_THROWS_AS(GelfandPattern({{2, 1, 0}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(GelfandPattern({{2, 1}, {2, 1}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(GelfandPattern({{2, -1}, {1}}), std::invalid_argument);
}

TEST_CASE("betweenness predicate") {
    CHECK(check_betweenness(GelfandPattern({{2, 1, 0}, {2, 1}, {1}})));
    CHECK_FALSE(check_betweenness(GelfandPattern({{2, 1, 0}, {2, 2}, {2}})));
    enumerate_patterns(Partition{3, 1}, 3,
                       [](const GelfandPattern& g) { CHECK(check_betweenness(g)); });
}

TEST_CASE("tableau to pattern follows the deletion rule") {
    WeylTableau box(Partition{1}, {{1}});
    CHECK(gelfand_from_weyl(box, 2) == GelfandPattern({{1, 0}, {1}}));

    WeylTableau row2(Partition{2}, {{1, 2}});
    CHECK(gelfand_from_weyl(row2, 2) == GelfandPattern({{2, 0}, {1}}));

    WeylTableau hook(Partition{2, 1}, {{1, 2}, {2}});
    CHECK(gelfand_from_weyl(hook, 3) == GelfandPattern({{2, 1, 0}, {2, 1}, {1}}));
}

TEST_CASE("pattern to tableau inverts the deletion rule") {
    CHECK(weyl_from_gelfand(GelfandPattern({{1, 0}, {1}})) == WeylTableau(Partition{1}, {{1}}));
    CHECK(weyl_from_gelfand(GelfandPattern({{2, 0}, {1}})) == WeylTableau(Partition{2}, {{1, 2}}));
    CHECK_THROWS_AS(weyl_from_gelfand(GelfandPattern({{2, 1, 0}, {2, 2}, {2}})),
                    std::invalid_argument);
}

TEST_CASE("tableau construction validates order conditions") {
    CHECK_THROWS_AS(WeylTableau(Partition{2}, {{2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(WeylTableau(Partition{1, 1}, {{1}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(WeylTableau(Partition{2}, {{1}}), std::invalid_argument);
    CHECK_THROWS_AS(WeylTableau(Partition{1}, {{0}}), std::invalid_argument);
}

TEST_CASE("round trip on random patterns") {
    std::mt19937 rng(0xC0FFEE);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(rng() % 4);
        GelfandPattern g = random_pattern(rng, n, 10);
        WeylTableau w = weyl_from_gelfand(g);
        CHECK(gelfand_from_weyl(w, n) == g);
        CHECK(weyl_from_gelfand(gelfand_from_weyl(w, n)) == w);
    }
}

TEST_CASE("enumeration is exhaustive, unique and lexicographic") {
    CHECK(all_patterns(Partition{1}, 2).size() == 2);
    CHECK(count_patterns(Partition{}, 4) == 1);
    CHECK(count_patterns(Partition{3}, 1) == 1);

    auto patterns = all_patterns(Partition{2, 1}, 3);
    CHECK(patterns.size() == 8);
    for (std::size_t i = 1; i < patterns.size(); ++i)
        CHECK(patterns[i - 1].rows() < patterns[i].rows());
}

TEST_CASE("enumeration count equals the dimension") {
    for (int n = 2; n <= 5; ++n) {
        std::mt19937 rng(99 + n);
        for (int trial = 0; trial < 25; ++trial) {
            Partition p = oracle::random_partition(rng, 8, n);
            CHECK(count_patterns(p, n) == dimension(p, n));
        }
    }
    // Brute-force cross-check of the streamed enumerator.
    CHECK(count_patterns(Partition{3, 1}, 3) == oracle::count_patterns(Partition{3, 1}, 3));
    CHECK(count_patterns(Partition{2, 2, 1}, 4) == oracle::count_patterns(Partition{2, 2, 1}, 4));
}

TEST_CASE("lattice-word reading") {
    LRFilling stacked{Partition{1}, Partition{2, 1}, {{1}, {1}}};
    CHECK(is_lattice_word(stacked));

    LRFilling reversed{Partition{}, Partition{1, 1}, {{2}, {1}}};
    CHECK_FALSE(is_lattice_word(reversed));

    LRFilling empty{Partition{3, 1}, Partition{3, 1}, {{}, {}}};
    CHECK(is_lattice_word(empty));
}

TEST_CASE("a Weyl-valid skew filling can fail the lattice condition") {
    LRFilling f{Partition{}, Partition{2}, {{1, 2}}};
    CHECK(is_skew_tableau(f));
    CHECK_FALSE(is_lattice_word(f));
}

TEST_CASE("skew tableau predicate catches order violations") {
    CHECK_FALSE(is_skew_tableau(LRFilling{Partition{}, Partition{2}, {{2, 1}}}));
    CHECK_FALSE(is_skew_tableau(LRFilling{Partition{}, Partition{1, 1}, {{1}, {1}}}));
    CHECK(is_skew_tableau(LRFilling{Partition{1}, Partition{2, 1}, {{1}, {1}}}));
    CHECK_FALSE(is_skew_tableau(LRFilling{Partition{2, 1}, Partition{1, 1}, {{}, {}}}));
}

TEST_CASE("filling content") {
    LRFilling f{Partition{2, 1}, Partition{3, 2, 1}, {{1}, {1}, {2}}};
    CHECK(f.content() == Partition{2, 1});
    CHECK(f.symbol_counts(3) == std::vector<int>{2, 1, 0});
}
