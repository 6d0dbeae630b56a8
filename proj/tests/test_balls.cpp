#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "pbm/balls.hpp"
#include "pbm/weight_dist.hpp"

using namespace pbm;
using testing_helpers::chain_space;

TEST_CASE("small chain balls") {
    const auto s = chain_space(5, {1, 1});
    CHECK(radius_ball_size(s, 2) == 5);
    CHECK(radius_ball(s, s.zero(), 2).size() == 5);
    CHECK(radius_sphere_size(s, 0) == 1);
    CHECK(radius_ball_size(s, 4) == 25);
    const auto i = s.pomset().ideal("2/1");
    CHECK(ideal_ball_size(s, i) == 5);
    CHECK(ideal_sphere_size(s, i) == 2);
    CHECK(ideal_ball(s, s.vector({1, 1}), i).size() == 5);
    CHECK(in_ideal_ball(s, s.vector({1, 1}), s.vector({3, 1}), i));
    CHECK_FALSE(in_ideal_ball(s, s.vector({1, 1}), s.vector({3, 2}), i));
}

TEST_CASE("ball formulas match membership scans at two centers") {
    for (const auto& cfg : oracle::grid()) {
        if (cfg.raw().size() > 1500) continue;
        const auto s = cfg.space();
        const BlockVector centers[] = {s.zero(), s.unrank(s.cardinality() / 3)};
        for (const auto& c : centers) {
            for (const auto& i : s.pomset().all_ideals()) {
                CHECK(ideal_ball(s, c, i).size() == ideal_ball_size(s, i));
                CHECK(ideal_sphere(s, c, i).size() == ideal_sphere_size(s, i));
            }
            for (int r = 0; r <= s.blocks() * s.max_lee(); ++r) {
                CHECK(radius_sphere(s, c, r).size() == radius_sphere_size(s, r));
                CHECK(radius_ball(s, c, r).size() == radius_ball_size(s, r));
                CHECK(radius_sphere_size(s, r) == shell_size(s, r));
            }
        }
    }
}

TEST_CASE("support histogram agrees with the raw oracle") {
    for (const auto& cfg : oracle::grid()) {
        if (cfg.raw().size() > 3000) continue;
        const auto s = cfg.space();
        const auto mine = support_ideal_histogram(s);
        for (const auto& [counts, number] : oracle::ideal_histogram(cfg.raw())) {
            const Multiset key(cfg.n(), cfg.m / 2, counts);
            const auto it = mine.find(key);
            const Count got = it == mine.end() ? 0 : it->second;
            CHECK(got == number);
        }
    }
}

TEST_CASE("full-count balls are submodules with the right cosets") {
    const std::vector<std::pair<int, int>> below{{1, 3}};
    const BlockSpace s(6, Pomset::make(3, 3, below), {1, 2, 1});
    for (const auto& i : s.pomset().all_ideals()) {
        if (!i.is_full_count()) continue;
        const auto report = full_count_ball_structure(s, i);
        CHECK(report.holds());
        CHECK_FALSE(nonlinearity_witness(s, i).has_value());
    }
    try {
        full_count_ball_structure(s, s.pomset().ideal("1/1"));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotFullCount);
    }
}

TEST_CASE("partial-count balls are not closed under addition") {
    const auto s = chain_space(5, {1, 1});
    const auto i = s.pomset().ideal("2/1 1/2");
    const auto w = nonlinearity_witness(s, i);
    REQUIRE(w.has_value());
    CHECK(in_ideal_ball(s, s.zero(), w->first, i));
    CHECK(in_ideal_ball(s, s.zero(), w->second, i));
    CHECK_FALSE(in_ideal_ball(s, s.zero(), s.add(w->first, w->second), i));
}
