#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "pbm/codes.hpp"

using namespace pbm;
using testing_helpers::antichain_space;
using testing_helpers::chain_space;

namespace {

Code words(const BlockSpace& s, std::initializer_list<std::initializer_list<long long>> list) {
    std::vector<BlockVector> out;
    for (auto w : list) out.push_back(s.vector(w));
    return Code::from_words(s, out);
}

Code diagonal(const BlockSpace& s) { return Code::span(s, {s.vector({1, 1})}); }
Code first_axis(const BlockSpace& s) { return Code::span(s, {s.vector({1, 0})}); }
Code whole(const BlockSpace& s) {
    std::vector<BlockVector> all;
    s.for_each_vector([&](const BlockVector& v) { all.push_back(v); });
    return Code::from_words(s, all);
}

Errc code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("codes are sorted sets with verified linearity") {
    const auto s = chain_space(5, {1, 1});
    const auto c = words(s, {{1, 1}, {0, 0}, {1, 1}});
    CHECK(c.size() == 2);
    CHECK_FALSE(c.linear());
    CHECK(diagonal(s).linear());
    CHECK(diagonal(s).size() == 5);
    CHECK(diagonal(s).contains(s.vector({3, 3})));
    CHECK(code_of([&] { Code::from_words(s, {}); }) == Errc::InvalidArgument);
    CHECK(code_of([&] { Code::from_words(s, {BlockVector{{1, 2, 3}}}); }) == Errc::DimensionMismatch);
}

TEST_CASE("minimum distances") {
    const auto s = chain_space(5, {1, 1});
    CHECK(min_distance(diagonal(s)) == 3);
    CHECK(min_distance(diagonal(s), Metric::PosetBlock) == 2);
    CHECK(min_distance(whole(s)) == 1);
    CHECK(min_distance(words(s, {{0, 0}, {2, 0}, {0, 1}})) == 2);
    CHECK(code_of([&] { min_distance(words(s, {{1, 2}})); }) == Errc::SingletonCode);
}

TEST_CASE("full-count perfect codes") {
    const auto s = chain_space(5, {1, 1});
    const auto i = s.pomset().ideal("2/1");
    const auto c = construct_perfect_full(s, i);
    CHECK(c.size() == 5);
    for (const auto& w : c.words()) CHECK(w.coords[0] == 0);
    CHECK(verify_perfect(c, i).perfect());
    CHECK(construct_perfect_full(s, s.pomset().empty_ideal()).size() == 25);
    CHECK(construct_perfect_full(s, s.pomset().full_ideal()).size() == 1);
    CHECK(verify_perfect(words(s, {{0, 0}}), s.pomset().full_ideal()).perfect());
    CHECK(code_of([&] { construct_perfect_full(s, s.pomset().ideal("1/1")); }) == Errc::NotFullCount);
}

TEST_CASE("partial-count perfect codes") {
    const auto s1 = antichain_space(9, {1});
    const auto d1 = construct_perfect_partial(s1, s1.pomset().ideal("1/1"));
    CHECK(d1 == words(s1, {{0}, {3}, {6}}));
    CHECK(verify_perfect(d1, s1.pomset().ideal("1/1")).perfect());

    const auto s2 = antichain_space(9, {2});
    const auto i2 = s2.pomset().ideal("1/1");
    const auto d2 = construct_perfect_partial(s2, i2);
    CHECK(d2.size() == 9);
    CHECK(perfect_partial_size(s2, i2) == 9);
    CHECK(verify_perfect(d2, i2).perfect());

    const auto s3 = chain_space(9, {1, 2});
    const auto i3 = s3.pomset().ideal("4/1 1/2");
    const auto d3 = construct_perfect_partial(s3, i3);
    CHECK(d3.size() == 9);
    CHECK(verify_perfect(d3, i3).perfect());

    const auto s7 = antichain_space(7, {1, 1});
    try {
        construct_perfect_partial(s7, s7.pomset().ideal("1/2"));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DivisibilityFails);
        CHECK(std::string(e.what()).find("element 2") != std::string::npos);
    }
}

TEST_CASE("perfectness certificates") {
    const auto s = chain_space(5, {1, 1});
    const auto cert = verify_perfect(words(s, {{0, 0}, {1, 0}}), s.pomset().ideal("2/1"));
    CHECK_FALSE(cert.disjoint);
    CHECK_FALSE(cert.perfect());
    REQUIRE(cert.witness.has_value());
    CHECK(*cert.witness == s.vector({1, 0}));
    REQUIRE(cert.colliding.has_value());
    CHECK(cert.colliding->first == s.vector({0, 0}));
    CHECK(cert.colliding->second == s.vector({1, 0}));

    const auto gap = verify_perfect(words(s, {{0, 0}}), s.pomset().ideal("2/1"));
    CHECK(gap.disjoint);
    CHECK_FALSE(gap.covering);
    CHECK(*gap.witness == s.vector({0, 1}));
}

TEST_CASE("duals") {
    const auto s = chain_space(5, {1, 1});
    const auto perp = dual_code(first_axis(s));
    CHECK(perp.space() == s.dual());
    CHECK(perp.words() == Code::span(s.dual(), {s.vector({0, 1})}).words());
    CHECK(dual_code(words(s, {{0, 0}})).size() == 25);
    CHECK(dual_code(whole(s)).size() == 1);
    CHECK(code_of([&] { dual_code(words(s, {{0, 0}, {1, 0}})); }) == Errc::NotLinear);
    CHECK(dual_code(diagonal(s)).words() == Code::span(s.dual(), {s.vector({1, 4})}).words());
}

TEST_CASE("dual of a perfect code is perfect for the complement") {
    const auto s = chain_space(5, {1, 1});
    const auto i = s.pomset().ideal("2/1");
    const auto yes = check_perp_duality(Code::span(s, {s.vector({0, 1})}), i);
    CHECK(yes.code_perfect);
    CHECK(yes.dual_perfect);
    const auto no = check_perp_duality(first_axis(s), i);
    CHECK_FALSE(no.code_perfect);
    CHECK_FALSE(no.dual_perfect);
    CHECK(no.holds());
    const auto e = s.pomset().empty_ideal();
    CHECK(check_perp_duality(whole(s), e).code_perfect);
    CHECK(check_perp_duality(whole(s), e).dual_perfect);
    CHECK_FALSE(check_perp_duality(diagonal(s), e).code_perfect);
    CHECK(check_perp_duality(diagonal(s), e).holds());
}

TEST_CASE("linear codes and their duals fill the space") {
    std::mt19937 rng(5);
    for (const auto& cfg : oracle::grid()) {
        if (cfg.raw().size() > 2000) continue;
        const auto s = cfg.space();
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<BlockVector> gens;
            for (int g = 0; g <= trial; ++g) gens.push_back(s.unrank(rng() % s.cardinality()));
            const auto c = Code::span(s, gens);
            CHECK(c.size() * dual_code(c).size() == s.cardinality());
        }
    }
}

TEST_CASE("packing radius") {
    const auto s = chain_space(5, {1, 1});
    CHECK(packing_radius_bruteforce(diagonal(s)) == 2);
    CHECK(packing_radius_chain_formula(diagonal(s)) == 2);
    CHECK(packing_radius_bruteforce(whole(s)) == 0);
    CHECK(packing_radius_chain_formula(whole(s)) == 0);
    const auto s3 = chain_space(5, {1, 1, 1});
    const auto rep = Code::span(s3, {s3.vector({1, 1, 1})});
    CHECK(packing_radius_bruteforce(rep) == 4);
    CHECK(packing_radius_chain_formula(rep) == 4);
    CHECK(code_of([&] { packing_radius_chain_formula(first_axis(antichain_space(5, {1, 1}))); }) == Errc::NotAChain);
}

TEST_CASE("chain packing-radius formula fails once floor(m/2) >= 3") {
    // Two points at Lee distance 3 have disjoint 1-balls, while the formula
    // floor(m/2)*(d_(P,pi) - 1) gives 0.
    for (int m : {6, 7}) {
        const auto s = antichain_space(m, {1});
        const auto c = words(s, {{0}, {3}});
        CHECK(packing_radius_bruteforce(c) == 1);
        CHECK(packing_radius_chain_formula(c) == 0);
    }
    const auto s = chain_space(6, {1, 1});
    const auto c = Code::span(s, {s.vector({0, 3})});
    CHECK(packing_radius_bruteforce(c) == 4);
    CHECK(packing_radius_chain_formula(c) == 3);
    // With floor(m/2) <= 2 the formula is right on these shapes.
    for (int m : {4, 5}) {
        const auto t = antichain_space(m, {1});
        CHECK(packing_radius_bruteforce(words(t, {{0}, {2}})) == packing_radius_chain_formula(words(t, {{0}, {2}})));
    }
}

TEST_CASE("Singleton bound and MDS") {
    const auto s = chain_space(5, {1, 1});
    const auto d = singleton_check(diagonal(s));
    CHECK(d.distance == 3);
    CHECK(d.r == 1);
    CHECK(d.prefix == std::vector<int>{1});
    CHECK(d.lhs == 1);
    CHECK(d.rhs == 1);
    CHECK(d.mds());
    const auto a = singleton_check(first_axis(s));
    CHECK(a.r == 0);
    CHECK(a.rhs == 1);
    CHECK_FALSE(a.mds());
    CHECK(a.bound_holds());
    CHECK(is_mds(whole(s)));
    CHECK(singleton_check(whole(s)).rhs == 0);
    CHECK(ceil_log(25, 5) == 2);
    CHECK(ceil_log(26, 5) == 3);
    CHECK(ceil_log(1, 5) == 0);
    CHECK(code_of([&] { singleton_check(diagonal(antichain_space(5, {1, 1}))); }) == Errc::NotAChain);
}

TEST_CASE("Singleton bound on random chain codes") {
    std::mt19937 rng(9);
    for (const auto& cfg : oracle::grid()) {
        if (!cfg.is_chain() || cfg.raw().size() > 5000) continue;
        const auto s = cfg.space();
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<BlockVector> w;
            const int size = 2 + static_cast<int>(rng() % 6);
            for (int i = 0; i < size; ++i) w.push_back(s.unrank(rng() % s.cardinality()));
            const auto c = Code::from_words(s, w);
            if (c.size() < 2) continue;
            CHECK(singleton_check(c).bound_holds());
            CHECK(singleton_check(c, Metric::PosetBlock).bound_holds());
            const auto p = mds_implies_poset_mds(c);
            CHECK(p.distance_inequality);
            CHECK(p.holds());
        }
    }
}

TEST_CASE("MDS codes are poset MDS") {
    const auto s = chain_space(5, {1, 1});
    const auto p = mds_implies_poset_mds(diagonal(s));
    CHECK(p.pm_mds);
    CHECK(p.p_mds);
    CHECK(p.holds());
}

TEST_CASE("MDS versus perfection at the chain prefix") {
    const auto s = chain_space(5, {1, 1});
    const auto b = mds_iperfect_bridge(diagonal(s));
    CHECK(b.q == 1);
    CHECK(b.ideal->to_string() == "2/1");
    CHECK(b.mds);
    CHECK(b.iperfect);
    const auto f = mds_iperfect_bridge(first_axis(s));
    CHECK_FALSE(f.mds);
    CHECK_FALSE(f.iperfect);
    CHECK(code_of([&] { mds_iperfect_bridge(words(s, {{0, 0}, {1, 1}})); }) == Errc::BadCardinality);
    const auto s2 = chain_space(5, {2, 2});
    CHECK(code_of([&] { mds_iperfect_bridge(Code::span(s2, {s2.vector({1, 1, 1, 1})})); }) == Errc::BadCardinality);
}

TEST_CASE("full-count perfect codes on chain prefixes are MDS") {
    for (int m : {4, 5, 6}) {
        for (int k : {1, 2}) {
            const auto s = chain_space(m, std::vector<int>(3 / k + 1, k));
            for (int blocks = 0; blocks <= s.blocks(); ++blocks) {
                Multiset prefix = s.pomset().empty_multiset();
                for (int i = 1; i <= blocks; ++i) prefix.set(i, s.max_lee());
                const auto i = s.pomset().ideal(prefix);
                const auto c = construct_perfect_full(s, i);
                const auto rep = iperfect_implies_mds(c, i);
                CHECK(rep.hypothesis);
                CHECK(rep.conclusion);
            }
        }
    }
}

TEST_CASE("an I-perfect partial-count code that is not MDS") {
    // T x T with T = {0,3,6} in Z_9^2 tiles the space with {-1,0,1}^2, but has
    // distance 3 < floor(9/2) and 9 words: r = 0 while N - log_9 9 = 1.
    const auto s = antichain_space(9, {2});
    const auto i = s.pomset().ideal("1/1");
    const auto c = construct_perfect_partial(s, i);
    const auto rep = iperfect_implies_mds(c, i);
    CHECK(rep.hypothesis);
    CHECK_FALSE(rep.conclusion);
    CHECK_FALSE(rep.holds());
    // A single unit block behaves.
    const auto s1 = antichain_space(9, {1});
    const auto i1 = s1.pomset().ideal("1/1");
    CHECK(iperfect_implies_mds(construct_perfect_partial(s1, i1), i1).holds());
    CHECK(is_mds(construct_perfect_partial(s1, i1)));
}

TEST_CASE("distance of full-count perfect codes exceeds the ideal only on chains") {
    const auto c = chain_space(5, {1, 1});
    const auto ic = c.pomset().ideal("2/1");
    CHECK(min_distance(construct_perfect_full(c, ic)) > ic.cardinality());
    const auto a = antichain_space(5, {1, 1});
    const auto ia = a.pomset().ideal("2/1");
    const auto code = construct_perfect_full(a, ia);
    CHECK(verify_perfect(code, ia).perfect());
    CHECK(min_distance(code) == 1);
}

TEST_CASE("root count of perfect codes with uniform blocks") {
    for (int l : {1, 2}) {
        const auto s = chain_space(4, std::vector<int>(6 / l / 2 + 1, l));
        const int n = s.blocks();
        for (const auto& i : s.pomset().all_ideals()) {
            if (!i.is_full_count()) continue;
            const auto c = construct_perfect_full(s, i);
            const int k = ceil_log(c.size(), s.modulus());
            CHECK(static_cast<int>(i.root_set().size()) * l == l * n - k);
        }
    }
}

TEST_CASE("on chains r-perfect equals I-perfect for the ideal of size r") {
    std::mt19937 rng(17);
    for (const auto& cfg : oracle::grid()) {
        if (!cfg.is_chain() || cfg.raw().size() > 1500) continue;
        const auto s = cfg.space();
        std::vector<Code> codes;
        for (const auto& i : s.pomset().all_ideals())
            if (i.is_full_count()) codes.push_back(construct_perfect_full(s, i));
        for (int t = 0; t < 3; ++t) codes.push_back(Code::span(s, {s.unrank(rng() % s.cardinality())}));
        for (const auto& c : codes)
            for (int r = 0; r <= s.blocks() * s.max_lee(); ++r) {
                const auto ideal = s.pomset().ideals_of_cardinality(r).front();
                CHECK(verify_perfect(c, r).perfect() == verify_perfect(c, ideal).perfect());
            }
    }
}

TEST_CASE("distance bracket for MDS codes") {
    const auto s = chain_space(5, {1, 1});
    const auto b = mds_distance_bracket(diagonal(s));
    CHECK(b.mds);
    CHECK(b.lower == 3);
    CHECK(b.upper == 4);
    CHECK(b.holds());
    const auto nb = mds_distance_bracket(first_axis(s));
    CHECK_FALSE(nb.mds);
    CHECK_FALSE(nb.in_bracket());
}

TEST_CASE("four-way duality") {
    const auto s = chain_space(5, {1, 1});
    const auto yes = duality_equivalence(diagonal(s));
    CHECK(yes.mds);
    CHECK(yes.iperfect);
    CHECK(yes.dual_iperfect);
    CHECK(yes.dual_mds);
    const auto no = duality_equivalence(first_axis(s));
    CHECK_FALSE(no.mds);
    CHECK(no.all_equal());
    const auto all = duality_equivalence(whole(s));
    CHECK(all.mds);
    CHECK(all.all_equal());
    const auto s4 = chain_space(4, {2, 2});
    const auto c4 = Code::span(s4, {s4.vector({1, 0, 1, 0}), s4.vector({0, 1, 0, 1})});
    CHECK(duality_equivalence(c4).all_equal());
    CHECK(duality_equivalence(c4).mds);
}

TEST_CASE("repetition codes") {
    const auto s = chain_space(5, {1, 1});
    const auto r = repetition_codes(s);
    CHECK(r.unit == diagonal(s));
    CHECK(is_mds(r.unit));
    CHECK_FALSE(r.block.has_value());
    const auto s3 = chain_space(5, {1, 1, 1});
    CHECK(min_distance(repetition_codes(s3).unit) == 5);
    CHECK(is_mds(repetition_codes(s3).unit));
    const auto s4 = chain_space(4, {1, 1});
    CHECK(is_mds(repetition_codes(s4).unit));
    const auto s5 = chain_space(5, {1, 1, 1, 1});
    const auto block = repetition_codes(s5).block;
    REQUIRE(block.has_value());
    CHECK(block->contains(s5.vector({1, 2, 3, 4})));
    CHECK(is_mds(*block));
}

TEST_CASE("repetition codes with blocks longer than one are not MDS") {
    // d = floor(m/2)(n-1) + 1 gives r = n - 1 prefix blocks, k(n-1) < nk - 1.
    const auto s = chain_space(5, {2, 2});
    const auto rep = singleton_check(repetition_codes(s).unit);
    CHECK(rep.distance == 3);
    CHECK(rep.lhs == 2);
    CHECK(rep.rhs == 3);
    CHECK_FALSE(rep.mds());
    const auto s3 = chain_space(3, {2, 2});
    const auto block = repetition_codes(s3).block;
    REQUIRE(block.has_value());
    CHECK_FALSE(is_mds(*block));
}
