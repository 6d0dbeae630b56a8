#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "pbm/multiset.hpp"

using namespace pbm;

namespace {
Multiset ms(const char* literal) { return Multiset::parse(literal, 5, 3); }
}  // namespace

TEST_CASE("cardinality and root set") {
    CHECK(Multiset::full(5, 3).cardinality() == 15);
    CHECK(Multiset(5, 3).cardinality() == 0);
    CHECK(ms("2/1 1/3").cardinality() == 3);
    CHECK(ms("3/1 1/3").root_set() == std::vector<int>{1, 3});
    CHECK(Multiset(5, 3).root_set().empty());
    CHECK(Multiset(3, 1, {1, 1, 1}).root_set() == std::vector<int>{1, 2, 3});
}

TEST_CASE("parse and format") {
    CHECK(ms("3/1 1/3").to_string() == "3/1 1/3");
    CHECK(ms("{}").to_string() == "{}");
    CHECK(ms("").empty());
    CHECK_THROWS_AS(ms("3/1 2/1"), Error);
    CHECK_THROWS_AS(ms("4/1"), Error);
    CHECK_THROWS_AS(ms("1/6"), Error);
    CHECK_THROWS_AS(ms("x/1"), Error);
    try {
        ms("1/9");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::IndexOutOfRange);
    }
}

TEST_CASE("submultiset order") {
    CHECK(is_submset(ms("2/1"), ms("3/1 1/3")));
    CHECK(is_submset(ms("3/1 1/3"), ms("3/1 1/3")));
    CHECK_FALSE(is_submset(ms("3/2"), ms("3/1")));
    CHECK_THROWS_AS(is_submset(ms("3/2"), Multiset(4, 3)), Error);
}

TEST_CASE("worked ideal algebra") {
    const auto i1 = ms("2/1"), i3 = ms("3/1 1/3"), i6 = ms("3/1 3/2 2/3 2/4");
    CHECK(mset_sum(i1, i3) == ms("3/1 1/3"));
    CHECK(mset_diff(i1, i3).empty());
    CHECK(mset_union(i3, i6) == ms("3/1 3/2 2/3 2/4"));
    CHECK(mset_intersection(i3, i6) == ms("3/1 1/3"));
    CHECK(mset_sum(ms("2/1"), ms("2/1")) == ms("3/1"));
    CHECK(mset_diff(i3, i1) == ms("1/1 1/3"));
    CHECK(mset_sum(i3, Multiset(5, 3)) == i3);
    CHECK(complement(Multiset::full(5, 3)).empty());
    CHECK_THROWS_AS(mset_sum(i1, Multiset(5, 2)), Error);
}

TEST_CASE("pointwise operations against a scalar oracle") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const int h = 1 + static_cast<int>(rng() % 5);
        std::vector<int> a(n), b(n), c(n);
        for (int i = 0; i < n; ++i) {
            a[i] = static_cast<int>(rng() % (h + 1));
            b[i] = static_cast<int>(rng() % (h + 1));
            c[i] = static_cast<int>(rng() % (h + 1));
        }
        const Multiset A(n, h, a), B(n, h, b), C(n, h, c);
        for (int i = 1; i <= n; ++i) {
            const int x = a[i - 1], y = b[i - 1];
            CHECK(mset_sum(A, B).count(i) == std::min(x + y, h));
            CHECK(mset_diff(A, B).count(i) == std::max(x - y, 0));
            CHECK(mset_union(A, B).count(i) == std::max(x, y));
            CHECK(mset_intersection(A, B).count(i) == std::min(x, y));
            CHECK(complement(A).count(i) == h - x);
        }
        CHECK(mset_sum(A, B) == mset_sum(B, A));
        CHECK(mset_sum(mset_sum(A, B), C) == mset_sum(A, mset_sum(B, C)));
        CHECK(is_submset(mset_diff(A, B), A));
        CHECK(is_submset(mset_intersection(A, B), A));
        CHECK(is_submset(A, mset_union(A, B)));
        CHECK(complement(complement(A)) == A);
        CHECK(mset_union(A, B).cardinality() + mset_intersection(A, B).cardinality() == A.cardinality() + B.cardinality());
    }
}
