#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wreathchar/search.hpp"
#include "wreathchar/tuple.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

using namespace wreathchar;
using detail::SplitMix64;

namespace {

Tuple make(const std::vector<int>& entries) {
    return Tuple(Prime(static_cast<int>(entries.size())), entries);
}

// Independent canonicalization oracle: enumerate all rotations, take the
// minimum.
Tuple naive_least_rotation(const Tuple& t) {
    auto rots = rotations(t);
    return *std::min_element(rots.begin(), rots.end());
}

Tuple random_tuple(SplitMix64& rng, int p) {
    std::vector<int> e(static_cast<size_t>(p));
    for (int& v : e) v = detail::uniform_residue(rng, p);
    return Tuple(Prime(p), std::move(e));
}

} // namespace

TEST_CASE("primality check") {
    for (int p : {2, 3, 5, 7, 11, 13, 97}) CHECK(Prime::is_prime(p));
    for (int n : {-7, 0, 1, 4, 6, 9, 15, 91}) CHECK_FALSE(Prime::is_prime(n));
    CHECK_THROWS_AS(Prime(4), std::invalid_argument);
    CHECK_THROWS_AS(Prime(1), std::invalid_argument);
}

TEST_CASE("tuple construction and parsing") {
    Tuple t = make({1, 0, 2});
    CHECK(t.p() == 3);
    CHECK(t.str() == "1,0,2");
    CHECK(Tuple::parse("1,0,2") == t);
    CHECK(Tuple::parse("1,0,0,0,0").p() == 5);

    CHECK_THROWS_AS(Tuple::parse("1,0,0,0"), std::invalid_argument);  // length 4 not prime
    CHECK_THROWS_AS(Tuple::parse("3,0,0"), std::invalid_argument);    // entry out of range
    CHECK_THROWS_AS(Tuple::parse("1,,0"), std::invalid_argument);
    CHECK_THROWS_AS(Tuple::parse("1,0,"), std::invalid_argument);
    CHECK_THROWS_AS(Tuple::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Tuple::parse("a,b,c"), std::invalid_argument);
    CHECK_THROWS_AS(Tuple(Prime(3), {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Tuple(Prime(3), {0, 1, -1}), std::invalid_argument);
}

TEST_CASE("canonical rotation examples") {
    CHECK(canonical_rotation(make({0, 1, 2})).tuple() == make({0, 1, 2}));
    CHECK(canonical_rotation(make({2, 0, 1})).tuple() == make({0, 1, 2}));
    // Weight-one tuple over p = 5: least of the five rotations.
    Tuple weight_one = make({0, 0, 1, 0, 0});
    CHECK(naive_least_rotation(weight_one) == make({0, 0, 0, 0, 1}));
    CHECK(canonical_rotation(weight_one).tuple() == make({0, 0, 0, 0, 1}));
}

TEST_CASE("canonical rotation matches the enumeration oracle exhaustively") {
    for (int p : {2, 3, 5}) {
        std::vector<int> e(static_cast<size_t>(p), 0);
        for (;;) {
            Tuple t(Prime(p), e);
            CHECK(canonical_rotation(t).tuple() == naive_least_rotation(t));
            int j = p - 1;
            while (j >= 0 && e[static_cast<size_t>(j)] == p - 1) e[static_cast<size_t>(j--)] = 0;
            if (j < 0) break;
            ++e[static_cast<size_t>(j)];
        }
    }
}

TEST_CASE("canonical rotation matches the enumeration oracle on random tuples") {
    SplitMix64 rng(20240817);
    for (int p : {7, 11, 13}) {
        for (int trial = 0; trial < 500; ++trial) {
            Tuple t = random_tuple(rng, p);
            CHECK(canonical_rotation(t).tuple() == naive_least_rotation(t));
        }
    }
}

TEST_CASE("canonical rotation is idempotent and constant on rotation classes") {
    SplitMix64 rng(7);
    for (int p : {3, 5, 7}) {
        for (int trial = 0; trial < 200; ++trial) {
            Tuple t = random_tuple(rng, p);
            OrbitRep rep = canonical_rotation(t);
            CHECK(canonical_rotation(rep.tuple()) == rep);
            for (int s = 0; s < p; ++s) {
                CHECK(canonical_rotation(rotated(t, s)) == rep);
            }
        }
    }
}

TEST_CASE("rotations are produced in shift order") {
    auto rots = rotations(make({1, 0, 0, 0, 0}));
    std::vector<Tuple> expected = {make({1, 0, 0, 0, 0}), make({0, 1, 0, 0, 0}),
                                   make({0, 0, 1, 0, 0}), make({0, 0, 0, 1, 0}),
                                   make({0, 0, 0, 0, 1})};
    CHECK(rots == expected);

    auto constant = rotations(make({1, 1, 1}));
    CHECK(constant == std::vector<Tuple>{make({1, 1, 1}), make({1, 1, 1}), make({1, 1, 1})});

    auto mixed = rotations(make({1, 2, 0}));
    CHECK(mixed == std::vector<Tuple>{make({1, 2, 0}), make({0, 1, 2}), make({2, 0, 1})});
}

TEST_CASE("irreducibility criterion: non-constant tuples only") {
    CHECK(is_irreducible_inducing(make({1, 0, 0, 0, 0})));
    CHECK_FALSE(is_irreducible_inducing(make({2, 2, 2, 2, 2})));
    CHECK_FALSE(is_irreducible_inducing(make({0, 0, 0, 0, 0})));
}

TEST_CASE("faithfulness criterion: entry sum nonzero mod p") {
    CHECK(is_faithful_inducing(make({1, 0, 0, 0, 0})));
    CHECK(is_faithful_inducing(make({1, 1, 0, 0, 0})));
    CHECK_FALSE(is_faithful_inducing(make({1, 4, 0, 0, 0})));  // sum 5
    CHECK_THROWS_AS(is_faithful_inducing(make({2, 2, 2, 2, 2})), std::invalid_argument);
}

TEST_CASE("faithfulness is invariant under shift and scale") {
    SplitMix64 rng(99);
    for (int p : {3, 5, 7}) {
        for (int trial = 0; trial < 100; ++trial) {
            Tuple t = random_tuple(rng, p);
            if (t.is_constant()) continue;
            bool f = is_faithful_inducing(t);
            for (int s = 1; s < p; ++s) CHECK(is_faithful_inducing(rotated(t, s)) == f);
            for (int k = 1; k < p; ++k) CHECK(is_faithful_inducing(scale(t, k)) == f);
        }
    }
}

TEST_CASE("addition examples") {
    CHECK(add(make({1, 0, 0, 0, 0}), make({1, 1, 0, 0, 0})) == make({2, 1, 0, 0, 0}));
    Tuple t = make({3, 1, 4, 1, 0});
    CHECK(add(t, Tuple::zero(Prime(5))) == t);
    CHECK(add(make({3, 4, 0, 0, 0}), make({2, 1, 0, 0, 0})) == Tuple::zero(Prime(5)));
    CHECK_THROWS_AS(add(make({1, 0, 0}), make({1, 0, 0, 0, 0})), std::invalid_argument);
}

TEST_CASE("addition is a commutative group operation") {
    SplitMix64 rng(123);
    const Prime p(5);
    for (int trial = 0; trial < 100; ++trial) {
        Tuple a = random_tuple(rng, 5), b = random_tuple(rng, 5), c = random_tuple(rng, 5);
        CHECK(add(a, b) == add(b, a));
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        CHECK(add(a, Tuple::zero(p)) == a);
        // inverse: entrywise negation
        std::vector<int> neg(5);
        for (int i = 0; i < 5; ++i) neg[static_cast<size_t>(i)] = (5 - a[i]) % 5;
        CHECK(add(a, Tuple(p, neg)) == Tuple::zero(p));
    }
}

TEST_CASE("scaling examples") {
    CHECK(scale(make({1, 0, 0, 0, 0}), 2) == make({2, 0, 0, 0, 0}));
    Tuple t = make({3, 1, 4, 1, 0});
    CHECK(scale(t, 1) == t);
    CHECK(scale(scale(t, 2), 3) == t);  // 2 * 3 = 1 mod 5
    CHECK_THROWS_AS(scale(t, 0), std::invalid_argument);
    CHECK_THROWS_AS(scale(t, 5), std::invalid_argument);
}

TEST_CASE("constant tuples always have zero entry sum") {
    for (int p : {2, 3, 5, 7, 11, 13}) {
        for (int c = 0; c < p; ++c) {
            CHECK(Tuple::constant(Prime(p), c).sum_mod_p() == 0);
        }
    }
}

TEST_CASE("p=5 census: 2500 faithful tuples forming 500 rotation classes") {
    const int p = 5;
    long long faithful = 0;
    std::set<Tuple> classes;
    std::vector<int> e(static_cast<size_t>(p), 0);
    for (;;) {
        Tuple t(Prime(p), e);
        if (!t.is_constant() && is_faithful_inducing(t)) {
            ++faithful;
            classes.insert(canonical_rotation(t).tuple());
        }
        int j = p - 1;
        while (j >= 0 && e[static_cast<size_t>(j)] == p - 1) e[static_cast<size_t>(j--)] = 0;
        if (j < 0) break;
        ++e[static_cast<size_t>(j)];
    }
    CHECK(faithful == 2500);
    CHECK(classes.size() == 500);
}
