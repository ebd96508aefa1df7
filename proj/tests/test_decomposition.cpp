#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wreathchar/decomposition.hpp"
#include "wreathchar/errors.hpp"
#include "wreathchar/search.hpp"
#include "wreathchar/tuple.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

using namespace wreathchar;
using detail::SplitMix64;

namespace {

Tuple make(const std::vector<int>& entries) {
    return Tuple(Prime(static_cast<int>(entries.size())), entries);
}

OrbitRep rep(const std::vector<int>& entries) {
    return OrbitRep(make(entries));
}

OrbitRep random_nonconstant_rep(SplitMix64& rng, int p) {
    std::vector<int> e(static_cast<size_t>(p));
    for (;;) {
        for (int& v : e) v = detail::uniform_residue(rng, p);
        Tuple t(Prime(p), e);
        if (!t.is_constant()) return OrbitRep(t);
    }
}

std::set<Tuple> class_set(const std::vector<Tuple>& tuples) {
    std::set<Tuple> out;
    for (const Tuple& t : tuples) out.insert(canonical_rotation(t).tuple());
    return out;
}

} // namespace

TEST_CASE("product sums of the canonical p=5 pair collapse to the listed classes") {
    auto sums = product_sums(rep({1, 0, 0, 0, 0}), rep({1, 1, 0, 0, 0}));
    CHECK(sums.size() == 25);

    std::set<Tuple> expected = class_set({make({2, 1, 0, 0, 0}), make({1, 2, 0, 0, 0}),
                                          make({1, 1, 1, 0, 0}), make({1, 1, 0, 1, 0}),
                                          make({1, 1, 0, 0, 1})});
    CHECK(expected.size() == 4);  // third and last listed tuples share a class
    CHECK(class_set(sums) == expected);
}

TEST_CASE("product sums of the weight-one class with itself") {
    // Every sum is a rotation pair e_i + e_j: either weight 2 at one spot
    // or two ones.
    auto sums = product_sums(rep({0, 0, 0, 0, 1}), rep({0, 0, 0, 0, 1}));
    CHECK(sums.size() == 25);
    for (const Tuple& s : sums) {
        int weight2 = 0, weight1 = 0, zero = 0;
        for (int i = 0; i < 5; ++i) {
            if (s[i] == 2) ++weight2;
            else if (s[i] == 1) ++weight1;
            else if (s[i] == 0) ++zero;
        }
        const bool doubled = (weight2 == 1 && weight1 == 0 && zero == 4);
        const bool two_ones = (weight2 == 0 && weight1 == 2 && zero == 3);
        CHECK((doubled || two_ones));
    }
}

TEST_CASE("the zero tuple appears exactly p times when psi is the negated class") {
    SplitMix64 rng(11);
    for (int p : {3, 5, 7}) {
        for (int trial = 0; trial < 20; ++trial) {
            OrbitRep phi = random_nonconstant_rep(rng, p);
            std::vector<int> neg(static_cast<size_t>(p));
            for (int i = 0; i < p; ++i) neg[static_cast<size_t>(i)] = (p - phi.tuple()[i]) % p;
            OrbitRep psi(Tuple(Prime(p), neg));

            auto sums = product_sums(phi, psi);
            long long zeros = std::count(sums.begin(), sums.end(), Tuple::zero(Prime(p)));
            CHECK(zeros == p);
        }
    }
}

TEST_CASE("product inputs are validated") {
    CHECK_THROWS_AS(product_sums(rep({1, 1, 1}), rep({1, 0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(product_sums(rep({1, 0, 0}), rep({1, 0, 0, 0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(decompose(rep({0, 0, 0, 0, 0}), rep({1, 0, 0, 0, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(count_distinct(rep({2, 2, 2}), rep({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("decomposition of the canonical p=5 pair") {
    Decomposition d = decompose(rep({1, 0, 0, 0, 0}), rep({1, 1, 0, 0, 0}));
    CHECK(d.distinct_count == 4);
    CHECK(d.degree_total == 25);

    const OrbitRep collided = rep({1, 1, 1, 0, 0});
    for (const auto& [id, mult] : d.constituents) {
        REQUIRE(std::holds_alternative<InducedChar>(id));
        const auto& ind = std::get<InducedChar>(id);
        CHECK(mult == (ind.rep == collided ? 2 : 1));
    }
}

TEST_CASE("decomposition with a constant sum produces all p linear extensions") {
    // phi = (1,0,0,0,0), psi = class of (4,0,0,0,0): aligned rotations sum
    // to the zero tuple, the rest give one 1 and one 4 at distinct spots.
    Decomposition d = decompose(rep({1, 0, 0, 0, 0}), rep({4, 0, 0, 0, 0}));
    CHECK(d.degree_total == 25);
    CHECK(d.distinct_count == 9);  // 5 linear extensions of c=0 plus 4 induced classes

    int linear = 0, induced = 0;
    for (const auto& [id, mult] : d.constituents) {
        if (const auto* lin = std::get_if<LinearExtChar>(&id)) {
            CHECK(lin->c == 0);
            CHECK(mult == 1);
            ++linear;
        } else {
            CHECK(mult == 1);
            ++induced;
        }
    }
    CHECK(linear == 5);
    CHECK(induced == 4);
}

TEST_CASE("count_distinct equals the decomposition's distinct count") {
    SplitMix64 rng(222);
    for (int p : {2, 3, 5, 7}) {
        for (int trial = 0; trial < 50; ++trial) {
            OrbitRep phi = random_nonconstant_rep(rng, p);
            OrbitRep psi = random_nonconstant_rep(rng, p);
            CHECK(count_distinct(phi, psi) == decompose(phi, psi).distinct_count);
        }
    }
    // Boundary of the packed-code fast path (13^13 still fits in 63 bits).
    for (int p : {11, 13}) {
        for (int trial = 0; trial < 10; ++trial) {
            OrbitRep phi = random_nonconstant_rep(rng, p);
            OrbitRep psi = random_nonconstant_rep(rng, p);
            CHECK(count_distinct(phi, psi) == decompose(phi, psi).distinct_count);
        }
    }
}

TEST_CASE("count_distinct for the canonical pair is p-1") {
    CHECK(count_distinct(rep({1, 0, 0, 0, 0}), rep({1, 1, 0, 0, 0})) == 4);
    CHECK(count_distinct(rep({1, 0, 0, 0, 0, 0, 0}), rep({1, 1, 0, 0, 0, 0, 0})) == 6);
    CHECK(count_distinct(OrbitRep(Tuple::parse("1,0,0,0,0,0,0,0,0,0,0")),
                         OrbitRep(Tuple::parse("1,1,0,0,0,0,0,0,0,0,0"))) == 10);
}

TEST_CASE("degree conservation on random pairs") {
    SplitMix64 rng(333);
    for (int p : {3, 5, 7}) {
        for (int trial = 0; trial < 100; ++trial) {
            OrbitRep phi = random_nonconstant_rep(rng, p);
            OrbitRep psi = random_nonconstant_rep(rng, p);
            Decomposition d = decompose(phi, psi);
            CHECK(d.degree_total == static_cast<long long>(p) * p);
        }
    }
}

TEST_CASE("exact-tuple counts are constant across each rotation class") {
    SplitMix64 rng(444);
    for (int p : {3, 5}) {
        for (int trial = 0; trial < 30; ++trial) {
            OrbitRep phi = random_nonconstant_rep(rng, p);
            OrbitRep psi = random_nonconstant_rep(rng, p);
            std::map<Tuple, int> counts;
            for (const Tuple& s : product_sums(phi, psi)) ++counts[s];
            for (const auto& [t, m] : counts) {
                for (int s = 1; s < p; ++s) {
                    auto it = counts.find(rotated(t, s));
                    REQUIRE(it != counts.end());
                    CHECK(it->second == m);
                }
            }
        }
    }
}

TEST_CASE("count_distinct is invariant under swap, simultaneous shift, and scale") {
    SplitMix64 rng(555);
    for (int p : {3, 5, 7}) {
        for (int trial = 0; trial < 100; ++trial) {
            OrbitRep phi = random_nonconstant_rep(rng, p);
            OrbitRep psi = random_nonconstant_rep(rng, p);
            const int base = count_distinct(phi, psi);
            CHECK(count_distinct(psi, phi) == base);
            const int s = 1 + detail::uniform_residue(rng, p - 1);
            CHECK(count_distinct(OrbitRep(rotated(phi.tuple(), s)),
                                 OrbitRep(rotated(psi.tuple(), s))) == base);
            const int k = 1 + detail::uniform_residue(rng, p - 1);
            CHECK(count_distinct(OrbitRep(scale(phi.tuple(), k)),
                                 OrbitRep(scale(psi.tuple(), k))) == base);
        }
    }
}

TEST_CASE("verify_theorem at p=5 reproduces the full walkthrough") {
    TheoremReport r = verify_theorem(Prime(5));
    CHECK(r.passed);
    CHECK(r.distinct_constituents == 4);
    CHECK(r.pre_collapse_distinct_tuples == 5);

    std::vector<Tuple> expected = {make({2, 1, 0, 0, 0}), make({1, 2, 0, 0, 0}),
                                   make({1, 1, 1, 0, 0}), make({1, 1, 0, 1, 0}),
                                   make({1, 1, 0, 0, 1})};
    CHECK(r.walkthrough_sums == expected);
    CHECK(r.collision == std::pair<int, int>{2, 4});
    CHECK(r.sum_classes[2] == r.sum_classes[4]);
    CHECK(r.sum_classes[2].tuple() == make({0, 0, 1, 1, 1}));
}

TEST_CASE("verify_theorem counts p-1 for larger primes") {
    CHECK(verify_theorem(Prime(7)).distinct_constituents == 6);
    CHECK(verify_theorem(Prime(7)).collision == std::pair<int, int>{2, 6});
    CHECK(verify_theorem(Prime(11)).distinct_constituents == 10);
}

TEST_CASE("verify_theorem rejects p below 5") {
    CHECK_THROWS_AS(verify_theorem(Prime(3)), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem(Prime(2)), std::invalid_argument);
}

TEST_CASE("character id degrees and labels") {
    CharacterId a = InducedChar{rep({0, 0, 1})};
    CharacterId b = LinearExtChar{0, 0};
    CHECK(a != b);
    CHECK(degree_of(a, 3) == 3);
    CHECK(degree_of(b, 3) == 1);
    CHECK(character_str(a) == "induced(0,0,1)");
    CHECK(character_str(b) == "linear(c=0,e=0)");
}
