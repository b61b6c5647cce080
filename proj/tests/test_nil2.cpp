#include <catch2/catch.hpp>

#include <random>

#include "fgq/endo.hpp"
#include "fgq/nil2.hpp"
#include "fgq/random_words.hpp"

#include "test_util.hpp"

using namespace fgq;
using testutil::W;
using testutil::xk_by_formula;

TEST_CASE("exponent vectors") {
    REQUIRE(exponent_vector(W("a")) == ExponentVector{1, 0});
    REQUIRE(exponent_vector(W("a^3 b^-2")) == ExponentVector{3, -2});
    for (std::int64_t k = 1; k <= 10; ++k)
        REQUIRE(exponent_vector(xk_by_formula(k)) == ExponentVector{0, 0});

    std::mt19937_64 rng(211);
    for (int i = 0; i < 500; ++i) {
        Word u = random_reduced_word(rng, 2, rng() % 60);
        Word v = random_reduced_word(rng, 2, rng() % 60);
        ExponentVector eu = exponent_vector(u), ev = exponent_vector(v);
        REQUIRE(exponent_vector(mul(u, v)) == ExponentVector{eu[0] + ev[0], eu[1] + ev[1]});
    }
}

TEST_CASE("area of basic commutator words") {
    Word a = W("a"), b = W("b");
    REQUIRE(area(comm(a, b)) == 1);
    REQUIRE(area(comm(b, a)) == -1);
    REQUIRE(area(xk_by_formula(2)) == 7);
    REQUIRE(area(comm(comm(a, b), a)) == 0);
    REQUIRE(area(comm(pow(a, -2), pow(b, -2))) == 4);
    REQUIRE(area(Word(2)) == 0);
}

TEST_CASE("area rejects words outside the commutator subgroup") {
    REQUIRE_THROWS_AS(area(W("a")), not_in_commutator_subgroup);
    try {
        area(W("a b^-2"));
    } catch (const not_in_commutator_subgroup& e) {
        REQUIRE(e.exponents() == ExponentVector{1, -2});
    }
    REQUIRE_THROWS_AS(area_via_magnus(W("b")), not_in_commutator_subgroup);
    REQUIRE_THROWS_AS(orbit_invariant(W("a b")), not_in_commutator_subgroup);
}

TEST_CASE("magnus expansion on generators and the basic commutator") {
    REQUIRE(magnus2(Word(2)) == Series2::one());
    REQUIRE(magnus2(W("a")) == Series2{1, 1, 0, 0, 0, 0, 0});
    // (1+X)(1+Y)(1-X+XX)(1-Y+YY) = 1 + XY - YX + O(deg 3)
    REQUIRE(magnus2(comm(W("a"), W("b"))) == Series2{1, 0, 0, 0, 1, -1, 0});

    std::mt19937_64 rng(223);
    for (int i = 0; i < 500; ++i) {
        Word u = random_reduced_word(rng, 2, rng() % 40);
        Word v = random_reduced_word(rng, 2, rng() % 40);
        REQUIRE(magnus2(mul(u, v)) == magnus2(u) * magnus2(v));
        Series2 s = magnus2(u);
        REQUIRE(s.c0 == 1);  // group-like
        ExponentVector ev = exponent_vector(u);
        REQUIRE(s.cx == ev[0]);
        REQUIRE(s.cy == ev[1]);
    }
}

TEST_CASE("area via the magnus oracle") {
    REQUIRE(area_via_magnus(comm(W("a"), W("b"))) == 1);
    REQUIRE(area_via_magnus(xk_by_formula(1)) == 1);
    REQUIRE(area_via_magnus(xk_by_formula(3)) == 19);
}

TEST_CASE("oracle equivalence: shoelace vs magnus") {
    // exhaustive over all reduced words of length <= 8 with zero exponents
    testutil::for_each_reduced_word(8, [&](const Word& w) {
        ExponentVector ev = exponent_vector(w);
        if (ev[0] != 0 || ev[1] != 0)
            return;
        REQUIRE(area(w) == area_via_magnus(w));
    });
    // random commutator-subgroup words
    std::mt19937_64 rng(227);
    for (int i = 0; i < 3000; ++i) {
        Word w = random_commutator_word(rng, 2);
        REQUIRE(area(w) == area_via_magnus(w));
    }
}

TEST_CASE("area is a homomorphism on the commutator subgroup") {
    std::mt19937_64 rng(229);
    for (int i = 0; i < 1000; ++i) {
        Word u = random_commutator_word(rng, 2);
        Word v = random_commutator_word(rng, 2);
        REQUIRE(area(mul(u, v)) == area(u) + area(v));
    }
}

TEST_CASE("the exterior product rule for commutators") {
    std::mt19937_64 rng(233);
    for (int i = 0; i < 1000; ++i) {
        Word u = random_reduced_word(rng, 2, rng() % 50);
        Word v = random_reduced_word(rng, 2, rng() % 50);
        ExponentVector eu = exponent_vector(u), ev = exponent_vector(v);
        REQUIRE(area(comm(u, v)) == eu[0] * ev[1] - eu[1] * ev[0]);
    }
}

TEST_CASE("conjugation preserves area") {
    std::mt19937_64 rng(239);
    for (int i = 0; i < 1000; ++i) {
        Word x = random_reduced_word(rng, 2, rng() % 50);
        Word w = random_commutator_word(rng, 2);
        REQUIRE(area(conj(x, w)) == area(w));
    }
}

TEST_CASE("automorphisms scale area by the determinant sign") {
    std::mt19937_64 rng(241);
    Endo f({W("b"), W("a^-1 b")});
    Endo swap_ab({W("b"), W("a")});
    for (std::int64_t k : {1, 2, 5}) {
        WordBuilder fa(2), fb(2);
        fa.push(0, k).push(1, 1).push(0, -k);
        fb.push(0, k - 1).push(1, 1).push(0, -k);
        Endo fk({fa.take(), fb.take()});
        for (int i = 0; i < 200; ++i) {
            Word w = random_commutator_word(rng, 2);
            Word x = random_reduced_word(rng, 2, rng() % 20);
            REQUIRE(area(apply(f, w)) == area(w));        // det = +1
            REQUIRE(area(apply(fk, w)) == area(w));       // det = +1
            REQUIRE(area(apply(inner(x), w)) == area(w)); // det = +1
            REQUIRE(area(apply(swap_ab, w)) == -area(w)); // det = -1
            REQUIRE(orbit_invariant(apply(swap_ab, w)) == orbit_invariant(w));
        }
    }
    REQUIRE(abelianization(swap_ab).det() == -1);
    REQUIRE(abelianization(f).det() == 1);
}

TEST_CASE("the three displayed commutator evaluations") {
    Word a = W("a"), b = W("b");
    for (std::int64_t k = 1; k <= 10; ++k) {
        Word lhs1 = comm(mul(pow(a, k), pow(b, k)), pow(mul(inv(a), b), k - 1));
        REQUIRE(area(lhs1) == 2 * k * (k - 1));
        Word lhs2 = comm(pow(a, -k), pow(b, -k));
        REQUIRE(area(lhs2) == k * k);
        Word lhs3 = pow(comm(a, inv(b)), k - 1);
        REQUIRE(area(lhs3) == -(k - 1));
        // and their product accounts for the whole invariant
        REQUIRE(area(lhs1) + area(lhs2) + area(lhs3) == 3 * k * k - 3 * k + 1);
    }
}

TEST_CASE("orbit invariants of x_k") {
    REQUIRE(orbit_invariant(comm(W("a"), W("b"))) == 1);
    REQUIRE(orbit_invariant(comm(W("b"), W("a"))) == 1);
    Endo f1({W("a b a^-1"), W("b a^-1")});
    REQUIRE(orbit_invariant(apply(f1, comm(W("a"), W("b")))) == 1);
    for (std::int64_t k = 1; k <= 10; ++k)
        REQUIRE(orbit_invariant(xk_by_formula(k)) == 3 * k * k - 3 * k + 1);
}

TEST_CASE("blockwise power-product area agrees with materialized words") {
    Word a = W("a"), b = W("b");
    using Factors = std::vector<std::pair<Word, std::int64_t>>;

    Factors commutator = {{a, 1}, {b, 1}, {a, -1}, {b, -1}};
    REQUIRE(area_of_power_product(commutator) == 1);

    for (std::int64_t k = 1; k <= 50; ++k) {
        Factors xk = {{a, k},  {b, k},  {mul(inv(a), b), k - 1},
                      {a, -k}, {b, -k}, {mul(a, inv(b)), k - 1}};
        REQUIRE(area_of_power_product(xk) == area(xk_by_formula(k)));
    }

    std::mt19937_64 rng(251);
    for (int rep = 0; rep < 500; ++rep) {
        Factors fs;
        WordBuilder expanded(2);
        int blocks = 2 + static_cast<int>(rng() % 5);
        for (int i = 0; i < blocks; ++i) {
            Word w = random_reduced_word(rng, 2, rng() % 8);
            std::int64_t e = static_cast<std::int64_t>(rng() % 15) - 7;
            fs.emplace_back(w, e);
            expanded.append_power(w, e);
        }
        Word total = expanded.take();
        ExponentVector ev = exponent_vector(total);
        if (ev[0] != 0 || ev[1] != 0) {
            REQUIRE_THROWS_AS(area_of_power_product(fs), not_in_commutator_subgroup);
        } else {
            REQUIRE(area_of_power_product(fs) == area(total));
        }
    }
}
