#include <catch2/catch.hpp>

#include <string>
#include <vector>

#include "fgq/nil2.hpp"
#include "fgq/suciu.hpp"

#include "test_util.hpp"

using namespace fgq;
using testutil::W;
using testutil::xk_by_formula;

TEST_CASE("f and its inverse") {
    Endo f = suciu::make_f();
    REQUIRE(apply(f, W("a")) == W("b"));
    REQUIRE(apply(f, W("b")) == W("a^-1 b"));
    REQUIRE(apply(compose(f, f), W("a")) == W("a^-1 b"));
    REQUIRE(apply(compose(f, compose(f, f)), W("a")) == W("b^-1 a^-1 b"));

    Endo finv = suciu::make_f_inverse();
    REQUIRE(compose(f, finv) == Endo::identity(2));
    REQUIRE(compose(finv, f) == Endo::identity(2));
}

TEST_CASE("the displayed iterates f^j(a), j = 1..7") {
    const std::vector<std::string> displayed = {
        "b",
        "a^-1 b",
        "b^-1 a^-1 b",
        "b^-1 a b^-1 a^-1 b",
        "b^-1 a^2 b^-1 a^-1 b",
        "b^-1 a b a b^-1 a^-1 b",
        "b^-1 a b a^-1 b a b^-1 a^-1 b",
    };
    Endo f = suciu::make_f();
    Word image = W("a");
    for (std::size_t j = 0; j < displayed.size(); ++j) {
        image = apply(f, image);
        REQUIRE(to_string(image) == displayed[j]);
    }
}

TEST_CASE("make_fk") {
    REQUIRE(suciu::make_fk(1).images() == std::vector<Word>{W("a b a^-1"), W("b a^-1")});
    REQUIRE(suciu::make_fk(2).images() == std::vector<Word>{W("a^2 b a^-2"), W("a b a^-2")});

    IntMatrix expected(2);
    expected.at(0, 0) = 0;
    expected.at(0, 1) = -1;
    expected.at(1, 0) = 1;
    expected.at(1, 1) = 1;
    REQUIRE(abelianization(suciu::make_fk(7)) == expected);

    for (std::int64_t k = 1; k <= 6; ++k) {
        REQUIRE(suciu::make_fk(k) ==
                compose(inner(pow(W("a"), k)), suciu::make_f()));
        Endo finv = suciu::make_fk_inverse(k);
        REQUIRE(compose(suciu::make_fk(k), finv) == Endo::identity(2));
        REQUIRE(compose(finv, suciu::make_fk(k)) == Endo::identity(2));
    }
    REQUIRE_THROWS_AS(suciu::make_fk(0), error);
}

TEST_CASE("x_k closed form") {
    REQUIRE(suciu::xk_closed_form(1) == W("a b a^-1 b^-1"));
    REQUIRE(suciu::xk_closed_form(2) == W("a^2 b^2 a^-1 b a^-2 b^-2 a b^-1"));
    for (std::int64_t k = 1; k <= 100; ++k) {
        Word xk = suciu::xk_closed_form(k);
        REQUIRE(xk == xk_by_formula(k));
        REQUIRE(exponent_vector(xk) == ExponentVector{0, 0});
    }
    REQUIRE_THROWS_AS(suciu::xk_closed_form(0), error);
}

TEST_CASE("verify_lemma produces valid certificates") {
    for (std::int64_t k = 1; k <= 12; ++k) {
        suciu::SuciuCertificate cert = suciu::verify_lemma(k);
        INFO("k = " << k);
        REQUIRE(cert.valid());
        REQUIRE(cert.witness == suciu::xk_closed_form(k));
        REQUIRE(cert.mu_value == suciu::mu(k));
        REQUIRE(cert.sixth_power == inner(*cert.witness));
    }
    REQUIRE(*suciu::verify_lemma(1).witness == comm(W("a"), W("b")));
    REQUIRE(suciu::verify_lemma(2).to_report().passed());
}

TEST_CASE("mu") {
    REQUIRE(suciu::mu(1) == 1);
    REQUIRE(suciu::mu(2) == 7);
    REQUIRE(suciu::mu(3) == 19);
    std::int64_t prev = 0;
    for (std::int64_t k = 1; k <= 1000; ++k) {
        std::int64_t m = suciu::mu(k);
        REQUIRE(m == area(suciu::xk_closed_form(k)));
        REQUIRE(m > prev);
        prev = m;
    }
    REQUIRE_THROWS_AS(suciu::mu(0), error);
    REQUIRE_THROWS_AS(suciu::mu(2000000000), overflow_error);
}

TEST_CASE("blockwise orbit invariant matches at large k") {
    for (std::int64_t k : {1, 2, 3, 10, 1000, 123456, 1000000})
        REQUIRE(suciu::xk_orbit_invariant(k) == suciu::mu(k));
}

TEST_CASE("nonconjugacy certificate") {
    Report r = suciu::nonconjugacy_certificate(5);
    REQUIRE(r.passed());
    const Check* c = r.find_check("invariants-match-3k^2-3k+1");
    REQUIRE(c != nullptr);
    REQUIRE(c->detail == "1, 7, 19, 37, 61");

    REQUIRE(suciu::nonconjugacy_certificate(2).passed());
    REQUIRE_THROWS_AS(suciu::nonconjugacy_certificate(1), error);

    // scalable path
    REQUIRE(suciu::nonconjugacy_certificate(100000, /*materialize=*/false).passed());
}

TEST_CASE("order certificate and its independent recheck") {
    Report r = suciu::order_certificate(1);
    REQUIRE(r.passed());
    REQUIRE(r.find_check("inner-power")->detail == "6");
    REQUIRE(r.find_check("witness")->detail == "a b a^-1 b^-1");

    Report r4 = suciu::order_certificate(4);
    REQUIRE(r4.passed());
    REQUIRE(r4.find_check("witness")->detail == to_string(suciu::xk_closed_form(4)));

    // re-verification from the serialized report alone
    for (std::int64_t k = 1; k <= 8; ++k) {
        jsonval serialized = suciu::order_certificate(k).to_json();
        REQUIRE(suciu::recheck_order_certificate(serialized).passed());
        // round-trip stability
        jsonval again = Report::from_json(serialized).to_json();
        REQUIRE(serialized == again);
    }

    // a tampered witness must be rejected
    jsonval bad = suciu::order_certificate(2).to_json();
    for (auto& ch : bad.at("checks"))
        if (ch.at("name") == "witness")
            ch["detail"] = "a b a^-1 b^-1";  // witness for k = 1, not k = 2
    REQUIRE(!suciu::recheck_order_certificate(bad).passed());
}
