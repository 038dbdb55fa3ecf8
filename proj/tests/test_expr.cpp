#include <catch2/catch_amalgamated.hpp>

#include "degenga/expr.hpp"
#include "degenga/rng.hpp"
#include "degenga/verify.hpp"

using dga::GaussianRational;
using dga::Multivector;
using dga::Rational;
using dga::Signature;

TEST_CASE("parsing the worked examples") {
    Signature g200(2, 0, 0);
    auto r = dga::parse<Rational>("1 + 2*e1 - 3*e12", g200);
    REQUIRE(r.ok());
    REQUIRE(r.value->coeff(0) == 1);
    REQUIRE(r.value->coeff(1) == 2);
    REQUIRE(r.value->coeff(3) == -3);

    Signature g003(0, 0, 3);
    auto prod = dga::parse<Rational>("(e + e1)*(e - e1)", g003);
    REQUIRE(prod.ok());
    REQUIRE(*prod.value == Multivector<Rational>::identity(g003));

    auto bad = dga::parse<Rational>("e21", g003);
    REQUIRE_FALSE(bad.ok());
    REQUIRE(bad.error.find("ascending") != std::string::npos);
}

TEST_CASE("parse errors carry positions and reasons") {
    Signature sig(2, 0, 0);
    auto bad_token = dga::parse<Rational>("e1 $ e2", sig);
    REQUIRE_FALSE(bad_token.ok());
    REQUIRE(bad_token.error_pos == 3);

    auto out_of_range = dga::parse<Rational>("e3", sig);
    REQUIRE_FALSE(out_of_range.ok());
    REQUIRE(out_of_range.error.find("out of range") != std::string::npos);

    auto imag = dga::parse<Rational>("2i", sig);
    REQUIRE_FALSE(imag.ok());
    REQUIRE(imag.error.find("imaginary") != std::string::npos);
    REQUIRE_FALSE(dga::parse<Rational>("i", sig).ok());

    auto zero_den = dga::parse<Rational>("3/0", sig);
    REQUIRE_FALSE(zero_den.ok());
    REQUIRE(zero_den.error.find("denominator") != std::string::npos);

    auto juxt = dga::parse<Rational>("2e1", sig);
    REQUIRE_FALSE(juxt.ok());

    auto dup = dga::parse<Rational>("e11", sig);
    REQUIRE_FALSE(dup.ok());

    Signature big(6, 0, 6);
    auto digit_form = dga::parse<Rational>("e12", big);
    REQUIRE_FALSE(digit_form.ok());
    REQUIRE(digit_form.error.find("e[") != std::string::npos);
    auto bracket = dga::parse<Rational>("e[1,12]", big);
    REQUIRE(bracket.ok());
    REQUIRE(bracket.value->coeff((1u << 0) | (1u << 11)) == 1);
    REQUIRE(dga::parse<Rational>("e3", big).ok());  // single digit stays legal
}

TEST_CASE("precedence: power binds tighter than unary minus and product") {
    Signature sig(1, 0, 0);
    auto sq = dga::parse<Rational>("2*e1^2", sig);
    REQUIRE(sq.ok());
    REQUIRE(*sq.value == *dga::parse<Rational>("2", sig).value);

    auto neg = dga::parse<Rational>("-3^2", sig);
    REQUIRE(neg.ok());
    REQUIRE(neg.value->coeff(0) == -9);

    auto zero_pow = dga::parse<Rational>("e1^0", sig);
    REQUIRE(zero_pow.ok());
    REQUIRE(*zero_pow.value == Multivector<Rational>::identity(sig));

    REQUIRE_FALSE(dga::parse<Rational>("e1^(2)", sig).ok());
    REQUIRE_FALSE(dga::parse<Rational>("e1^1/2", sig).ok());
}

TEST_CASE("printer canonical forms") {
    Signature sig(2, 0, 1);
    REQUIRE(dga::to_string(Multivector<Rational>::zero(sig)) == "0");
    REQUIRE(dga::to_string(Multivector<Rational>::scalar(sig, dga::rational_of(3, 2))) ==
            "3/2*e");
    auto u = *dga::parse<Rational>("e2 + 2*e12", sig).value;
    REQUIRE(dga::to_string(u) == "e2 + 2*e12");
    auto v = *dga::parse<Rational>("e - e1", sig).value;
    REQUIRE(dga::to_string(v) == "e - e1");
    auto w = *dga::parse<Rational>("-e1 - 1/2", sig).value;
    REQUIRE(dga::to_string(w) == "-1/2*e - e1");
}

TEST_CASE("complex literals and printing") {
    Signature sig(1, 1, 0);
    auto i = dga::parse<GaussianRational>("i", sig);
    REQUIRE(i.ok());
    auto sq = *i.value * *i.value;
    REQUIRE(sq == -Multivector<GaussianRational>::identity(sig));

    auto lit = dga::parse<GaussianRational>("3/4i", sig);
    REQUIRE(lit.ok());
    REQUIRE(lit.value->coeff(0) == GaussianRational(Rational(0), dga::rational_of(3, 4)));

    auto mixed = dga::parse<GaussianRational>("(1/2+i)*e12 - 2*i*e1", sig);
    REQUIRE(mixed.ok());
    auto text = dga::to_string(*mixed.value);
    auto back = dga::parse<GaussianRational>(text, sig);
    REQUIRE(back.ok());
    REQUIRE(*back.value == *mixed.value);
}

TEST_CASE("round trip on random multivectors in both modes") {
    dga::Rng rng(dga::derive_seed(42, "expr/roundtrip"));
    for (const auto& sig : dga::signatures_up_to(5)) {
        for (int i = 0; i < 60; ++i) {
            auto u = dga::random_multivector<Rational>(rng, sig, 9);
            auto back = dga::parse<Rational>(dga::to_string(u), sig);
            REQUIRE(back.ok());
            REQUIRE(*back.value == u);

            auto w = dga::random_multivector<GaussianRational>(rng, sig, 9);
            auto wback = dga::parse<GaussianRational>(dga::to_string(w), sig);
            REQUIRE(wback.ok());
            REQUIRE(*wback.value == w);
        }
    }
    // bracket blade names appear once n > 9 and still round trip
    Signature big(5, 0, 6);
    for (int i = 0; i < 20; ++i) {
        auto u = dga::random_multivector<Rational>(rng, big, 5);
        auto back = dga::parse<Rational>(dga::to_string(u), big);
        REQUIRE(back.ok());
        REQUIRE(*back.value == u);
    }
}

TEST_CASE("printer is deterministic") {
    dga::Rng rng(dga::derive_seed(42, "expr/deterministic"));
    Signature sig(1, 1, 1);
    for (int i = 0; i < 20; ++i) {
        auto u = dga::random_multivector<Rational>(rng, sig, 5);
        REQUIRE(dga::to_string(u) == dga::to_string(u));
    }
}
