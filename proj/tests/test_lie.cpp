#include <catch2/catch_amalgamated.hpp>

#include "degenga/expr.hpp"
#include "degenga/lie.hpp"
#include "degenga/rng.hpp"
#include "degenga/verify.hpp"

using dga::GroupKind;
using dga::Multivector;
using dga::Rational;
using dga::Signature;

TEST_CASE("dimension worked examples") {
    REQUIRE(dga::lie_algebra_of(GroupKind::Ppm, Signature(0, 0, 3)).basis.size() == 4);
    REQUIRE(dga::lie_algebra_of(GroupKind::PpmRad, Signature(1, 0, 1)).basis.size() == 3);
    REQUIRE(dga::lie_algebra_of(GroupKind::PLambda, Signature(1, 0, 2)).basis.size() == 7);
}

TEST_CASE("basis sizes equal the closed-form dimensions up to n = 5") {
    for (const auto& sig : dga::signatures_up_to(5))
        for (GroupKind g : dga::p_family_kinds())
            REQUIRE(static_cast<long>(dga::lie_algebra_of(g, sig).basis.size()) ==
                    dga::lie_dimension_formula(g, sig));
}

TEST_CASE("commutator closure, worked examples and exhaustive sweep") {
    REQUIRE(dga::commutator_closed(dga::lie_algebra_of(GroupKind::Ppm, Signature(2, 1, 1))));
    REQUIRE(dga::commutator_closed(dga::lie_algebra_of(GroupKind::PLambda, Signature(1, 0, 2))));
    REQUIRE(dga::commutator_closed(dga::lie_algebra_of(GroupKind::P, Signature(0, 0, 3))));
    for (const auto& sig : dga::signatures_up_to(4))
        for (GroupKind g : dga::p_family_kinds())
            REQUIRE(dga::commutator_closed(dga::lie_algebra_of(g, sig)));
}

TEST_CASE("basis chains mirror the group chains") {
    for (const auto& sig : dga::signatures_up_to(4)) {
        auto subset = [](const std::vector<dga::BladeMask>& a,
                         const std::vector<dga::BladeMask>& b) {
            return std::includes(b.begin(), b.end(), a.begin(), a.end());
        };
        auto pm = dga::lie_algebra_of(GroupKind::Ppm, sig).basis;
        auto pml = dga::lie_algebra_of(GroupKind::PpmLambda, sig).basis;
        auto pmr = dga::lie_algebra_of(GroupKind::PpmRad, sig).basis;
        auto p = dga::lie_algebra_of(GroupKind::P, sig).basis;
        auto pl = dga::lie_algebra_of(GroupKind::PLambda, sig).basis;
        REQUIRE(subset(pm, pml));
        REQUIRE(subset(pml, pmr));
        REQUIRE(subset(pm, p));
        REQUIRE(subset(p, pl));
    }
}

TEST_CASE("non-degenerate and Grassmann collapse tables") {
    for (const auto& sig : dga::signatures_up_to(4)) {
        if (sig.r == 0) {
            REQUIRE(dga::lie_algebra_of(GroupKind::Ppm, sig).basis ==
                    dga::lie_algebra_of(GroupKind::PpmLambda, sig).basis);
            REQUIRE(dga::lie_algebra_of(GroupKind::Ppm, sig).basis ==
                    dga::lie_algebra_of(GroupKind::PpmRad, sig).basis);
            REQUIRE(dga::lie_algebra_of(GroupKind::P, sig).basis ==
                    dga::lie_algebra_of(GroupKind::PLambda, sig).basis);
        }
        if (sig.p == 0 && sig.q == 0) {
            auto full = dga::all_blades(sig);
            REQUIRE(dga::lie_algebra_of(GroupKind::PpmLambda, sig).basis == full);
            REQUIRE(dga::lie_algebra_of(GroupKind::PpmRad, sig).basis == full);
            REQUIRE(dga::lie_algebra_of(GroupKind::PLambda, sig).basis == full);
            REQUIRE(dga::lie_algebra_of(GroupKind::Ppm, sig).basis ==
                    dga::subspace(sig, dga::SubspaceKind::Parity, 0).basis());
            REQUIRE(dga::lie_algebra_of(GroupKind::P, sig).basis ==
                    dga::subspace(sig, dga::SubspaceKind::Center).basis());
        }
    }
}

TEST_CASE("preservation groups resolve to the expected families") {
    Signature odd(1, 0, 2), even(1, 1, 2);
    using dga::GroupId;
    REQUIRE(dga::resolve_to_p_family({GroupKind::GammaParity, 1}, odd).kind == GroupKind::P);
    REQUIRE(dga::resolve_to_p_family({GroupKind::GammaParity, 0}, odd).kind ==
            GroupKind::PLambda);
    REQUIRE(dga::resolve_to_p_family({GroupKind::GammaCheckParity, 0}, odd).kind ==
            GroupKind::Ppm);
    REQUIRE(dga::resolve_to_p_family({GroupKind::GammaCheckParity, 1}, odd).kind ==
            GroupKind::PpmLambda);
    REQUIRE(dga::resolve_to_p_family({GroupKind::Gamma0}, odd).kind == GroupKind::Units);
    REQUIRE(dga::resolve_to_p_family({GroupKind::GammaN}, odd).kind == GroupKind::Units);
    REQUIRE(dga::resolve_to_p_family({GroupKind::GammaN}, even).kind == GroupKind::PpmRad);
    REQUIRE(dga::resolve_to_p_family({GroupKind::Gamma0n}, even).kind == GroupKind::PpmRad);
    REQUIRE(dga::resolve_to_p_family({GroupKind::GammaCheck0}, even).kind == GroupKind::Ppm);
    REQUIRE(dga::resolve_to_p_family({GroupKind::GammaCheckN}, odd).kind == GroupKind::PpmRad);
    REQUIRE(dga::resolve_to_p_family({GroupKind::GammaCheckN}, even).kind == GroupKind::Units);
    REQUIRE(dga::resolve_to_p_family({GroupKind::GammaCheck0n}, odd).kind == GroupKind::P);
    REQUIRE_THROWS_AS(dga::lie_algebra_of(GroupKind::Gamma0, odd), std::invalid_argument);
}

TEST_CASE("nilpotent exponentials land in their groups") {
    Signature g003(0, 0, 3);
    auto e3 = dga::Multivector<Rational>::blade(g003, 4u);
    auto exp_e3 = dga::Multivector<Rational>::identity(g003) + e3;  // e3^2 = 0
    REQUIRE((e3 * e3).is_zero());
    REQUIRE(dga::group_member<Rational>({GroupKind::PpmLambda}, exp_e3).member);

    auto e123 = dga::Multivector<Rational>::blade(g003, 7u);
    auto exp_e123 = dga::Multivector<Rational>::identity(g003) + e123;
    REQUIRE((e123 * e123).is_zero());
    REQUIRE(dga::group_member<Rational>({GroupKind::P}, exp_e123).member);
}

TEST_CASE("tangency holds in both stages for all five algebras") {
    for (const auto& sig : {Signature(2, 0, 0), Signature(0, 0, 3), Signature(1, 0, 2),
                            Signature(1, 1, 1)}) {
        for (GroupKind g : dga::p_family_kinds()) {
            dga::Rng rng(dga::derive_seed(42, "lie/tangency/" + dga::lie_name(g) + sig.str()));
            auto report =
                dga::check_tangency(dga::lie_algebra_of(g, sig), 15, 1e-9, rng, 3);
            INFO(dga::lie_name(g) << " in G(" << sig.str() << ") residual "
                                  << report.max_residual);
            REQUIRE(report.first_order_failures == 0);
            REQUIRE(report.numeric_failures == 0);
        }
    }
    dga::Rng rng(dga::derive_seed(42, "lie/tangency/tol"));
    REQUIRE_THROWS_AS(dga::check_tangency(dga::lie_algebra_of(GroupKind::Ppm, Signature(2, 0, 0)),
                                          1, 0.0, rng, 3),
                      std::invalid_argument);
}

TEST_CASE("rotor exponential stays in the even group numerically") {
    Signature sig(2, 0, 0);
    auto x = dga::Multivector<Rational>::blade(sig, 3u, Rational(3));  // 3*e12
    dga::LieAlgebraSpec alg = dga::lie_algebra_of(GroupKind::Ppm, sig);
    dga::Rng rng(dga::derive_seed(42, "lie/rotor"));
    auto report = dga::check_tangency(alg, 10, 1e-9, rng, 5);
    REQUIRE(report.numeric_failures == 0);
    REQUIRE(alg.contains(x));
}
