// Acceptance gate: one check per release criterion, each printed as a single
// pass/fail line. Exact arithmetic throughout; the only tolerance appears in
// the Lie tangency helper, which is not part of this gate.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "degenga/expr.hpp"
#include "degenga/groups.hpp"
#include "degenga/lie.hpp"
#include "degenga/matrix_rep.hpp"
#include "degenga/multivector.hpp"
#include "degenga/rng.hpp"
#include "degenga/verify.hpp"

using dga::BladeMask;
using dga::GroupId;
using dga::GroupKind;
using dga::Multivector;
using dga::Rational;
using dga::Signature;
using dga::SubspaceKind;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr long kBound = 5;

struct Gate {
    int failures = 0;

    void run(int number, const std::string& title, const std::function<bool(std::string&)>& fn) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = false;
        try {
            pass = fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2d [%s] %-58s (%.1fs)%s%s\n", number, pass ? "PASS" : "FAIL",
                    title.c_str(), secs, detail.empty() ? "" : " :: ", detail.c_str());
        std::fflush(stdout);
        if (!pass) ++failures;
    }
};

dga::Rng rng_for(const std::string& tag, Signature sig) {
    return dga::Rng(dga::derive_seed(kSeed, "acceptance/" + tag + "/" + sig.str()));
}

Multivector<Rational> mv(const std::string& text, Signature sig) {
    return *dga::parse<Rational>(text, sig).value;
}

bool criterion_kernels(std::string& detail) {
    for (const auto& sig : dga::signatures_up_to(4)) {
        auto rng = rng_for("kernels", sig);
        auto ad_spec = dga::kernel_spec(dga::Rep::Adjoint, sig);
        auto tw_spec = dga::kernel_spec(dga::Rep::TwistedAdjoint, sig);
        for (int i = 0; i < 200; ++i) {
            auto t = dga::random_invertible<Rational>(rng, sig, kBound);
            auto t_inv = *dga::inverse(t);
            bool fixes_ad = true, fixes_tw = true;
            for (BladeMask m : dga::all_blades(sig)) {
                auto b = Multivector<Rational>::blade(sig, m);
                if (fixes_ad && dga::adjoint_conjugate(dga::Rep::Adjoint, t, t_inv, b) != b)
                    fixes_ad = false;
                if (fixes_tw && dga::adjoint_conjugate(dga::Rep::TwistedAdjoint, t, t_inv, b) != b)
                    fixes_tw = false;
                if (!fixes_ad && !fixes_tw) break;
            }
            if (fixes_ad != ad_spec.contains(t) || fixes_tw != tw_spec.contains(t)) {
                detail = "discrepancy in G(" + sig.str() + ") at " + dga::to_string(t);
                return false;
            }
        }
    }
    return true;
}

bool criterion_commutants(std::string& detail) {
    for (const auto& sig : dga::signatures_up_to(4)) {
        bool ok =
            dga::centralizer(dga::CommutantKind::Twisted,
                             dga::subspace(sig, SubspaceKind::Grade, 1)) ==
                dga::subspace(sig, SubspaceKind::Lambda).basis() &&
            dga::centralizer(dga::CommutantKind::Plain,
                             dga::subspace(sig, SubspaceKind::Parity, 0)) ==
                dga::subspace(sig, SubspaceKind::LambdaPlusGn).basis() &&
            dga::centralizer(dga::CommutantKind::Twisted,
                             dga::subspace(sig, SubspaceKind::Parity, 0)) ==
                dga::subspace(sig, sig.n() % 2 == 1 ? SubspaceKind::LambdaEven
                                                    : SubspaceKind::LambdaEvenPlusGn)
                    .basis();
        if (!ok) {
            detail = "commutant formula fails in G(" + sig.str() + ")";
            return false;
        }
    }
    return true;
}

bool criterion_invertibility(std::string& detail) {
    for (const auto& sig : dga::signatures_up_to(4)) {
        auto rng = rng_for("invertibility", sig);
        auto rad = dga::subspace(sig, SubspaceKind::Rad).basis();
        auto g0rad = dga::subspace(sig, SubspaceKind::G0PlusRad).basis();
        for (int i = 0; i < 500; ++i) {
            auto x = dga::random_multivector<Rational>(rng, sig, kBound);
            auto y = dga::random_in_span<Rational>(rng, sig, rad, kBound);
            if (!dga::is_invertible(Multivector<Rational>::identity(sig) + x * y)) {
                detail = "e + x*y singular in G(" + sig.str() + ")";
                return false;
            }
            auto t = dga::random_in_span<Rational>(rng, sig, g0rad, kBound);
            if (dga::is_invertible(t) != !dga::is_zero(t.coeff(0))) {
                detail = "unit criterion fails in G(" + sig.str() + ") at " + dga::to_string(t);
                return false;
            }
        }
    }
    return true;
}

bool run_identities(const std::string& tag,
                    const std::vector<std::pair<GroupId, GroupId>>& pairs, int max_n,
                    std::string& detail) {
    for (const auto& sig : dga::signatures_up_to(max_n)) {
        for (const auto& [lhs, rhs] : pairs) {
            auto rng = rng_for(tag + "/" + lhs.name() + "=" + rhs.name(), sig);
            auto rep = dga::verify_group_identity<Rational>(lhs, rhs, sig, 200, rng, kBound);
            if (!rep.ok) {
                detail = lhs.name() + " vs " + rhs.name() + " in G(" + sig.str() +
                         "): " + rep.discrepancy;
                return false;
            }
        }
    }
    return true;
}

bool criterion_parity_identities(std::string& detail) {
    std::vector<std::pair<GroupId, GroupId>> pairs = {
        {{GroupKind::P}, {GroupKind::GammaParity, 1}},
        {{GroupKind::PLambda}, {GroupKind::GammaParity, 0}},
        {{GroupKind::Ppm}, {GroupKind::GammaCheckParity, 0}},
        {{GroupKind::PpmLambda}, {GroupKind::GammaCheckParity, 1}},
    };
    if (!run_identities("thm-parity", pairs, 4, detail)) return false;
    for (const auto& sig : dga::signatures_up_to(4)) {
        for (auto [sub, super] :
             {std::pair<GroupId, GroupId>{{GroupKind::P}, {GroupKind::PLambda}},
              std::pair<GroupId, GroupId>{{GroupKind::Ppm}, {GroupKind::PpmLambda}}}) {
            auto rng = rng_for("thm-incl/" + sub.name(), sig);
            auto rep = dga::verify_group_inclusion<Rational>(sub, super, sig, 200, rng, kBound);
            if (!rep.ok) {
                detail = sub.name() + " not inside " + super.name() + " in G(" + sig.str() + ")";
                return false;
            }
        }
    }
    return true;
}

bool criterion_grade_identities(std::string& detail) {
    for (const auto& sig : dga::signatures_up_to(4)) {
        for (GroupKind gk :
             {GroupKind::Gamma0, GroupKind::GammaN, GroupKind::Gamma0n, GroupKind::GammaCheck0,
              GroupKind::GammaCheckN, GroupKind::GammaCheck0n}) {
            GroupId gamma{gk};
            GroupId resolved = dga::resolve_to_p_family(gamma, sig);
            auto rng = rng_for("thm-grade/" + gamma.name(), sig);
            auto rep =
                dga::verify_group_identity<Rational>(gamma, resolved, sig, 200, rng, kBound);
            if (!rep.ok) {
                detail = gamma.name() + " != " + resolved.name() + " in G(" + sig.str() +
                         "): " + rep.discrepancy;
                return false;
            }
        }
    }
    return true;
}

bool criterion_counterexample(std::string& detail) {
    Signature sig(0, 0, 3);
    auto report = dga::counterexample_check<Rational>(sig);
    if (!report.all_as_expected()) {
        detail = "the four membership facts do not all hold";
        return false;
    }
    bool witnesses =
        report.gamma1_violation && report.gamma1_violation->first == 2u &&
        report.gamma1_violation->second == mv("e2 + 2*e12", sig) &&
        report.gamma_check2_violation && report.gamma_check2_violation->first == 6u &&
        report.gamma_check2_violation->second == mv("e23 - 2*e123", sig);
    if (!witnesses) {
        detail = "violation witnesses differ from the displayed multivectors";
        return false;
    }
    auto t_inv = *dga::inverse(report.t);
    bool images =
        dga::adjoint_conjugate(dga::Rep::Adjoint, report.t, t_inv, mv("e12", sig)) ==
            mv("e12", sig) &&
        dga::adjoint_conjugate(dga::Rep::TwistedAdjoint, report.t, t_inv, mv("e2", sig)) ==
            mv("e2", sig);
    if (!images) detail = "preserved blade images differ";
    return images;
}

bool criterion_lie(std::string& detail) {
    for (const auto& sig : dga::signatures_up_to(6)) {
        for (GroupKind g : dga::p_family_kinds()) {
            long got = static_cast<long>(dga::lie_algebra_of(g, sig).basis.size());
            long expected = dga::lie_dimension_formula(g, sig);
            if (got != expected) {
                detail = dga::lie_name(g) + " in G(" + sig.str() + "): dim " +
                         std::to_string(got) + " != " + std::to_string(expected);
                return false;
            }
        }
    }
    for (const auto& sig : dga::signatures_up_to(5)) {
        for (GroupKind g : dga::p_family_kinds()) {
            if (!dga::commutator_closed(dga::lie_algebra_of(g, sig))) {
                detail = dga::lie_name(g) + " in G(" + sig.str() + ") is not closed";
                return false;
            }
        }
    }
    return true;
}

bool criterion_matrix(std::string& detail) {
    auto configs = dga::load_matrix_reps_file(std::string(DEGENGA_DATA_DIR) + "/matrix_reps.txt");
    for (const auto& cfg : configs) {
        if (!dga::matrix_relations_ok(cfg)) {
            detail = cfg.id + ": Clifford relations fail";
            return false;
        }
    }

    const auto& l1 = dga::find_matrix_rep(configs, "lambda1_in_G110");
    const auto& l2 = dga::find_matrix_rep(configs, "lambda2_in_G220");
    const auto& g101 = dga::find_matrix_rep(configs, "g101_in_G210");

    {
        auto m = dga::represent(l1, mv("e1", l1.source));
        if (!(m.at(0, 0) == 0 && m.at(0, 1) == 1 && m.at(1, 0) == 0 && m.at(1, 1) == 0)) {
            detail = "lambda1: generator image differs";
            return false;
        }
        auto rng = rng_for("matrix", l1.source);
        for (int i = 0; i < 200; ++i) {
            auto u = dga::random_multivector<Rational>(rng, l1.source, kBound);
            auto r = dga::represent(l1, u);
            if (!(r.at(0, 0) == u.coeff(0) && r.at(1, 1) == u.coeff(0) &&
                  r.at(0, 1) == u.coeff(1) && r.at(1, 0) == 0)) {
                detail = "lambda1: family pattern differs";
                return false;
            }
        }
    }
    {
        auto rng = rng_for("matrix", l2.source);
        for (int i = 0; i < 200; ++i) {
            auto u = dga::random_multivector<Rational>(rng, l2.source, kBound);
            auto r = dga::represent(l2, u);
            bool ok = r.at(0, 0) == u.coeff(0) && r.at(1, 1) == u.coeff(0) &&
                      r.at(2, 2) == u.coeff(0) && r.at(3, 3) == u.coeff(0) &&
                      r.at(0, 1) == u.coeff(1) && r.at(2, 3) == u.coeff(1) &&
                      r.at(0, 2) == u.coeff(2) && r.at(1, 3) == -u.coeff(2) &&
                      r.at(0, 3) == -u.coeff(3) && dga::is_zero(r.at(1, 2));
            for (std::size_t rr = 0; rr < 4 && ok; ++rr)
                for (std::size_t cc = 0; cc < rr; ++cc)
                    if (!dga::is_zero(r.at(rr, cc))) ok = false;
            if (!ok) {
                detail = "lambda2: family pattern (including the -x2 entry) differs";
                return false;
            }
        }
    }
    {
        auto rng = rng_for("matrix", g101.source);
        auto even_basis = dga::subspace(g101.source, SubspaceKind::Parity, 0).basis();
        auto odd_basis = dga::subspace(g101.source, SubspaceKind::Parity, 1).basis();
        for (int i = 0; i < 200; ++i) {
            auto even = dga::random_in_span<Rational>(rng, g101.source, even_basis, kBound);
            auto me = dga::represent(g101, even);
            bool even_ok = me.at(0, 0) == even.coeff(0) && me.at(0, 1) == even.coeff(3) &&
                           me.at(1, 1) == even.coeff(0) && me.at(2, 2) == even.coeff(0) &&
                           me.at(2, 3) == even.coeff(3) && me.at(3, 3) == even.coeff(0);
            auto odd = dga::random_in_span<Rational>(rng, g101.source, odd_basis, kBound);
            auto mo = dga::represent(g101, odd);
            bool odd_ok = mo.at(0, 0) == odd.coeff(1) && mo.at(0, 1) == odd.coeff(2) &&
                          mo.at(1, 1) == -odd.coeff(1) && mo.at(2, 2) == -odd.coeff(1) &&
                          mo.at(2, 3) == -odd.coeff(2) && mo.at(3, 3) == odd.coeff(1);
            if (!even_ok || !odd_ok) {
                detail = "g101: branch pattern (including the -x1 entries) differs";
                return false;
            }
        }
    }
    return true;
}

bool criterion_atlas(std::string& detail) {
    dga::VerifyOptions opt;
    opt.samples = 40;
    opt.seed = kSeed;
    opt.coeff_bound = kBound;
    using Classes = std::vector<std::vector<std::string>>;

    auto expect = [&](Signature sig, const Classes& want) {
        auto row = dga::compute_atlas_row<Rational>(sig, opt);
        if (row.coincidence_classes != want || !row.sampling_consistent) {
            detail = "atlas row for G(" + sig.str() + ") differs from the documented chain";
            return false;
        }
        return true;
    };

    if (!expect(Signature(0, 0, 1),
                Classes{{"P_pm"}, {"P", "P_pm_Lambda", "P_Lambda", "P_pm_rad"}}))
        return false;
    if (!expect(Signature(0, 0, 2), Classes{{"P_pm", "P"}, {"P_pm_Lambda", "P_Lambda", "P_pm_rad"}}))
        return false;
    if (!expect(Signature(0, 0, 3),
                Classes{{"P_pm"}, {"P"}, {"P_pm_Lambda", "P_Lambda", "P_pm_rad"}}))
        return false;

    for (const auto& sig : dga::signatures_up_to(4)) {
        if (sig.r != 0) continue;
        Classes want = sig.n() % 2 == 0
                           ? Classes{{"P_pm", "P", "P_pm_Lambda", "P_Lambda", "P_pm_rad"}}
                           : Classes{{"P_pm", "P_pm_Lambda", "P_pm_rad"}, {"P", "P_Lambda"}};
        if (!expect(sig, want)) return false;
    }
    return true;
}

bool criterion_parser(std::string& detail) {
    for (const auto& sig : dga::signatures_up_to(6)) {
        auto rng = rng_for("parser", sig);
        for (int i = 0; i < 1000; ++i) {
            auto u = dga::random_multivector<Rational>(rng, sig, 9);
            auto back = dga::parse<Rational>(dga::to_string(u), sig);
            if (!back.ok() || *back.value != u) {
                detail = "round trip failed in G(" + sig.str() + ") for " + dga::to_string(u);
                return false;
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    Gate gate;
    gate.run(1, "kernel formulas: fixed points of ad and twisted ad", criterion_kernels);
    gate.run(2, "commutant formulas match the nullspace bases exactly", criterion_commutants);
    gate.run(3, "radical perturbation and grade-0 unit criterion", criterion_invertibility);
    gate.run(4, "parity-preservation group identities", criterion_parity_identities);
    gate.run(5, "grade-0/n preservation group identities", criterion_grade_identities);
    gate.run(6, "grade-preservation counterexample, bit-exact", criterion_counterexample);
    gate.run(7, "Lie algebra dimensions (n<=6) and closure (n<=5)", criterion_lie);
    gate.run(8, "matrix example families, bit-exact", criterion_matrix);
    gate.run(9, "atlas coincidence chains for Grassmann and r=0", criterion_atlas);
    gate.run(10, "parser round trip, 1000 samples per signature (n<=6)", criterion_parser);
    if (gate.failures) {
        std::printf("%d criterion(s) failed\n", gate.failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
