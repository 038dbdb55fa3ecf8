#ifndef DEGENGA_GROUPS_HPP
#define DEGENGA_GROUPS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degenga/multivector.hpp"
#include "degenga/rng.hpp"
#include "degenga/subspaces.hpp"

namespace dga {

// The five P-families are decided through w = hat(T^-1) T landing in a fixed
// blade-spanned subspace of invertible elements; the Gamma families preserve
// a grade or parity subspace under conjugation. Gamma^k for 0 < k < n is
// deliberately unsupported: those groups behave differently and only the
// counterexample checker touches them.
enum class GroupKind {
    Ppm,
    P,
    PpmLambda,
    PLambda,
    PpmRad,
    GammaParity,
    GammaCheckParity,
    Gamma0,
    GammaN,
    Gamma0n,
    GammaCheck0,
    GammaCheckN,
    GammaCheck0n,
    Units,
};

struct GroupId {
    GroupKind kind;
    int k = 0;  // parity parameter for GammaParity / GammaCheckParity

    std::string name() const {
        switch (kind) {
            case GroupKind::Ppm: return "P_pm";
            case GroupKind::P: return "P";
            case GroupKind::PpmLambda: return "P_pm_Lambda";
            case GroupKind::PLambda: return "P_Lambda";
            case GroupKind::PpmRad: return "P_pm_rad";
            case GroupKind::GammaParity: return "Gamma_parity_" + std::to_string(k);
            case GroupKind::GammaCheckParity: return "Gamma_check_parity_" + std::to_string(k);
            case GroupKind::Gamma0: return "Gamma_0";
            case GroupKind::GammaN: return "Gamma_n";
            case GroupKind::Gamma0n: return "Gamma_0n";
            case GroupKind::GammaCheck0: return "Gamma_check_0";
            case GroupKind::GammaCheckN: return "Gamma_check_n";
            case GroupKind::GammaCheck0n: return "Gamma_check_0n";
            case GroupKind::Units: return "units";
        }
        return "?";
    }
};

inline bool is_p_family(GroupKind kind) {
    switch (kind) {
        case GroupKind::Ppm:
        case GroupKind::P:
        case GroupKind::PpmLambda:
        case GroupKind::PLambda:
        case GroupKind::PpmRad: return true;
        default: return false;
    }
}

inline const std::vector<GroupKind>& p_family_kinds() {
    static const std::vector<GroupKind> kinds = {GroupKind::Ppm, GroupKind::P,
                                                 GroupKind::PpmLambda, GroupKind::PLambda,
                                                 GroupKind::PpmRad};
    return kinds;
}

// Target subspace of w = hat(T^-1) T in the dimension-independent equivalent
// definition of each P-family.
inline SubspaceSpec p_family_target(GroupKind kind, Signature sig) {
    switch (kind) {
        case GroupKind::Ppm: return subspace(sig, SubspaceKind::Grade, 0);
        case GroupKind::P: return subspace(sig, SubspaceKind::S);
        case GroupKind::PpmLambda: return subspace(sig, SubspaceKind::Lambda);
        case GroupKind::PLambda: return subspace(sig, SubspaceKind::LambdaPlusGn);
        case GroupKind::PpmRad: return subspace(sig, SubspaceKind::G0PlusRad);
        default: throw std::invalid_argument("p_family_target: not a P-family group");
    }
}

// Intersection of all equivalent w-targets of the group, including the
// parity-resolved ones. Used for the exact coincidence decision: two of the
// five groups are equal exactly when these blade bases agree (for even n the
// targets Lambda and Lambda+G^n characterize the same group, so comparing
// the unconditional targets alone would miss coincidences).
inline SubspaceSpec p_family_minimal_target(GroupKind kind, Signature sig) {
    const bool odd = sig.n() % 2 == 1;
    switch (kind) {
        case GroupKind::Ppm: return subspace(sig, SubspaceKind::Grade, 0);
        case GroupKind::P: return subspace(sig, SubspaceKind::S);
        case GroupKind::PpmLambda: return subspace(sig, SubspaceKind::Lambda);
        case GroupKind::PLambda:
            return subspace(sig, odd ? SubspaceKind::LambdaPlusGn : SubspaceKind::Lambda);
        case GroupKind::PpmRad: return subspace(sig, SubspaceKind::G0PlusRad);
        default: throw std::invalid_argument("p_family_minimal_target: not a P-family group");
    }
}

struct GammaDefinition {
    Rep rep;
    SubspaceSpec preserved;
};

inline GammaDefinition gamma_definition(GroupId id, Signature sig) {
    switch (id.kind) {
        case GroupKind::GammaParity:
            return {Rep::Adjoint, subspace(sig, SubspaceKind::Parity, id.k)};
        case GroupKind::GammaCheckParity:
            return {Rep::TwistedAdjoint, subspace(sig, SubspaceKind::Parity, id.k)};
        case GroupKind::Gamma0: return {Rep::Adjoint, subspace(sig, SubspaceKind::Grade, 0)};
        case GroupKind::GammaN: return {Rep::Adjoint, subspace(sig, SubspaceKind::Grade, sig.n())};
        case GroupKind::Gamma0n: return {Rep::Adjoint, subspace(sig, SubspaceKind::Grade0n)};
        case GroupKind::GammaCheck0:
            return {Rep::TwistedAdjoint, subspace(sig, SubspaceKind::Grade, 0)};
        case GroupKind::GammaCheckN:
            return {Rep::TwistedAdjoint, subspace(sig, SubspaceKind::Grade, sig.n())};
        case GroupKind::GammaCheck0n:
            return {Rep::TwistedAdjoint, subspace(sig, SubspaceKind::Grade0n)};
        default: throw std::invalid_argument("gamma_definition: not a Gamma group");
    }
}

// ad_T(U) = T U T^-1 and its twist hat(T) U T^-1, with the inverse supplied
// by the caller when it is already known.
template <class F>
Multivector<F> adjoint_conjugate(Rep rep, const Multivector<F>& t, const Multivector<F>& t_inv,
                                 const Multivector<F>& u) {
    if (rep == Rep::Adjoint) return t * u * t_inv;
    return t.grade_involution() * u * t_inv;
}

template <class F>
Multivector<F> adjoint_conjugate(Rep rep, const Multivector<F>& t, const Multivector<F>& u) {
    auto t_inv = inverse(t);
    if (!t_inv) throw std::invalid_argument("adjoint_conjugate: t is not invertible");
    return adjoint_conjugate(rep, t, *t_inv, u);
}

template <class F>
struct MembershipReport {
    GroupId group;
    Multivector<F> element;
    bool member = false;
    // P-families: the computed hat(T^-1) T. Gamma families: the first basis
    // blade whose conjugate escapes the preserved subspace, with its image.
    std::optional<Multivector<F>> witness;
    std::optional<std::pair<BladeMask, Multivector<F>>> violation;
};

// First preserved-subspace basis blade whose conjugate leaves the subspace,
// or nullopt when the whole subspace is preserved. By linearity this decides
// preservation of the span exactly.
template <class F>
std::optional<std::pair<BladeMask, Multivector<F>>> subspace_preservation_violation(
    Rep rep, const Multivector<F>& t, const Multivector<F>& t_inv, const SubspaceSpec& spec) {
    for (BladeMask b : spec.basis()) {
        Multivector<F> image =
            adjoint_conjugate(rep, t, t_inv, Multivector<F>::blade(spec.sig, b));
        if (!spec.contains(image)) return std::make_pair(b, image);
    }
    return std::nullopt;
}

template <class F>
MembershipReport<F> p_family_member(GroupId id, const Multivector<F>& t,
                                    const std::optional<Multivector<F>>& t_inv) {
    if (!is_p_family(id.kind)) throw std::invalid_argument("p_family_member: not a P-family group");
    MembershipReport<F> report{id, t};
    if (!t_inv) return report;  // all groups sit inside the unit group
    Multivector<F> w = t_inv->grade_involution() * t;
    report.witness = w;
    // w is a product of invertibles, hence invertible; the subspace predicate
    // is the whole decision.
    report.member = p_family_target(id.kind, t.signature()).contains(w);
    return report;
}

template <class F>
MembershipReport<F> gamma_member(GroupId id, const Multivector<F>& t,
                                 const std::optional<Multivector<F>>& t_inv) {
    GammaDefinition def = gamma_definition(id, t.signature());
    MembershipReport<F> report{id, t};
    if (!t_inv) return report;
    auto violation = subspace_preservation_violation(def.rep, t, *t_inv, def.preserved);
    if (violation) {
        report.violation = violation;
    } else {
        report.member = true;
    }
    return report;
}

template <class F>
MembershipReport<F> group_member(GroupId id, const Multivector<F>& t,
                                 const std::optional<Multivector<F>>& t_inv) {
    if (is_p_family(id.kind)) return p_family_member(id, t, t_inv);
    if (id.kind == GroupKind::Units) {
        MembershipReport<F> report{id, t};
        report.member = t_inv.has_value();
        return report;
    }
    return gamma_member(id, t, t_inv);
}

template <class F>
MembershipReport<F> group_member(GroupId id, const Multivector<F>& t) {
    return group_member(id, t, inverse(t));
}

// Reproduces the grade-preservation counterexample for T = e + e_1 in a
// Grassmann algebra of odd-capable size: T fails Gamma^1 and Gamma-check^2
// but lies in Gamma^2 and Gamma-check^1, separating the single-grade groups
// from the families above.
template <class F>
struct CounterexampleReport {
    Signature sig;
    Multivector<F> t;
    bool not_in_gamma1 = false;
    bool in_gamma2 = false;
    bool in_gamma_check1 = false;
    bool not_in_gamma_check2 = false;
    std::optional<std::pair<BladeMask, Multivector<F>>> gamma1_violation;
    std::optional<std::pair<BladeMask, Multivector<F>>> gamma_check2_violation;

    bool all_as_expected() const {
        return not_in_gamma1 && in_gamma2 && in_gamma_check1 && not_in_gamma_check2;
    }
};

template <class F = Rational>
CounterexampleReport<F> counterexample_check(Signature sig = Signature(0, 0, 3)) {
    if (sig.p != 0 || sig.q != 0 || sig.n() < 3)
        throw std::invalid_argument("counterexample: needs a Grassmann algebra with n >= 3");
    Multivector<F> t = Multivector<F>::identity(sig) + Multivector<F>::blade(sig, 1u);
    auto t_inv = inverse(t);
    if (!t_inv) throw std::logic_error("counterexample: e + e1 must be invertible");

    CounterexampleReport<F> report{sig, t};
    auto g1 = subspace_preservation_violation(Rep::Adjoint, t, *t_inv,
                                              subspace(sig, SubspaceKind::Grade, 1));
    report.not_in_gamma1 = g1.has_value();
    report.gamma1_violation = g1;
    report.in_gamma2 = !subspace_preservation_violation(Rep::Adjoint, t, *t_inv,
                                                        subspace(sig, SubspaceKind::Grade, 2))
                            .has_value();
    report.in_gamma_check1 = !subspace_preservation_violation(
                                  Rep::TwistedAdjoint, t, *t_inv,
                                  subspace(sig, SubspaceKind::Grade, 1))
                                  .has_value();
    auto gc2 = subspace_preservation_violation(Rep::TwistedAdjoint, t, *t_inv,
                                               subspace(sig, SubspaceKind::Grade, 2));
    report.not_in_gamma_check2 = gc2.has_value();
    report.gamma_check2_violation = gc2;
    return report;
}

inline bool has_sampler(GroupKind kind) { return is_p_family(kind) || kind == GroupKind::Units; }

// Draws a member through the factorized definition: a pure-parity invertible
// A times invertible central / Grassmann / grade-0-plus-radical factors as
// the group requires. The result passes the membership predicate by the
// equivalence theorems; verify_group_identity cross-checks exactly that.
template <class F>
Multivector<F> sample_group_element(GroupId id, Signature sig, Rng& rng, long bound) {
    if (id.kind == GroupKind::Units) return random_invertible<F>(rng, sig, bound);
    if (!is_p_family(id.kind))
        throw std::invalid_argument("sample_group_element: no factorized sampler for " + id.name());
    Multivector<F> a = random_pure_parity_invertible<F>(rng, sig, bound);
    switch (id.kind) {
        case GroupKind::Ppm: return a;
        case GroupKind::P:
            return a * random_invertible_in<F>(rng, subspace(sig, SubspaceKind::Center), bound);
        case GroupKind::PpmLambda:
            return a * random_invertible_in<F>(rng, subspace(sig, SubspaceKind::Lambda), bound);
        case GroupKind::PLambda:
            return a * random_invertible_in<F>(rng, subspace(sig, SubspaceKind::Center), bound) *
                   random_invertible_in<F>(rng, subspace(sig, SubspaceKind::Lambda), bound);
        case GroupKind::PpmRad:
            return a * random_invertible_in<F>(rng, subspace(sig, SubspaceKind::G0PlusRad), bound);
        default: break;
    }
    throw std::logic_error("sample_group_element: unreachable");
}

template <class F>
struct IdentityReport {
    std::string lhs;
    std::string rhs;
    Signature sig{0, 0, 1};
    int random_checked = 0;
    int sampled_checked = 0;
    bool ok = true;
    std::string discrepancy;  // empty when ok
    std::optional<Multivector<F>> witness_element;
};

// Checks lhs = rhs as sets: membership agreement on random invertibles, and
// members produced by each side's factorized sampler (where one exists) must
// pass the other side's predicate.
template <class F>
IdentityReport<F> verify_group_identity(GroupId lhs, GroupId rhs, Signature sig, int samples,
                                        Rng& rng, long bound) {
    IdentityReport<F> report{lhs.name(), rhs.name(), sig};
    for (int i = 0; i < samples && report.ok; ++i) {
        Multivector<F> t = random_invertible<F>(rng, sig, bound);
        auto t_inv = inverse(t);
        bool in_l = group_member(lhs, t, t_inv).member;
        bool in_r = group_member(rhs, t, t_inv).member;
        ++report.random_checked;
        if (in_l != in_r) {
            report.ok = false;
            report.discrepancy = "membership differs on random element";
            report.witness_element = t;
        }
    }
    for (GroupId side : {lhs, rhs}) {
        if (!has_sampler(side.kind)) continue;
        GroupId other = (side.kind == lhs.kind && side.k == lhs.k) ? rhs : lhs;
        for (int i = 0; i < samples && report.ok; ++i) {
            Multivector<F> t = sample_group_element<F>(side, sig, rng, bound);
            ++report.sampled_checked;
            if (!group_member(other, t).member) {
                report.ok = false;
                report.discrepancy = "sample of " + side.name() + " escapes " + other.name();
                report.witness_element = t;
            }
        }
    }
    return report;
}

// Sampled check of lhs being a subgroup of rhs.
template <class F>
IdentityReport<F> verify_group_inclusion(GroupId lhs, GroupId rhs, Signature sig, int samples,
                                         Rng& rng, long bound) {
    IdentityReport<F> report{lhs.name(), rhs.name(), sig};
    for (int i = 0; i < samples && report.ok; ++i) {
        Multivector<F> t = random_invertible<F>(rng, sig, bound);
        auto t_inv = inverse(t);
        ++report.random_checked;
        if (group_member(lhs, t, t_inv).member && !group_member(rhs, t, t_inv).member) {
            report.ok = false;
            report.discrepancy = "random member of " + lhs.name() + " escapes " + rhs.name();
            report.witness_element = t;
        }
    }
    if (has_sampler(lhs.kind)) {
        for (int i = 0; i < samples && report.ok; ++i) {
            Multivector<F> t = sample_group_element<F>(lhs, sig, rng, bound);
            ++report.sampled_checked;
            if (!group_member(rhs, t).member) {
                report.ok = false;
                report.discrepancy = "sample of " + lhs.name() + " escapes " + rhs.name();
                report.witness_element = t;
            }
        }
    }
    return report;
}

}  // namespace dga

#endif
