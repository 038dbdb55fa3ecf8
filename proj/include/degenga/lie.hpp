#ifndef DEGENGA_LIE_HPP
#define DEGENGA_LIE_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "degenga/groups.hpp"
#include "degenga/multivector.hpp"
#include "degenga/rng.hpp"
#include "degenga/subspaces.hpp"

namespace dga {

// Blade-spanned tangent space of a P-family group. The even subspace is
// always present; the odd directions come from the Grassmann or radical
// factor of the group, plus the pseudoscalar line where it is central and
// not already inside Lambda.
struct LieAlgebraSpec {
    GroupKind group;
    Signature sig;
    std::vector<BladeMask> basis;

    bool contains_blade(BladeMask m) const {
        for (BladeMask b : basis)
            if (b == m) return true;
        return false;
    }

    template <class F>
    bool contains(const Multivector<F>& u) const {
        for (const auto& [m, c] : u.terms())
            if (!contains_blade(m)) return false;
        return true;
    }
};

inline LieAlgebraSpec lie_algebra_of(GroupKind group, Signature sig) {
    if (!is_p_family(group))
        throw std::invalid_argument(
            "lie_algebra_of: only P-family groups carry their own algebra; resolve Gamma groups "
            "to a P-family first");
    const bool odd_n = sig.n() % 2 == 1;
    const BladeMask deg = sig.degenerate_mask();
    const BladeMask full = sig.full_mask();
    LieAlgebraSpec spec{group, sig, {}};
    for (BladeMask m = 0; m <= full; ++m) {
        const bool even = (blade_grade(m) & 1) == 0;
        const bool lambda_odd = !even && (m & ~deg) == 0;
        const bool rad_odd = !even && (m & deg) != 0;
        bool in = even;
        switch (group) {
            case GroupKind::Ppm: break;
            case GroupKind::PpmLambda: in = in || lambda_odd; break;
            case GroupKind::PpmRad: in = in || rad_odd; break;
            case GroupKind::P: in = in || (odd_n && m == full); break;
            case GroupKind::PLambda:
                in = in || lambda_odd || (odd_n && sig.n() != sig.r && m == full);
                break;
            default: break;
        }
        if (in) spec.basis.push_back(m);
    }
    return spec;
}

// Closed-form dimensions of the five algebras, with the boundary cases
// (r = 0, p + q = 0, n = r) spelled out.
inline long lie_dimension_formula(GroupKind group, Signature sig) {
    const long n = sig.n();
    const long half = 1L << (n - 1);
    const bool odd_n = n % 2 == 1;
    switch (group) {
        case GroupKind::Ppm: return half;
        case GroupKind::PpmLambda: return sig.r >= 1 ? half + (1L << (sig.r - 1)) : half;
        case GroupKind::PpmRad:
            return sig.p + sig.q >= 1 ? (1L << n) - (1L << (sig.p + sig.q - 1)) : (1L << n);
        case GroupKind::P: return odd_n ? half + 1 : half;
        case GroupKind::PLambda:
            if (odd_n && sig.n() != sig.r && sig.r >= 1) return half + (1L << (sig.r - 1)) + 1;
            if (odd_n && sig.r == 0) return half + 1;
            if (!odd_n && sig.r == 0) return half;
            return half + (1L << (sig.r - 1));
        default: throw std::invalid_argument("lie_dimension_formula: not a P-family group");
    }
}

// P-family (or full unit) group whose membership predicate coincides with
// the given preservation group; parity of n decides the grade-n cases.
inline GroupId resolve_to_p_family(GroupId id, Signature sig) {
    const bool odd_n = sig.n() % 2 == 1;
    switch (id.kind) {
        case GroupKind::GammaParity: return {id.k == 1 ? GroupKind::P : GroupKind::PLambda};
        case GroupKind::GammaCheckParity:
            return {id.k == 0 ? GroupKind::Ppm : GroupKind::PpmLambda};
        case GroupKind::Gamma0: return {GroupKind::Units};
        case GroupKind::GammaN:
        case GroupKind::Gamma0n: return {odd_n ? GroupKind::Units : GroupKind::PpmRad};
        case GroupKind::GammaCheck0: return {GroupKind::Ppm};
        case GroupKind::GammaCheckN: return {odd_n ? GroupKind::PpmRad : GroupKind::Units};
        case GroupKind::GammaCheck0n: return {GroupKind::P};
        default: return id;
    }
}

// Exhaustive pairwise check that commutators of basis blades stay inside the
// spanned blade set.
inline bool commutator_closed(const LieAlgebraSpec& spec) {
    for (BladeMask a : spec.basis) {
        auto ea = Multivector<Rational>::blade(spec.sig, a);
        for (BladeMask b : spec.basis) {
            auto c = commutator(ea, Multivector<Rational>::blade(spec.sig, b));
            if (!spec.contains(c)) return false;
        }
    }
    return true;
}

namespace detail {

// First-order jet a0 + eps*a1 over the algebra, truncated at eps^2.
struct Jet {
    Multivector<Rational> a0;
    Multivector<Rational> a1;
};

inline Jet jet_mul(const Jet& x, const Jet& y) {
    return {x.a0 * y.a0, x.a0 * y.a1 + x.a1 * y.a0};
}

inline Jet jet_hat(const Jet& x) { return {x.a0.grade_involution(), x.a1.grade_involution()}; }

inline Jet jet_inverse(const Jet& x) {
    auto i0 = inverse(x.a0);
    if (!i0) throw std::invalid_argument("jet inverse: constant term not invertible");
    return {*i0, -(*i0 * x.a1 * *i0)};
}

inline Multivector<double> to_double(const Multivector<Rational>& u) {
    Multivector<double> v(u.signature());
    for (const auto& [m, c] : u.terms()) v.add_term(m, c.get_d());
    return v;
}

inline double max_abs_coeff(const Multivector<double>& u) {
    double best = 0.0;
    for (const auto& [m, c] : u.terms()) best = std::max(best, std::abs(c));
    return best;
}

// exp(X / 2^k) by truncated series, with k chosen so the coefficient 1-norm
// of the scaled element stays below 1/2. The 1-norm bounds the operator norm
// of left multiplication, so the series converges to machine precision and
// the probe stays well conditioned; exp(X) itself can reach norms around
// e^{|X|} and its witness is not representable in doubles for large inputs.
// Group membership of the probe certifies the sampled direction: the full
// exponential is its 2^k-th power.
inline Multivector<double> exp_probe(const Multivector<double>& x, int series_terms) {
    double l1 = 0.0;
    for (const auto& [m, c] : x.terms()) l1 += std::abs(c);
    int k = 0;
    while (l1 >= 0.5 && k < 64) {
        l1 /= 2.0;
        ++k;
    }
    Multivector<double> y = (1.0 / std::ldexp(1.0, k)) * x;
    Multivector<double> sum = Multivector<double>::identity(x.signature());
    Multivector<double> term = Multivector<double>::identity(x.signature());
    for (int j = 1; j <= series_terms; ++j) {
        term = (1.0 / j) * (term * y);
        sum = sum + term;
    }
    return sum;
}

}  // namespace detail

struct TangencyReport {
    GroupKind group;
    Signature sig{0, 0, 1};
    int samples = 0;
    int first_order_failures = 0;
    int numeric_failures = 0;
    double max_residual = 0.0;
    bool ok() const { return first_order_failures == 0 && numeric_failures == 0; }
};

// Tangency of the algebra to its group, two ways. Exact stage: for e + eps*X
// the membership witness hat((e+eps*X)^-1)(e+eps*X) must lie in the target
// subspace modulo eps^2. Numeric stage: exponentiate X in floating point and
// require the witness components outside the target below the tolerance.
inline TangencyReport check_tangency(const LieAlgebraSpec& alg, int samples, double tolerance,
                                     Rng& rng, long bound, int series_terms = 30) {
    if (tolerance <= 0) throw std::invalid_argument("check_tangency: tolerance must be positive");
    TangencyReport report;
    report.group = alg.group;
    report.sig = alg.sig;
    report.samples = samples;
    const SubspaceSpec target = p_family_target(alg.group, alg.sig);
    const auto id = Multivector<Rational>::identity(alg.sig);

    for (int i = 0; i < samples; ++i) {
        Multivector<Rational> x = random_in_span<Rational>(rng, alg.sig, alg.basis, bound);

        detail::Jet g{id, x};
        detail::Jet w = detail::jet_mul(detail::jet_hat(detail::jet_inverse(g)), g);
        if (!(w.a0 == id) || !target.contains(w.a1)) ++report.first_order_failures;

        Multivector<double> e = detail::exp_probe(detail::to_double(x), series_terms);
        auto e_inv = inverse(e);
        if (!e_inv) {
            ++report.numeric_failures;
            continue;
        }
        Multivector<double> witness = e_inv->grade_involution() * e;
        double residual = 0.0;
        for (const auto& [m, c] : witness.terms())
            if (!target.contains_blade(m)) residual = std::max(residual, std::abs(c));
        report.max_residual = std::max(report.max_residual, residual);
        if (residual >= tolerance) ++report.numeric_failures;
    }
    return report;
}

}  // namespace dga

#endif
