#ifndef DEGENGA_SUBSPACES_HPP
#define DEGENGA_SUBSPACES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "degenga/linalg.hpp"
#include "degenga/multivector.hpp"
#include "degenga/signature.hpp"

namespace dga {

// Every subspace used by the theory is spanned by canonical blades, so a
// subspace is a named predicate on blade masks. Lambda is the Grassmann
// subalgebra on the degenerate generators; Rad is the span of blades with at
// least one degenerate index; Center and S fold in the pseudoscalar line for
// odd n.
enum class SubspaceKind {
    Grade,
    Parity,
    Lambda,
    LambdaEven,
    LambdaOdd,
    Rad,
    RadEven,
    RadOdd,
    Center,
    S,
    Grade0n,
    G0PlusRad,
    G0PlusRadEven,
    G0nPlusRadEven,
    LambdaPlusGn,
    LambdaEvenPlusGn,
    Full,
};

struct SubspaceSpec {
    Signature sig;
    SubspaceKind kind;
    int k = 0;  // grade or parity parameter

    bool contains_blade(BladeMask m) const {
        const BladeMask deg = sig.degenerate_mask();
        const BladeMask full = sig.full_mask();
        const bool even = (blade_grade(m) & 1) == 0;
        const bool in_lambda = (m & ~deg) == 0;
        const bool in_rad = (m & deg) != 0;
        switch (kind) {
            case SubspaceKind::Grade: return blade_grade(m) == k;
            case SubspaceKind::Parity: return (blade_grade(m) & 1) == k;
            case SubspaceKind::Lambda: return in_lambda;
            case SubspaceKind::LambdaEven: return in_lambda && even;
            case SubspaceKind::LambdaOdd: return in_lambda && !even;
            case SubspaceKind::Rad: return in_rad;
            case SubspaceKind::RadEven: return in_rad && even;
            case SubspaceKind::RadOdd: return in_rad && !even;
            case SubspaceKind::Center:
                return (in_lambda && even) || (sig.n() % 2 == 1 && m == full);
            case SubspaceKind::S: return m == 0 || (sig.n() % 2 == 1 && m == full);
            case SubspaceKind::Grade0n: return m == 0 || m == full;
            case SubspaceKind::G0PlusRad: return m == 0 || in_rad;
            case SubspaceKind::G0PlusRadEven: return m == 0 || (in_rad && even);
            case SubspaceKind::G0nPlusRadEven:
                return m == 0 || m == full || (in_rad && even);
            case SubspaceKind::LambdaPlusGn: return in_lambda || m == full;
            case SubspaceKind::LambdaEvenPlusGn: return (in_lambda && even) || m == full;
            case SubspaceKind::Full: return true;
        }
        return false;
    }

    std::vector<BladeMask> basis() const {
        std::vector<BladeMask> out;
        for (BladeMask m = 0; m <= sig.full_mask(); ++m)
            if (contains_blade(m)) out.push_back(m);
        return out;
    }

    std::size_t dimension() const { return basis().size(); }

    template <class F>
    bool contains(const Multivector<F>& u) const {
        if (u.signature() != sig) throw std::invalid_argument("subspace test: signature mismatch");
        for (const auto& [m, c] : u.terms())
            if (!contains_blade(m)) return false;
        return true;
    }

    std::string name() const {
        switch (kind) {
            case SubspaceKind::Grade: return "Grade(" + std::to_string(k) + ")";
            case SubspaceKind::Parity: return "Parity(" + std::to_string(k) + ")";
            case SubspaceKind::Lambda: return "Lambda";
            case SubspaceKind::LambdaEven: return "LambdaEven";
            case SubspaceKind::LambdaOdd: return "LambdaOdd";
            case SubspaceKind::Rad: return "Rad";
            case SubspaceKind::RadEven: return "RadEven";
            case SubspaceKind::RadOdd: return "RadOdd";
            case SubspaceKind::Center: return "Center";
            case SubspaceKind::S: return "S";
            case SubspaceKind::Grade0n: return "Grade0n";
            case SubspaceKind::G0PlusRad: return "G0plusRad";
            case SubspaceKind::G0PlusRadEven: return "G0plusRadEven";
            case SubspaceKind::G0nPlusRadEven: return "G0nPlusRadEven";
            case SubspaceKind::LambdaPlusGn: return "LambdaPlusGn";
            case SubspaceKind::LambdaEvenPlusGn: return "LambdaEvenPlusGn";
            case SubspaceKind::Full: return "Full";
        }
        return "?";
    }
};

inline SubspaceSpec subspace(Signature sig, SubspaceKind kind, int k = 0) {
    if (kind == SubspaceKind::Grade && (k < 0 || k > sig.n()))
        throw std::invalid_argument("grade subspace: k out of range");
    if (kind == SubspaceKind::Parity && (k < 0 || k > 1))
        throw std::invalid_argument("parity subspace: k must be 0 or 1");
    return SubspaceSpec{sig, kind, k};
}

enum class Rep { Adjoint, TwistedAdjoint };

// Formula subspace whose invertible elements form ker(ad) resp. ker(ad-check):
// ad has kernel Z^x (LambdaEven + G^n for odd n, LambdaEven for even n); the
// twisted kernel is LambdaEven^x in every dimension.
inline SubspaceSpec kernel_spec(Rep rep, Signature sig) {
    if (rep == Rep::TwistedAdjoint) return subspace(sig, SubspaceKind::LambdaEven);
    return subspace(sig, (sig.n() % 2 == 1) ? SubspaceKind::LambdaEvenPlusGn
                                            : SubspaceKind::LambdaEven);
}

enum class CommutantKind { Plain, Twisted };

// Blade basis of {X : X V = V X for all V in the generating subspace}
// (Plain), or with the grade involute of X on the left (Twisted). The
// commutant is computed honestly as the nullspace of the stacked linear
// system over all 2^n blade coordinates and then checked to be blade-spanned.
inline std::vector<BladeMask> centralizer(CommutantKind kind, const SubspaceSpec& generating,
                                          bool complex_field = false) {
    const bool ok_gen = (generating.kind == SubspaceKind::Grade && generating.k == 1) ||
                        (generating.kind == SubspaceKind::Parity && generating.k == 0);
    if (!ok_gen)
        throw std::invalid_argument("centralizer: generating subspace must be Grade(1) or Parity(0)");
    const Signature sig = generating.sig;
    const std::size_t dim = std::size_t(1) << sig.n();
    const auto gens = generating.basis();

    Matrix<Rational> system(gens.size() * dim, dim);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        BladeMask b = gens[gi];
        for (BladeMask m = 0; m < dim; ++m) {
            // e_m e_b and e_b e_m land on the same output blade e_{m^b}.
            int left = blade_product_coeff(m, b, sig, complex_field);
            int right = blade_product_coeff(b, m, sig, complex_field);
            if (kind == CommutantKind::Twisted && (blade_grade(m) & 1)) left = -left;
            int c = left - right;
            if (c != 0) system.at(gi * dim + (m ^ b), m) = Rational(c);
        }
    }

    auto null_basis = nullspace(system);
    std::vector<BladeMask> blades;
    for (BladeMask m = 0; m < dim; ++m) {
        bool commutes = true;
        for (std::size_t gi = 0; gi < gens.size() && commutes; ++gi) {
            int left = blade_product_coeff(m, gens[gi], sig, complex_field);
            int right = blade_product_coeff(gens[gi], m, sig, complex_field);
            if (kind == CommutantKind::Twisted && (blade_grade(m) & 1)) left = -left;
            commutes = (left == right);
        }
        if (commutes) blades.push_back(m);
    }
    if (blades.size() != null_basis.size())
        throw std::logic_error("centralizer: commutant is not blade-spanned");
    return blades;
}

// Property check behind the odd-product commutation lemma: if x-hat U = U x
// for each factor, the same relation holds for any odd-length product of the
// factors. Inputs are validated; the return value is the verified claim.
template <class F>
bool odd_product_property_check(const Multivector<F>& x,
                                const std::vector<std::vector<Multivector<F>>>& samples) {
    const Signature sig = x.signature();
    if (!subspace(sig, SubspaceKind::Lambda).contains(x))
        throw std::invalid_argument("odd product check: x must lie in Lambda");
    Multivector<F> xh = x.grade_involution();
    for (const auto& factors : samples) {
        if (factors.size() % 2 != 1)
            throw std::invalid_argument("odd product check: sample length must be odd");
        Multivector<F> prod = Multivector<F>::identity(sig);
        for (const auto& u : factors) {
            if (!u.is_homogeneous_parity(0) && !u.is_homogeneous_parity(1))
                throw std::invalid_argument("odd product check: factors must be pure parity");
            if (xh * u != u * x)
                throw std::invalid_argument("odd product check: factor fails the hypothesis");
            prod = prod * u;
        }
        if (xh * prod != prod * x) return false;
    }
    return true;
}

}  // namespace dga

#endif
