#ifndef DEGENGA_MULTIVECTOR_HPP
#define DEGENGA_MULTIVECTOR_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degenga/linalg.hpp"
#include "degenga/rational.hpp"
#include "degenga/signature.hpp"

namespace dga {

// A basis blade e_A is the ascending product of the generators whose bits are
// set; the empty mask is the identity e. Canonical form is the mask itself.
using BladeMask = std::uint32_t;

inline int blade_grade(BladeMask m) { return std::popcount(m); }

// Parity of the transposition count needed to merge two ascending index
// lists: each index of b moves left past the indices of a above it.
inline int merge_swap_parity(BladeMask a, BladeMask b) {
    int swaps = 0;
    while (b) {
        int i = std::countr_zero(b);
        b &= b - 1;
        swaps += std::popcount(a >> (i + 1));
    }
    return swaps & 1;
}

// Blade product e_a * e_b = c * e_{a XOR b} with c in {-1, 0, +1}; c is the
// reorder sign times the metric of every repeated index, and vanishes when a
// repeated index is degenerate.
inline int blade_product_coeff(BladeMask a, BladeMask b, const Signature& sig, bool complex_field) {
    int sign = merge_swap_parity(a, b) ? -1 : 1;
    BladeMask common = a & b;
    while (common) {
        int i = std::countr_zero(common);
        common &= common - 1;
        int eta = sig.eta(i + 1, complex_field);
        if (eta == 0) return 0;
        sign *= eta;
    }
    return sign;
}

inline std::string blade_name(BladeMask m, const Signature& sig) {
    if (m == 0) return "e";
    std::string s = "e";
    if (sig.n() <= 9) {
        for (int a = 1; a <= sig.n(); ++a)
            if (m & (1u << (a - 1))) s += std::to_string(a);
        return s;
    }
    s += "[";
    bool first = true;
    for (int a = 1; a <= sig.n(); ++a) {
        if (!(m & (1u << (a - 1)))) continue;
        if (!first) s += ",";
        s += std::to_string(a);
        first = false;
    }
    return s + "]";
}

// Sparse multivector over the field F. Terms are kept in ascending mask order
// with no explicit zero coefficients; equality is term-map equality.
template <class F>
class Multivector {
public:
    using Terms = std::map<BladeMask, F>;

    explicit Multivector(Signature sig) : sig_(sig) {}

    static Multivector zero(Signature sig) { return Multivector(sig); }

    static Multivector scalar(Signature sig, F c) {
        Multivector u(sig);
        u.add_term(0, std::move(c));
        return u;
    }

    static Multivector identity(Signature sig) {
        return scalar(sig, FieldTraits<F>::from_int(1));
    }

    static Multivector blade(Signature sig, BladeMask m, F c = FieldTraits<F>::from_int(1)) {
        if (m & ~sig.full_mask()) throw std::invalid_argument("blade mask outside signature");
        Multivector u(sig);
        u.add_term(m, std::move(c));
        return u;
    }

    const Signature& signature() const { return sig_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    F coeff(BladeMask m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? FieldTraits<F>::from_int(0) : it->second;
    }

    void add_term(BladeMask m, F c) {
        if (dga::is_zero(c)) return;
        auto [it, fresh] = terms_.try_emplace(m, std::move(c));
        if (!fresh) {
            it->second += c;  // try_emplace left c untouched
            if (dga::is_zero(it->second)) terms_.erase(it);
        }
    }

    friend Multivector operator+(const Multivector& u, const Multivector& v) {
        check_same(u, v);
        Multivector w = u;
        for (const auto& [m, c] : v.terms_) w.add_term(m, c);
        return w;
    }

    friend Multivector operator-(const Multivector& u, const Multivector& v) {
        check_same(u, v);
        Multivector w = u;
        for (const auto& [m, c] : v.terms_) w.add_term(m, -c);
        return w;
    }

    Multivector operator-() const {
        Multivector w(sig_);
        for (const auto& [m, c] : terms_) w.terms_.emplace(m, -c);
        return w;
    }

    friend Multivector operator*(const F& c, const Multivector& u) {
        Multivector w(u.sig_);
        if (dga::is_zero(c)) return w;
        for (const auto& [m, uc] : u.terms_) w.add_term(m, c * uc);
        return w;
    }

    // Geometric product: bilinear extension of the blade product.
    friend Multivector operator*(const Multivector& u, const Multivector& v) {
        check_same(u, v);
        Multivector w(u.sig_);
        for (const auto& [ma, ca] : u.terms_) {
            for (const auto& [mb, cb] : v.terms_) {
                int s = blade_product_coeff(ma, mb, u.sig_, FieldTraits<F>::is_complex);
                if (s == 0) continue;
                F c = ca * cb;
                if (s < 0) c = -c;
                w.add_term(ma ^ mb, std::move(c));
            }
        }
        return w;
    }

    friend bool operator==(const Multivector& u, const Multivector& v) {
        return u.sig_ == v.sig_ && u.terms_ == v.terms_;
    }
    friend bool operator!=(const Multivector& u, const Multivector& v) { return !(u == v); }

    // Grade involute: each grade-k component scaled by (-1)^k.
    Multivector grade_involution() const {
        Multivector w(sig_);
        for (const auto& [m, c] : terms_)
            w.terms_.emplace(m, (blade_grade(m) & 1) ? -c : c);
        return w;
    }

    Multivector grade_project(int k) const {
        if (k < 0 || k > sig_.n()) throw std::invalid_argument("grade projection out of range");
        Multivector w(sig_);
        for (const auto& [m, c] : terms_)
            if (blade_grade(m) == k) w.terms_.emplace(m, c);
        return w;
    }

    // Even/odd split; the zero multivector yields (0, 0).
    std::pair<Multivector, Multivector> parity_split() const {
        Multivector even(sig_), odd(sig_);
        for (const auto& [m, c] : terms_)
            ((blade_grade(m) & 1) ? odd : even).terms_.emplace(m, c);
        return {even, odd};
    }

    bool is_homogeneous_parity(int k) const {
        for (const auto& [m, c] : terms_)
            if ((blade_grade(m) & 1) != k) return false;
        return true;
    }

private:
    static void check_same(const Multivector& u, const Multivector& v) {
        if (u.sig_ != v.sig_) throw std::invalid_argument("multivector signature mismatch");
    }

    Signature sig_;
    Terms terms_;
};

template <class F>
Multivector<F> commutator(const Multivector<F>& u, const Multivector<F>& v) {
    return u * v - v * u;
}

// All 2^n blades in ascending mask order.
inline std::vector<BladeMask> all_blades(const Signature& sig) {
    std::vector<BladeMask> out;
    out.reserve(std::size_t(1) << sig.n());
    for (BladeMask m = 0; m <= sig.full_mask(); ++m) out.push_back(m);
    return out;
}

// Matrix of left multiplication by u in the canonical blade basis ordered by
// mask value; column j holds the coordinates of u * e_j.
template <class F>
Matrix<F> left_regular_matrix(const Multivector<F>& u) {
    const auto& sig = u.signature();
    std::size_t dim = std::size_t(1) << sig.n();
    Matrix<F> l(dim, dim);
    for (BladeMask j = 0; j < dim; ++j) {
        for (const auto& [m, c] : u.terms()) {
            int s = blade_product_coeff(m, j, sig, FieldTraits<F>::is_complex);
            if (s == 0) continue;
            l.at(m ^ j, j) += (s < 0) ? F(-c) : c;
        }
    }
    return l;
}

// True when every non-scalar term contains at least one degenerate index,
// i.e. u lies in G^0 + rad.
template <class F>
bool in_grade0_plus_radical(const Multivector<F>& u) {
    BladeMask deg = u.signature().degenerate_mask();
    for (const auto& [m, c] : u.terms())
        if (m != 0 && (m & deg) == 0) return false;
    return true;
}

// Exact two-sided inverse, or nullopt when u is not invertible.
//
// For u = a*e + y with y in the radical and a != 0, the Neumann series
// (e + y/a)^-1 = sum (-y/a)^k terminates: every radical blade carries at
// least one degenerate index, so y^(r+1) = 0. Otherwise solve the dense
// left-regular system L(u) x = coords(e).
template <class F>
std::optional<Multivector<F>> inverse(const Multivector<F>& u) {
    const auto& sig = u.signature();
    if constexpr (FieldTraits<F>::is_exact) {
        if (in_grade0_plus_radical(u)) {
            F a = u.coeff(0);
            if (dga::is_zero(a)) return std::nullopt;
            F inv_a = FieldTraits<F>::from_int(1) / a;
            Multivector<F> y = inv_a * (u - Multivector<F>::scalar(sig, a));
            Multivector<F> acc = Multivector<F>::identity(sig);
            Multivector<F> power = Multivector<F>::identity(sig);
            for (int k = 1; k <= sig.r && !power.is_zero(); ++k) {
                power = power * (-y);
                acc = acc + power;
            }
            return inv_a * acc;
        }
    }
    std::size_t dim = std::size_t(1) << sig.n();
    std::vector<F> e0(dim, FieldTraits<F>::from_int(0));
    e0[0] = FieldTraits<F>::from_int(1);
    auto x = solve_linear(left_regular_matrix(u), e0);
    if (!x) return std::nullopt;
    Multivector<F> v(sig);
    for (BladeMask m = 0; m < dim; ++m) v.add_term(m, (*x)[m]);
    return v;
}

template <class F>
bool is_invertible(const Multivector<F>& u) {
    return inverse(u).has_value();
}

}  // namespace dga

#endif
