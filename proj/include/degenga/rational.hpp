#ifndef DEGENGA_RATIONAL_HPP
#define DEGENGA_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dga {

// Exact rational scalar. All core arithmetic in the library is exact; the
// only floating-point instantiation lives in the numeric stage of the Lie
// tangency check.
using Rational = mpq_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Rational rational_of(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational x(num, den);
    x.canonicalize();
    return x;
}

inline std::string to_string(const Rational& x) { return x.get_str(); }

// Gaussian rational a + b*i with exact rational components.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}  // NOLINT
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (sgn(n) == 0) throw std::domain_error("gaussian rational: division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
    GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
    GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
    GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline bool is_zero(const GaussianRational& x) { return is_zero(x.re) && is_zero(x.im); }

inline std::string to_string(const GaussianRational& x) {
    if (is_zero(x.im)) return to_string(x.re);
    std::string imag = (x.im == 1) ? "i" : (x.im == -1) ? "-i" : to_string(x.im) + "*i";
    if (is_zero(x.re)) return imag;
    if (sgn(x.im) < 0) {
        std::string mag = (x.im == -1) ? "i" : to_string(-x.im) + "*i";
        return "(" + to_string(x.re) + "-" + mag + ")";
    }
    std::string mag = (x.im == 1) ? "i" : to_string(x.im) + "*i";
    return "(" + to_string(x.re) + "+" + mag + ")";
}

inline bool is_zero(double x) { return x == 0.0; }

// Field traits. is_complex selects the complex metric (all non-degenerate
// generators square to +1); is_exact gates exact-only code paths.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static constexpr bool is_complex = false;
    static constexpr bool is_exact = true;
    static Rational from_int(long v) { return Rational(v); }
};

template <>
struct FieldTraits<GaussianRational> {
    static constexpr bool is_complex = true;
    static constexpr bool is_exact = true;
    static GaussianRational from_int(long v) { return GaussianRational(v); }
    static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }
};

template <>
struct FieldTraits<double> {
    static constexpr bool is_complex = false;
    static constexpr bool is_exact = false;
    static double from_int(long v) { return static_cast<double>(v); }
};

}  // namespace dga

#endif
