#ifndef DEGENGA_RNG_HPP
#define DEGENGA_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "degenga/multivector.hpp"
#include "degenga/subspaces.hpp"

namespace dga {

// Seeded source of bounded integers. mt19937_64 output is pinned by the
// standard; the bounded draw avoids std::uniform_int_distribution, whose
// stream is implementation-defined, so identical seeds give identical
// reports everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [0, m) via masked rejection.
    std::uint64_t below(std::uint64_t m) {
        if (m == 0) throw std::invalid_argument("rng: empty range");
        std::uint64_t mask = m - 1;
        mask |= mask >> 1; mask |= mask >> 2; mask |= mask >> 4;
        mask |= mask >> 8; mask |= mask >> 16; mask |= mask >> 32;
        for (;;) {
            std::uint64_t v = eng_() & mask;
            if (v < m) return v;
        }
    }

    long int_in(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (eng_() & 1u) != 0; }

private:
    std::mt19937_64 eng_;
};

// Stable per-(claim, signature) seed so results do not depend on the order
// in which claims run.
inline std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
    std::uint64_t h = 1469598103934665603ull ^ base;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
    return h;
}

template <class F>
F random_coeff(Rng& rng, long bound) {
    if constexpr (FieldTraits<F>::is_complex) {
        return F(Rational(rng.int_in(-bound, bound)), Rational(rng.int_in(-bound, bound)));
    } else {
        return FieldTraits<F>::from_int(rng.int_in(-bound, bound));
    }
}

template <class F>
Multivector<F> random_in_span(Rng& rng, Signature sig, const std::vector<BladeMask>& basis,
                              long bound) {
    Multivector<F> u(sig);
    for (BladeMask m : basis) u.add_term(m, random_coeff<F>(rng, bound));
    return u;
}

template <class F>
Multivector<F> random_multivector(Rng& rng, Signature sig, long bound) {
    return random_in_span<F>(rng, sig, all_blades(sig), bound);
}

inline constexpr int kSamplingRetryBound = 1000;

template <class F>
Multivector<F> random_invertible(Rng& rng, Signature sig, long bound,
                                 int retries = kSamplingRetryBound) {
    for (int i = 0; i < retries; ++i) {
        Multivector<F> u = random_multivector<F>(rng, sig, bound);
        if (is_invertible(u)) return u;
    }
    throw std::runtime_error("sampling: no invertible element found within retry bound");
}

template <class F>
Multivector<F> random_invertible_in(Rng& rng, const SubspaceSpec& spec, long bound,
                                    int retries = kSamplingRetryBound) {
    auto basis = spec.basis();
    for (int i = 0; i < retries; ++i) {
        Multivector<F> u = random_in_span<F>(rng, spec.sig, basis, bound);
        if (is_invertible(u)) return u;
    }
    throw std::runtime_error("sampling: no invertible element of " + spec.name() +
                             " found within retry bound");
}

// Random invertible element of pure parity. Odd invertibles do not exist in
// every signature (e.g. Grassmann algebras), so the parity coin is retossed
// each attempt.
template <class F>
Multivector<F> random_pure_parity_invertible(Rng& rng, Signature sig, long bound,
                                             int retries = kSamplingRetryBound) {
    for (int i = 0; i < retries; ++i) {
        int parity = rng.coin() ? 1 : 0;
        auto u = random_in_span<F>(rng, sig, subspace(sig, SubspaceKind::Parity, parity).basis(),
                                   bound);
        if (is_invertible(u)) return u;
    }
    throw std::runtime_error("sampling: no pure-parity invertible found within retry bound");
}

}  // namespace dga

#endif
