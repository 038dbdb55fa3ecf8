#ifndef DEGENGA_SIGNATURE_HPP
#define DEGENGA_SIGNATURE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dga {

inline constexpr int kMaxDimension = 12;  // dense 2^n x 2^n solves stay feasible

// Algebra signature (p, q, r): p generators squaring to +1, q to -1,
// r degenerate generators squaring to 0. Over the complex field the first
// p+q generators all square to +1.
struct Signature {
    int p = 0;
    int q = 0;
    int r = 0;

    Signature() = default;
    Signature(int p_, int q_, int r_) : p(p_), q(q_), r(r_) {
        if (p < 0 || q < 0 || r < 0) throw std::invalid_argument("signature: negative count");
        if (n() < 1) throw std::invalid_argument("signature: n must be >= 1");
        if (n() > kMaxDimension) throw std::invalid_argument("signature: n exceeds hard cap 12");
    }

    int n() const { return p + q + r; }

    // Metric value of generator a (1-based).
    int eta(int a, bool complex_field) const {
        if (a < 1 || a > n()) throw std::invalid_argument("signature: generator index out of range");
        if (a > p + q) return 0;
        if (complex_field) return 1;
        return a <= p ? 1 : -1;
    }

    std::uint32_t full_mask() const { return (n() == 32) ? ~0u : ((1u << n()) - 1u); }

    // Mask of the degenerate generators p+q+1 .. n.
    std::uint32_t degenerate_mask() const {
        std::uint32_t m = 0;
        for (int a = p + q + 1; a <= n(); ++a) m |= 1u << (a - 1);
        return m;
    }

    friend bool operator==(const Signature& a, const Signature& b) {
        return a.p == b.p && a.q == b.q && a.r == b.r;
    }
    friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

    std::string str() const {
        return std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r);
    }
};

inline Signature parse_signature(const std::string& text) {
    int vals[3];
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t next;
        try {
            vals[i] = std::stoi(text.substr(pos), &next);
        } catch (const std::exception&) {
            throw std::invalid_argument("signature: expected p,q,r, got '" + text + "'");
        }
        pos += next;
        if (i < 2) {
            if (pos >= text.size() || text[pos] != ',')
                throw std::invalid_argument("signature: expected p,q,r, got '" + text + "'");
            ++pos;
        }
    }
    if (pos != text.size())
        throw std::invalid_argument("signature: trailing characters in '" + text + "'");
    return Signature(vals[0], vals[1], vals[2]);
}

}  // namespace dga

#endif
