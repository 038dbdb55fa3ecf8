#ifndef DEGENGA_MATRIX_REP_HPP
#define DEGENGA_MATRIX_REP_HPP

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degenga/linalg.hpp"
#include "degenga/multivector.hpp"
#include "degenga/rng.hpp"
#include "degenga/subspaces.hpp"

namespace dga {

// Embedding of G(p,q,r) into the non-degenerate G(p+r, q+r, 0): every
// degenerate generator becomes f + g for a fresh (+1, -1) pair, so its image
// squares to zero; non-degenerate generators map to target generators with
// the same square. Real metric only: the (+1, -1) cancellation needs it.
struct Embedding {
    Signature source;
    Signature target;
    std::vector<Multivector<Rational>> generator_images;  // indexed by source generator - 1
};

inline Embedding cjw_embedding(Signature source) {
    Signature target(source.p + source.r, source.q + source.r, 0);
    Embedding emb{source, target, {}};
    for (int a = 1; a <= source.n(); ++a) {
        if (a <= source.p) {
            emb.generator_images.push_back(Multivector<Rational>::blade(target, 1u << (a - 1)));
        } else if (a <= source.p + source.q) {
            int tgt = source.p + source.r + (a - source.p);
            emb.generator_images.push_back(Multivector<Rational>::blade(target, 1u << (tgt - 1)));
        } else {
            int j = a - source.p - source.q;
            int f = source.p + j;
            int g = source.p + source.r + source.q + j;
            emb.generator_images.push_back(
                Multivector<Rational>::blade(target, 1u << (f - 1)) +
                Multivector<Rational>::blade(target, 1u << (g - 1)));
        }
    }
    return emb;
}

// Multiplicative extension over blades, linear over terms.
inline Multivector<Rational> embed(const Embedding& emb, const Multivector<Rational>& u) {
    if (u.signature() != emb.source) throw std::invalid_argument("embed: signature mismatch");
    Multivector<Rational> out(emb.target);
    for (const auto& [m, c] : u.terms()) {
        Multivector<Rational> image = Multivector<Rational>::scalar(emb.target, c);
        for (int a = 1; a <= emb.source.n(); ++a)
            if (m & (1u << (a - 1))) image = image * emb.generator_images[a - 1];
        out = out + image;
    }
    return out;
}

// Generator images must satisfy the source Clifford relations.
inline bool embedding_relations_ok(const Embedding& emb) {
    auto id = Multivector<Rational>::identity(emb.target);
    for (int a = 1; a <= emb.source.n(); ++a) {
        for (int b = a; b <= emb.source.n(); ++b) {
            const auto& ia = emb.generator_images[a - 1];
            const auto& ib = emb.generator_images[b - 1];
            long rhs = (a == b) ? 2 * emb.source.eta(a, false) : 0;
            if (ia * ib + ib * ia != Rational(rhs) * id) return false;
        }
    }
    return true;
}

// Linear injectivity: the coordinate matrix of all 2^n source blade images
// must have full rank.
inline bool embedding_injective(const Embedding& emb) {
    std::size_t src_dim = std::size_t(1) << emb.source.n();
    std::size_t tgt_dim = std::size_t(1) << emb.target.n();
    Matrix<Rational> coords(tgt_dim, src_dim);
    for (BladeMask m = 0; m < src_dim; ++m) {
        auto image = embed(emb, Multivector<Rational>::blade(emb.source, m));
        for (const auto& [tm, c] : image.terms()) coords.at(tm, m) = c;
    }
    return rank(coords) == src_dim;
}

// Fixed exact generator matrices for a target algebra, loaded from the
// line-based config file: rep <id> / source p q r / target p q r /
// generator <index> <dim> followed by <dim> rows of fractions / end.
struct MatrixRepConfig {
    std::string id;
    Signature source{0, 0, 1};
    Signature target{1, 1, 0};
    std::vector<Matrix<Rational>> generator_matrices;  // indexed by target generator - 1
};

inline Rational parse_fraction(const std::string& tok) {
    auto slash = tok.find('/');
    try {
        if (slash == std::string::npos) return rational_of(std::stol(tok));
        return rational_of(std::stol(tok.substr(0, slash)), std::stol(tok.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::runtime_error("matrix rep config: bad fraction '" + tok + "'");
    }
}

inline std::vector<MatrixRepConfig> load_matrix_reps(std::istream& in) {
    std::vector<MatrixRepConfig> configs;
    MatrixRepConfig current;
    bool open = false;
    std::string line;
    auto read_sig = [](std::istringstream& ss) {
        int p, q, r;
        if (!(ss >> p >> q >> r)) throw std::runtime_error("matrix rep config: bad signature line");
        return Signature(p, q, r);
    };
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string word;
        if (!(ss >> word)) continue;
        if (word == "rep") {
            if (open) throw std::runtime_error("matrix rep config: nested rep block");
            current = MatrixRepConfig{};
            ss >> current.id;
            open = true;
        } else if (word == "source") {
            current.source = read_sig(ss);
        } else if (word == "target") {
            current.target = read_sig(ss);
        } else if (word == "generator") {
            int index, dim;
            if (!(ss >> index >> dim))
                throw std::runtime_error("matrix rep config: bad generator line");
            Matrix<Rational> m(dim, dim);
            for (int i = 0; i < dim; ++i) {
                std::string row;
                if (!std::getline(in, row))
                    throw std::runtime_error("matrix rep config: truncated matrix");
                std::istringstream rs(row);
                std::string tok;
                for (int j = 0; j < dim; ++j) {
                    if (!(rs >> tok))
                        throw std::runtime_error("matrix rep config: short matrix row");
                    m.at(i, j) = parse_fraction(tok);
                }
            }
            if (static_cast<std::size_t>(index) != current.generator_matrices.size() + 1)
                throw std::runtime_error("matrix rep config: generators out of order");
            current.generator_matrices.push_back(std::move(m));
        } else if (word == "end") {
            if (!open) throw std::runtime_error("matrix rep config: stray end");
            if (static_cast<int>(current.generator_matrices.size()) != current.target.n())
                throw std::runtime_error("matrix rep config: generator count mismatch");
            configs.push_back(current);
            open = false;
        } else {
            throw std::runtime_error("matrix rep config: unknown directive '" + word + "'");
        }
    }
    if (open) throw std::runtime_error("matrix rep config: unterminated rep block");
    return configs;
}

inline std::vector<MatrixRepConfig> load_matrix_reps_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("matrix rep config: cannot open " + path);
    return load_matrix_reps(in);
}

inline const MatrixRepConfig& find_matrix_rep(const std::vector<MatrixRepConfig>& configs,
                                              const std::string& id) {
    for (const auto& c : configs)
        if (c.id == id) return c;
    throw std::invalid_argument("matrix rep: unknown example id '" + id + "'");
}

// Target Clifford relations of the stored generator matrices.
inline bool matrix_relations_ok(const MatrixRepConfig& cfg) {
    const std::size_t dim = cfg.generator_matrices.empty() ? 0 : cfg.generator_matrices[0].rows();
    auto id = Matrix<Rational>::identity(dim);
    for (int a = 1; a <= cfg.target.n(); ++a)
        for (int b = a; b <= cfg.target.n(); ++b) {
            const auto& ma = cfg.generator_matrices[a - 1];
            const auto& mb = cfg.generator_matrices[b - 1];
            long rhs = (a == b) ? 2 * cfg.target.eta(a, false) : 0;
            if (ma * mb + mb * ma != Rational(rhs) * id) return false;
        }
    return true;
}

// Homomorphism from the target algebra into matrices.
inline Matrix<Rational> matrix_of_target(const MatrixRepConfig& cfg,
                                         const Multivector<Rational>& u) {
    if (u.signature() != cfg.target)
        throw std::invalid_argument("matrix rep: element not in the target algebra");
    const std::size_t dim = cfg.generator_matrices[0].rows();
    Matrix<Rational> out(dim, dim);
    for (const auto& [m, c] : u.terms()) {
        Matrix<Rational> image = Matrix<Rational>::identity(dim);
        for (int a = 1; a <= cfg.target.n(); ++a)
            if (m & (1u << (a - 1))) image = image * cfg.generator_matrices[a - 1];
        out = out + c * image;
    }
    return out;
}

// The example representation: embed into the non-degenerate target, then
// apply the generator-matrix assignment.
inline Matrix<Rational> represent(const MatrixRepConfig& cfg, const Multivector<Rational>& u) {
    if (u.signature() != cfg.source)
        throw std::invalid_argument("matrix rep: element not in the example's source algebra");
    return matrix_of_target(cfg, embed(cjw_embedding(cfg.source), u));
}

inline bool matrix_nonsingular(const Matrix<Rational>& m) { return rank(m) == m.rows(); }

struct StructuralReport {
    std::string id;
    std::vector<std::pair<std::string, bool>> checks;

    void record(std::string name, bool ok) { checks.emplace_back(std::move(name), ok); }
    bool all_ok() const {
        for (const auto& [name, ok] : checks)
            if (!ok) return false;
        return true;
    }
};

namespace detail {

inline bool upper_triangular(const Matrix<Rational>& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!is_zero(m.at(i, j))) return false;
    return true;
}

// Expected image of x0 e + x1 e1 in the Grassmann line example.
inline Matrix<Rational> lambda1_family(const Rational& x0, const Rational& x1) {
    Matrix<Rational> m(2, 2);
    m.at(0, 0) = x0; m.at(0, 1) = x1;
    m.at(1, 1) = x0;
    return m;
}

// Expected image of x0 e + x1 e1 + x2 e2 + x3 e12 in the Grassmann plane
// example. The blade-order convention e12 = e1 e2 forces the corner entry to
// carry -x3; as a parametrized family this is the same group of matrices.
inline Matrix<Rational> lambda2_family(const Rational& x0, const Rational& x1, const Rational& x2,
                                       const Rational& x3) {
    Matrix<Rational> m(4, 4);
    m.at(0, 0) = x0; m.at(0, 1) = x1; m.at(0, 2) = x2; m.at(0, 3) = -x3;
    m.at(1, 1) = x0; m.at(1, 3) = -x2;
    m.at(2, 2) = x0; m.at(2, 3) = x1;
    m.at(3, 3) = x0;
    return m;
}

// Expected images of the two pure-parity branches in the G(1,0,1) example.
inline Matrix<Rational> g101_even_family(const Rational& x0, const Rational& x3) {
    Matrix<Rational> m(4, 4);
    m.at(0, 0) = x0; m.at(0, 1) = x3;
    m.at(1, 1) = x0;
    m.at(2, 2) = x0; m.at(2, 3) = x3;
    m.at(3, 3) = x0;
    return m;
}

inline Matrix<Rational> g101_odd_family(const Rational& x1, const Rational& x2) {
    Matrix<Rational> m(4, 4);
    m.at(0, 0) = x1; m.at(0, 1) = x2;
    m.at(1, 1) = -x1;
    m.at(2, 2) = -x1; m.at(2, 3) = -x2;
    m.at(3, 3) = x1;
    return m;
}

// Zero pattern of the 4x4 Heisenberg group: unit diagonal, free first row
// and last column, zero at (1,2).
inline bool heis4_pattern(const Matrix<Rational>& m) {
    if (!upper_triangular(m)) return false;
    for (std::size_t i = 0; i < 4; ++i)
        if (m.at(i, i) != 1) return false;
    return is_zero(m.at(1, 2));
}

}  // namespace detail

// Verifies the displayed matrix families of the worked examples over sampled
// group elements, plus the relation and transport properties.
inline StructuralReport structural_check(const MatrixRepConfig& cfg, Rng& rng, int samples = 50,
                                         long bound = 5) {
    StructuralReport report{cfg.id, {}};
    report.record("clifford_relations", matrix_relations_ok(cfg));
    Embedding emb = cjw_embedding(cfg.source);
    report.record("embedding_relations", embedding_relations_ok(emb));
    report.record("embedding_injective", embedding_injective(emb));

    const Signature sig = cfg.source;
    bool transport_ok = true;
    for (int i = 0; i < samples; ++i) {
        auto u = random_multivector<Rational>(rng, sig, bound);
        if (is_invertible(u) != matrix_nonsingular(represent(cfg, u))) transport_ok = false;
    }

    if (cfg.id == "lambda1_in_G110") {
        bool family_ok = true, unipotent_ok = true, ut_ok = true;
        for (int i = 0; i < samples; ++i) {
            auto u = random_invertible_in<Rational>(rng, subspace(sig, SubspaceKind::Full), bound);
            auto m = represent(cfg, u);
            family_ok = family_ok && m == detail::lambda1_family(u.coeff(0), u.coeff(1));
            ut_ok = ut_ok && detail::upper_triangular(m) && !is_zero(m.at(0, 0));
            auto s = Multivector<Rational>::identity(sig) +
                     Multivector<Rational>::blade(sig, 1u, random_coeff<Rational>(rng, bound));
            auto ms = represent(cfg, s);
            unipotent_ok = unipotent_ok && ms == detail::lambda1_family(1, s.coeff(1));
        }
        report.record("unit_family_pattern", family_ok);
        report.record("unit_family_in_UT2", ut_ok);
        report.record("unitriangular_subgroup", unipotent_ok);
    } else if (cfg.id == "lambda2_in_G220") {
        bool family_ok = true, even_ok = true, heis_ok = true;
        for (int i = 0; i < samples; ++i) {
            auto u = random_invertible_in<Rational>(rng, subspace(sig, SubspaceKind::Full), bound);
            auto m = represent(cfg, u);
            family_ok = family_ok &&
                        m == detail::lambda2_family(u.coeff(0), u.coeff(1), u.coeff(2), u.coeff(3));
            auto v = random_invertible_in<Rational>(rng, subspace(sig, SubspaceKind::Parity, 0),
                                                    bound);
            even_ok = even_ok &&
                      represent(cfg, v) == detail::lambda2_family(v.coeff(0), 0, 0, v.coeff(3));
            Rational x0 = u.coeff(0);
            auto unipotent = (Rational(1) / x0) * u;
            heis_ok = heis_ok && detail::heis4_pattern(represent(cfg, unipotent));
        }
        report.record("unit_family_pattern", family_ok);
        report.record("even_unit_family_pattern", even_ok);
        report.record("unipotent_part_in_Heis4", heis_ok);
    } else if (cfg.id == "g101_in_G210") {
        bool even_ok = true, odd_ok = true, ut_ok = true;
        int odd_seen = 0;
        for (int i = 0; i < samples; ++i) {
            auto u = random_pure_parity_invertible<Rational>(rng, sig, bound);
            auto m = represent(cfg, u);
            if (u.is_homogeneous_parity(0)) {
                even_ok = even_ok && m == detail::g101_even_family(u.coeff(0), u.coeff(3));
                ut_ok = ut_ok && detail::upper_triangular(m);
            } else {
                ++odd_seen;
                odd_ok = odd_ok && m == detail::g101_odd_family(u.coeff(1), u.coeff(2));
            }
        }
        report.record("even_branch_pattern", even_ok);
        report.record("odd_branch_pattern", odd_ok && odd_seen > 0);
        report.record("even_branch_in_UT4", ut_ok);
    } else {
        report.record("known_example_id", false);
    }
    report.record("membership_transport", transport_ok);
    return report;
}

}  // namespace dga

#endif

