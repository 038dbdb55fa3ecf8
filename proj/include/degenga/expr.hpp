#ifndef DEGENGA_EXPR_HPP
#define DEGENGA_EXPR_HPP

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "degenga/multivector.hpp"
#include "degenga/rational.hpp"
#include "degenga/signature.hpp"

namespace dga {

// Multivector expression language used by the CLI and report files.
// Precedence: power > unary minus > product > sum; juxtaposition is not
// multiplication. Basis symbols: e, e3, digit concatenation like e13 while
// n <= 9, and e[1,12] always; indices strictly ascending.

template <class F>
struct ParseResult {
    std::optional<Multivector<F>> value;
    std::size_t error_pos = 0;
    std::string error;
    bool ok() const { return value.has_value(); }
};

namespace expr_detail {

enum class Tok { Number, Imag, Basis, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t pos = 0;
    Rational number;            // Number
    bool imag_suffix = false;   // Number with directly attached i
    std::vector<int> indices;   // Basis
};

struct LexError {
    std::size_t pos;
    std::string message;
};

template <class F>
class Parser {
public:
    Parser(const std::string& text, Signature sig) : text_(text), sig_(sig) {}

    ParseResult<F> run() {
        ParseResult<F> out;
        if (!lex()) {
            out.error = err_;
            out.error_pos = err_pos_;
            return out;
        }
        std::optional<Multivector<F>> v = parse_sum();
        if (v && peek().kind != Tok::End) {
            fail(peek().pos, "unexpected token; products need an explicit '*'");
            v.reset();
        }
        if (!v) {
            out.error = err_;
            out.error_pos = err_pos_;
            return out;
        }
        out.value = std::move(v);
        return out;
    }

private:
    // --- lexing ---------------------------------------------------------
    bool lex() {
        std::size_t i = 0;
        while (i < text_.size()) {
            char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            if (std::isdigit(static_cast<unsigned char>(c))) {
                Rational num;
                if (!lex_number(i, num)) return false;
                Token t{Tok::Number, start};
                t.number = num;
                if (i < text_.size() && text_[i] == 'i') {
                    t.imag_suffix = true;
                    ++i;
                }
                tokens_.push_back(std::move(t));
            } else if (c == 'e') {
                Token t{Tok::Basis, start};
                ++i;
                if (i < text_.size() && text_[i] == '[') {
                    ++i;
                    if (!lex_bracket_indices(i, t.indices)) return false;
                } else {
                    std::string digits;
                    while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i])))
                        digits += text_[i++];
                    if (digits.size() > 1 && sig_.n() > 9)
                        return fail_lex(start,
                                        "digit-form blade needs n <= 9; use e[i,j,...] instead");
                    for (char d : digits) t.indices.push_back(d - '0');
                }
                tokens_.push_back(std::move(t));
            } else if (c == 'i') {
                tokens_.push_back(Token{Tok::Imag, start});
                ++i;
            } else {
                Tok k;
                switch (c) {
                    case '+': k = Tok::Plus; break;
                    case '-': k = Tok::Minus; break;
                    case '*': k = Tok::Star; break;
                    case '^': k = Tok::Caret; break;
                    case '(': k = Tok::LParen; break;
                    case ')': k = Tok::RParen; break;
                    default: return fail_lex(start, std::string("bad token '") + c + "'");
                }
                tokens_.push_back(Token{k, start});
                ++i;
            }
        }
        tokens_.push_back(Token{Tok::End, text_.size()});
        return true;
    }

    bool lex_number(std::size_t& i, Rational& out) {
        std::size_t start = i;
        while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
        std::string num = text_.substr(start, i - start);
        // a '/' directly between integers is part of a rational literal; the
        // grammar has no division operator.
        std::size_t save = i;
        std::size_t j = i;
        while (j < text_.size() && std::isspace(static_cast<unsigned char>(text_[j]))) ++j;
        if (j < text_.size() && text_[j] == '/') {
            ++j;
            while (j < text_.size() && std::isspace(static_cast<unsigned char>(text_[j]))) ++j;
            std::size_t den_start = j;
            while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
            if (j == den_start) return fail_lex(den_start, "expected denominator digits");
            std::string den = text_.substr(den_start, j - den_start);
            if (Rational(den) == 0) return fail_lex(den_start, "zero denominator");
            out = Rational(num + "/" + den);
            out.canonicalize();
            i = j;
            return true;
        }
        i = save;
        out = Rational(num);
        return true;
    }

    bool lex_bracket_indices(std::size_t& i, std::vector<int>& indices) {
        for (;;) {
            while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
            std::size_t start = i;
            while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
            if (i == start) return fail_lex(i, "expected blade index");
            indices.push_back(std::stoi(text_.substr(start, i - start)));
            while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
            if (i < text_.size() && text_[i] == ',') {
                ++i;
                continue;
            }
            if (i < text_.size() && text_[i] == ']') {
                ++i;
                return true;
            }
            return fail_lex(i, "expected ',' or ']' in blade symbol");
        }
    }

    // --- parsing --------------------------------------------------------
    const Token& peek() const { return tokens_[cursor_]; }
    const Token& advance() { return tokens_[cursor_++]; }

    std::optional<Multivector<F>> parse_sum() {
        auto lhs = parse_product();
        if (!lhs) return std::nullopt;
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = advance().kind == Tok::Minus;
            auto rhs = parse_product();
            if (!rhs) return std::nullopt;
            lhs = minus ? (*lhs - *rhs) : (*lhs + *rhs);
        }
        return lhs;
    }

    std::optional<Multivector<F>> parse_product() {
        auto lhs = parse_unary();
        if (!lhs) return std::nullopt;
        while (peek().kind == Tok::Star) {
            advance();
            auto rhs = parse_unary();
            if (!rhs) return std::nullopt;
            lhs = *lhs * *rhs;
        }
        return lhs;
    }

    std::optional<Multivector<F>> parse_unary() {
        if (peek().kind == Tok::Minus) {
            advance();
            auto v = parse_unary();
            if (!v) return std::nullopt;
            return -*v;
        }
        return parse_power();
    }

    std::optional<Multivector<F>> parse_power() {
        auto base = parse_atom();
        if (!base) return std::nullopt;
        if (peek().kind != Tok::Caret) return base;
        const Token& caret = advance();
        if (peek().kind != Tok::Number || peek().imag_suffix) {
            fail(caret.pos, "exponent must be a nonnegative integer");
            return std::nullopt;
        }
        const Token& exp_tok = advance();
        if (exp_tok.number.get_den() != 1 || sgn(exp_tok.number) < 0) {
            fail(exp_tok.pos, "exponent must be a nonnegative integer");
            return std::nullopt;
        }
        long exp = exp_tok.number.get_num().get_si();
        Multivector<F> acc = Multivector<F>::identity(sig_);
        for (long j = 0; j < exp; ++j) acc = acc * *base;
        return acc;
    }

    std::optional<Multivector<F>> parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Number: {
                advance();
                return make_scalar(t.number, t.imag_suffix, t.pos);
            }
            case Tok::Imag: {
                advance();
                return make_scalar(Rational(1), true, t.pos);
            }
            case Tok::Basis: {
                advance();
                BladeMask mask = 0;
                int prev = 0;
                for (int idx : t.indices) {
                    if (idx < 1 || idx > sig_.n()) {
                        fail(t.pos, "blade index " + std::to_string(idx) + " out of range 1.." +
                                        std::to_string(sig_.n()));
                        return std::nullopt;
                    }
                    if (idx <= prev) {
                        fail(t.pos, "blade indices must be strictly ascending");
                        return std::nullopt;
                    }
                    prev = idx;
                    mask |= 1u << (idx - 1);
                }
                return Multivector<F>::blade(sig_, mask);
            }
            case Tok::LParen: {
                advance();
                auto v = parse_sum();
                if (!v) return std::nullopt;
                if (peek().kind != Tok::RParen) {
                    fail(peek().pos, "expected ')'");
                    return std::nullopt;
                }
                advance();
                return v;
            }
            default:
                fail(t.pos, "expected a number, blade, or parenthesized expression");
                return std::nullopt;
        }
    }

    std::optional<Multivector<F>> make_scalar(const Rational& value, bool imaginary,
                                              std::size_t pos) {
        if (!imaginary) {
            if constexpr (FieldTraits<F>::is_complex)
                return Multivector<F>::scalar(sig_, F(value));
            else
                return Multivector<F>::scalar(sig_, value);
        }
        if constexpr (FieldTraits<F>::is_complex) {
            return Multivector<F>::scalar(sig_, F(Rational(0), value));
        } else {
            fail(pos, "imaginary literal in real mode");
            return std::nullopt;
        }
    }

    void fail(std::size_t pos, std::string msg) {
        if (err_.empty()) {
            err_pos_ = pos;
            err_ = std::move(msg);
        }
    }
    bool fail_lex(std::size_t pos, std::string msg) {
        fail(pos, std::move(msg));
        return false;
    }

    const std::string& text_;
    Signature sig_;
    std::vector<Token> tokens_;
    std::size_t cursor_ = 0;
    std::string err_;
    std::size_t err_pos_ = 0;
};

// Coefficient rendering: sign split for joinable terms, plus a reparseable
// atom for the magnitude. Mixed complex coefficients render parenthesized
// and are treated as positive.
inline void coeff_atom(const Rational& c, bool& negative, std::string& atom) {
    negative = sgn(c) < 0;
    atom = to_string(negative ? Rational(-c) : c);
}

inline void coeff_atom(const GaussianRational& c, bool& negative, std::string& atom) {
    if (is_zero(c.im)) {
        coeff_atom(c.re, negative, atom);
        return;
    }
    if (is_zero(c.re)) {
        negative = sgn(c.im) < 0;
        Rational mag = negative ? Rational(-c.im) : c.im;
        atom = (mag == 1) ? "i" : to_string(mag) + "*i";
        return;
    }
    negative = false;
    std::string im_mag = (c.im == 1 || c.im == -1) ? "i" : to_string(abs(c.im)) + "*i";
    atom = "(" + to_string(c.re) + (sgn(c.im) < 0 ? "-" : "+") + im_mag + ")";
}

}  // namespace expr_detail

template <class F>
ParseResult<F> parse(const std::string& text, Signature sig) {
    return expr_detail::Parser<F>(text, sig).run();
}

// Canonical form: terms in ascending blade-mask order, explicit '*',
// rationals as a/b. parse(to_string(u)) == u.
template <class F>
std::string to_string(const Multivector<F>& u) {
    if (u.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : u.terms()) {
        bool negative;
        std::string atom;
        expr_detail::coeff_atom(c, negative, atom);
        std::string body =
            (atom == "1") ? blade_name(m, u.signature()) : atom + "*" + blade_name(m, u.signature());
        if (first) {
            out += negative ? "-" + body : body;
            first = false;
        } else {
            out += negative ? " - " + body : " + " + body;
        }
    }
    return out;
}

}  // namespace dga

#endif
