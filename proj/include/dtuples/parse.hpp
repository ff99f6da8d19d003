#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "dtuples/bipoly.hpp"
#include "dtuples/errors.hpp"
#include "dtuples/fractional_map.hpp"
#include "dtuples/gaussian.hpp"

namespace dtuples {
namespace detail {

// Recursive-descent parser over rational expressions in x, y, i:
//
//   expr   := ['+' | '-'] term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := base ('^' uint)?
//   base   := 'x' | 'y' | 'i' | integer | '(' expr ')'
//
// Every node carries an exact numerator/denominator pair of BiPoly, so '/'
// is ordinary division and rational literals like 3/4 need no special case.
// There is no implicit multiplication: "2x" is a syntax error.
class ExprParser {
  public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    struct Ratio {
        BiPoly num;
        BiPoly den;
    };

    Ratio parse_all() {
        skip_ws();
        Ratio r = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        if (r.num.is_zero() && r.den.is_zero()) fail("empty expression");
        return r;
    }

  private:
    static constexpr int kMaxExponent = 64;

    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

    void skip_ws() {
        while (pos_ < text_.size()) {
            // accept the UTF-8 minus sign by rewriting it to '-' lazily in peek()
            const char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
                ++pos_;
            else
                break;
        }
    }

    // Returns the next meaningful char, treating UTF-8 MINUS SIGN (U+2212,
    // bytes e2 88 92) as '-'. advance() must use consume_char() to skip the
    // right number of bytes.
    char peek() const {
        if (pos_ >= text_.size()) return '\0';
        if (pos_ + 2 < text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xe2 &&
            static_cast<unsigned char>(text_[pos_ + 1]) == 0x88 &&
            static_cast<unsigned char>(text_[pos_ + 2]) == 0x92)
            return '-';
        return text_[pos_];
    }

    void consume_char() {
        if (pos_ + 2 < text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xe2 &&
            static_cast<unsigned char>(text_[pos_ + 1]) == 0x88 &&
            static_cast<unsigned char>(text_[pos_ + 2]) == 0x92)
            pos_ += 3;
        else
            ++pos_;
    }

    static Ratio from_poly(BiPoly p) { return {std::move(p), BiPoly(GaussianRational(1))}; }

    // Constant denominators fold into the numerator's coefficients right
    // away. Subexpressions that evaluate to a polynomial then carry their
    // exact value with denominator 1, so a written "num / den" survives as
    // that very pair instead of both sides picking up the product of the
    // coefficient denominators.
    static Ratio fold(Ratio r) {
        if (r.den.is_zero() || !r.den.is_constant()) return r;
        const GaussianRational c = r.den.coeff(0, 0);
        if (c == GaussianRational(1)) return r;
        return {r.num * BiPoly(GaussianRational(1) / c), BiPoly(GaussianRational(1))};
    }

    static Ratio add(const Ratio& a, const Ratio& b) {
        return fold({a.num * b.den + b.num * a.den, a.den * b.den});
    }
    static Ratio sub(const Ratio& a, const Ratio& b) {
        return fold({a.num * b.den - b.num * a.den, a.den * b.den});
    }
    static Ratio mul(const Ratio& a, const Ratio& b) {
        return fold({a.num * b.num, a.den * b.den});
    }
    Ratio div(const Ratio& a, const Ratio& b, std::size_t at) const {
        if (b.num.is_zero()) throw SyntaxError(at, "division by zero");
        return fold({a.num * b.den, a.den * b.num});
    }

    Ratio expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') {
            neg = peek() == '-';
            consume_char();
        }
        Ratio acc = term();
        if (neg) acc.num = -acc.num;
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '+' && c != '-') break;
            consume_char();
            Ratio rhs = term();
            acc = (c == '+') ? add(acc, rhs) : sub(acc, rhs);
        }
        return acc;
    }

    Ratio term() {
        Ratio acc = factor();
        for (;;) {
            skip_ws();
            const char c = peek();
            if (c != '*' && c != '/') break;
            const std::size_t at = pos_;
            consume_char();
            Ratio rhs = factor();
            acc = (c == '*') ? mul(acc, rhs) : div(acc, rhs, at);
        }
        return acc;
    }

    Ratio factor() {
        Ratio b = base();
        skip_ws();
        if (peek() != '^') return b;
        consume_char();
        skip_ws();
        const std::size_t at = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
        unsigned long e = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            e = e * 10 + static_cast<unsigned long>(peek() - '0');
            if (e > kMaxExponent) throw SyntaxError(at, "exponent too large");
            consume_char();
        }
        return {b.num.pow(e), b.den.pow(e)};
    }

    Ratio base() {
        skip_ws();
        const char c = peek();
        if (c == 'x') {
            consume_char();
            return from_poly(BiPoly::var_x());
        }
        if (c == 'y') {
            consume_char();
            return from_poly(BiPoly::var_y());
        }
        if (c == 'i') {
            consume_char();
            return from_poly(BiPoly(GaussianRational::unit_i()));
        }
        if (c == '(') {
            consume_char();
            Ratio r = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            consume_char();
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                digits.push_back(peek());
                consume_char();
            }
            return from_poly(BiPoly(GaussianRational(Rational(BigInt(digits)))));
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace detail

// Parses an expression that must reduce to a polynomial in x and y: every
// division has to come out exact ("x^2/2 + y" is fine, and so is
// "(x^2 - 1)/(x - 1)", but "1/x" is not a polynomial). Exact
// Gaussian-rational coefficients throughout.
inline BiPoly parse_polynomial(std::string_view text) {
    detail::ExprParser p(text);
    auto r = p.parse_all();
    if (r.den.degree_x() > 0 || r.den.degree_y() > 0) {
        BiPoly quot;
        if (!bipoly_exact_div(r.num, r.den, quot))
            throw SyntaxError(text.size(),
                              "expression is not a polynomial (denominator does not divide out)");
        return quot;
    }
    const GaussianRational den = r.den.coeff(0, 0);
    if (den.is_zero()) throw SyntaxError(text.size(), "division by zero");
    return r.num * (GaussianRational(1) / den);
}

namespace detail {

inline void require_single_variable(const BiPoly& p, char var, std::string_view text) {
    const bool has_x = p.degree_x() > 0;
    const bool has_y = p.degree_y() > 0;
    if (var == 'x' && has_y)
        throw SyntaxError(text.size(), "expression must use only x");
    if (var == 'y' && has_x)
        throw SyntaxError(text.size(), "expression must use only y");
}

inline UniPoly to_unipoly(const BiPoly& p, char var) {
    // p is univariate in `var` (or constant) by the time this runs
    const BiPoly q = (var == 'y') ? p.swap_xy() : p;
    const int dx = q.degree_x();
    UniPoly out = UniPoly::zero();
    for (int k = 0; k <= std::max(dx, 0); ++k) {
        const GaussianRational c = q.coeff(k, 0);
        if (!c.is_zero()) out = out + UniPoly::monomial(k, c);
    }
    return out;
}

// Position of the '/' separating a top-level "num / den" quotient, or npos
// when the text is not a plain division chain at depth 0 (a leading sign is
// part of the numerator). Keeping the written split lets both sides through
// coefficient for coefficient; any other shape is evaluated as one rational
// expression.
inline std::size_t quotient_split_point(std::string_view text) {
    std::size_t sep = std::string_view::npos;
    int depth = 0;
    bool leading = true;
    for (std::size_t k = 0; k < text.size(); ++k) {
        const char c = text[k];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        bool minus = c == '-';
        if (k + 2 < text.size() && static_cast<unsigned char>(text[k]) == 0xe2 &&
            static_cast<unsigned char>(text[k + 1]) == 0x88 &&
            static_cast<unsigned char>(text[k + 2]) == 0x92) {
            minus = true;
            k += 2;
        }
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        else if (depth == 0) {
            if (c == '/')
                sep = k;
            else if (c == '*' || (!leading && (c == '+' || minus)))
                return std::string_view::npos;
        }
        leading = false;
    }
    return sep;
}

}  // namespace detail

// Parses a rational map in a single variable ('x' or 'y'), e.g. for var='x'
// "(x^2+1)/(x-2)" or "x^3". Mentioning the other variable is an error. When
// the text is a top-level quotient, numerator and denominator are kept
// exactly as written (so "(2*x)/(2)" stays 2x over 2 rather than collapsing
// to x over 1).
inline FractionalMap parse_fractional_map(std::string_view text, char var) {
    BiPoly num, den;
    const std::size_t sep = detail::quotient_split_point(text);
    if (sep != std::string_view::npos) {
        detail::ExprParser pn(text.substr(0, sep));
        const auto a = pn.parse_all();
        detail::ExprParser pd(text.substr(sep + 1));
        detail::ExprParser::Ratio b;
        try {
            b = pd.parse_all();
        } catch (const SyntaxError& e) {
            throw SyntaxError(sep + 1 + e.position(), e.reason());
        }
        if (b.num.is_zero()) throw SyntaxError(sep, "division by zero");
        num = a.num * b.den;
        den = a.den * b.num;
    } else {
        detail::ExprParser p(text);
        auto r = p.parse_all();
        num = std::move(r.num);
        den = std::move(r.den);
    }
    detail::require_single_variable(num, var, text);
    detail::require_single_variable(den, var, text);
    if (num.is_zero()) throw SyntaxError(text.size(), "map numerator is zero");
    if (den.is_zero()) throw SyntaxError(text.size(), "division by zero");
    return FractionalMap::make(detail::to_unipoly(num, var), detail::to_unipoly(den, var));
}

// Splits "phi_expr = psi_expr" at the unique top-level '=' and parses the
// left side as a map in x, the right as a map in y.
inline std::pair<FractionalMap, FractionalMap> parse_map_equation(std::string_view text) {
    int depth = 0;
    std::size_t eq = std::string_view::npos;
    for (std::size_t k = 0; k < text.size(); ++k) {
        const char c = text[k];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '=' && depth == 0) {
            if (eq != std::string_view::npos) throw SyntaxError(k, "more than one '='");
            eq = k;
        }
    }
    if (eq == std::string_view::npos) throw SyntaxError(text.size(), "expected 'phi(x) = psi(y)'");
    FractionalMap phi = parse_fractional_map(text.substr(0, eq), 'x');
    FractionalMap psi_raw = parse_fractional_map(text.substr(eq + 1), 'y');
    return {std::move(phi), std::move(psi_raw)};
}

}  // namespace dtuples
