#pragma once

/**
 * @file poly_expr.hpp
 * @brief Recursive-descent parser for polynomial expressions in x.
 *
 * Grammar (whitespace insignificant):
 *
 *   expr     := term (('+' | '-') term)*
 *   term     := unary ('*'? unary)*      implicit '*' only before '(' or 'x'
 *   unary    := '-' unary | factor
 *   factor   := base ('^' uint)?
 *   base     := '(' expr ')' | 'x' | rational
 *   rational := int ('/' posint)?
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qfe/qcore.hpp"

namespace qfe {

/// Parse tree stored as an arena; children are indices into nodes.
struct PolyExpr {
    enum class Kind { Literal, Var, Neg, Add, Sub, Mul, Pow };

    struct Node {
        Kind kind = Kind::Literal;
        std::size_t offset = 0;  // byte offset of the node's first token
        Rational value;          // Literal
        unsigned long exponent = 0;  // Pow
        std::size_t lhs = 0;
        std::size_t rhs = 0;
    };

    std::vector<Node> nodes;
    std::size_t root = 0;
};

namespace detail {

class PolyExprParser {
public:
    explicit PolyExprParser(std::string_view src) : src_(src) {}

    PolyExpr parse() {
        PolyExpr e;
        out_ = &e;
        skip_ws();
        if (pos_ == src_.size()) fail({"'('", "'x'", "'-'", "integer"}, "empty expression");
        e.root = expr();
        skip_ws();
        if (pos_ != src_.size()) fail({"'+'", "'-'", "'*'", "'('", "'x'", "end of input"}, "unexpected character");
        return e;
    }

private:
    [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail) const {
        throw ParseError(pos_, std::move(expected), detail);
    }

    void skip_ws() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' || src_[pos_] == '\r'))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    std::size_t push(PolyExpr::Node n) {
        out_->nodes.push_back(std::move(n));
        return out_->nodes.size() - 1;
    }

    std::size_t binary(PolyExpr::Kind kind, std::size_t offset, std::size_t lhs, std::size_t rhs) {
        PolyExpr::Node n;
        n.kind = kind;
        n.offset = offset;
        n.lhs = lhs;
        n.rhs = rhs;
        return push(std::move(n));
    }

    std::size_t expr() {
        std::size_t start = pos_;
        std::size_t lhs = term();
        while (true) {
            char c = peek();
            if (c != '+' && c != '-') return lhs;
            ++pos_;
            std::size_t rhs = term();
            lhs = binary(c == '+' ? PolyExpr::Kind::Add : PolyExpr::Kind::Sub, start, lhs, rhs);
        }
    }

    std::size_t term() {
        std::size_t start = pos_;
        std::size_t lhs = unary();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
            } else if (c != '(' && c != 'x') {
                return lhs;
            }
            std::size_t rhs = unary();
            lhs = binary(PolyExpr::Kind::Mul, start, lhs, rhs);
        }
    }

    std::size_t unary() {
        if (peek() == '-') {
            std::size_t start = pos_++;
            std::size_t inner = unary();
            PolyExpr::Node n;
            n.kind = PolyExpr::Kind::Neg;
            n.offset = start;
            n.lhs = inner;
            return push(std::move(n));
        }
        return factor();
    }

    std::size_t factor() {
        std::size_t start = pos_;
        std::size_t b = base();
        if (peek() != '^') return b;
        ++pos_;
        skip_ws();
        std::string digits = read_digits();
        if (digits.empty()) fail({"unsigned integer exponent"}, "exponent must be a bare nonnegative integer");
        if (digits.size() > 9) fail({"smaller exponent"}, "exponent too large");
        PolyExpr::Node n;
        n.kind = PolyExpr::Kind::Pow;
        n.offset = start;
        n.lhs = b;
        n.exponent = std::stoul(digits);
        return push(std::move(n));
    }

    std::size_t base() {
        char c = peek();
        std::size_t start = pos_;
        if (c == '(') {
            ++pos_;
            std::size_t inner = expr();
            if (peek() != ')') fail({"')'", "'+'", "'-'", "'*'"}, "unbalanced parenthesis");
            ++pos_;
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            PolyExpr::Node n;
            n.kind = PolyExpr::Kind::Var;
            n.offset = start;
            return push(std::move(n));
        }
        if (c >= '0' && c <= '9') {
            std::string num = read_digits();
            mpz_class den = 1;
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                std::string d = read_digits();
                if (d.empty()) fail({"positive integer"}, "denominator missing");
                den = mpz_class(d, 10);
                if (den == 0) fail({"positive integer"}, "zero denominator");
            }
            PolyExpr::Node n;
            n.kind = PolyExpr::Kind::Literal;
            n.offset = start;
            n.value = Rational(mpz_class(num, 10), den);
            return push(std::move(n));
        }
        fail({"'('", "'x'", "'-'", "integer"}, c == '\0' ? "unexpected end of input" : "unexpected character");
    }

    std::string read_digits() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    PolyExpr* out_ = nullptr;
};

}  // namespace detail

inline PolyExpr parse_poly_expr(std::string_view src) { return detail::PolyExprParser(src).parse(); }

/// Expands the tree into a dense polynomial. Throws ParseError (pointing at the
/// offending node) when the result would exceed max_degree.
inline Poly<Rational> evaluate(const PolyExpr& e, std::size_t max_degree = 4096) {
    // Children always precede parents in the arena, so one forward pass suffices.
    std::vector<Poly<Rational>> val(e.nodes.size());
    auto check = [&](const Poly<Rational>& p, const PolyExpr::Node& n) {
        if (p.degree() > static_cast<long>(max_degree))
            throw ParseError(n.offset, {}, "degree exceeds " + std::to_string(max_degree));
    };
    for (std::size_t i = 0; i < e.nodes.size(); ++i) {
        const auto& n = e.nodes[i];
        switch (n.kind) {
            case PolyExpr::Kind::Literal: val[i] = Poly<Rational>(n.value); break;
            case PolyExpr::Kind::Var: val[i] = Poly<Rational>::x(); break;
            case PolyExpr::Kind::Neg: val[i] = -val[n.lhs]; break;
            case PolyExpr::Kind::Add: val[i] = val[n.lhs] + val[n.rhs]; break;
            case PolyExpr::Kind::Sub: val[i] = val[n.lhs] - val[n.rhs]; break;
            case PolyExpr::Kind::Mul: {
                const auto& a = val[n.lhs];
                const auto& b = val[n.rhs];
                if (!a.is_zero() && !b.is_zero() && a.degree() + b.degree() > static_cast<long>(max_degree))
                    throw ParseError(n.offset, {}, "degree exceeds " + std::to_string(max_degree));
                val[i] = a * b;
                break;
            }
            case PolyExpr::Kind::Pow: {
                const auto& b = val[n.lhs];
                if (b.degree() > 0 && static_cast<unsigned long>(b.degree()) * n.exponent > max_degree)
                    throw ParseError(n.offset, {}, "degree exceeds " + std::to_string(max_degree));
                Poly<Rational> acc(Rational(1));
                if (b.degree() <= 0) {
                    // Constants: exponentiate the scalar directly (0^0 = 1).
                    Rational c = b.is_zero() ? Rational(0) : b.coeff(0);
                    bool unit_or_zero = c.is_zero() || c == Rational(1) || c == Rational(-1);
                    if (!unit_or_zero && n.exponent > max_degree)
                        throw ParseError(n.offset, {}, "exponent exceeds " + std::to_string(max_degree));
                    acc = Poly<Rational>(n.exponent == 0 ? Rational(1) : c.pow(static_cast<unsigned>(n.exponent)));
                } else {
                    for (unsigned long k = 0; k < n.exponent; ++k) acc = acc * b;
                }
                val[i] = std::move(acc);
                break;
            }
        }
        check(val[i], n);
    }
    return e.nodes.empty() ? Poly<Rational>() : val[e.root];
}

inline Poly<Rational> parse_poly(std::string_view src, std::size_t max_degree = 4096) {
    return evaluate(parse_poly_expr(src), max_degree);
}

}  // namespace qfe
