#pragma once

/**
 * @file render.hpp
 * @brief Plain-text and LaTeX rendering of scalars and polynomials.
 */

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>

#include "qfe/families.hpp"

namespace qfe {

enum class Style { Plain, Latex };

namespace detail {

inline std::string power(std::string_view var, std::size_t e, Style style) {
    if (e == 0) return {};
    std::string out(var);
    if (e == 1) return out;
    if (style == Style::Latex) return out + "^{" + std::to_string(e) + "}";
    return out + "^" + std::to_string(e);
}

inline std::string abs_rational(const Rational& r, Style style) {
    Rational a = r.sign() < 0 ? -r : r;
    if (a.is_integer() || style == Style::Plain) return a.str();
    return "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
}

/// Joins signed terms: the first keeps a leading "-", the rest get " + " / " - ".
inline void append_term(std::string& out, bool negative, const std::string& body) {
    if (out.empty()) out = negative ? "-" + body : body;
    else out += (negative ? " - " : " + ") + body;
}

inline std::string monomial_body(const Rational& coef, const std::string& vars, Style style) {
    Rational a = coef.sign() < 0 ? -coef : coef;
    if (vars.empty()) return abs_rational(a, style);
    if (a.is_one()) return vars;
    std::string c = abs_rational(a, style);
    return style == Style::Latex ? c + vars : c + "*" + vars;
}

}  // namespace detail

inline std::string render(const Rational& r, Style style = Style::Plain) {
    if (style == Style::Plain || r.is_integer()) return r.str();
    return (r.sign() < 0 ? "-" : "") + detail::abs_rational(r, style);
}

inline std::string render(const MPoly& p, Style style = Style::Plain) {
    if (p.is_zero()) return "0";
    const std::string_view lam = style == Style::Latex ? "\\lambda" : "lambda";
    std::string out;
    for (const auto& t : p.terms()) {
        std::string vars = detail::power("q", t.deg_q, style);
        std::string lpart = detail::power(lam, t.deg_lambda, style);
        if (!vars.empty() && !lpart.empty()) vars += style == Style::Latex ? " " : "*";
        vars += lpart;
        detail::append_term(out, t.coef.sign() < 0, detail::monomial_body(t.coef, vars, style));
    }
    return out;
}

inline std::string render(const RatFunc& f, Style style = Style::Plain) {
    if (f.is_polynomial()) {
        Rational d = f.den().constant_value();
        if (d.is_one()) return render(f.num(), style);
        if (f.num().is_constant()) return render(f.num().constant_value() / d, style);
    }
    // Pull a global minus sign out of the numerator when every term is negative.
    auto terms = f.num().terms();
    bool all_negative = std::all_of(terms.begin(), terms.end(), [](const Term& t) { return t.coef.sign() < 0; });
    MPoly num = all_negative ? -f.num() : f.num();
    std::string sign = all_negative ? "-" : "";
    if (style == Style::Latex) return sign + "\\frac{" + render(num, style) + "}{" + render(f.den(), style) + "}";
    auto wrap = [](const MPoly& p, const std::string& s) { return p.terms().size() > 1 ? "(" + s + ")" : s; };
    return sign + wrap(num, render(num, style)) + "/" + wrap(f.den(), render(f.den(), style));
}

/// A scalar used as a coefficient: wrapped in parentheses unless it is a single factor.
template <ExactField K>
std::string render_coefficient(const K& c, Style style) {
    std::string s = render(c, style);
    bool single_frac = style == Style::Latex && s.rfind("\\frac", 0) == 0;
    if (s.find(' ') == std::string::npos || single_frac) return s;
    return style == Style::Latex ? "\\left(" + s + "\\right)" : "(" + s + ")";
}

template <ExactField K>
std::string render(const Poly<K>& p, Style style = Style::Plain, std::string_view var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = p.size(); k-- > 0;) {
        K c = p.coeffs()[k];
        if (is_zero(c)) continue;
        // Prefer "a - b*x" over "a + (-b)*x" when negating removes the leading sign.
        bool negative = false;
        if (std::string s = render(c, style); !s.empty() && s[0] == '-') {
            std::string flipped = render(K(-c), style);
            if (flipped.empty() || flipped[0] != '-') {
                negative = true;
                c = -c;
            }
        }
        std::string v = detail::power(var, k, style);
        std::string cs = render_coefficient(c, style);
        std::string body;
        if (v.empty()) body = cs;
        else if (cs == "1") body = v;
        else body = cs + (style == Style::Latex ? " " : "*") + v;
        detail::append_term(out, negative, body);
    }
    return out;
}

/// LaTeX symbol for a family member, e.g. H_{3,q}(\lambda) or B^{(2)}_{3,q}.
inline std::string latex_symbol(const FamilyId& f, std::size_t n, bool polynomial) {
    std::string idx = std::to_string(n);
    switch (f.kind) {
        case FamilyKind::QBernoulli: return "B_{" + idx + ",q}" + (polynomial ? "(x)" : "");
        case FamilyKind::QEuler: return "E_{" + idx + ",q}" + (polynomial ? "(x)" : "");
        case FamilyKind::QFrobeniusEuler:
            return "H_{" + idx + ",q}" + (polynomial ? "(x\\mid \\lambda)" : "(\\lambda)");
        case FamilyKind::QFrobeniusEulerOrderR:
            return "H^{(" + std::to_string(f.r) + ")}_{" + idx + ",q}" +
                   (polynomial ? "(x\\mid \\lambda)" : "(\\lambda)");
        case FamilyKind::QBernoulliOrderR:
            return "B^{(" + std::to_string(f.r) + ")}_{" + idx + ",q}" + (polynomial ? "(x)" : "");
    }
    return {};
}

}  // namespace qfe
