#pragma once

/**
 * @file carlitz.hpp
 * @brief Carlitz q-Bernoulli numbers and polynomials in the variable y = q^x.
 *
 * With y = q^x both q^{lx} = y^l and [x]_q = (1 - y)/(1 - q) are polynomial
 * in y, so beta_{n,q}(x) becomes a degree-n polynomial in y with
 * coefficients in Q(q):
 *
 *   beta_{n,q}(x) = (1-q)^{-n} sum_l binom(n,l) (-1)^l (l+1)/[l+1]_q y^l
 *
 * (ordinary binomials). Expansion of a polynomial in [x]_q over the basis
 * {beta_{k,q}(x)} is a triangular solve in this representation.
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "qfe/qcore.hpp"

namespace qfe {

/// Polynomial in y = q^x.
template <ExactField K>
struct CarlitzPoly {
    Poly<K> in_y;

    long degree() const noexcept { return in_y.degree(); }
    friend bool operator==(const CarlitzPoly&, const CarlitzPoly&) = default;
};

/// Polynomial in the formal symbol [x]_q.
template <ExactField K>
struct QBracketPoly {
    Poly<K> in_bracket;

    friend bool operator==(const QBracketPoly&, const QBracketPoly&) = default;
};

namespace detail {

inline Rational ordinary_binomial(std::size_t n, std::size_t k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

}  // namespace detail

/// Coefficient of y^l in beta_{n,q}(x).
template <ExactField K>
K carlitz_coefficient(const QContext<K>& ctx, std::size_t n, std::size_t l) {
    const K one(Rational(1));
    K prefactor = one;
    for (std::size_t i = 0; i < n; ++i) prefactor = prefactor * (one - ctx.q());
    Rational sign = (l % 2 == 0) ? Rational(1) : Rational(-1);
    K term = K(detail::ordinary_binomial(n, l) * sign * Rational(static_cast<long>(l + 1))) / ctx.q_int(l + 1);
    return term / prefactor;
}

template <ExactField K>
CarlitzPoly<K> carlitz_poly(const QContext<K>& ctx, std::size_t n) {
    std::vector<K> c(n + 1);
    for (std::size_t l = 0; l <= n; ++l) c[l] = carlitz_coefficient(ctx, n, l);
    return {Poly<K>(std::move(c))};
}

/// beta_{0..N,q}: the polynomials at x = 0, i.e. y = 1.
template <ExactField K>
std::vector<K> carlitz_numbers(const QContext<K>& ctx, std::size_t N) {
    std::vector<K> out;
    out.reserve(N + 1);
    const K one(Rational(1));
    for (std::size_t n = 0; n <= N; ++n) {
        K acc(Rational(0));
        for (std::size_t l = 0; l <= n; ++l) acc = acc + carlitz_coefficient(ctx, n, l);
        out.push_back(std::move(acc));
    }
    return out;
}

/// [x]_q = (1 - y)/(1 - q) as a polynomial in y.
template <ExactField K>
Poly<K> q_bracket_in_y(const QContext<K>& ctx) {
    const K inv = K(Rational(1)) / (K(Rational(1)) - ctx.q());
    return Poly<K>(std::vector<K>{inv, -inv});
}

/// sum_l binom(n,l) y^l beta_{l,q} [x]_q^{n-l}, built from the numbers.
template <ExactField K>
CarlitzPoly<K> carlitz_poly_via_numbers(const QContext<K>& ctx, std::size_t n) {
    auto beta = carlitz_numbers(ctx, n);
    const Poly<K> bracket = q_bracket_in_y(ctx);
    // bracket_pow[m] = [x]_q^m
    std::vector<Poly<K>> bracket_pow{Poly<K>(K(Rational(1)))};
    for (std::size_t m = 1; m <= n; ++m) bracket_pow.push_back(bracket_pow.back() * bracket);
    Poly<K> out;
    for (std::size_t l = 0; l <= n; ++l) {
        K c = K(detail::ordinary_binomial(n, l)) * beta[l];
        out += (Poly<K>::monomial(c, l) * bracket_pow[n - l]);
    }
    return {std::move(out)};
}

/// Rewrites p([x]_q) in the variable y.
template <ExactField K>
Poly<K> to_y_form(const QContext<K>& ctx, const QBracketPoly<K>& p) {
    const Poly<K> bracket = q_bracket_in_y(ctx);
    Poly<K> out;
    for (auto it = p.in_bracket.coeffs().rbegin(); it != p.in_bracket.coeffs().rend(); ++it)
        out = out * bracket + Poly<K>(*it);
    return out;
}

/// Coefficients C_{k,q} with sum_k C_{k,q} beta_{k,q}(x) = p([x]_q), by back-substitution
/// against the triangular family {beta_{k,q}} (deg_y beta_k = k).
template <ExactField K>
std::vector<K> expand_in_carlitz_basis(const QContext<K>& ctx, const QBracketPoly<K>& p) {
    Poly<K> rest = to_y_form(ctx, p);
    if (rest.is_zero()) return {};
    const auto n = static_cast<std::size_t>(rest.degree());
    std::vector<K> c(n + 1, K(Rational(0)));
    for (std::size_t k = n + 1; k-- > 0;) {
        if (static_cast<long>(k) > rest.degree()) continue;
        auto beta_k = carlitz_poly(ctx, k).in_y;
        c[k] = rest.coeff(k) / beta_k.lead();
        rest -= beta_k.scaled(c[k]);
    }
    return c;
}

/// sum_k C_k beta_{k,q}(x) in the y-representation.
template <ExactField K>
Poly<K> reconstruct_carlitz(const QContext<K>& ctx, const std::vector<K>& coeffs) {
    Poly<K> out;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!is_zero(coeffs[k])) out += carlitz_poly(ctx, k).in_y.scaled(coeffs[k]);
    return out;
}

/// Classical Bernoulli numbers B_0..B_N (B_1 = -1/2) from
/// sum_{k=0}^{n} binom(n+1, k) B_k = 0.
inline std::vector<Rational> classical_bernoulli(std::size_t N) {
    std::vector<Rational> b(N + 1);
    b[0] = Rational(1);
    for (std::size_t n = 1; n <= N; ++n) {
        Rational acc;
        for (std::size_t k = 0; k < n; ++k) acc += detail::ordinary_binomial(n + 1, k) * b[k];
        b[n] = -acc / Rational(static_cast<long>(n + 1));
    }
    return b;
}

}  // namespace qfe
