#pragma once

/**
 * @file basis.hpp
 * @brief Expansion of polynomials in the q-Frobenius-Euler bases
 *        {H_k(x|lambda)} and {H^{(r)}_k(x|lambda)}, and reconstruction.
 *
 * Three routes compute the same coefficients:
 *  - expand_in_fe: C_k = (p^{(k)}(1) - lambda p^{(k)}(0)) / ([k]_q! (1 - lambda))
 *  - expand_in_fe_order_r: C^r_k = <g(t)^r | D_q^k p> / [k]_q! with
 *    g(t) = (e_q(t) - lambda)/(1 - lambda), via the umbral functional
 *  - expand_in_fe_order_r_multinomial: the same functional expanded into a
 *    sum over weak compositions, using only Taylor data of p at 0.
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "qfe/families.hpp"

namespace qfe {

template <ExactField K>
struct BasisExpansion {
    FamilyId basis{FamilyKind::QFrobeniusEuler, 1};
    std::vector<K> coeffs;

    friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;
};

/// Basis polynomials H^{(r)}_0 .. H^{(r)}_n (r = 1 is the plain H basis).
template <ExactField K>
std::vector<Poly<K>> fe_basis(const QContext<K>& ctx, std::size_t n, unsigned r) {
    auto numbers = frobenius_euler_numbers_order_r(ctx, n, r).values;
    std::vector<Poly<K>> out;
    out.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) out.push_back(appell_poly(ctx, numbers, k));
    return out;
}

template <ExactField K>
BasisExpansion<K> expand_in_fe(const QContext<K>& ctx, const Poly<K>& p) {
    BasisExpansion<K> e{{FamilyKind::QFrobeniusEuler, 1}, {}};
    if (p.is_zero()) return e;
    const K one(Rational(1));
    const K denom_lambda = one - ctx.lambda();
    const auto n = static_cast<std::size_t>(p.degree());
    e.coeffs.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        auto dk = q_derivative_k(ctx, p, k);
        K value = dk.eval(one) - ctx.lambda() * dk.coeff(0);
        e.coeffs.push_back(value / (ctx.q_factorial(k) * denom_lambda));
    }
    return e;
}

template <ExactField K>
BasisExpansion<K> expand_in_fe_order_r(const QContext<K>& ctx, const Poly<K>& p, unsigned r) {
    BasisExpansion<K> e{{FamilyKind::QFrobeniusEulerOrderR, r}, {}};
    if (p.is_zero()) return e;
    const auto n = static_cast<std::size_t>(p.degree());
    auto g_r = series_pow(ctx, frobenius_kernel(ctx, n), r);
    e.coeffs.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        e.coeffs.push_back(apply_functional(g_r, q_derivative_k(ctx, p, k)) / ctx.q_factorial(k));
    return e;
}

/// C^r_k = 1/([k]_q!(1-lambda)^r) sum_{l=0}^{deg p - k} sum_{j=0}^{r}
///   sum_{l_1+..+l_j = l} binom(r,j) (-lambda)^{r-j} / ([l_1]_q!..[l_j]_q!) p^{(k+l)}(0).
/// The j = 0 term is the empty composition, present only at l = 0.
template <ExactField K>
BasisExpansion<K> expand_in_fe_order_r_multinomial(const QContext<K>& ctx, const Poly<K>& p, unsigned r) {
    BasisExpansion<K> e{{FamilyKind::QFrobeniusEulerOrderR, r}, {}};
    if (p.is_zero()) return e;
    const K one(Rational(1));
    const auto n = static_cast<std::size_t>(p.degree());

    // inner[l][j] = sum over compositions of l into j parts of 1/prod [l_i]_q!.
    std::vector<std::vector<K>> inner(n + 1, std::vector<K>(r + 1, K(Rational(0))));
    for (std::size_t l = 0; l <= n; ++l)
        for (unsigned j = 0; j <= r; ++j)
            for_each_weak_composition(l, j, [&](std::span<const std::size_t> parts) {
                K denom = one;
                for (std::size_t part : parts) denom = denom * ctx.q_factorial(part);
                inner[l][j] = inner[l][j] + one / denom;
            });

    // binom(r,j) (-lambda)^{r-j}
    std::vector<K> weight(r + 1);
    {
        Rational binom(1);
        const K neg_lambda = -ctx.lambda();
        for (unsigned j = 0; j <= r; ++j) {
            K power = one;
            for (unsigned i = j; i < r; ++i) power = power * neg_lambda;
            weight[j] = K(binom) * power;
            binom = binom * Rational(static_cast<long>(r - j)) / Rational(static_cast<long>(j + 1));
        }
    }

    K scale_lambda = one;
    for (unsigned i = 0; i < r; ++i) scale_lambda = scale_lambda * (one - ctx.lambda());

    e.coeffs.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        K acc(Rational(0));
        for (std::size_t l = 0; k + l <= n; ++l) {
            // p^{(m)}(0) = [m]_q! * (coefficient of x^m)
            const K& c = p.coeffs()[k + l];
            if (is_zero(c)) continue;
            K taylor = ctx.q_factorial(k + l) * c;
            K sum_j(Rational(0));
            for (unsigned j = 0; j <= r; ++j)
                if (!is_zero(inner[l][j])) sum_j = sum_j + weight[j] * inner[l][j];
            acc = acc + sum_j * taylor;
        }
        e.coeffs.push_back(acc / (ctx.q_factorial(k) * scale_lambda));
    }
    return e;
}

/// sum_k C_k * (basis polynomial k).
template <ExactField K>
Poly<K> reconstruct(const QContext<K>& ctx, const BasisExpansion<K>& e) {
    if (e.coeffs.empty()) return {};
    const std::size_t n = e.coeffs.size() - 1;
    unsigned r = e.basis.kind == FamilyKind::QFrobeniusEulerOrderR ? e.basis.r : 1;
    auto basis = fe_basis(ctx, n, r);
    Poly<K> out;
    for (std::size_t k = 0; k <= n; ++k)
        if (!is_zero(e.coeffs[k])) out += basis[k].scaled(e.coeffs[k]);
    return out;
}

/// Both sides of <(e_q(t) - 1)/t | H_n(x|lambda)> = int_0^1 H_n(u|lambda) d_q u.
template <ExactField K>
std::pair<K, K> functional_bernoulli_identity(const QContext<K>& ctx, std::size_t n) {
    auto h = frobenius_euler_poly(ctx, n);
    K lhs = apply_functional(bernoulli_kernel(ctx, n), h);
    K rhs = q_integral(ctx, h, K(Rational(0)), K(Rational(1)));
    return {std::move(lhs), std::move(rhs)};
}

}  // namespace qfe
