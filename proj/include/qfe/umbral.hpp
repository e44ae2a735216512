#pragma once

/**
 * @file umbral.hpp
 * @brief The q-umbral algebra on truncated divided-power series.
 *
 * A DividedSeries of order N stores a_0..a_N for f(t) = sum a_k t^k / [k]_q!.
 * The stored a_k are exactly the functional values <f(t) | x^k>, so applying
 * f as a linear functional is a dot product and multiplying two series is a
 * Gaussian-binomial convolution.
 */

#include <algorithm>
#include <cstddef>
#include <vector>

#include "qfe/qcore.hpp"

namespace qfe {

template <ExactField K>
class DividedSeries {
public:
    /// The series 1 truncated at order N.
    explicit DividedSeries(std::size_t order = 0) : a_(order + 1, K(Rational(0))) { a_[0] = K(Rational(1)); }

    /// Takes the divided coefficients a_0..a_N directly; must be non-empty.
    static DividedSeries from_divided(std::vector<K> coeffs) {
        if (coeffs.empty()) throw Error("DividedSeries needs at least one coefficient");
        DividedSeries s;
        s.a_ = std::move(coeffs);
        return s;
    }

    /// t^k truncated at order N: divided coefficient [k]_q! at index k.
    static DividedSeries t_power(const QContext<K>& ctx, std::size_t k, std::size_t order) {
        std::vector<K> v(order + 1, K(Rational(0)));
        if (k <= order) v[k] = ctx.q_factorial(k);
        return from_divided(std::move(v));
    }

    std::size_t order() const noexcept { return a_.size() - 1; }
    const std::vector<K>& divided_coeffs() const noexcept { return a_; }
    const K& operator[](std::size_t k) const { return a_[k]; }

    /// Ordinary coefficient of t^k, a_k / [k]_q!.
    K ordinary_coeff(const QContext<K>& ctx, std::size_t k) const { return a_[k] / ctx.q_factorial(k); }

    DividedSeries truncated(std::size_t order) const {
        DividedSeries s = *this;
        s.a_.resize(std::min(order, this->order()) + 1);
        return s;
    }

    friend DividedSeries operator+(const DividedSeries& f, const DividedSeries& g) {
        std::size_t n = std::min(f.order(), g.order());
        std::vector<K> v(n + 1);
        for (std::size_t k = 0; k <= n; ++k) v[k] = f.a_[k] + g.a_[k];
        return from_divided(std::move(v));
    }
    friend DividedSeries operator-(const DividedSeries& f, const DividedSeries& g) {
        std::size_t n = std::min(f.order(), g.order());
        std::vector<K> v(n + 1);
        for (std::size_t k = 0; k <= n; ++k) v[k] = f.a_[k] - g.a_[k];
        return from_divided(std::move(v));
    }
    DividedSeries scaled(const K& c) const {
        DividedSeries s = *this;
        for (auto& a : s.a_) a = a * c;
        return s;
    }

    friend bool operator==(const DividedSeries&, const DividedSeries&) = default;

private:
    std::vector<K> a_;
};

/// e_q(t): every divided coefficient is one.
template <ExactField K>
DividedSeries<K> eq_series(std::size_t order) {
    return DividedSeries<K>::from_divided(std::vector<K>(order + 1, K(Rational(1))));
}

/// e_q(yt): a_k = y^k, with 0^0 = 1.
template <ExactField K>
DividedSeries<K> scaled_eq_series(const K& y, std::size_t order) {
    std::vector<K> v(order + 1);
    v[0] = K(Rational(1));
    for (std::size_t k = 1; k <= order; ++k) v[k] = v[k - 1] * y;
    return DividedSeries<K>::from_divided(std::move(v));
}

/// Product; mixed orders truncate to the smaller one.
/// c_n = sum_k binom(n,k)_q a_k b_{n-k}.
template <ExactField K>
DividedSeries<K> series_mul(const QContext<K>& ctx, const DividedSeries<K>& f, const DividedSeries<K>& g) {
    const std::size_t order = std::min(f.order(), g.order());
    std::vector<K> c(order + 1, K(Rational(0)));
    for (std::size_t n = 0; n <= order; ++n) {
        const auto& row = ctx.binomial_row(n);
        K acc(Rational(0));
        for (std::size_t k = 0; k <= n; ++k) {
            if (is_zero(f[k]) || is_zero(g[n - k])) continue;
            acc = acc + row[k] * f[k] * g[n - k];
        }
        c[n] = std::move(acc);
    }
    return DividedSeries<K>::from_divided(std::move(c));
}

/// Multiplicative inverse by the triangular recurrence
/// g_0 = 1/a_0, g_n = -(1/a_0) sum_{k=1}^n binom(n,k)_q a_k g_{n-k}.
template <ExactField K>
DividedSeries<K> series_inverse(const QContext<K>& ctx, const DividedSeries<K>& f) {
    if (is_zero(f[0])) throw NotInvertible();
    const K inv_a0 = K(Rational(1)) / f[0];
    std::vector<K> g(f.order() + 1);
    g[0] = inv_a0;
    for (std::size_t n = 1; n <= f.order(); ++n) {
        const auto& row = ctx.binomial_row(n);
        K acc(Rational(0));
        for (std::size_t k = 1; k <= n; ++k) {
            if (is_zero(f[k])) continue;
            acc = acc + row[k] * f[k] * g[n - k];
        }
        g[n] = -(inv_a0 * acc);
    }
    return DividedSeries<K>::from_divided(std::move(g));
}

/// f^r by binary powering; f^0 is the one-series of the same order.
template <ExactField K>
DividedSeries<K> series_pow(const QContext<K>& ctx, const DividedSeries<K>& f, unsigned r) {
    DividedSeries<K> result(f.order());
    DividedSeries<K> base = f;
    while (r) {
        if (r & 1u) result = series_mul(ctx, result, base);
        r >>= 1u;
        if (r) base = series_mul(ctx, base, base);
    }
    return result;
}

/// <f(t) | p(x)> = sum_k b_k a_k for p = sum_k b_k x^k.
template <ExactField K>
K apply_functional(const DividedSeries<K>& f, const Poly<K>& p) {
    if (p.degree() > static_cast<long>(f.order())) throw OrderTooLow(f.order(), static_cast<std::size_t>(p.degree()));
    K acc(Rational(0));
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (is_zero(p.coeffs()[k])) continue;
        acc = acc + p.coeffs()[k] * f[k];
    }
    return acc;
}

/// Action of f(t) as an operator: sum_k (a_k / [k]_q!) D_q^k p.
template <ExactField K>
Poly<K> apply_operator(const QContext<K>& ctx, const DividedSeries<K>& f, const Poly<K>& p) {
    if (p.degree() > static_cast<long>(f.order())) throw OrderTooLow(f.order(), static_cast<std::size_t>(p.degree()));
    Poly<K> out;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (is_zero(f[k])) continue;
        out += q_derivative_k(ctx, p, k).scaled(f[k] / ctx.q_factorial(k));
    }
    return out;
}

}  // namespace qfe
