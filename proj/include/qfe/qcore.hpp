#pragma once

/**
 * @file qcore.hpp
 * @brief q-combinatorics and q-calculus on polynomials.
 *
 * q-integers use the summation form 1 + q + ... + q^{n-1}, so q = 1 needs no
 * special casing. The Jackson integral only ever acts on polynomials here and
 * is realised through the antiderivative x^n -> x^{n+1} / [n+1]_q.
 */

#include <cstddef>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "qfe/field.hpp"

namespace qfe {

/// Dense polynomial sum c_k x^k over K. Zero is the empty coefficient list.
template <ExactField K>
class Poly {
public:
    Poly() = default;
    Poly(K c) {  // NOLINT(google-explicit-constructor)
        if (!qfe::is_zero(c)) c_.push_back(std::move(c));
    }
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly x() { return monomial(K(Rational(1)), 1); }
    static Poly monomial(K c, std::size_t k) {
        if (qfe::is_zero(c)) return {};
        std::vector<K> v(k + 1, K(Rational(0)));
        v[k] = std::move(c);
        return Poly(std::move(v));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    std::size_t size() const noexcept { return c_.size(); }
    const std::vector<K>& coeffs() const noexcept { return c_; }
    K coeff(std::size_t k) const { return k < c_.size() ? c_[k] : K(Rational(0)); }
    K lead() const { return c_.empty() ? K(Rational(0)) : c_.back(); }

    /// Horner evaluation at c.
    K eval(const K& c) const {
        K acc(Rational(0));
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * c + *it;
        return acc;
    }

    Poly scaled(const K& s) const {
        if (qfe::is_zero(s)) return {};
        std::vector<K> v = c_;
        for (auto& c : v) c = c * s;
        return Poly(std::move(v));
    }

    Poly& operator+=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K(Rational(0)));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), K(Rational(0)));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return a.scaled(K(Rational(-1))); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> v(a.c_.size() + b.c_.size() - 1, K(Rational(0)));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (qfe::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim() {
        while (!c_.empty() && qfe::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<K> c_;
};

/// Maps rational coefficients into K.
template <ExactField K>
Poly<K> lift(const Poly<Rational>& p) {
    std::vector<K> v;
    v.reserve(p.size());
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return Poly<K>(std::move(v));
}

template <ExactField K>
K poly_eval(const Poly<K>& p, const K& c) {
    return p.eval(c);
}

// ---------------------------------------------------------------------------
// q-combinatorics

template <ExactField K>
K q_int(const QContext<K>& ctx, std::size_t n) {
    return ctx.q_int(n);
}

template <ExactField K>
K q_factorial(const QContext<K>& ctx, std::size_t n) {
    return ctx.q_factorial(n);
}

template <ExactField K>
K q_binomial(const QContext<K>& ctx, std::size_t n, long k) {
    return ctx.q_binomial(n, k);
}

/// [n]_q! / ([i_1]_q! ... [i_r]_q!); the parts must sum to n.
template <ExactField K>
K q_multinomial(const QContext<K>& ctx, std::size_t n, std::span<const std::size_t> parts) {
    const std::size_t total = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
    if (total != n) throw PartsMismatch(static_cast<long>(total), static_cast<long>(n));
    // Product of binomials avoids dividing by a product of factorials.
    K result(Rational(1));
    std::size_t consumed = 0;
    for (std::size_t part : parts) {
        consumed += part;
        result = result * ctx.q_binomial(consumed, static_cast<long>(part));
    }
    return result;
}

template <ExactField K>
K q_multinomial(const QContext<K>& ctx, std::size_t n, std::initializer_list<std::size_t> parts) {
    std::vector<std::size_t> v(parts);
    return q_multinomial(ctx, n, std::span<const std::size_t>(v));
}

/// Marker for the infinite product (a:q)_infinity, which has no exact finite form.
struct InfiniteLength {};
inline constexpr InfiniteLength infinite_length{};

/// (a:q)_n = prod_{i<n} (1 - a q^i).
template <ExactField K>
K q_shifted_factorial(const QContext<K>& ctx, const K& a, std::size_t n) {
    K result(Rational(1));
    const K one(Rational(1));
    for (std::size_t i = 0; i < n; ++i) result = result * (one - a * ctx.q_pow(i));
    return result;
}

template <ExactField K>
K q_shifted_factorial(const QContext<K>&, const K&, InfiniteLength) {
    throw Unsupported("(a:q)_infinity is an infinite product; only finite lengths are supported");
}

// ---------------------------------------------------------------------------
// q-calculus

/// D_q: c_k x^k -> c_k [k]_q x^{k-1}.
template <ExactField K>
Poly<K> q_derivative(const QContext<K>& ctx, const Poly<K>& p) {
    if (p.size() <= 1) return {};
    std::vector<K> v(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) v[k - 1] = p.coeffs()[k] * ctx.q_int(k);
    return Poly<K>(std::move(v));
}

/// D_q^k, computed in one pass: x^n -> [n]_q!/[n-k]_q! x^{n-k}.
template <ExactField K>
Poly<K> q_derivative_k(const QContext<K>& ctx, const Poly<K>& p, std::size_t k) {
    if (k == 0) return p;
    if (p.size() <= k) return {};
    std::vector<K> v(p.size() - k);
    for (std::size_t n = k; n < p.size(); ++n) {
        K falling(Rational(1));
        for (std::size_t i = n - k + 1; i <= n; ++i) falling = falling * ctx.q_int(i);
        v[n - k] = p.coeffs()[n] * falling;
    }
    return Poly<K>(std::move(v));
}

/// Jackson antiderivative with zero constant term: c_k x^k -> c_k x^{k+1} / [k+1]_q.
template <ExactField K>
Poly<K> q_antiderivative(const QContext<K>& ctx, const Poly<K>& p) {
    if (p.is_zero()) return {};
    std::vector<K> v(p.size() + 1, K(Rational(0)));
    for (std::size_t k = 0; k < p.size(); ++k) v[k + 1] = p.coeffs()[k] / ctx.q_int(k + 1);
    return Poly<K>(std::move(v));
}

/// Definite q-integral F(b) - F(a) with F the q-antiderivative.
template <ExactField K>
K q_integral(const QContext<K>& ctx, const Poly<K>& p, const K& a, const K& b) {
    auto F = q_antiderivative(ctx, p);
    return F.eval(b) - F.eval(a);
}

}  // namespace qfe
