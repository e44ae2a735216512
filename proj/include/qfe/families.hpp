#pragma once

/**
 * @file families.hpp
 * @brief Number and polynomial generators for the q-Bernoulli, q-Euler and
 *        q-Frobenius-Euler families (order 1 and order r).
 *
 * Every number table is the divided-coefficient list of a series inverse
 * (or a power of one): the family's generating function at x = 0. The
 * polynomials are the Appell expansions sum_l binom(n,l)_q v_{n-l} x^l.
 * The recurrence and multinomial-convolution routes are kept as separate
 * functions so they can serve as independent cross-checks.
 */

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qfe/compositions.hpp"
#include "qfe/umbral.hpp"

namespace qfe {

enum class FamilyKind { QBernoulli, QEuler, QFrobeniusEuler, QFrobeniusEulerOrderR, QBernoulliOrderR };

struct FamilyId {
    FamilyKind kind = FamilyKind::QFrobeniusEuler;
    unsigned r = 1;

    bool is_order_r() const noexcept {
        return kind == FamilyKind::QFrobeniusEulerOrderR || kind == FamilyKind::QBernoulliOrderR;
    }
    bool uses_lambda() const noexcept {
        return kind == FamilyKind::QFrobeniusEuler || kind == FamilyKind::QFrobeniusEulerOrderR;
    }

    friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

inline std::string_view family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::QBernoulli: return "bernoulli";
        case FamilyKind::QEuler: return "euler";
        case FamilyKind::QFrobeniusEuler: return "frobenius";
        case FamilyKind::QFrobeniusEulerOrderR: return "frobenius-r";
        case FamilyKind::QBernoulliOrderR: return "bernoulli-r";
    }
    return "?";
}

inline FamilyKind parse_family(std::string_view name) {
    for (auto k : {FamilyKind::QBernoulli, FamilyKind::QEuler, FamilyKind::QFrobeniusEuler,
                   FamilyKind::QFrobeniusEulerOrderR, FamilyKind::QBernoulliOrderR})
        if (family_name(k) == name) return k;
    throw InvalidConfig("unknown family '" + std::string(name) +
                        "' (expected bernoulli, euler, frobenius, frobenius-r or bernoulli-r)");
}

/// Definition used for the order-r q-Bernoulli family; attached to every B^{(r)} output.
inline constexpr std::string_view kBernoulliOrderRAssumption =
    "B^{(r)}_{n,q}(x) is defined by the generating function (t/(e_q(t)-1))^r e_q(xt)";

template <ExactField K>
struct NumberTable {
    FamilyId family;
    std::vector<K> values;

    friend bool operator==(const NumberTable&, const NumberTable&) = default;
};

// ---------------------------------------------------------------------------
// Kernels (generating-function denominators)

/// (e_q(t) - lambda) / (1 - lambda): a_0 = 1, a_k = 1/(1 - lambda).
template <ExactField K>
DividedSeries<K> frobenius_kernel(const QContext<K>& ctx, std::size_t order) {
    const K one(Rational(1));
    const K tail = one / (one - ctx.lambda());
    std::vector<K> a(order + 1, tail);
    a[0] = one;
    return DividedSeries<K>::from_divided(std::move(a));
}

/// (e_q(t) - 1) / t: a_k = 1/[k+1]_q.
template <ExactField K>
DividedSeries<K> bernoulli_kernel(const QContext<K>& ctx, std::size_t order) {
    std::vector<K> a(order + 1);
    for (std::size_t k = 0; k <= order; ++k) a[k] = K(Rational(1)) / ctx.q_int(k + 1);
    return DividedSeries<K>::from_divided(std::move(a));
}

/// (e_q(t) + 1) / 2: a_0 = 1, a_k = 1/2.
template <ExactField K>
DividedSeries<K> euler_kernel(std::size_t order) {
    std::vector<K> a(order + 1, K(Rational(1, 2)));
    a[0] = K(Rational(1));
    return DividedSeries<K>::from_divided(std::move(a));
}

// ---------------------------------------------------------------------------
// Appell polynomials

/// sum_{l=0}^n binom(n,l)_q v_{n-l} x^l for a number sequence v.
template <ExactField K>
Poly<K> appell_poly(const QContext<K>& ctx, const std::vector<K>& numbers, std::size_t n) {
    if (numbers.size() <= n) throw Error("number table too short for degree " + std::to_string(n));
    const auto& row = ctx.binomial_row(n);
    std::vector<K> c(n + 1);
    for (std::size_t l = 0; l <= n; ++l) c[l] = row[l] * numbers[n - l];
    return Poly<K>(std::move(c));
}

// ---------------------------------------------------------------------------
// q-Frobenius-Euler, order 1

/// H_{0..N,q}(lambda) by inverting the kernel.
template <ExactField K>
NumberTable<K> frobenius_euler_numbers(const QContext<K>& ctx, std::size_t N) {
    auto inv = series_inverse(ctx, frobenius_kernel(ctx, N));
    return {{FamilyKind::QFrobeniusEuler, 1}, inv.divided_coeffs()};
}

/// H_n = (1/(lambda - 1)) sum_{l=0}^{n-1} binom(n,l)_q H_l, H_0 = 1.
template <ExactField K>
NumberTable<K> frobenius_euler_numbers_by_recurrence(const QContext<K>& ctx, std::size_t N) {
    const K one(Rational(1));
    const K factor = one / (ctx.lambda() - one);
    std::vector<K> h(N + 1);
    h[0] = one;
    for (std::size_t n = 1; n <= N; ++n) {
        K acc(Rational(0));
        for (std::size_t l = 0; l < n; ++l) acc = acc + ctx.q_binomial(n, static_cast<long>(l)) * h[l];
        h[n] = factor * acc;
    }
    return {{FamilyKind::QFrobeniusEuler, 1}, std::move(h)};
}

template <ExactField K>
Poly<K> frobenius_euler_poly(const QContext<K>& ctx, std::size_t n) {
    return appell_poly(ctx, frobenius_euler_numbers(ctx, n).values, n);
}

// ---------------------------------------------------------------------------
// q-Frobenius-Euler, order r

/// H^{(r)}_{0..N,q}(lambda) as the r-th power of the inverted kernel.
/// r = 0 gives the Kronecker sequence 1, 0, 0, ...
template <ExactField K>
NumberTable<K> frobenius_euler_numbers_order_r(const QContext<K>& ctx, std::size_t N, unsigned r) {
    auto base = series_inverse(ctx, frobenius_kernel(ctx, N));
    return {{FamilyKind::QFrobeniusEulerOrderR, r}, series_pow(ctx, base, r).divided_coeffs()};
}

/// H^{(r)}_n = sum over weak compositions i_1+..+i_r = n of
/// multinom(n; i)_q H_{i_1} ... H_{i_r}.
template <ExactField K>
NumberTable<K> frobenius_euler_numbers_order_r_by_convolution(const QContext<K>& ctx, std::size_t N, unsigned r) {
    const auto h = frobenius_euler_numbers(ctx, N).values;
    std::vector<K> out(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        K acc(Rational(0));
        for_each_weak_composition(n, r, [&](std::span<const std::size_t> parts) {
            K term = q_multinomial(ctx, n, parts);
            for (std::size_t i : parts) term = term * h[i];
            acc = acc + term;
        });
        out[n] = std::move(acc);
    }
    return {{FamilyKind::QFrobeniusEulerOrderR, r}, std::move(out)};
}

template <ExactField K>
Poly<K> frobenius_euler_poly_order_r(const QContext<K>& ctx, std::size_t n, unsigned r) {
    return appell_poly(ctx, frobenius_euler_numbers_order_r(ctx, n, r).values, n);
}

// ---------------------------------------------------------------------------
// q-Bernoulli and q-Euler

template <ExactField K>
NumberTable<K> q_bernoulli_numbers(const QContext<K>& ctx, std::size_t N) {
    return {{FamilyKind::QBernoulli, 1}, series_inverse(ctx, bernoulli_kernel(ctx, N)).divided_coeffs()};
}

template <ExactField K>
Poly<K> q_bernoulli_poly(const QContext<K>& ctx, std::size_t n) {
    return appell_poly(ctx, q_bernoulli_numbers(ctx, n).values, n);
}

template <ExactField K>
NumberTable<K> q_euler_numbers(const QContext<K>& ctx, std::size_t N) {
    return {{FamilyKind::QEuler, 1}, series_inverse(ctx, euler_kernel<K>(N)).divided_coeffs()};
}

template <ExactField K>
Poly<K> q_euler_poly(const QContext<K>& ctx, std::size_t n) {
    return appell_poly(ctx, q_euler_numbers(ctx, n).values, n);
}

/// B^{(r)}_{0..N,q} under kBernoulliOrderRAssumption.
template <ExactField K>
NumberTable<K> q_bernoulli_numbers_order_r(const QContext<K>& ctx, std::size_t N, unsigned r) {
    auto base = series_inverse(ctx, bernoulli_kernel(ctx, N));
    return {{FamilyKind::QBernoulliOrderR, r}, series_pow(ctx, base, r).divided_coeffs()};
}

template <ExactField K>
Poly<K> q_bernoulli_poly_order_r(const QContext<K>& ctx, std::size_t n, unsigned r) {
    return appell_poly(ctx, q_bernoulli_numbers_order_r(ctx, n, r).values, n);
}

// ---------------------------------------------------------------------------
// Dispatch by FamilyId

template <ExactField K>
NumberTable<K> number_table(const QContext<K>& ctx, const FamilyId& family, std::size_t N) {
    switch (family.kind) {
        case FamilyKind::QBernoulli: return q_bernoulli_numbers(ctx, N);
        case FamilyKind::QEuler: return q_euler_numbers(ctx, N);
        case FamilyKind::QFrobeniusEuler: return frobenius_euler_numbers(ctx, N);
        case FamilyKind::QFrobeniusEulerOrderR: return frobenius_euler_numbers_order_r(ctx, N, family.r);
        case FamilyKind::QBernoulliOrderR: return q_bernoulli_numbers_order_r(ctx, N, family.r);
    }
    throw Error("unhandled family");
}

template <ExactField K>
Poly<K> family_poly(const QContext<K>& ctx, const FamilyId& family, std::size_t n) {
    return appell_poly(ctx, number_table(ctx, family, n).values, n);
}

}  // namespace qfe
