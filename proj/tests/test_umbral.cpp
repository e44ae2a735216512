#include <gtest/gtest.h>

#include "support/generators.hpp"

using namespace qfe;
using qfe::testing::Gen;
using qfe::testing::lambda_sym;
using qfe::testing::Q;
using qfe::testing::q_sym;

namespace {

using S = DividedSeries<RatFunc>;
using P = Poly<RatFunc>;

}  // namespace

TEST(Series, EqSeries) {
    auto ctx = symbolic_context();
    EXPECT_EQ(eq_series<RatFunc>(0).divided_coeffs(), std::vector<RatFunc>{Q(1)});
    EXPECT_EQ(eq_series<RatFunc>(3).divided_coeffs(), std::vector<RatFunc>(4, Q(1)));
    EXPECT_EQ(eq_series<RatFunc>(3).ordinary_coeff(ctx, 2), Q(1) / (Q(1) + q_sym()));
    EXPECT_EQ(scaled_eq_series(Q(0), 4), S(4));
    EXPECT_EQ(scaled_eq_series(Q(1), 4), eq_series<RatFunc>(4));
}

TEST(Series, MulInverseAndPowExamples) {
    auto ctx = symbolic_context();
    Gen g(1);
    S f = g.series<RatFunc>(5);
    EXPECT_EQ(series_mul(ctx, f, S(5)), f);
    S h = g.series<RatFunc>(5);
    EXPECT_EQ(series_mul(ctx, f, h)[1], f[0] * h[1] + f[1] * h[0]);
    EXPECT_EQ(series_inverse(ctx, S(6)), S(6));
    S c = S::from_divided({lambda_sym(), Q(0), Q(0)});
    EXPECT_EQ(series_inverse(ctx, c), S::from_divided({Q(1) / lambda_sym(), Q(0), Q(0)}));
    EXPECT_THROW(series_inverse(ctx, S::from_divided({Q(0), Q(1)})), NotInvertible);
    EXPECT_EQ(series_pow(ctx, f, 1), f);
    EXPECT_EQ(series_pow(ctx, S(5), 4), S(5));
    EXPECT_EQ(series_pow(ctx, f, 0), S(5));
    EXPECT_EQ(series_pow(ctx, f, 3), series_mul(ctx, f, series_mul(ctx, f, f)));
}

TEST(Series, MixedOrdersTruncateToSmaller) {
    auto ctx = symbolic_context();
    S a = eq_series<RatFunc>(3), b = eq_series<RatFunc>(6);
    EXPECT_EQ(series_mul(ctx, a, b).order(), 3u);
    EXPECT_EQ((a + b).order(), 3u);
    EXPECT_THROW(S::from_divided({}), Error);
}

TEST(Series, RingProperties) {
    Gen g(2);
    for (int i = 0; i < 20; ++i) {
        auto [q0, l0] = g.field_point();
        auto ctx = numeric_context(q0, l0);
        std::size_t n = g.index(12);
        auto f = g.series<Rational>(n), h = g.series<Rational>(n), k = g.series<Rational>(n);
        ASSERT_EQ(series_mul(ctx, f, h), series_mul(ctx, h, f));
        ASSERT_EQ(series_mul(ctx, series_mul(ctx, f, h), k), series_mul(ctx, f, series_mul(ctx, h, k)));
    }
    auto sym = symbolic_context();
    for (int i = 0; i < 5; ++i) {
        auto f = g.series<RatFunc>(6), h = g.series<RatFunc>(6), k = g.series<RatFunc>(6);
        ASSERT_EQ(series_mul(sym, f, h), series_mul(sym, h, f));
        ASSERT_EQ(series_mul(sym, series_mul(sym, f, h), k), series_mul(sym, f, series_mul(sym, h, k)));
    }
}

TEST(Series, InverseRoundTrip) {
    Gen g(3);
    for (int i = 0; i < 50; ++i) {
        auto [q0, l0] = g.field_point();
        auto ctx = numeric_context(q0, l0);
        std::size_t n = g.index(12);
        auto f = g.series<Rational>(n, true);
        ASSERT_EQ(series_mul(ctx, f, series_inverse(ctx, f)), DividedSeries<Rational>(n));
    }
}

TEST(Functional, Examples) {
    auto ctx = symbolic_context();
    for (std::size_t k = 0; k <= 5; ++k)
        for (std::size_t n = 0; n <= 5; ++n)
            EXPECT_EQ(apply_functional(S::t_power(ctx, k, 6), P::monomial(Q(1), n)),
                      n == k ? q_factorial(ctx, n) : Q(0));
    RatFunc y = lambda_sym() + Q(2);
    EXPECT_EQ(apply_functional(scaled_eq_series(y, 3), P::monomial(Q(1), 3)), y.pow(3));
    P p(std::vector<RatFunc>{Q(1), q_sym(), Q(-2)});
    EXPECT_EQ(apply_functional(scaled_eq_series(y, 2), p), p.eval(y));
    EXPECT_EQ(apply_functional(eq_series<RatFunc>(4), P()), Q(0));
    EXPECT_THROW(apply_functional(eq_series<RatFunc>(1), P::monomial(Q(1), 2)), OrderTooLow);
}

TEST(Functional, ProductExpansion) {
    Gen g(4);
    auto ctx = symbolic_context();
    for (int i = 0; i < 5; ++i) {
        auto f = g.series<RatFunc>(6), h = g.series<RatFunc>(6);
        for (std::size_t n = 0; n <= 6; ++n) {
            RatFunc direct;
            for (std::size_t k = 0; k <= n; ++k) direct += ctx.q_binomial(n, static_cast<long>(k)) * f[k] * h[n - k];
            ASSERT_EQ(apply_functional(series_mul(ctx, f, h), P::monomial(Q(1), n)), direct);
        }
    }
}

TEST(Functional, DualityWithDerivatives) {
    Gen g(5);
    auto ctx = symbolic_context();
    for (int i = 0; i < 10; ++i) {
        auto p = g.poly<RatFunc>(8);
        for (std::size_t k = 0; k <= 8; ++k)
            ASSERT_EQ(apply_functional(S::t_power(ctx, k, 9), p), q_derivative_k(ctx, p, k).eval(Q(0)));
    }
}

TEST(Functional, Linearity) {
    Gen g(6);
    for (int i = 0; i < 30; ++i) {
        auto [q0, l0] = g.field_point();
        auto ctx = numeric_context(q0, l0);
        auto f = g.series<Rational>(10), h = g.series<Rational>(10);
        auto p = g.poly(10), s = g.poly(10);
        Rational a = g.rational(), b = g.rational();
        ASSERT_EQ(apply_functional(f.scaled(a) + h.scaled(b), p),
                  a * apply_functional(f, p) + b * apply_functional(h, p));
        ASSERT_EQ(apply_functional(f, p.scaled(a) + s.scaled(b)),
                  a * apply_functional(f, p) + b * apply_functional(f, s));
    }
}

TEST(Operator, Examples) {
    auto ctx = symbolic_context();
    for (std::size_t n = 1; n <= 5; ++n)
        EXPECT_EQ(apply_operator(ctx, S::t_power(ctx, 1, 6), P::monomial(Q(1), n)), P::monomial(q_int(ctx, n), n - 1));
    P p(std::vector<RatFunc>{Q(1), lambda_sym(), q_sym()});
    EXPECT_EQ(apply_operator(ctx, S(4), p), p);
    auto op = series_inverse(ctx, frobenius_kernel(ctx, 3));
    EXPECT_EQ(apply_operator(ctx, op, P::monomial(Q(1), 2)), frobenius_euler_poly(ctx, 2));
    EXPECT_THROW(apply_operator(ctx, S(1), P::monomial(Q(1), 3)), OrderTooLow);
}
