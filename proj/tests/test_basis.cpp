#include <gtest/gtest.h>

#include "support/generators.hpp"

using namespace qfe;
using qfe::testing::Gen;
using qfe::testing::lambda_sym;
using qfe::testing::Q;
using qfe::testing::q_sym;

namespace {

using P = Poly<RatFunc>;

RatFunc one_minus_lambda() { return Q(1) - lambda_sym(); }

}  // namespace

TEST(ExpandInFE, BasisElementsAreUnitVectors) {
    auto ctx = symbolic_context();
    for (std::size_t n = 0; n <= 6; ++n) {
        auto e = expand_in_fe(ctx, frobenius_euler_poly(ctx, n));
        ASSERT_EQ(e.coeffs.size(), n + 1);
        for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(e.coeffs[k], k == n ? Q(1) : Q(0));
        for (unsigned r = 1; r <= 3; ++r) {
            auto er = expand_in_fe_order_r(ctx, frobenius_euler_poly_order_r(ctx, n, r), r);
            for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(er.coeffs[k], k == n ? Q(1) : Q(0));
        }
    }
}

TEST(ExpandInFE, Monomials) {
    auto ctx = symbolic_context();
    for (std::size_t n = 0; n <= 6; ++n) {
        auto e = expand_in_fe(ctx, P::monomial(Q(1), n));
        for (std::size_t k = 0; k <= n; ++k) {
            RatFunc b = q_binomial(ctx, n, static_cast<long>(k));
            RatFunc expected = b / one_minus_lambda() - (k == n ? lambda_sym() / one_minus_lambda() * b : Q(0));
            EXPECT_EQ(e.coeffs[k], expected);
        }
    }
}

TEST(ExpandInFE, QBernoulliPolynomials) {
    auto ctx = symbolic_context();
    auto b = q_bernoulli_numbers(ctx, 6).values;
    for (std::size_t n = 0; n <= 6; ++n) {
        auto e = expand_in_fe(ctx, appell_poly(ctx, b, n));
        for (std::size_t k = 0; k <= n; ++k) {
            RatFunc at_one = appell_poly(ctx, b, n - k).eval(Q(1));
            EXPECT_EQ(e.coeffs[k], q_binomial(ctx, n, static_cast<long>(k)) * (at_one - lambda_sym() * b[n - k]) /
                                       one_minus_lambda());
        }
    }
}

TEST(ExpandInFE, OrderOneAgreesWithOrderR) {
    Gen g(1);
    auto ctx = symbolic_context();
    for (int i = 0; i < 10; ++i) {
        auto p = g.poly<RatFunc>(6);
        auto a = expand_in_fe(ctx, p);
        auto b = expand_in_fe_order_r(ctx, p, 1);
        EXPECT_EQ(a.coeffs, b.coeffs);
        EXPECT_EQ(a.basis.kind, FamilyKind::QFrobeniusEuler);
        EXPECT_EQ(b.basis.kind, FamilyKind::QFrobeniusEulerOrderR);
    }
}

TEST(ExpandInFE, MultinomialRouteSmallCases) {
    auto ctx = symbolic_context();
    auto c = expand_in_fe_order_r_multinomial(ctx, P(Q(7, 3)), 1);
    ASSERT_EQ(c.coeffs.size(), 1u);
    EXPECT_EQ(c.coeffs[0], Q(7, 3));
    auto x = expand_in_fe_order_r_multinomial(ctx, P::x(), 1);
    auto x_direct = expand_in_fe(ctx, P::x());
    EXPECT_EQ(x.coeffs[1], Q(1));
    EXPECT_EQ(x.coeffs, x_direct.coeffs);
    EXPECT_EQ(x.coeffs[0], Q(1) / one_minus_lambda());
}

TEST(ExpandInFE, DualImplementationSymbolic) {
    Gen g(2);
    auto ctx = symbolic_context();
    for (unsigned r = 1; r <= 3; ++r)
        for (int i = 0; i < 4; ++i) {
            auto p = g.poly<RatFunc>(6);
            ASSERT_EQ(expand_in_fe_order_r(ctx, p, r).coeffs, expand_in_fe_order_r_multinomial(ctx, p, r).coeffs);
        }
}

TEST(ExpandInFE, DualImplementationNumeric) {
    Gen g(3);
    for (int i = 0; i < 10; ++i) {
        auto [q0, l0] = g.field_point();
        auto ctx = numeric_context(q0, l0);
        for (unsigned r = 1; r <= 4; ++r) {
            auto p = g.poly(10);
            ASSERT_EQ(expand_in_fe_order_r(ctx, p, r).coeffs, expand_in_fe_order_r_multinomial(ctx, p, r).coeffs);
        }
    }
}

TEST(Reconstruct, RoundTripNumeric) {
    Gen g(4);
    for (int i = 0; i < 100; ++i) {
        auto [q0, l0] = g.field_point();
        auto ctx = numeric_context(q0, l0);
        auto p = g.poly(10);
        ASSERT_EQ(reconstruct(ctx, expand_in_fe(ctx, p)), p);
        unsigned r = static_cast<unsigned>(g.integer(1, 3));
        ASSERT_EQ(reconstruct(ctx, expand_in_fe_order_r(ctx, p, r)), p);
    }
}

TEST(Reconstruct, RoundTripSymbolic) {
    Gen g(5);
    auto ctx = symbolic_context();
    for (int i = 0; i < 10; ++i) {
        auto p = g.poly<RatFunc>(6);
        ASSERT_EQ(reconstruct(ctx, expand_in_fe(ctx, p)), p);
        ASSERT_EQ(reconstruct(ctx, expand_in_fe_order_r(ctx, p, 2)), p);
    }
    EXPECT_TRUE(reconstruct(ctx, BasisExpansion<RatFunc>{}).is_zero());
    EXPECT_TRUE(reconstruct(ctx, BasisExpansion<RatFunc>{{FamilyKind::QFrobeniusEuler, 1}, {Q(0), Q(0)}}).is_zero());
}

TEST(Reconstruct, OrderRFromOrderOneBasis) {
    auto ctx = symbolic_context();
    for (unsigned r = 1; r <= 3; ++r)
        for (std::size_t n = 0; n <= 5; ++n) {
            auto lower = frobenius_euler_numbers_order_r(ctx, n, r - 1).values;
            BasisExpansion<RatFunc> e{{FamilyKind::QFrobeniusEuler, 1}, {}};
            for (std::size_t k = 0; k <= n; ++k)
                e.coeffs.push_back(q_binomial(ctx, n, static_cast<long>(k)) * lower[n - k]);
            EXPECT_EQ(reconstruct(ctx, e), frobenius_euler_poly_order_r(ctx, n, r));
        }
}

TEST(Orthogonality, PairingIsFactorialDelta) {
    auto ctx = symbolic_context();
    const std::size_t N = 6;
    for (unsigned r = 1; r <= 3; ++r) {
        auto g_r = series_pow(ctx, frobenius_kernel(ctx, N), r);
        for (std::size_t n = 0; n <= N; ++n) {
            auto h = frobenius_euler_poly_order_r(ctx, n, r);
            for (std::size_t k = 0; k <= N; ++k) {
                auto f = series_mul(ctx, g_r, DividedSeries<RatFunc>::t_power(ctx, k, N));
                ASSERT_EQ(apply_functional(f, h) / q_factorial(ctx, n), n == k ? Q(1) : Q(0));
            }
        }
    }
}

TEST(IntegralIdentities, FunctionalEqualsJackson) {
    auto ctx = symbolic_context();
    auto [l0, r0] = functional_bernoulli_identity(ctx, 0);
    EXPECT_EQ(l0, Q(1));
    EXPECT_EQ(r0, Q(1));
    auto [l1, r1] = functional_bernoulli_identity(ctx, 1);
    RatFunc expected = Q(1) / (Q(1) + q_sym()) - Q(1) / one_minus_lambda();
    EXPECT_EQ(l1, expected);
    EXPECT_EQ(r1, expected);
    for (std::size_t n = 2; n <= 8; ++n) {
        auto [lhs, rhs] = functional_bernoulli_identity(ctx, n);
        EXPECT_EQ(lhs, rhs) << n;
    }
}

TEST(IntegralIdentities, ShiftedIntervalNumeric) {
    Gen g(6);
    for (int i = 0; i < 20; ++i) {
        auto [q0, l0] = g.field_point();
        auto ctx = numeric_context(q0, l0);
        Rational x0 = g.rational(), y0 = g.rational();
        auto h = frobenius_euler_numbers(ctx, 11).values;
        for (std::size_t n = 0; n <= 10; ++n) {
            auto hn1 = appell_poly(ctx, h, n + 1);
            ASSERT_EQ(q_integral(ctx, appell_poly(ctx, h, n), x0, x0 + y0),
                      (hn1.eval(x0 + y0) - hn1.eval(x0)) / ctx.q_int(n + 1));
        }
    }
}

TEST(FeBasis, MatchesFamilyPolynomials) {
    auto ctx = symbolic_context();
    auto b = fe_basis(ctx, 4, 2);
    ASSERT_EQ(b.size(), 5u);
    for (std::size_t k = 0; k <= 4; ++k) EXPECT_EQ(b[k], frobenius_euler_poly_order_r(ctx, k, 2));
}
