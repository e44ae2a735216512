#include <gtest/gtest.h>

#include <thread>

#include "support/generators.hpp"

using namespace qfe;
using qfe::testing::Gen;
using qfe::testing::lambda_sym;
using qfe::testing::Q;
using qfe::testing::q_sym;

TEST(Rational, ParsesAndPrintsCanonically) {
    EXPECT_THROW(Rational::parse("6/-4"), ParseError);
    EXPECT_EQ(Rational::parse("-6/4").str(), "-3/2");
    EXPECT_EQ(Rational::parse("+5").str(), "5");
    EXPECT_EQ(Rational::parse("0/7").str(), "0");
    EXPECT_EQ(Rational(4, 2).str(), "2");
    EXPECT_THROW(Rational::parse("1/0"), DivisionByZero);
    EXPECT_THROW(Rational::parse("1.5"), ParseError);
    EXPECT_THROW(Rational::parse(""), ParseError);
    EXPECT_THROW(Rational::parse("abc"), ParseError);
    EXPECT_THROW(Rational(0).inv(), DivisionByZero);
    EXPECT_THROW(Rational(1) / Rational(0), DivisionByZero);
}

TEST(Rational, PowAndOrdering) {
    EXPECT_EQ(Rational(-2, 3).pow(3), Rational(-8, 27));
    EXPECT_EQ(Rational(5).pow(0), Rational(1));
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
}

TEST(UPoly, DivisionAndGcd) {
    // (x - 1)(x + 2) and (x - 1)(x - 3)
    UPoly a(std::vector<Rational>{-2, 1, 1});
    UPoly b(std::vector<Rational>{3, -4, 1});
    UPoly g = UPoly::gcd(a, b);
    EXPECT_EQ(g, UPoly(std::vector<Rational>{-1, 1}));
    auto [quo, rem] = UPoly::divmod(a, g);
    EXPECT_TRUE(rem.is_zero());
    EXPECT_EQ(quo, UPoly(std::vector<Rational>{2, 1}));
}

TEST(MPoly, GcdRecoversCommonFactor) {
    MPoly q = MPoly::q(), l = MPoly::lambda(), one(Rational(1));
    MPoly common = q * l + one;  // q*lambda + 1
    MPoly a = common * (q + l) * (q + l);
    MPoly b = common * (one - l) * (q - one);
    MPoly g = MPoly::gcd(a, b);
    EXPECT_EQ(MPoly::exact_div(common, g).deg_lambda(), 0);
    EXPECT_TRUE(MPoly::exact_div(common, g).is_constant());
    EXPECT_THROW(MPoly::exact_div(a, one - l), Error);
}

TEST(MPoly, TermsAreGradedLexQBeforeLambda) {
    MPoly p = MPoly::from_terms({{Rational(1), 0, 0}, {Rational(2), 0, 1}, {Rational(3), 1, 0}, {Rational(4), 1, 1}});
    auto t = p.terms();
    ASSERT_EQ(t.size(), 4u);
    EXPECT_EQ(t[0].deg_q + t[0].deg_lambda, 2u);
    EXPECT_EQ(t[1].deg_q, 1u);  // q before lambda among degree-1 terms
    EXPECT_EQ(t[2].deg_lambda, 1u);
    EXPECT_EQ(t[3].coef, Rational(1));
}

TEST(RatFunc, Examples) {
    RatFunc one_minus_l = Q(1) - lambda_sym();
    EXPECT_EQ(one_minus_l.inv(), Q(1) / one_minus_l);
    EXPECT_TRUE((Q(1) / (lambda_sym() - Q(1)) + Q(1) / one_minus_l).is_zero());
    EXPECT_EQ(one_minus_l * (Q(1) / (one_minus_l * one_minus_l)), Q(1) / one_minus_l);
    EXPECT_EQ(Q(0), RatFunc());
    EXPECT_THROW(RatFunc().inv(), DivisionByZero);
    EXPECT_THROW(Q(1) / Q(0), DivisionByZero);
}

TEST(RatFunc, Evaluate) {
    RatFunc l = lambda_sym(), q = q_sym();
    RatFunc h2 = (l + q) / ((Q(1) - l) * (Q(1) - l));
    EXPECT_EQ(h2.evaluate(Rational(1), Rational(2)), Rational(3));
    EXPECT_THROW((Q(1) / (Q(1) - l)).evaluate(Rational(1, 2), Rational(1)), PoleAtPoint);
    // (1 - q^2)/(1 - q) cancels to 1 + q before substitution.
    RatFunc f = (Q(1) - q * q) / (Q(1) - q);
    EXPECT_EQ(f, Q(1) + q);
    EXPECT_EQ(f.evaluate(Rational(1), Rational(0)), Rational(2));
}

TEST(RatFunc, CanonicalFormInvariants) {
    Gen g(11);
    for (int i = 0; i < 200; ++i) {
        RatFunc f = g.ratfunc() / g.nonzero_ratfunc() + g.ratfunc();
        EXPECT_GT(f.den().leading_coefficient().sign(), 0);
        EXPECT_TRUE(MPoly::gcd(f.num(), f.den()).is_constant() || f.is_zero());
        mpz_class content = 0;
        for (const auto* p : {&f.num(), &f.den()})
            for (const auto& t : p->terms()) {
                ASSERT_TRUE(t.coef.is_integer());
                mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), t.coef.numerator().get_mpz_t());
            }
        EXPECT_EQ(content, 1);
        EXPECT_EQ(f.canonicalized(), f);
        EXPECT_EQ(f.canonicalized().canonicalized(), f.canonicalized());
    }
}

template <typename K>
void check_field_axioms(std::uint64_t seed, int triples) {
    Gen g(seed);
    const K zero(Rational(0)), one(Rational(1));
    for (int i = 0; i < triples; ++i) {
        K a = g.scalar<K>(), b = g.scalar<K>(), c = g.scalar<K>();
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a + zero, a);
        ASSERT_EQ(a * one, a);
        ASSERT_TRUE(is_zero(a + (-a)));
        ASSERT_TRUE(is_zero(a - a));
        if (!is_zero(a)) {
            ASSERT_EQ(a * (one / a), one);
            ASSERT_EQ((b / a) * a, b);
        }
    }
}

TEST(FieldAxioms, NumericRational) { check_field_axioms<Rational>(1, 1000); }
TEST(FieldAxioms, SymbolicQLambda) { check_field_axioms<RatFunc>(2, 1000); }

TEST(RatFunc, SchwartzZippelConsistency) {
    Gen g(5);
    for (int i = 0; i < 100; ++i) {
        RatFunc a = g.ratfunc(), b = g.nonzero_ratfunc();
        // Half the pairs are equal by construction through a different expression.
        RatFunc c = g.coin() ? (a * b + b) / b - Q(1) : g.ratfunc();
        bool symbolic_equal = a == c;
        RatFunc diff = a - c;
        bool all_zero = true;
        int points = 0;
        while (points < 20) {
            auto [q0, l0] = g.field_point();
            try {
                Rational v = diff.evaluate(q0, l0);
                all_zero = all_zero && v.is_zero();
                ++points;
            } catch (const PoleAtPoint&) {
            }
        }
        EXPECT_EQ(symbolic_equal, all_zero) << "pair " << i;
    }
}

TEST(RatFunc, SubstituteLambda) {
    RatFunc f = (lambda_sym() + q_sym()) / (Q(1) - lambda_sym());
    EXPECT_EQ(f.substitute_lambda(Rational(-1)), (Q(-1) + q_sym()) / Q(2));
    EXPECT_THROW(f.substitute_lambda(Rational(1)), PoleAtPoint);
}

TEST(FieldConfig, Validation) {
    EXPECT_NO_THROW(FieldConfig::symbolic().validate());
    EXPECT_NO_THROW(FieldConfig::numeric(Rational(0), Rational(2)).validate());
    EXPECT_THROW(FieldConfig::numeric(Rational(1), Rational(2)).validate(), InvalidConfig);
    EXPECT_THROW(FieldConfig::numeric(Rational(-1), Rational(2)).validate(), InvalidConfig);
    EXPECT_THROW(FieldConfig::numeric(Rational(1, 2), Rational(1)).validate(), InvalidConfig);
    FieldConfig half{FieldMode::NumericRational, Rational(1, 2), std::nullopt};
    EXPECT_THROW(half.validate(), InvalidConfig);
    EXPECT_THROW(numeric_context(Rational(1), Rational(0)), InvalidConfig);
}

TEST(QContext, CachesAreSafeUnderConcurrentUse) {
    auto ctx = symbolic_context();
    auto fresh = symbolic_context();
    std::vector<RatFunc> expected;
    for (std::size_t k = 0; k <= 12; ++k) expected.push_back(fresh.q_binomial(12, static_cast<long>(k)));
    std::vector<std::thread> pool;
    std::atomic<int> mismatches{0};
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t k = 0; k <= 12; ++k) {
                std::size_t kk = (k + static_cast<std::size_t>(t)) % 13;
                if (ctx.q_binomial(12, static_cast<long>(kk)) != expected[kk]) ++mismatches;
                (void)ctx.q_factorial(kk + 3);
            }
        });
    for (auto& th : pool) th.join();
    EXPECT_EQ(mismatches.load(), 0);
}
