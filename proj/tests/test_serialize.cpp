#include <gtest/gtest.h>

#include "support/generators.hpp"

using namespace qfe;
using qfe::testing::Gen;
using qfe::testing::lambda_sym;
using qfe::testing::Q;
using qfe::testing::q_sym;

namespace {

template <typename T, typename Decode>
void expect_byte_exact(const T& value, Decode decode) {
    std::string first = to_json(value).dump();
    std::string second = to_json(decode(Json::parse(first))).dump();
    EXPECT_EQ(first, second);
}

}  // namespace

TEST(Json, Schemas) {
    EXPECT_EQ(to_json(Rational(-3, 4)).dump(), "\"-3/4\"");
    EXPECT_EQ(to_json(Rational(5)).dump(), "\"5\"");
    RatFunc h1 = Q(-1) / (Q(1) - lambda_sym());
    EXPECT_EQ(to_json(h1).dump(), R"({"den":[["1",0,1],["-1",0,0]],"num":[["1",0,0]]})");
    EXPECT_EQ(to_json(eq_series<Rational>(2)).dump(), R"({"divided_coeffs":["1","1","1"],"order":2})");
    auto ctx = symbolic_context();
    auto table = frobenius_euler_numbers(ctx, 1);
    Json j = to_json(table);
    EXPECT_EQ(j["family"], "frobenius");
    EXPECT_EQ(j["r"], 1);
    EXPECT_EQ(j["values"].size(), 2u);
    auto br = q_bernoulli_numbers_order_r(ctx, 1, 2);
    EXPECT_TRUE(to_json(br).contains("assumption"));
    auto carlitz = carlitz_poly(ctx, 1);
    EXPECT_EQ(to_json(carlitz)["variable"], "q^x");
    EXPECT_EQ(to_json(expand_in_fe(ctx, Poly<RatFunc>::x()))["basis"]["family"], "frobenius");
}

TEST(Json, RoundTripsByteExact) {
    Gen g(31);
    auto ctx = symbolic_context();
    for (int i = 0; i < 100; ++i) {
        expect_byte_exact(g.rational(), rational_from_json);
        expect_byte_exact(g.ratfunc(), ratfunc_from_json);
        expect_byte_exact(g.mpoly(), mpoly_from_json);
        expect_byte_exact(g.poly<RatFunc>(4), poly_from_json<RatFunc>);
        expect_byte_exact(g.series<RatFunc>(3), series_from_json<RatFunc>);
    }
    for (auto kind : {FamilyKind::QBernoulli, FamilyKind::QEuler, FamilyKind::QFrobeniusEuler,
                      FamilyKind::QFrobeniusEulerOrderR, FamilyKind::QBernoulliOrderR}) {
        auto table = number_table(ctx, FamilyId{kind, 2}, 4);
        expect_byte_exact(table, number_table_from_json<RatFunc>);
        EXPECT_EQ(number_table_from_json<RatFunc>(to_json(table)).values, table.values);
    }
    auto e = expand_in_fe_order_r(ctx, g.poly<RatFunc>(4), 2);
    expect_byte_exact(e, expansion_from_json<RatFunc>);
    EXPECT_EQ(expansion_from_json<RatFunc>(to_json(e)), e);
    expect_byte_exact(carlitz_poly(ctx, 3), carlitz_from_json<RatFunc>);
    auto num = numeric_context(Rational(1, 3), Rational(-2));
    expect_byte_exact(frobenius_euler_numbers(num, 5), number_table_from_json<Rational>);
}

TEST(Json, DecodersCanonicalize) {
    // Non-canonical input: 2(1 - lambda) / (4 - 4 lambda) is 1/2.
    Json j = Json::parse(R"({"num":[["2",0,0],["-2",0,1]],"den":[["4",0,0],["-4",0,1]]})");
    EXPECT_EQ(ratfunc_from_json(j), Q(1, 2));
    EXPECT_EQ(to_json(ratfunc_from_json(j)).dump(), to_json(Q(1, 2)).dump());
    EXPECT_EQ(scalar_from_json<RatFunc>(Json("3/6")), Q(1, 2));
}

TEST(Json, DecodersRejectMalformedInput) {
    EXPECT_THROW(rational_from_json(Json(3)), ParseError);
    EXPECT_THROW(rational_from_json(Json("1/0")), DivisionByZero);
    EXPECT_THROW(mpoly_from_json(Json::parse(R"([["1",0]])")), ParseError);
    EXPECT_THROW(mpoly_from_json(Json::parse(R"([["1",-1,0]])")), ParseError);
    EXPECT_THROW(ratfunc_from_json(Json::parse(R"({"num":[]})")), ParseError);
    EXPECT_THROW(ratfunc_from_json(Json::parse(R"({"num":[],"den":[]})")), DivisionByZero);
    EXPECT_THROW(series_from_json<Rational>(Json::parse(R"({"order":3,"divided_coeffs":["1"]})")), ParseError);
    EXPECT_THROW(carlitz_from_json<Rational>(Json::parse(R"({"variable":"x","coeffs":[]})")), ParseError);
}
