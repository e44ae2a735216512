#include <gtest/gtest.h>

#include <set>

#include "support/generators.hpp"

using namespace qfe;

namespace {

VerifyOptions symbolic(std::size_t max_n, unsigned max_r = 3) {
    VerifyOptions o;
    o.max_n = max_n;
    o.max_r = max_r;
    return o;
}

VerifyOptions numeric(std::size_t max_n, unsigned max_r = 3, std::size_t trials = 3) {
    VerifyOptions o = symbolic(max_n, max_r);
    o.mode = FieldMode::NumericRational;
    o.trials = trials;
    return o;
}

}  // namespace

TEST(Registry, IdsAreUniqueAndFindable) {
    auto reg = IdentityRegistry::builtin();
    auto ids = reg.ids();
    EXPECT_GE(ids.size(), 20u);
    std::set<std::string> unique(ids.begin(), ids.end());
    EXPECT_EQ(unique.size(), ids.size());
    for (const auto& id : ids) {
        const auto& def = reg.find(id);
        EXPECT_EQ(def.id, id);
        EXPECT_FALSE(def.statement.empty());
    }
    EXPECT_THROW(reg.find("no-such-identity"), UnknownIdentity);
    EXPECT_THROW(verify_identity(reg, "no-such-identity", symbolic(2)), UnknownIdentity);
}

TEST(Verify, BernoulliExpansionPassesSymbolically) {
    auto reg = IdentityRegistry::builtin();
    auto reports = verify_identity(reg, "bernoulli-in-fe-basis", symbolic(8));
    ASSERT_EQ(reports.size(), 9u);
    EXPECT_TRUE(all_pass(reports));
    for (std::size_t n = 0; n <= 8; ++n) {
        EXPECT_EQ(reports[n].n, n);
        EXPECT_FALSE(reports[n].r.has_value());
    }
}

TEST(Verify, OrderRExpansionCoversEveryR) {
    auto reg = IdentityRegistry::builtin();
    auto reports = verify_identity(reg, "order-r-in-fe-basis", symbolic(6, 3));
    EXPECT_EQ(reports.size(), 7u * 3u);
    EXPECT_TRUE(all_pass(reports));
    std::set<unsigned> rs;
    for (const auto& r : reports) rs.insert(*r.r);
    EXPECT_EQ(rs, (std::set<unsigned>{1, 2, 3}));
}

TEST(Verify, WholeSuiteSymbolic) {
    auto reports = verify_suite(IdentityRegistry::builtin(), {}, symbolic(4, 2));
    EXPECT_TRUE(all_pass(reports));
    for (const auto& r : reports)
        if (!r.pass) ADD_FAILURE() << to_json(r).dump();
}

TEST(Verify, WholeSuiteNumeric) {
    auto reg = IdentityRegistry::builtin();
    auto reports = verify_suite(reg, {}, numeric(8, 3, 2));
    EXPECT_TRUE(all_pass(reports));
    for (const auto& r : reports) {
        if (!r.pass) ADD_FAILURE() << to_json(r).dump();
        ASSERT_TRUE(r.point.has_value());
        EXPECT_NE(r.point->first, Rational(1));
        EXPECT_NE(r.point->first, Rational(-1));
        EXPECT_NE(r.point->second, Rational(1));
        EXPECT_FALSE(reg.find(r.identity).symbolic_only);
    }
}

TEST(Verify, PerturbedFixtureFailsWithWitness) {
    auto reg = IdentityRegistry::builtin();
    reg.add(make_identity("perturbed-recurrence", "recurrence with a deliberately wrong coefficient", 0, false,
                          [](auto& w, std::size_t n, unsigned) {
                              auto rec = frobenius_euler_numbers_by_recurrence(w.ctx(), n).values;
                              auto wrong = rec[n];
                              if (n == 3) wrong = wrong + w.one();
                              return expect_equal(wrong, w.H()[n], "perturbed");
                          }));
    for (auto mode : {FieldMode::SymbolicQLambda, FieldMode::NumericRational}) {
        VerifyOptions opt = mode == FieldMode::SymbolicQLambda ? symbolic(5) : numeric(5);
        auto reports = verify_identity(reg, "perturbed-recurrence", opt);
        EXPECT_FALSE(all_pass(reports));
        for (const auto& r : reports) {
            EXPECT_EQ(r.pass, r.n != 3);
            if (r.pass) continue;
            Json j = to_json(r);
            EXPECT_EQ(j["status"], "Fail");
            EXPECT_TRUE(j["witness"].contains("lhs"));
            EXPECT_TRUE(j["witness"].contains("rhs"));
            EXPECT_EQ(j["witness"]["n"], 3);
            EXPECT_NE(j["witness"]["lhs"], j["witness"]["rhs"]);
        }
    }
}

TEST(Verify, ExceptionsInChecksBecomeFailures) {
    IdentityRegistry reg;
    reg.add(make_identity("throws", "always throws", 0, false,
                          [](auto&, std::size_t, unsigned) -> CheckOutcome { throw Unsupported("boom"); }));
    auto reports = verify_identity(reg, "throws", symbolic(1));
    ASSERT_EQ(reports.size(), 2u);
    EXPECT_FALSE(reports[0].pass);
    EXPECT_EQ(reports[0].witness["error"], "boom");
}

TEST(Verify, ReportJsonShape) {
    auto reports = verify_identity(IdentityRegistry::builtin(), "order-r-boundary", numeric(1, 1, 1));
    ASSERT_FALSE(reports.empty());
    Json j = to_json(reports.front());
    EXPECT_EQ(j["identity"], "order-r-boundary");
    EXPECT_EQ(j["status"], "ExactPass");
    EXPECT_EQ(j["params"]["mode"], "numeric");
    EXPECT_EQ(j["params"]["r"], 1);
    EXPECT_TRUE(j["params"]["point"].contains("q"));
    EXPECT_TRUE(j["elapsed_ms"].is_number());
    EXPECT_FALSE(j.contains("witness"));
}

TEST(Verify, DeterministicForAFixedSeed) {
    auto reg = IdentityRegistry::builtin();
    auto opt = numeric(4, 2, 3);
    opt.threads = 4;
    auto a = verify_suite(reg, {"basis-roundtrip", "fe-integral-shift"}, opt);
    opt.threads = 1;
    auto b = verify_suite(reg, {"basis-roundtrip", "fe-integral-shift"}, opt);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].identity, b[i].identity);
        EXPECT_EQ(a[i].n, b[i].n);
        EXPECT_EQ(a[i].point, b[i].point);
    }
}

TEST(Verify, SymbolicOnlyIdentitiesAreSkippedNumerically) {
    auto reg = IdentityRegistry::builtin();
    EXPECT_TRUE(verify_identity(reg, "carlitz-classical-limit", numeric(3)).empty());
    EXPECT_TRUE(all_pass(verify_identity(reg, "carlitz-classical-limit", symbolic(10))));
}
