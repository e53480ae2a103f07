#include <gtest/gtest.h>

#include <wphyp/io.hpp>
#include <wphyp/suites.hpp>

using namespace wphyp;

namespace {
FamilyDescriptor F(std::vector<Int> w, Int d) { return FamilyDescriptor(WeightTuple(std::move(w)), d); }
FamilyDescriptor ones_plus(int ones, Int a, Int d) {
    std::vector<Int> w(static_cast<std::size_t>(ones), 1);
    w.push_back(a);
    return F(w, d);
}
} // namespace

TEST(VerdictJson, Fields) {
    auto j = to_json(classify(F({1, 1, 1, 1, 2}, 4)));
    EXPECT_EQ(j["schema_version"], schema_version);
    EXPECT_EQ(j["outcome"], "NotStablyRational");
    EXPECT_EQ(j["primary_rule"], "T1");
    EXPECT_EQ(j["canonical"], "X_4 in P(1^4,2)");
    EXPECT_EQ(j["rules"][1]["certificate"]["type"], "T1");
    EXPECT_EQ(j["rules"][5]["provenance"], "cited-literature");

    auto u = to_json(classify(F({1, 1, 1, 1, 1}, 3)));
    EXPECT_TRUE(u["primary_rule"].is_null());
}

TEST(VerdictJson, RoundTripKeepsCertificatesValid) {
    std::size_t certs = 0;
    for (const auto& ef : enumerate_range(3, 10, 2)) {
        const auto v = classify(ef.descriptor);
        const auto text = to_json(v).dump();
        const auto back = verdict_from_json(json::parse(text));
        EXPECT_EQ(to_json(back).dump(), text);
        EXPECT_EQ(back.outcome, v.outcome);
        EXPECT_EQ(back.primary_rule, v.primary_rule);
        for (const auto& rr : back.rules)
            if (rr.certificate) {
                ++certs;
                EXPECT_TRUE(validate_certificate(*rr.certificate, back.family).ok);
            }
    }
    EXPECT_GT(certs, 40u);
}

TEST(VerdictJson, InvalidFamily) {
    auto j = to_json(classify(F({1, 2, 4}, 8)));
    EXPECT_EQ(j["outcome"], "InvalidFamily");
    EXPECT_TRUE(j["rules"].empty());
    EXPECT_FALSE(j["notes"].empty());
}

TEST(VerdictJson, RejectsOtherSchema) {
    auto j = to_json(classify(F({1, 1, 1, 1, 2}, 4)));
    j["schema_version"] = 99;
    EXPECT_THROW(verdict_from_json(j), std::invalid_argument);
    j["schema_version"] = schema_version;
    j["outcome"] = "Maybe";
    EXPECT_THROW(verdict_from_json(j), std::invalid_argument);
}

TEST(CertificateJson, RoundTripAllTypes) {
    std::vector<std::pair<FamilyDescriptor, Rule>> cases{
        {F({1, 1, 1, 1, 3}, 6), Rule::T1},
        {ones_plus(9, 2, 8), Rule::T2},
        {ones_plus(15, 2, 14), Rule::T3},
        {ones_plus(7, 2, 6), Rule::T7},
    };
    for (const auto& [f, r] : cases) {
        const auto v = classify(f);
        const auto* rr = v.find(r);
        ASSERT_NE(rr, nullptr);
        ASSERT_TRUE(rr->certificate) << f.str();
        const auto j = to_json(*rr->certificate);
        EXPECT_EQ(j["type"], to_string(r));
        EXPECT_EQ(certificate_from_json(j), *rr->certificate);
    }
}

TEST(DeterministicOutput, RepeatedDumpsIdentical) {
    auto a = suites::to_json(suites::run("jets-p2", 2, 5)).dump();
    auto b = suites::to_json(suites::run("jets-p2", 2, 5)).dump();
    EXPECT_EQ(a, b);
    EXPECT_EQ(to_json(n_bound(2)).dump(), to_json(n_bound(2)).dump());
}

TEST(SuiteRun, UnknownName) { EXPECT_THROW(suites::run("nope", 1, 0), std::invalid_argument); }
