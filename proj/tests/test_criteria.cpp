#include <gtest/gtest.h>

#include <random>

#include <wphyp/enumerate.hpp>
#include <wphyp/suites.hpp>

using namespace wphyp;

namespace {

FamilyDescriptor F(std::vector<Int> w, Int d) { return FamilyDescriptor(WeightTuple(std::move(w)), d); }

FamilyDescriptor ones_plus(int ones, std::vector<Int> rest, Int d) {
    std::vector<Int> w(static_cast<std::size_t>(ones), 1);
    w.insert(w.end(), rest.begin(), rest.end());
    return F(w, d);
}

template <class T>
const T& cert(const RuleResult& rr) {
    return std::get<T>(*rr.certificate);
}

} // namespace

TEST(Index0, Examples) {
    EXPECT_TRUE(rule_index0(ones_plus(6, {}, 6)).holds);
    EXPECT_FALSE(rule_index0(F({1, 1, 1, 1, 2}, 4)).holds);
    EXPECT_TRUE(rule_index0(ones_plus(5, {}, 6)).holds);
}

TEST(T1, Examples) {
    auto a = rule_T1(F({1, 1, 1, 1, 3}, 6));
    ASSERT_TRUE(a.holds);
    EXPECT_EQ(cert<T1Certificate>(a).branch, "known1-case-2:LIT-CYCLIC");
    EXPECT_FALSE(cert<T1Certificate>(a).p.has_value());

    auto b = rule_T1(F({1, 1, 1, 1, 2}, 4));
    EXPECT_TRUE(b.holds);

    EXPECT_FALSE(rule_T1(ones_plus(5, {2}, 4)).holds);
}

TEST(T1, CertificateArithmetic) {
    // X_6 in P(1^3,2,3): a_n = 2, a_{n+1} = 3, d = a_pi = 6 < a_sigma = 8
    auto rr = rule_T1(F({1, 1, 1, 2, 3}, 6));
    ASSERT_TRUE(rr.holds);
    const auto& c = cert<T1Certificate>(rr);
    EXPECT_EQ(c.b, 6);
    EXPECT_EQ(c.e_prime, 1);
    EXPECT_EQ(c.p, 2);
    EXPECT_EQ(c.sheaf_degree, 6 - 5);
    EXPECT_EQ(c.branch, "main");
}

TEST(T1, HoldsForNonPositiveIndex) {
    auto rr = rule_T1(ones_plus(5, {}, 6));
    ASSERT_TRUE(rr.holds);
    EXPECT_EQ(cert<T1Certificate>(rr).branch, "known1-case-1");
}

TEST(T1, CaseThreeBranch) {
    // X_12 in P(1^8,2,3): d < a_sigma, r = n-1, d != a_pi
    auto rr = rule_T1(ones_plus(8, {2, 3}, 12));
    ASSERT_TRUE(rr.holds);
    EXPECT_EQ(cert<T1Certificate>(rr).branch, "known1-case-3:T2");
    EXPECT_EQ(cert<T1Certificate>(rule_T1(F({1, 1, 1, 2, 3}, 12))).branch, "known1-case-1");
}

TEST(T2, Examples) {
    auto a = rule_T2(ones_plus(9, {2}, 8));
    ASSERT_TRUE(a.holds);
    const auto& c = cert<T2Certificate>(a);
    EXPECT_EQ(c.p, 2);
    EXPECT_EQ(c.b, 4);
    EXPECT_EQ(c.sheaf_degree, 4 - 11 + 8);
    EXPECT_EQ(c.ambient_weights.back(), 4);

    auto b = rule_T2(ones_plus(7, {2}, 6));
    EXPECT_FALSE(b.holds);
    ASSERT_EQ(b.checks.size(), 2u);
    EXPECT_EQ(b.checks[1].lhs, 24);
    EXPECT_EQ(b.checks[1].rhs, 27);

    auto e1 = rule_T2(F({1, 1, 1, 2, 3}, 6));
    EXPECT_FALSE(e1.holds);
    EXPECT_EQ(e1.checks.size(), 1u);
}

TEST(T2, MonotoneInDegreeForFixedPrime) {
    for (auto w : std::vector<std::vector<Int>>{{1, 1, 1, 1, 2}, {1, 1, 1, 2, 3}, {1, 1, 1, 1, 1, 3, 5}})
        for (Int e = 2; e <= 30; ++e) {
            const WeightTuple wt(w);
            const FamilyDescriptor f(wt, e * wt.product());
            auto rr = rule_T2(f);
            if (!rr.holds)
                continue;
            const Int p = smallest_prime_factor(e);
            if (smallest_prime_factor(e + p) != p)
                continue;
            EXPECT_TRUE(rule_T2(FamilyDescriptor(wt, f.degree + p * wt.product())).holds);
        }
}

TEST(T3, Examples) {
    auto a = rule_T3(ones_plus(15, {2}, 14));
    ASSERT_TRUE(a.holds);
    const auto& c = cert<T3Certificate>(a);
    EXPECT_EQ(c.b, 6);
    EXPECT_EQ(c.sheaf_degree, 18 - 17);
    EXPECT_EQ(c.omega_zh_degree, 8 - 17);
    EXPECT_EQ(c.branch, "main");

    EXPECT_FALSE(rule_T3(ones_plus(11, {2}, 10)).holds);
    EXPECT_FALSE(rule_T3(ones_plus(9, {2}, 8)).holds); // e = 4 even
}

TEST(T7, Examples) {
    auto a = rule_T7(ones_plus(7, {2}, 6));
    ASSERT_TRUE(a.holds);
    const auto& c = cert<T7Certificate>(a);
    EXPECT_EQ(c.a_k, 2);
    EXPECT_EQ(c.k, 7);
    EXPECT_EQ(c.b, 3);
    EXPECT_EQ(c.l, 0);
    EXPECT_EQ(c.p, 2);
    EXPECT_EQ(c.sheaf_degree, 3 - 9 + 6);

    EXPECT_FALSE(rule_T7(ones_plus(5, {2}, 4)).holds);
    auto ones = rule_T7(ones_plus(6, {}, 4));
    EXPECT_FALSE(ones.holds);
    ASSERT_EQ(ones.checks.size(), 1u);
}

TEST(T7, FailureListsEveryCandidate) {
    // X_6 in P(1^5,2,3): a_k = 2 misses the index bound, a_k = 3 the pair bound
    auto rr = rule_T7(ones_plus(5, {2, 3}, 6));
    EXPECT_FALSE(rr.holds);
    int candidates = 0;
    for (const auto& c : rr.checks)
        if (c.label.find("a_k > 1") != std::string::npos)
            ++candidates;
    EXPECT_EQ(candidates, 2);
}

TEST(Literature, Examples) {
    auto lit = rule_literature(ones_plus(5, {}, 4));
    EXPECT_TRUE(lit[0].holds);
    EXPECT_EQ(lit[0].provenance, Provenance::Literature);

    auto hpt = rule_literature(ones_plus(5, {2}, 4));
    EXPECT_TRUE(hpt[2].holds);

    auto cyc = rule_literature(F({1, 1, 1, 1, 3}, 6));
    EXPECT_TRUE(cyc[1].holds);
    EXPECT_FALSE(cyc[0].holds);
}

TEST(Classify, Examples) {
    auto q = classify(ones_plus(5, {}, 2));
    EXPECT_EQ(q.outcome, Outcome::Rational);

    EXPECT_EQ(classify(ones_plus(5, {}, 3)).outcome, Outcome::Unknown);
    EXPECT_EQ(classify(ones_plus(7, {}, 5)).outcome, Outcome::Unknown);

    auto v = classify(F({1, 1, 1, 1, 2}, 4));
    EXPECT_EQ(v.outcome, Outcome::NotStablyRational);
    EXPECT_EQ(v.primary_rule, Rule::T1);

    auto bad = classify(F({1, 2}, 3));
    EXPECT_EQ(bad.outcome, Outcome::InvalidFamily);
    EXPECT_TRUE(bad.rules.empty());
}

TEST(Classify, LowDimensionIsGated) {
    // X_4 in P(1^4): a quartic surface; I_X = 0 but n = 2
    auto v = classify(ones_plus(4, {}, 4));
    EXPECT_EQ(v.outcome, Outcome::Unknown);
    for (const auto& rr : v.rules) {
        EXPECT_FALSE(rr.holds);
        ASSERT_EQ(rr.checks.size(), 1u);
        EXPECT_EQ(rr.checks[0].label, "dimension n >= 3");
    }
    EXPECT_THROW(rule_T1(ones_plus(4, {}, 4)), std::domain_error);
    EXPECT_THROW(rule_T2(F({1, 2, 4, 1, 1}, 8)), std::domain_error);
}

TEST(Classify, NoLiterature) {
    const auto f = ones_plus(5, {2}, 4);
    EXPECT_EQ(classify(f).outcome, Outcome::NotStablyRational);
    EXPECT_EQ(classify(f).primary_rule, Rule::LitHPT);
    auto v = classify(f, {false});
    EXPECT_EQ(v.outcome, Outcome::Unknown);
    EXPECT_EQ(v.find(Rule::LitHPT), nullptr);
}

TEST(Classify, AggregationIsSound) {
    for (const auto& ef : enumerate_range(3, 12, std::nullopt, 120, 12)) {
        const auto v = classify(ef.descriptor);
        bool any = false;
        std::optional<Rule> first;
        for (const auto& rr : v.rules) {
            bool all = true;
            for (const auto& c : rr.checks) {
                all = all && c.holds;
                EXPECT_EQ(c.holds, evaluate_relation(c.lhs, c.rel, c.rhs));
            }
            EXPECT_EQ(rr.holds, all);
            if (rr.holds && !first)
                first = rr.rule;
            any = any || rr.holds;
            EXPECT_EQ(rr.certificate.has_value(),
                      rr.holds && (rr.rule == Rule::T1 || rr.rule == Rule::T2 || rr.rule == Rule::T3 || rr.rule == Rule::T7));
        }
        if (v.outcome != Outcome::Rational)
            EXPECT_EQ(v.outcome == Outcome::NotStablyRational, any);
        EXPECT_EQ(v.primary_rule, first);
    }
}

TEST(ValidateCertificate, Examples) {
    const auto f = ones_plus(9, {2}, 8);
    auto c = *rule_T2(f).certificate;
    EXPECT_TRUE(validate_certificate(c, f).ok);
    auto bad = std::get<T2Certificate>(c);
    bad.b += 1;
    auto res = validate_certificate(bad, f);
    EXPECT_FALSE(res.ok);
    EXPECT_FALSE(res.diffs.empty());

    const auto g = ones_plus(7, {2}, 6);
    EXPECT_TRUE(validate_certificate(*rule_T7(g).certificate, g).ok);
}

TEST(ValidateCertificate, WrongFamilyFails) {
    const auto f = ones_plus(9, {2}, 8);
    auto c = *rule_T2(f).certificate;
    EXPECT_FALSE(validate_certificate(c, ones_plus(9, {2}, 10)).ok);
    EXPECT_FALSE(validate_certificate(c, F({1, 2}, 3)).ok);
}

TEST(ValidateCertificate, NonCanonicalWitnessRejected) {
    const auto f = ones_plus(7, {2}, 6);
    auto c = std::get<T7Certificate>(*rule_T7(f).certificate);
    c.l = 1; // also a weight-1 index, same arithmetic
    c.a_l = 1;
    EXPECT_FALSE(validate_certificate(c, f).ok);
}

TEST(ValidateCertificate, EveryEmittedCertificatePassesAndTamperingFails) {
    std::mt19937_64 rng(11);
    std::size_t n = 0;
    for (const auto& ef : suites::sweep_families())
        for (const auto& rr : classify(ef.descriptor).rules) {
            if (!rr.certificate)
                continue;
            ++n;
            auto ok = validate_certificate(*rr.certificate, ef.descriptor);
            ASSERT_TRUE(ok.ok) << ef.descriptor.str() << " " << to_string(rr.rule) << " "
                               << (ok.diffs.empty() ? "" : ok.diffs[0]);
            for (int t = 0; t < 3; ++t)
                EXPECT_FALSE(validate_certificate(suites::tamper(*rr.certificate, rng), ef.descriptor).ok);
        }
    EXPECT_GT(n, 500u);
}

TEST(ValidateCertificate, AllBranchesReached) {
    std::set<std::string> seen;
    for (const auto& ef : suites::sweep_families())
        for (const auto& rr : classify(ef.descriptor).rules)
            if (rr.certificate)
                std::visit([&](const auto& c) { seen.insert(std::string(to_string(rr.rule)) + ":" + c.branch); },
                           *rr.certificate);
    for (const char* b : {"T1:known1-case-1", "T1:known1-case-2:LIT-CYCLIC", "T1:known1-case-2:LIT-TOTARO", "T1:main",
                          "T2:known2-case-1", "T2:known2-case-2", "T2:main", "T3:known3-case-1", "T3:main",
                          "T7:knownapp-case-1", "T7:main"})
        EXPECT_TRUE(seen.count(b)) << b;
}

TEST(TwoWeightThreshold, T7AndT1) {
    auto r = suites::remark_simple(40);
    EXPECT_TRUE(r.passed) << r.details.dump();
    EXPECT_EQ(r.cases, 5u * 38u * 2u);
}

TEST(DoubleCoverSeries, ClaimedRulesFire) {
    auto r = suites::remark_ex(30);
    EXPECT_TRUE(r.passed) << r.details.dump();
    auto table = suites::remark_ex_table(2, 30);
    EXPECT_TRUE(table[2].count("LIT-HPT"));
    EXPECT_TRUE(table[3].count("T7"));
    EXPECT_TRUE(table[5].count("T7"));
    EXPECT_FALSE(table[5].count("T3"));
    EXPECT_TRUE(table[7].count("T3"));
    EXPECT_TRUE(table[4].count("T2"));
    // T2 also applies to odd composite m: e = m with smallest prime p gives (p+1) 2m >= p (2m+3)
    EXPECT_TRUE(table[9].count("T2"));
    EXPECT_FALSE(table[7].count("T2"));
}
