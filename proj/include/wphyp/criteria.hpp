#pragma once

// Rule engine deciding, for a family X_d in P(a_0,...,a_{n+1}), which
// stable-irrationality criteria apply to a very general member, together with
// the arithmetic witnesses the underlying degeneration arguments consume.
//
// Every inequality with rational coefficients is evaluated in cross-multiplied
// integer form.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "arith.hpp"
#include "family.hpp"

namespace wphyp {

enum class Outcome { NotStablyRational, Rational, Unknown, InvalidFamily };

/// Rules in priority order.
enum class Rule { Index0, T1, T2, T3, T7, LitTotaro, LitCyclic, LitHPT };

inline constexpr std::array all_rules{Rule::Index0, Rule::T1,        Rule::T2,        Rule::T3,
                                      Rule::T7,     Rule::LitTotaro, Rule::LitCyclic, Rule::LitHPT};

enum class Provenance { Paper, Literature };

inline const char* to_string(Outcome o) {
    switch (o) {
    case Outcome::NotStablyRational: return "NotStablyRational";
    case Outcome::Rational: return "Rational";
    case Outcome::Unknown: return "Unknown";
    case Outcome::InvalidFamily: return "InvalidFamily";
    }
    return "?";
}

inline const char* to_string(Rule r) {
    switch (r) {
    case Rule::Index0: return "INDEX0";
    case Rule::T1: return "T1";
    case Rule::T2: return "T2";
    case Rule::T3: return "T3";
    case Rule::T7: return "T7";
    case Rule::LitTotaro: return "LIT-TOTARO";
    case Rule::LitCyclic: return "LIT-CYCLIC";
    case Rule::LitHPT: return "LIT-HPT";
    }
    return "?";
}

inline const char* to_string(Provenance p) { return p == Provenance::Paper ? "paper" : "cited-literature"; }

inline std::optional<Rule> rule_from_string(std::string_view s) {
    for (Rule r : all_rules)
        if (s == to_string(r))
            return r;
    return std::nullopt;
}

inline std::optional<Outcome> outcome_from_string(std::string_view s) {
    for (Outcome o : {Outcome::NotStablyRational, Outcome::Rational, Outcome::Unknown, Outcome::InvalidFamily})
        if (s == to_string(o))
            return o;
    return std::nullopt;
}

inline Provenance provenance_of(Rule r) {
    return (r == Rule::LitTotaro || r == Rule::LitCyclic || r == Rule::LitHPT) ? Provenance::Literature
                                                                               : Provenance::Paper;
}

/// One recorded comparison "lhs rel rhs". rel is one of
/// <=, <, >=, >, ==, !=, divides (lhs | rhs), coprime (gcd(lhs, rhs) = 1).
struct Check {
    std::string label;
    Int lhs = 0;
    std::string rel;
    Int rhs = 0;
    bool holds = false;

    bool operator==(const Check&) const = default;
};

inline bool evaluate_relation(Int lhs, std::string_view rel, Int rhs) {
    if (rel == "<=") return lhs <= rhs;
    if (rel == "<") return lhs < rhs;
    if (rel == ">=") return lhs >= rhs;
    if (rel == ">") return lhs > rhs;
    if (rel == "==") return lhs == rhs;
    if (rel == "!=") return lhs != rhs;
    if (rel == "divides") return lhs != 0 && rhs % lhs == 0;
    if (rel == "coprime") return std::gcd(lhs, rhs) == 1;
    throw std::invalid_argument("unknown relation: " + std::string(rel));
}

inline Check make_check(std::string label, Int lhs, std::string rel, Int rhs) {
    const bool holds = evaluate_relation(lhs, rel, rhs);
    return {std::move(label), lhs, std::move(rel), rhs, holds};
}

// Certificates. Branch markers name which sub-case of the degeneration
// argument applies; the listed integers are all recomputable from (weights, d).

/// Mixed-characteristic degeneration to an a_n-th root cover of
/// P(a_0,...,a_n, a_n a_{n+1}).
struct T1Certificate {
    std::vector<Int> ordering; // a_{n+1} = a_max, a_n = max of the rest
    std::optional<Int> p;      // prime dividing a_n (absent when a_n = 1)
    Int b = 0;                 // a_n * a_{n+1}
    Int e_prime = 0;           // d / b
    Int sheaf_degree = 0;      // d - (a_0 + ... + a_n) >= 0
    std::string branch;        // known1-case-1 | known1-case-2:LIT-TOTARO | known1-case-2:LIT-CYCLIC | known1-case-3:T2 | main
    bool operator==(const T1Certificate&) const = default;
};

/// Degeneration to a p-th root cover in P(a_0,...,a_{n+1}, d/p), reduced mod p.
struct T2Certificate {
    Int p = 0;
    Int b = 0;                        // d / p
    std::vector<Int> ambient_weights; // (a_0, ..., a_{n+1}, b)
    Int sheaf_degree = 0;             // b - a_sigma + d = (p+1)/p d - a_sigma >= 0
    std::string branch;               // known2-case-1 | known2-case-2 | main
    bool operator==(const T2Certificate&) const = default;
};

/// Degeneration to a reducible variety with an inseparable double cover in
/// characteristic 2.
struct T3Certificate {
    int characteristic = 2;
    Int b = 0;               // (e-1) a_pi / 2
    Int sheaf_degree = 0;    // 3/2 d - 3/2 a_pi - a_sigma = 3b - a_sigma >= 0
    Int omega_zh_degree = 0; // (e+1)/2 a_pi - a_sigma, negative on the main branch
    std::string branch;      // known3-case-1 | known3-case-2 | main
    bool operator==(const T3Certificate&) const = default;
};

/// a_k-th root cover in P(a_0,...,a_{n+1}, d/a_k), reduced mod p | a_k.
struct T7Certificate {
    int k = 0;
    Int a_k = 0;
    Int p = 0;
    Int b = 0; // d / a_k
    int l = 0;
    Int a_l = 0;            // a_k | (b - a_l)
    Int sheaf_degree = 0;   // b - a_sigma + d >= 0
    std::string branch;     // knownapp-case-1 | knownapp-case-2 | main
    bool operator==(const T7Certificate&) const = default;
};

using Certificate = std::variant<T1Certificate, T2Certificate, T3Certificate, T7Certificate>;

inline Rule certificate_rule(const Certificate& c) {
    constexpr std::array rules{Rule::T1, Rule::T2, Rule::T3, Rule::T7};
    return rules[c.index()];
}

struct RuleResult {
    Rule rule = Rule::Index0;
    Provenance provenance = Provenance::Paper;
    bool holds = false;
    std::vector<Check> checks;
    std::optional<Certificate> certificate;
};

struct Verdict {
    FamilyDescriptor family;
    Outcome outcome = Outcome::Unknown;
    std::optional<Rule> primary_rule;
    std::vector<RuleResult> rules;
    std::vector<std::string> notes;

    const RuleResult* find(Rule r) const {
        for (const auto& rr : rules)
            if (rr.rule == r)
                return &rr;
        return nullptr;
    }

    bool fires(Rule r) const {
        const auto* rr = find(r);
        return rr != nullptr && rr->holds;
    }
};

struct ClassifyOptions {
    bool literature = true;
};

namespace detail {

inline RuleResult finish(Rule rule, std::vector<Check> checks) {
    RuleResult rr;
    rr.rule = rule;
    rr.provenance = provenance_of(rule);
    rr.holds = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.holds; });
    rr.checks = std::move(checks);
    return rr;
}

inline void require_theorem_setting(const FamilyDescriptor& f, const char* rule) {
    if (!validate(f).smooth_general_member)
        throw std::domain_error(std::string(rule) + ": family is not smooth/well formed/non-cone: " + f.str());
    if (f.n() < 3)
        throw std::domain_error(std::string(rule) + ": needs dimension n >= 3: " + f.str());
}

inline Int ceil_div(Int a, Int b) { return (a + b - 1) / b; }

/// max over i < j of (a_i - 1)(a_j - 1); attained at the two largest weights.
inline Int max_pair_product(const WeightTuple& w) {
    const std::size_t k = w.size();
    return checked::mul(w[k - 2] - 1, w[k - 1] - 1);
}

inline Int sum_without_max(const FamilyDescriptor& f) { return f.weights.sum() - f.weights.max(); }

} // namespace detail

/// I_X <= 0: the canonical sheaf has sections.
inline RuleResult rule_index0(const FamilyDescriptor& f) {
    const auto inv = invariants(f);
    return detail::finish(Rule::Index0, {make_check("I_X <= 0", inv.index, "<=", 0)});
}

/// I_X <= a_max.
inline RuleResult rule_T1(const FamilyDescriptor& f) {
    detail::require_theorem_setting(f, "T1");
    const auto inv = invariants(f);
    auto rr = detail::finish(Rule::T1, {make_check("I_X <= a_max", inv.index, "<=", inv.a_max)});
    if (!rr.holds)
        return rr;

    const int n = f.n();
    const Int d = f.degree;
    T1Certificate c;
    c.ordering = f.weights.vec();
    const Int an = c.ordering[n];
    const Int an1 = c.ordering[n + 1];
    if (an >= 2)
        c.p = smallest_prime_factor(an);
    c.b = checked::mul(an, an1);
    c.e_prime = d / c.b;
    c.sheaf_degree = d - detail::sum_without_max(f);
    if (d >= inv.a_sigma)
        c.branch = "known1-case-1";
    else if (inv.r == n + 1)
        c.branch = "known1-case-2:LIT-TOTARO";
    else if (inv.r == n)
        c.branch = "known1-case-2:LIT-CYCLIC";
    else if (d != inv.a_pi)
        c.branch = "known1-case-3:T2";
    else
        c.branch = "main";
    rr.certificate = c;
    return rr;
}

/// e = d/a_pi > 1 and d >= p/(p+1) a_sigma with p the smallest prime factor of e.
inline RuleResult rule_T2(const FamilyDescriptor& f) {
    detail::require_theorem_setting(f, "T2");
    const auto inv = invariants(f);
    const Int e = *inv.e;
    const Int d = f.degree;
    std::vector<Check> checks{make_check("e = d/a_pi > 1", e, ">", 1)};
    if (e > 1) {
        const Int p = smallest_prime_factor(e);
        checks.push_back(make_check("(p+1) d >= p a_sigma, p = " + std::to_string(p) + " smallest prime of e",
                                    checked::mul(p + 1, d), ">=", checked::mul(p, inv.a_sigma)));
    }
    auto rr = detail::finish(Rule::T2, std::move(checks));
    if (!rr.holds)
        return rr;

    T2Certificate c;
    c.p = smallest_prime_factor(e);
    c.b = d / c.p;
    c.ambient_weights = f.weights.vec();
    c.ambient_weights.push_back(c.b);
    c.sheaf_degree = c.b - inv.a_sigma + d;
    if (d >= inv.a_sigma)
        c.branch = "known2-case-1";
    else if (d < checked::mul(2 * c.p, inv.a_max))
        c.branch = "known2-case-2";
    else
        c.branch = "main";
    rr.certificate = c;
    return rr;
}

/// e = d/a_pi > 1 odd and d >= a_pi + 2/3 a_sigma.
inline RuleResult rule_T3(const FamilyDescriptor& f) {
    detail::require_theorem_setting(f, "T3");
    const auto inv = invariants(f);
    const Int e = *inv.e;
    const Int d = f.degree;
    auto rr = detail::finish(Rule::T3, {
                                           make_check("e = d/a_pi > 1", e, ">", 1),
                                           make_check("e odd", e % 2, "==", 1),
                                           make_check("3d >= 3a_pi + 2a_sigma", checked::mul(3, d), ">=",
                                                      checked::add(checked::mul(3, inv.a_pi), checked::mul(2, inv.a_sigma))),
                                       });
    if (!rr.holds)
        return rr;

    T3Certificate c;
    c.b = (e - 1) * inv.a_pi / 2;
    c.sheaf_degree = 3 * c.b - inv.a_sigma;
    c.omega_zh_degree = (e + 1) / 2 * inv.a_pi - inv.a_sigma;
    if (d >= inv.a_sigma)
        c.branch = "known3-case-1";
    else if (e == 3)
        c.branch = "known3-case-2";
    else
        c.branch = "main";
    rr.certificate = c;
    return rr;
}

namespace detail {

struct T7Candidate {
    std::vector<Check> checks;
    std::optional<int> l;
    bool holds = false;
};

inline T7Candidate t7_candidate(const FamilyDescriptor& f, const FamilyInvariants& inv, int k) {
    const auto& w = f.weights;
    const Int d = f.degree;
    const Int ak = w[k];
    const std::string tag = "k=" + std::to_string(k) + ": ";
    T7Candidate out;
    auto& cs = out.checks;
    cs.push_back(make_check(tag + "a_k > 1", ak, ">", 1));
    cs.push_back(make_check(tag + "d > a_k (a_i-1)(a_j-1) for all i<j (pairs through k included)", d, ">",
                            checked::mul(ak, max_pair_product(w))));
    cs.push_back(make_check(tag + "d >= a_k a_max", d, ">=", checked::mul(ak, inv.a_max)));
    cs.push_back(make_check(tag + "a_k | d", ak, "divides", d));
    const Int b = d / ak;
    for (int l = 0; l < static_cast<int>(w.size()); ++l)
        if (l != k && (b - w[l]) % ak == 0) {
            out.l = l;
            break;
        }
    if (out.l)
        cs.push_back(make_check(tag + "a_k | (d/a_k - a_l), l = " + std::to_string(*out.l), ak, "divides", b - w[*out.l]));
    else {
        const int l0 = k == 0 ? 1 : 0;
        cs.push_back(make_check(tag + "no l != k with a_k | (d/a_k - a_l); shown for l = " + std::to_string(l0), ak,
                                "divides", b - w[l0]));
    }
    cs.push_back(make_check(tag + "gcd(d/a_k, a_k) = 1", b, "coprime", ak));
    cs.push_back(make_check(tag + "(a_k+1) d >= a_k a_sigma", checked::mul(ak + 1, d), ">=",
                            checked::mul(ak, inv.a_sigma)));
    out.holds = std::all_of(cs.begin(), cs.end(), [](const Check& c) { return c.holds; });
    return out;
}

} // namespace detail

/// Some k with a_k > 1, d > a_k (a_i-1)(a_j-1) for all i<j, d >= a_k a_max,
/// a_k | (d/a_k - a_l) for some l != k and d >= a_k/(a_k+1) a_sigma.
/// The witness is the first k by (a_k, index); l is the first valid index.
inline RuleResult rule_T7(const FamilyDescriptor& f) {
    detail::require_theorem_setting(f, "T7");
    const auto inv = invariants(f);
    const auto& w = f.weights;

    std::vector<int> order;
    for (int k = 0; k < static_cast<int>(w.size()); ++k)
        if (w[k] > 1)
            order.push_back(k);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return w[x] < w[y]; });

    if (order.empty())
        return detail::finish(Rule::T7, {make_check("some weight a_k > 1", inv.a_max, ">", 1)});

    std::vector<Check> all_checks;
    for (int k : order) {
        auto cand = detail::t7_candidate(f, inv, k);
        if (!cand.holds) {
            all_checks.insert(all_checks.end(), cand.checks.begin(), cand.checks.end());
            continue;
        }
        auto rr = detail::finish(Rule::T7, std::move(cand.checks));
        const Int d = f.degree;
        T7Certificate c;
        c.k = k;
        c.a_k = w[k];
        c.p = smallest_prime_factor(c.a_k);
        c.b = d / c.a_k;
        c.l = *cand.l;
        c.a_l = w[c.l];
        c.sheaf_degree = c.b - inv.a_sigma + d;
        if (d >= inv.a_sigma)
            c.branch = "knownapp-case-1";
        else if (d < checked::mul(3, inv.a_max))
            c.branch = "knownapp-case-2";
        else
            c.branch = "main";
        rr.certificate = c;
        return rr;
    }
    return detail::finish(Rule::T7, std::move(all_checks));
}

/// Results quoted from the literature, each with its own shape condition:
/// hypersurfaces in P^{n+1} with d >= 2 ceil((n+2)/3); cyclic covers
/// X_d in P(1^{n+1}, a) with d >= n+1; and X_4 in P(1^5, 2).
inline std::vector<RuleResult> rule_literature(const FamilyDescriptor& f) {
    const auto inv = invariants(f);
    const int n = f.n();
    const Int d = f.degree;
    std::vector<RuleResult> out;
    out.push_back(detail::finish(Rule::LitTotaro, {
                                                      make_check("all weights 1 (r = n+1)", inv.r, "==", n + 1),
                                                      make_check("n >= 3", n, ">=", 3),
                                                      make_check("d >= 2 ceil((n+2)/3)", d, ">=", 2 * detail::ceil_div(n + 2, 3)),
                                                  }));
    out.push_back(detail::finish(Rule::LitCyclic, {
                                                      make_check("weights (1^{n+1}, a), a >= 2 (r = n)", inv.r, "==", n),
                                                      make_check("n >= 3", n, ">=", 3),
                                                      make_check("d >= n+1", d, ">=", n + 1),
                                                  }));
    out.push_back(detail::finish(Rule::LitHPT, {
                                                   make_check("n = 4", n, "==", 4),
                                                   make_check("five weights equal to 1 (r = 4)", inv.r, "==", 4),
                                                   make_check("a_max = 2", inv.a_max, "==", 2),
                                                   make_check("d = 4", d, "==", 4),
                                               }));
    return out;
}

inline bool is_quadric_threefold(const FamilyDescriptor& f) {
    return f.degree == 2 && f.weights.size() == 5 && f.weights.count_ones() == 5;
}

inline Verdict classify(const FamilyDescriptor& f, const ClassifyOptions& opts = {}) {
    Verdict v;
    v.family = f;
    const auto validity = validate(f);
    if (!validity.smooth_general_member) {
        v.outcome = Outcome::InvalidFamily;
        for (const auto& c : validity.failed_conditions)
            v.notes.push_back("failed condition: " + c);
        return v;
    }

    if (f.n() < 3) {
        for (Rule r : all_rules) {
            if (provenance_of(r) == Provenance::Literature && !opts.literature)
                continue;
            v.rules.push_back(detail::finish(r, {make_check("dimension n >= 3", f.n(), ">=", 3)}));
        }
        v.outcome = Outcome::Unknown;
        v.notes.push_back("all criteria require dimension n >= 3");
        return v;
    }

    v.rules.push_back(rule_index0(f));
    v.rules.push_back(rule_T1(f));
    v.rules.push_back(rule_T2(f));
    v.rules.push_back(rule_T3(f));
    v.rules.push_back(rule_T7(f));
    if (opts.literature)
        for (auto& rr : rule_literature(f))
            v.rules.push_back(std::move(rr));

    for (const auto& rr : v.rules)
        if (rr.holds) {
            v.primary_rule = rr.rule;
            break;
        }

    if (is_quadric_threefold(f)) {
        v.outcome = Outcome::Rational;
        v.notes.push_back("a smooth quadric in P^4 is rational");
    } else {
        v.outcome = v.primary_rule ? Outcome::NotStablyRational : Outcome::Unknown;
    }
    return v;
}

// Independent re-derivation of certificate data from (weights, d).

struct CertificateCheck {
    bool ok = true;
    std::vector<std::string> diffs;

    void expect(bool cond, std::string what) {
        if (!cond) {
            ok = false;
            diffs.push_back(std::move(what));
        }
    }

    template <class T>
    void expect_eq(const T& recorded, const T& recomputed, const std::string& field) {
        if (!(recorded == recomputed)) {
            ok = false;
            diffs.push_back(field + " mismatch");
        }
    }
};

namespace detail {

inline void validate_cert(const T1Certificate& c, const FamilyDescriptor& f, CertificateCheck& out) {
    const auto& w = f.weights.vec();
    const int n = f.n();
    const Int d = f.degree;
    const Int a_sigma = f.weights.sum();
    const Int a_pi = f.weights.product();
    const int r = f.weights.count_ones() - 1;

    out.expect_eq(c.ordering, w, "ordering");
    if (c.ordering.size() != w.size())
        return;
    const Int an = c.ordering[n];
    const Int an1 = c.ordering[n + 1];
    out.expect(an1 == *std::max_element(w.begin(), w.end()), "a_{n+1} is not the maximum");
    out.expect(an == *std::max_element(c.ordering.begin(), c.ordering.end() - 1), "a_n is not the maximum of the rest");
    Int rest = 0;
    for (int i = 0; i <= n; ++i)
        rest += c.ordering[i];
    out.expect_eq(c.b, an * an1, "b = a_n a_{n+1}");
    out.expect(c.b != 0 && c.e_prime * c.b == d, "e' b = d");
    out.expect_eq(c.sheaf_degree, d - rest, "sheaf_degree = d - sum_{i<=n} a_i");
    out.expect(c.sheaf_degree >= 0, "sheaf_degree >= 0");
    if (an >= 2)
        out.expect(c.p && *c.p == smallest_prime_factor(an), "p is the smallest prime dividing a_n");
    else
        out.expect(!c.p, "p recorded although a_n = 1");

    std::string branch;
    if (d >= a_sigma)
        branch = "known1-case-1";
    else if (r == n + 1)
        branch = "known1-case-2:LIT-TOTARO";
    else if (r == n)
        branch = "known1-case-2:LIT-CYCLIC";
    else if (d != a_pi)
        branch = "known1-case-3:T2";
    else
        branch = "main";
    out.expect_eq(c.branch, branch, "branch");

    if (branch.rfind("known1-case-2", 0) == 0)
        out.expect(d >= n + 1, "cyclic/hypersurface reduction: d >= n+1");
    if (branch == "known1-case-2:LIT-TOTARO")
        out.expect(d >= 2 * ceil_div(n + 2, 3), "d >= 2 ceil((n+2)/3)");
    if (branch == "known1-case-3:T2") {
        const Int p = smallest_prime_factor(d / a_pi);
        out.expect((p + 1) * d >= p * a_sigma, "reduction to T2: (p+1) d >= p a_sigma");
    }
    if (branch == "main") {
        out.expect(an >= 2, "main: a_n >= 2");
        out.expect(3 * an <= d, "main: 3 a_n <= d");
        out.expect(d == a_pi && d < a_sigma, "main: d = a_pi < a_sigma");
        out.expect(2 * r > n, "main: 2r > n");
        out.expect(d >= rest, "main: d >= sum_{i<=n} a_i");
    }
}

inline void validate_cert(const T2Certificate& c, const FamilyDescriptor& f, CertificateCheck& out) {
    const Int d = f.degree;
    const Int a_sigma = f.weights.sum();
    const Int a_pi = f.weights.product();
    const Int a_max = f.weights.max();
    const int n = f.n();
    out.expect(d % a_pi == 0 && d / a_pi > 1, "e = d/a_pi > 1");
    if (!out.ok)
        return;
    const Int e = d / a_pi;
    out.expect_eq(c.p, smallest_prime_factor(e), "p = smallest prime factor of e");
    out.expect(c.b * c.p == d, "b p = d");
    auto ambient = f.weights.vec();
    ambient.push_back(c.b);
    out.expect_eq(c.ambient_weights, ambient, "ambient weights");
    out.expect_eq(c.sheaf_degree, c.b - a_sigma + d, "sheaf_degree = b - a_sigma + d");
    out.expect(c.sheaf_degree >= 0, "sheaf_degree >= 0");

    const Int p = smallest_prime_factor(e);
    std::string branch = d >= a_sigma ? "known2-case-1" : d < 2 * p * a_max ? "known2-case-2" : "main";
    out.expect_eq(c.branch, branch, "branch");
    if (branch == "known2-case-2") {
        out.expect(e == p, "cyclic reduction: e = p");
        out.expect(f.weights.count_ones() - 1 >= n, "cyclic reduction: r >= n");
        out.expect(d >= n + 1, "cyclic reduction: d >= n+1");
    }
    if (branch == "main") {
        out.expect(d % (p * a_pi) == 0, "main: p a_pi | d");
        out.expect(2 * p * a_max <= d && d < a_sigma, "main: 2p a_max <= d < a_sigma");
    }
}

inline void validate_cert(const T3Certificate& c, const FamilyDescriptor& f, CertificateCheck& out) {
    const Int d = f.degree;
    const Int a_sigma = f.weights.sum();
    const Int a_pi = f.weights.product();
    out.expect(d % a_pi == 0 && d / a_pi > 1 && (d / a_pi) % 2 == 1, "e = d/a_pi > 1 odd");
    if (!out.ok)
        return;
    const Int e = d / a_pi;
    out.expect_eq(c.characteristic, 2, "characteristic");
    out.expect(2 * c.b == (e - 1) * a_pi, "2b = (e-1) a_pi");
    out.expect_eq(c.sheaf_degree, 3 * c.b - a_sigma, "sheaf_degree = 3b - a_sigma");
    out.expect(2 * c.sheaf_degree == 3 * d - 3 * a_pi - 2 * a_sigma, "2 sheaf_degree = 3d - 3a_pi - 2a_sigma");
    out.expect(c.sheaf_degree >= 0, "sheaf_degree >= 0");
    out.expect(2 * c.omega_zh_degree == (e + 1) * a_pi - 2 * a_sigma, "omega_ZH degree = (e+1)/2 a_pi - a_sigma");

    std::string branch = d >= a_sigma ? "known3-case-1" : e == 3 ? "known3-case-2" : "main";
    out.expect_eq(c.branch, branch, "branch");
    if (branch == "main") {
        out.expect(e >= 5, "main: e >= 5");
        out.expect(c.omega_zh_degree < 0, "main: omega_ZH degree < 0");
    }
}

inline void validate_cert(const T7Certificate& c, const FamilyDescriptor& f, CertificateCheck& out) {
    const auto& w = f.weights;
    const Int d = f.degree;
    const Int a_sigma = w.sum();
    const Int a_max = w.max();
    const int size = static_cast<int>(w.size());
    out.expect(c.k >= 0 && c.k < size && c.l >= 0 && c.l < size && c.k != c.l, "indices k != l in range");
    if (!out.ok)
        return;
    out.expect_eq(c.a_k, w[c.k], "a_k");
    out.expect_eq(c.a_l, w[c.l], "a_l");
    out.expect(c.a_k > 1, "a_k > 1");
    out.expect(c.a_k > 1 && c.p == smallest_prime_factor(c.a_k), "p is the smallest prime dividing a_k");
    out.expect(c.b * c.a_k == d, "b a_k = d");
    out.expect(c.a_k != 0 && (c.b - c.a_l) % c.a_k == 0, "a_k | (b - a_l)");
    out.expect(std::gcd(c.b, c.a_k) == 1, "gcd(b, a_k) = 1");
    out.expect(d > c.a_k * max_pair_product(w), "d > a_k (a_i-1)(a_j-1)");
    out.expect(d >= c.a_k * a_max, "d >= a_k a_max");
    out.expect((c.a_k + 1) * d >= c.a_k * a_sigma, "(a_k+1) d >= a_k a_sigma");
    out.expect_eq(c.sheaf_degree, c.b - a_sigma + d, "sheaf_degree = b - a_sigma + d");
    out.expect(c.sheaf_degree >= 0, "sheaf_degree >= 0");

    // canonical witness: first k by (a_k, index), then first l
    std::optional<std::pair<int, int>> first;
    for (Int target = 2; target <= a_max && !first; ++target)
        for (int k = 0; k < size && !first; ++k) {
            if (w[k] != target || d % target != 0)
                continue;
            const Int b = d / target;
            if (d <= target * max_pair_product(w) || d < target * a_max || std::gcd(b, target) != 1 ||
                (target + 1) * d < target * a_sigma)
                continue;
            for (int l = 0; l < size; ++l)
                if (l != k && (b - w[l]) % target == 0) {
                    first = std::pair{k, l};
                    break;
                }
        }
    out.expect(first && first->first == c.k && first->second == c.l, "(k, l) is not the canonical witness");

    std::string branch = d >= a_sigma ? "knownapp-case-1" : d < 3 * a_max ? "knownapp-case-2" : "main";
    out.expect_eq(c.branch, branch, "branch");
    if (branch == "knownapp-case-2")
        out.expect(a_sigma - d <= a_max, "reduction to T1: I_X <= a_max");
    if (branch == "main")
        out.expect(2 * (w.count_ones() - 1) >= f.n() + 1, "main: 2r >= n+1");
}

} // namespace detail

/// Recomputes every recorded integer and inequality of a certificate from
/// the family alone.
inline CertificateCheck validate_certificate(const Certificate& cert, const FamilyDescriptor& f) {
    CertificateCheck out;
    const auto v = validate(f);
    out.expect(v.smooth_general_member, "family is not smooth/well formed/non-cone");
    out.expect(f.n() >= 3, "dimension n >= 3");
    if (!out.ok)
        return out;
    try {
        std::visit([&](const auto& c) { detail::validate_cert(c, f, out); }, cert);
    } catch (const std::exception& ex) {
        out.expect(false, std::string("recomputation failed: ") + ex.what());
    }
    return out;
}

} // namespace wphyp
