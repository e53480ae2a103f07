#pragma once

// JSON encodings. Every top-level document carries "schema_version".

#include <json.hpp>

#include <string>

#include "criteria.hpp"
#include "enumerate.hpp"
#include "jetlab.hpp"
#include "version.hpp"

namespace wphyp {

using nlohmann::json;

inline constexpr int schema_version = 1;

inline constexpr const char* verdict_scope =
    "verdicts concern a very general member of the family (outside countably many closed loci)";

inline json to_json(const FamilyDescriptor& f) { return {{"weights", f.weights.vec()}, {"degree", f.degree}}; }

inline FamilyDescriptor family_from_json(const json& j) {
    return FamilyDescriptor(WeightTuple(j.at("weights").get<std::vector<Int>>()), j.at("degree").get<Int>());
}

inline json to_json(const FamilyInvariants& inv) {
    json j{{"a_sigma", inv.a_sigma}, {"a_pi", inv.a_pi}, {"a_max", inv.a_max}, {"index", inv.index},
           {"r", inv.r},             {"n", inv.n}};
    j["e"] = inv.e ? json(*inv.e) : json(nullptr);
    return j;
}

inline json to_json(const ValidityReport& v) {
    return {{"pairwise_coprime", v.pairwise_coprime},
            {"degree_divisible", v.degree_divisible},
            {"not_linear_cone", v.not_linear_cone},
            {"well_formed", v.well_formed},
            {"smooth_general_member", v.smooth_general_member},
            {"fano", v.fano},
            {"failed_conditions", v.failed_conditions}};
}

inline json to_json(const Check& c) {
    return {{"label", c.label}, {"lhs", c.lhs}, {"rel", c.rel}, {"rhs", c.rhs}, {"holds", c.holds}};
}

inline Check check_from_json(const json& j) {
    return {j.at("label").get<std::string>(), j.at("lhs").get<Int>(), j.at("rel").get<std::string>(),
            j.at("rhs").get<Int>(), j.at("holds").get<bool>()};
}

inline json to_json(const Certificate& cert) {
    return std::visit(
        [](const auto& c) -> json {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, T1Certificate>) {
                return {{"type", "T1"},
                        {"ordering", c.ordering},
                        {"p", c.p ? json(*c.p) : json(nullptr)},
                        {"b", c.b},
                        {"e_prime", c.e_prime},
                        {"sheaf_degree", c.sheaf_degree},
                        {"branch", c.branch}};
            } else if constexpr (std::is_same_v<T, T2Certificate>) {
                return {{"type", "T2"},           {"p", c.p},
                        {"b", c.b},               {"ambient_weights", c.ambient_weights},
                        {"sheaf_degree", c.sheaf_degree}, {"branch", c.branch}};
            } else if constexpr (std::is_same_v<T, T3Certificate>) {
                return {{"type", "T3"},
                        {"characteristic", c.characteristic},
                        {"b", c.b},
                        {"sheaf_degree", c.sheaf_degree},
                        {"omega_zh_degree", c.omega_zh_degree},
                        {"branch", c.branch}};
            } else {
                return {{"type", "T7"}, {"k", c.k},       {"a_k", c.a_k}, {"p", c.p},
                        {"b", c.b},     {"l", c.l},       {"a_l", c.a_l}, {"sheaf_degree", c.sheaf_degree},
                        {"branch", c.branch}};
            }
        },
        cert);
}

inline Certificate certificate_from_json(const json& j) {
    const auto type = j.at("type").get<std::string>();
    if (type == "T1") {
        T1Certificate c;
        c.ordering = j.at("ordering").get<std::vector<Int>>();
        if (!j.at("p").is_null())
            c.p = j.at("p").get<Int>();
        c.b = j.at("b").get<Int>();
        c.e_prime = j.at("e_prime").get<Int>();
        c.sheaf_degree = j.at("sheaf_degree").get<Int>();
        c.branch = j.at("branch").get<std::string>();
        return c;
    }
    if (type == "T2") {
        T2Certificate c;
        c.p = j.at("p").get<Int>();
        c.b = j.at("b").get<Int>();
        c.ambient_weights = j.at("ambient_weights").get<std::vector<Int>>();
        c.sheaf_degree = j.at("sheaf_degree").get<Int>();
        c.branch = j.at("branch").get<std::string>();
        return c;
    }
    if (type == "T3") {
        T3Certificate c;
        c.characteristic = j.at("characteristic").get<int>();
        c.b = j.at("b").get<Int>();
        c.sheaf_degree = j.at("sheaf_degree").get<Int>();
        c.omega_zh_degree = j.at("omega_zh_degree").get<Int>();
        c.branch = j.at("branch").get<std::string>();
        return c;
    }
    if (type == "T7") {
        T7Certificate c;
        c.k = j.at("k").get<int>();
        c.a_k = j.at("a_k").get<Int>();
        c.p = j.at("p").get<Int>();
        c.b = j.at("b").get<Int>();
        c.l = j.at("l").get<int>();
        c.a_l = j.at("a_l").get<Int>();
        c.sheaf_degree = j.at("sheaf_degree").get<Int>();
        c.branch = j.at("branch").get<std::string>();
        return c;
    }
    throw std::invalid_argument("unknown certificate type: " + type);
}

inline json to_json(const RuleResult& rr) {
    json checks = json::array();
    for (const auto& c : rr.checks)
        checks.push_back(to_json(c));
    json j{{"rule", to_string(rr.rule)},
           {"provenance", to_string(rr.provenance)},
           {"holds", rr.holds},
           {"checks", checks}};
    j["certificate"] = rr.certificate ? to_json(*rr.certificate) : json(nullptr);
    return j;
}

inline RuleResult rule_result_from_json(const json& j) {
    RuleResult rr;
    const auto name = j.at("rule").get<std::string>();
    auto rule = rule_from_string(name);
    if (!rule)
        throw std::invalid_argument("unknown rule: " + name);
    rr.rule = *rule;
    rr.provenance = provenance_of(*rule);
    rr.holds = j.at("holds").get<bool>();
    for (const auto& c : j.at("checks"))
        rr.checks.push_back(check_from_json(c));
    if (j.contains("certificate") && !j.at("certificate").is_null())
        rr.certificate = certificate_from_json(j.at("certificate"));
    return rr;
}

inline json to_json(const Verdict& v) {
    json rules = json::array();
    for (const auto& rr : v.rules)
        rules.push_back(to_json(rr));
    json j{{"schema_version", schema_version},
           {"family", to_json(v.family)},
           {"canonical", v.family.str()},
           {"outcome", to_string(v.outcome)},
           {"rules", rules},
           {"notes", v.notes},
           {"scope", verdict_scope}};
    j["primary_rule"] = v.primary_rule ? json(to_string(*v.primary_rule)) : json(nullptr);
    return j;
}

inline Verdict verdict_from_json(const json& j) {
    if (j.value("schema_version", 0) != schema_version)
        throw std::invalid_argument("unsupported schema_version");
    Verdict v;
    v.family = family_from_json(j.at("family"));
    const auto name = j.at("outcome").get<std::string>();
    auto outcome = outcome_from_string(name);
    if (!outcome)
        throw std::invalid_argument("unknown outcome: " + name);
    v.outcome = *outcome;
    if (!j.at("primary_rule").is_null()) {
        auto r = rule_from_string(j.at("primary_rule").get<std::string>());
        if (!r)
            throw std::invalid_argument("unknown primary rule");
        v.primary_rule = r;
    }
    for (const auto& rr : j.at("rules"))
        v.rules.push_back(rule_result_from_json(rr));
    v.notes = j.value("notes", std::vector<std::string>{});
    return v;
}

inline json to_json(const EnumeratedFamily& f) {
    return {{"family", to_json(f.descriptor)}, {"canonical", f.descriptor.str()}, {"n", f.descriptor.n()},
            {"tuple", f.tuple},                {"s", f.s},                        {"e", f.e},
            {"index", invariants(f.descriptor).index}};
}

inline json query_json(const EnumerationQuery& q) {
    json j{{"n", q.n}};
    j["index"] = q.index ? json(*q.index) : json(nullptr);
    j["max_degree"] = q.max_degree ? json(*q.max_degree) : json(nullptr);
    j["max_weight"] = q.max_weight ? json(*q.max_weight) : json(nullptr);
    return j;
}

inline json to_json(const JetRecord& r) {
    return {{"tuple", r.tuple}, {"c", r.c},       {"l", r.l},     {"chart", r.chart},
            {"point", r.point}, {"rank", r.rank}, {"expected", r.expected}, {"pass", r.pass}};
}

inline json to_json(const DimensionBound& b) {
    json j{{"schema_version", schema_version},
           {"index", b.index},
           {"explicit_bound", b.explicit_bound},
           {"n_prime", b.n_prime},
           {"window", b.window},
           {"exceptional_dimensions", b.exceptional_dimensions},
           {"engine_version", engine_version}};
    j["effective_bound"] = b.effective ? json(*b.effective) : json(nullptr);
    return j;
}

} // namespace wphyp
