#pragma once

// A family X_d in P(a_0,...,a_{n+1}) together with its invariants and the
// arithmetic characterization of smooth, well formed, non-cone members.

#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "wps.hpp"

namespace wphyp {

struct FamilyDescriptor {
    WeightTuple weights;
    Int degree = 0;

    FamilyDescriptor() = default;
    FamilyDescriptor(WeightTuple w, Int d) : weights(std::move(w)), degree(d) {
        if (degree < 1)
            throw std::invalid_argument("degree must be a positive integer");
    }

    int n() const { return weights.n(); }

    auto operator<=>(const FamilyDescriptor&) const = default;
    bool operator==(const FamilyDescriptor&) const = default;

    /// X_6 in P(1^3,2,3)
    std::string str() const { return "X_" + std::to_string(degree) + " in " + weights.compact(); }
};

struct FamilyInvariants {
    Int a_sigma = 0;
    Int a_pi = 0;
    Int a_max = 0;
    Int index = 0;           // I_X = a_sigma - d
    std::optional<Int> e;    // d / a_pi when integral
    int r = -1;              // (number of weight-1 entries) - 1
    int n = 0;
};

inline FamilyInvariants invariants(const FamilyDescriptor& f) {
    FamilyInvariants inv;
    inv.a_sigma = f.weights.sum();
    inv.a_pi = f.weights.product();
    inv.a_max = f.weights.max();
    inv.index = checked::sub(inv.a_sigma, f.degree);
    if (f.degree % inv.a_pi == 0)
        inv.e = f.degree / inv.a_pi;
    inv.r = f.weights.count_ones() - 1;
    inv.n = f.n();
    return inv;
}

namespace condition {
inline constexpr const char* coprime = "coprime-weights";
inline constexpr const char* divisible = "degree-divisible-by-weight-product";
inline constexpr const char* not_cone = "not-linear-cone";
inline constexpr const char* well_formed = "well-formed";
} // namespace condition

struct ValidityReport {
    bool pairwise_coprime = false;
    bool degree_divisible = false;
    bool not_linear_cone = false;
    bool well_formed = false;
    bool smooth_general_member = false;
    bool fano = false;
    std::vector<std::string> failed_conditions;
};

/// A general member is smooth, well formed and not a linear cone iff the
/// weights are mutually coprime, a_pi | d and d >= 2 a_max.
inline ValidityReport validate(const FamilyDescriptor& f) {
    ValidityReport v;
    const auto w = f.weights.weights();
    v.pairwise_coprime = pairwise_coprime(w);
    try {
        v.degree_divisible = f.degree % f.weights.product() == 0;
    } catch (const std::overflow_error&) {
        v.degree_divisible = false; // a_pi > INT64_MAX >= d
    }
    v.not_linear_cone = f.degree >= checked::mul(2, f.weights.max());
    v.well_formed = f.weights.well_formed();
    v.smooth_general_member = v.pairwise_coprime && v.degree_divisible && v.not_linear_cone;
    v.fano = f.weights.sum() > f.degree;
    if (!v.pairwise_coprime)
        v.failed_conditions.emplace_back(condition::coprime);
    if (!v.degree_divisible)
        v.failed_conditions.emplace_back(condition::divisible);
    if (!v.not_linear_cone)
        v.failed_conditions.emplace_back(condition::not_cone);
    if (!v.well_formed)
        v.failed_conditions.emplace_back(condition::well_formed);
    return v;
}

struct NumericConstraint {
    std::string label;
    bool holds = false;
};

/// Numerical restrictions satisfied by every smooth well formed Fano
/// hypersurface of dimension n >= 3 that is not a linear cone (weights sorted,
/// a_n second largest, a_{n+1} largest):
///   2r >= n+1;
///   d >= 3 a_n unless d = 2 and r = n+1;
///   d >= 3 a_{n+1} unless d = 2 a_{n+1} and (r >= n, or r = n-1 and a_n = 2).
inline std::vector<NumericConstraint> numeric_constraints(const FamilyDescriptor& f) {
    const auto v = validate(f);
    const int n = f.n();
    if (!v.smooth_general_member || !v.fano || n < 3)
        throw std::domain_error("numeric_constraints: needs a smooth Fano family with n >= 3: " + f.str());
    const auto inv = invariants(f);
    const Int d = f.degree;
    const Int an = f.weights[n];
    const Int an1 = f.weights[n + 1];
    const int r = inv.r;

    std::vector<NumericConstraint> out;
    out.push_back({"2r >= n+1", 2 * r >= n + 1});
    out.push_back({"d >= 3a_n unless (d = 2, r = n+1)", d >= 3 * an || (d == 2 && r == n + 1)});
    const bool twice = d == 2 * an1;
    out.push_back({"d >= 3a_{n+1} unless d = 2a_{n+1} with (r >= n) or (r = n-1, a_n = 2)",
                   d >= 3 * an1 || (twice && r >= n) || (twice && r == n - 1 && an == 2)});
    return out;
}

} // namespace wphyp
