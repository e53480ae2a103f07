#pragma once

// Exhaustive generation of smooth well formed non-cone families
// X_d in P(1^s, b_1, ..., b_m) with 2 <= b_1 < ... < b_m pairwise coprime and
// d = e * b_pi, plus the census and the dimension bound N_I built on it.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "criteria.hpp"
#include "family.hpp"

namespace wphyp {

struct EnumerationQuery {
    int n = 3;
    std::optional<Int> index;
    std::optional<Int> max_degree;
    std::optional<Int> max_weight;
};

struct EnumeratedFamily {
    FamilyDescriptor descriptor;
    std::vector<Int> tuple; // weights > 1
    int s = 0;              // number of weight-1 entries
    Int e = 0;              // d = e * b_pi

    bool operator==(const EnumeratedFamily&) const = default;
};

namespace detail {

inline void check_query(const EnumerationQuery& q) {
    if (q.n < 3)
        throw std::invalid_argument("enumeration needs n >= 3");
    if (!q.index && !q.max_degree)
        throw std::invalid_argument("enumeration needs an index or a max degree");
    if (q.index && *q.index <= 0 && !q.max_degree)
        throw std::invalid_argument("non-Fano index queries need a max degree");
    if (q.max_degree && *q.max_degree < 1)
        throw std::invalid_argument("max degree must be positive");
    if (q.max_weight && *q.max_weight < 1)
        throw std::invalid_argument("max weight must be positive");
}

struct Search {
    const EnumerationQuery& q;
    std::vector<EnumeratedFamily> out;
    std::vector<Int> tuple;
    Int prod = 1;
    Int sum = 0;

    Int target() const { return q.n + 2 - *q.index; } // T = n+2-I

    // g = b_pi - b_sigma + m is non-decreasing under extension and every
    // valid family has g <= T (from e >= 1 and s >= 0).
    Int g() const { return prod - sum + static_cast<Int>(tuple.size()); }

    void emit(Int d) {
        const Int bmax = tuple.empty() ? 1 : tuple.back();
        if (d < 2 * bmax)
            return;
        if (q.max_degree && d > *q.max_degree)
            return;
        const int m = static_cast<int>(tuple.size());
        const int s = q.n + 2 - m;
        std::vector<Int> w(static_cast<std::size_t>(s), 1);
        w.insert(w.end(), tuple.begin(), tuple.end());
        out.push_back({FamilyDescriptor(WeightTuple(std::move(w)), d), tuple, s, d / prod});
    }

    void visit_node() {
        const int m = static_cast<int>(tuple.size());
        const int s = q.n + 2 - m;
        if (s < 0)
            return;
        if (q.index) {
            const Int d = s + sum - *q.index;
            if (d > 0 && d % prod == 0)
                emit(d);
        } else {
            for (Int e = 1; e <= *q.max_degree / prod; ++e)
                emit(e * prod);
        }
    }

    void recurse() {
        visit_node();
        if (static_cast<int>(tuple.size()) >= q.n + 2)
            return;
        const Int lo = tuple.empty() ? 2 : tuple.back() + 1;
        for (Int b = lo;; ++b) {
            if (q.max_weight && b > *q.max_weight)
                break;
            if (q.max_degree && (prod * b > *q.max_degree || 2 * b > *q.max_degree))
                break;
            if (q.index) {
                if (tuple.empty()) {
                    if (b > target())
                        break;
                } else if (g() + (prod - 1) * (b - 1) > target()) {
                    break;
                }
            }
            if (std::gcd(b, prod) != 1)
                continue;
            tuple.push_back(b);
            prod *= b;
            sum += b;
            recurse();
            sum -= b;
            prod /= b;
            tuple.pop_back();
        }
    }
};

inline bool family_order(const EnumeratedFamily& x, const EnumeratedFamily& y) {
    const auto& a = x.descriptor;
    const auto& b = y.descriptor;
    if (a.n() != b.n())
        return a.n() < b.n();
    if (a.degree != b.degree)
        return a.degree < b.degree;
    return a.weights < b.weights;
}

} // namespace detail

/// All families for the query, sorted by (n, d, weights).
inline std::vector<EnumeratedFamily> enumerate_families(const EnumerationQuery& q) {
    detail::check_query(q);
    detail::Search s{q, {}, {}, 1, 0};
    s.recurse();
    std::sort(s.out.begin(), s.out.end(), detail::family_order);
    return s.out;
}

/// Human-readable description of the search bounds in force.
inline std::vector<std::string> search_bounds(const EnumerationQuery& q) {
    std::vector<std::string> out;
    out.push_back("2 <= b_1 < ... < b_m pairwise coprime, m <= n+2");
    if (q.index) {
        const Int t = q.n + 2 - *q.index;
        out.push_back("T = n+2-I = " + std::to_string(t));
        out.push_back("b_1 <= T");
        out.push_back("b_pi - b_sigma + m <= T (non-decreasing under extension)");
        out.push_back("d = s + b_sigma - I with b_pi | d");
    } else {
        out.push_back("d = e * b_pi for e = 1 .. max_degree / b_pi");
    }
    if (q.max_degree)
        out.push_back("b_pi <= max_degree = " + std::to_string(*q.max_degree) + ", 2 b_m <= max_degree");
    if (q.max_weight)
        out.push_back("b_m <= max_weight = " + std::to_string(*q.max_weight));
    out.push_back("d >= 2 max(b_m, 1)");
    return out;
}

inline std::vector<EnumeratedFamily> enumerate_range(int n_lo, int n_hi, std::optional<Int> index,
                                                     std::optional<Int> max_degree = {},
                                                     std::optional<Int> max_weight = {}) {
    std::vector<EnumeratedFamily> out;
    for (int n = n_lo; n <= n_hi; ++n) {
        auto part = enumerate_families({n, index, max_degree, max_weight});
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

/// Reference enumerator: every sorted weight tuple of length n+2 with entries
/// <= max_weight and every d <= max_degree, filtered by validate().
inline std::vector<FamilyDescriptor> naive_enumerate(int n, Int max_weight, Int max_degree,
                                                     std::optional<Int> index = {}) {
    std::vector<FamilyDescriptor> out;
    const std::size_t len = static_cast<std::size_t>(n) + 2;
    std::vector<Int> w;
    auto rec = [&](auto& self, Int lo) -> void {
        if (w.size() == len) {
            if (!pairwise_coprime(w))
                return;
            WeightTuple wt(w);
            for (Int d = 1; d <= max_degree; ++d) {
                FamilyDescriptor f(wt, d);
                if (!validate(f).smooth_general_member)
                    continue;
                if (index && invariants(f).index != *index)
                    continue;
                out.push_back(f);
            }
            return;
        }
        for (Int a = lo; a <= max_weight; ++a) {
            w.push_back(a);
            self(self, a);
            w.pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), [](const FamilyDescriptor& a, const FamilyDescriptor& b) {
        return a.degree != b.degree ? a.degree < b.degree : a.weights < b.weights;
    });
    return out;
}

struct CensusRow {
    EnumeratedFamily family;
    Verdict verdict;
};

struct Census {
    std::vector<CensusRow> rows;
    std::map<std::string, int> by_outcome;
    std::map<std::string, int> by_primary_rule;

    std::vector<const CensusRow*> with_outcome(Outcome o) const {
        std::vector<const CensusRow*> out;
        for (const auto& r : rows)
            if (r.verdict.outcome == o)
                out.push_back(&r);
        return out;
    }
};

inline Census census(const std::vector<EnumeratedFamily>& families, const ClassifyOptions& opts = {}) {
    Census c;
    for (const auto& f : families) {
        auto v = classify(f.descriptor, opts);
        ++c.by_outcome[to_string(v.outcome)];
        if (v.primary_rule)
            ++c.by_primary_rule[to_string(*v.primary_rule)];
        c.rows.push_back({f, std::move(v)});
    }
    return c;
}

inline Census census(const EnumerationQuery& q, const ClassifyOptions& opts = {}) {
    return census(enumerate_families(q), opts);
}

struct DimensionBound {
    Int index = 0;
    Int explicit_bound = 0; // max{3I-2, 4I-2, 3I + 3(I-1)! - 2, N'_I}
    Int n_prime = 0;        // N'_I
    std::optional<Int> effective; // smallest n0 >= 3 with no exception on [n0, n0 + window]
    int window = 30;
    std::vector<int> exceptional_dimensions; // n < effective with a non-NSR family
};

/// N'_I: one more than the largest n carrying a valid family with d = a_pi
/// and index I, over tuples 2 <= b_1 < ... < b_m < I; 0 when there is none.
inline Int n_prime_bound(Int index) {
    if (index < 1)
        throw std::domain_error("N'_I needs I >= 1");
    Int best = -1;
    std::vector<Int> tuple;
    auto rec = [&](auto& self, Int lo, Int prod, Int sum) -> void {
        if (!tuple.empty()) {
            const Int s = index + prod - sum;
            if (s >= 0 && prod >= 2 * tuple.back()) {
                const Int n = s + static_cast<Int>(tuple.size()) - 2;
                best = std::max(best, n);
            }
        }
        for (Int b = lo; b < index; ++b)
            if (std::gcd(b, prod) == 1) {
                tuple.push_back(b);
                self(self, b + 1, checked::mul(prod, b), sum + b);
                tuple.pop_back();
            }
    };
    rec(rec, 2, 1, 0);
    return best < 0 ? 0 : best + 1;
}

inline DimensionBound n_bound(Int index, const ClassifyOptions& opts = {}, int window = 30) {
    if (index < 1)
        throw std::domain_error("n_bound needs I >= 1");
    DimensionBound out;
    out.index = index;
    out.window = window;
    Int fact = 1;
    for (Int k = 2; k <= index - 1; ++k)
        fact = checked::mul(fact, k);
    out.n_prime = n_prime_bound(index);
    out.explicit_bound = std::max({3 * index - 2, 4 * index - 2, checked::add(3 * index - 2, checked::mul(3, fact)),
                                   out.n_prime});

    std::map<int, bool> clean;
    auto is_clean = [&](int n) {
        auto it = clean.find(n);
        if (it != clean.end())
            return it->second;
        bool ok = true;
        for (const auto& f : enumerate_families({n, index, {}, {}}))
            if (classify(f.descriptor, opts).outcome != Outcome::NotStablyRational) {
                ok = false;
                break;
            }
        clean[n] = ok;
        return ok;
    };
    const Int cap = std::max<Int>(3, out.explicit_bound);
    for (int n0 = 3; n0 <= cap; ++n0) {
        bool ok = true;
        for (int n = n0; n <= n0 + window; ++n)
            if (!is_clean(n)) {
                ok = false;
                break;
            }
        if (ok) {
            out.effective = n0;
            break;
        }
    }
    for (const auto& [n, ok] : clean)
        if (!ok && (!out.effective || n < *out.effective))
            out.exceptional_dimensions.push_back(n);
    return out;
}

} // namespace wphyp
