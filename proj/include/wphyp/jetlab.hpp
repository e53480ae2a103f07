#pragma once

// Jet evaluation matrices of H^0(P, O(c)) at chart points and the sampled
// checks of the two restriction-map lemmas. Everything is exact over Q.
//
// Sampling is a verification on random points, not a proof over all points.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "exact.hpp"
#include "wps.hpp"

namespace wphyp {

struct ChartPoint {
    ChartSpec chart;
    std::vector<mpq_class> coordinates; // chart_coordinates order, then u for a pair chart
    bool in_delta = false;
};

/// Delta = intersection of {x_i = 0} over weight-1 coordinates.
inline bool point_in_delta(const WeightTuple& w, const ChartSpec& chart, const std::vector<mpq_class>& coords) {
    if (chart.kind == ChartSpec::Kind::Unit)
        return false; // x_i = 1 there and a_i = 1
    if (w[chart.i] == 1 || w[chart.j] == 1)
        return false;
    const auto idx = chart_coordinates(w, chart);
    for (std::size_t t = 0; t < idx.size(); ++t)
        if (w[idx[t]] == 1 && coords[t] != 0)
            return false;
    return true;
}

inline ChartPoint make_chart_point(const WeightTuple& w, const ChartSpec& chart, std::vector<mpq_class> coords) {
    check_chart(w, chart);
    std::size_t expected = chart_coordinates(w, chart).size() + (chart.kind == ChartSpec::Kind::Pair ? 1 : 0);
    if (coords.size() != expected)
        throw std::domain_error("chart point has " + std::to_string(coords.size()) + " coordinates, expected " +
                                std::to_string(expected));
    if (chart.kind == ChartSpec::Kind::Pair && coords.back() == 0)
        throw std::domain_error("u coordinate of a pair chart point must be nonzero");
    ChartPoint p{chart, std::move(coords), false};
    p.in_delta = point_in_delta(w, chart, p.coordinates);
    return p;
}

using MultiIndex = std::vector<int>;

/// All multi-indices in `vars` variables with total degree <= l, by degree
/// then lexicographically descending.
inline std::vector<MultiIndex> jet_columns(int vars, int l) {
    std::vector<MultiIndex> out;
    MultiIndex a(static_cast<std::size_t>(vars), 0);
    for (int deg = 0; deg <= l; ++deg) {
        auto rec = [&](auto& self, int pos, int left) -> void {
            if (pos + 1 == vars) {
                a[pos] = left;
                out.push_back(a);
                return;
            }
            for (int v = left; v >= 0; --v) {
                a[pos] = v;
                self(self, pos + 1, left - v);
            }
        };
        if (vars == 0) {
            if (deg == 0)
                out.emplace_back();
            continue;
        }
        rec(rec, 0, deg);
    }
    return out;
}

struct JetMatrix {
    std::vector<Monomial> rows;
    std::vector<MultiIndex> columns;
    std::vector<RationalRow> entries;
    std::size_t rank = 0;
};

namespace detail {

inline mpz_class binom(Int n, int k) {
    if (k < 0 || k > n)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline mpq_class qpow(const mpq_class& q, Int e) {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.canonicalize();
    return r;
}

/// Local exponents of m on the chart, u-exponent last for a pair chart.
inline std::vector<Int> local_exponents(const WeightTuple& w, const Monomial& m, const ChartSpec& chart) {
    auto lm = chart_restriction(w, m, chart);
    if (lm.has_u)
        lm.exponents.push_back(lm.u_exponent);
    return lm.exponents;
}

/// Taylor coefficients of prod (q_k + y_k)^{e_k} at the given multi-indices.
/// With `normalized` the row is divided by prod_{q_k != 0} q_k^{e_k}, which
/// keeps the numbers small and does not change the rank.
inline RationalRow jet_row(const std::vector<Int>& e, const std::vector<mpq_class>& q,
                           const std::vector<MultiIndex>& columns, bool normalized) {
    RationalRow row;
    row.reserve(columns.size());
    for (const auto& alpha : columns) {
        mpq_class v = 1;
        for (std::size_t k = 0; k < e.size() && v != 0; ++k) {
            const int a = alpha[k];
            if (a > e[k]) {
                v = 0;
                break;
            }
            v *= mpq_class(binom(e[k], a));
            if (q[k] == 0) {
                if (e[k] != a)
                    v = 0;
            } else if (normalized) {
                if (a > 0)
                    v /= qpow(q[k], a);
            } else {
                v *= qpow(q[k], e[k] - a);
            }
        }
        row.push_back(v);
    }
    return row;
}

inline int chart_vars(const WeightTuple& w, const ChartSpec& chart) {
    return static_cast<int>(chart_coordinates(w, chart).size()) + (chart.kind == ChartSpec::Kind::Pair ? 1 : 0);
}

} // namespace detail

/// Taylor coefficients up to order l at the point of every degree-c monomial.
/// Pair charts support l = 1 only.
inline JetMatrix jet_matrix(const WeightTuple& w, Int c, const ChartPoint& pt, int l) {
    check_chart(w, pt.chart);
    if (l < 1)
        throw std::domain_error("jet order must be positive");
    if (pt.chart.kind == ChartSpec::Kind::Pair && l != 1)
        throw std::domain_error("pair charts support only first-order jets");
    const int vars = detail::chart_vars(w, pt.chart);
    if (static_cast<int>(pt.coordinates.size()) != vars)
        throw std::domain_error("chart point has the wrong number of coordinates");
    JetMatrix jm;
    jm.columns = jet_columns(vars, l);
    jm.rows = monomial_basis(w, c);
    for (const auto& m : jm.rows)
        jm.entries.push_back(detail::jet_row(detail::local_exponents(w, m, pt.chart), pt.coordinates, jm.columns, false));
    jm.rank = rank_of(jm.entries);
    return jm;
}

/// Rank of the jet map, streaming monomials in descending lex order and
/// stopping as soon as `target` (default: column count) is reached.
inline std::size_t jet_rank(const WeightTuple& w, Int c, const ChartPoint& pt, int l,
                            std::optional<std::size_t> target = {}) {
    check_chart(w, pt.chart);
    const int vars = detail::chart_vars(w, pt.chart);
    const auto columns = jet_columns(vars, l);
    const std::size_t goal = target.value_or(columns.size());
    FractionFreeEchelon ech(columns.size());
    for_each_monomial(w, c, [&](const Monomial& m) {
        ech.add(detail::jet_row(detail::local_exponents(w, m, pt.chart), pt.coordinates, columns, true));
        return ech.rank() < goal;
    });
    return ech.rank();
}

// Sampling.

class PointSampler {
public:
    explicit PointSampler(std::uint64_t seed) : rng_(seed) {}

    /// Nonzero rational with |num| <= 20 and 1 <= den <= 7.
    mpq_class nonzero() {
        const auto r = static_cast<long>(rng_() % 40);
        const long num = r < 20 ? r - 20 : r - 19;
        const long den = 1 + static_cast<long>(rng_() % 7);
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }

private:
    std::mt19937_64 rng_;
};

struct JetRecord {
    std::vector<Int> tuple;
    Int c = 0;
    int l = 1;
    std::string chart;
    std::vector<std::string> point;
    std::size_t rank = 0;
    std::size_t expected = 0;
    bool pass = false;
};

struct JetReport {
    std::string lemma;
    bool skipped = false;
    std::string skip_reason;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<JetRecord> records;

    std::size_t failures() const {
        std::size_t f = 0;
        for (const auto& r : records)
            f += r.pass ? 0 : 1;
        return f;
    }
    bool passed() const { return !skipped && failures() == 0; }
};

namespace detail {

inline std::vector<std::string> point_strings(const std::vector<mpq_class>& q) {
    std::vector<std::string> out;
    for (const auto& v : q)
        out.push_back(v.get_str());
    return out;
}

inline JetRecord sample_record(const WeightTuple& w, Int c, int l, const ChartPoint& pt, std::size_t expected,
                               bool at_least) {
    JetRecord rec;
    rec.tuple = w.vec();
    rec.c = c;
    rec.l = l;
    rec.chart = pt.chart.str();
    rec.point = point_strings(pt.coordinates);
    rec.expected = expected;
    rec.rank = jet_rank(w, c, pt, l, expected);
    rec.pass = at_least ? rec.rank >= expected : rec.rank == expected;
    return rec;
}

inline std::uint64_t trial_seed(std::uint64_t seed, int trial) { return seed + static_cast<std::uint64_t>(trial); }

inline std::vector<mpq_class> random_point(PointSampler& s, int vars) {
    std::vector<mpq_class> q;
    for (int k = 0; k < vars; ++k)
        q.push_back(s.nonzero());
    return q;
}

} // namespace detail

/// Surjectivity of rest^{l+1} on every Unit chart at random points with nonzero
/// coordinates, under c >= l a_max.
inline JetReport verify_restP1(const WeightTuple& w, Int c, int l, int trials, std::uint64_t seed = 0) {
    JetReport rep{"restP-1", false, "", seed, trials, {}};
    if (w.count_ones() == 0) {
        rep.skipped = true;
        rep.skip_reason = "no weight equal to 1";
        return rep;
    }
    if (l < 1 || c < checked::mul(l, w.max())) {
        rep.skipped = true;
        rep.skip_reason = "c < l a_max";
        return rep;
    }
    for (int t = 0; t < trials; ++t) {
        PointSampler s(detail::trial_seed(seed, t));
        for (int i = 0; i < static_cast<int>(w.size()); ++i) {
            if (w[i] != 1)
                continue;
            const auto chart = ChartSpec::unit(i);
            const auto pt = make_chart_point(w, chart, detail::random_point(s, detail::chart_vars(w, chart)));
            const auto expected = jet_columns(detail::chart_vars(w, chart), l).size();
            rep.records.push_back(detail::sample_record(w, c, l, pt, expected, false));
        }
    }
    return rep;
}

/// Surjectivity of rest^2 at random smooth points (Unit charts and pair
/// charts of two weights > 1) when the weights are pairwise coprime and a_pi | c.
inline JetReport verify_restP2(const WeightTuple& w, Int c, int trials, std::uint64_t seed = 0) {
    JetReport rep{"restP-2", false, "", seed, trials, {}};
    if (!pairwise_coprime(w.weights())) {
        rep.skipped = true;
        rep.skip_reason = "weights not pairwise coprime";
        return rep;
    }
    if (c < 1 || c % w.product() != 0) {
        rep.skipped = true;
        rep.skip_reason = "a_pi does not divide c";
        return rep;
    }
    const std::size_t expected = static_cast<std::size_t>(w.n()) + 2;
    const int k = static_cast<int>(w.size());
    for (int t = 0; t < trials; ++t) {
        PointSampler s(detail::trial_seed(seed, t));
        for (int i = 0; i < k; ++i) {
            if (w[i] == 1) {
                const auto chart = ChartSpec::unit(i);
                const auto pt = make_chart_point(w, chart, detail::random_point(s, detail::chart_vars(w, chart)));
                rep.records.push_back(detail::sample_record(w, c, 1, pt, expected, false));
                continue;
            }
            for (int j = i + 1; j < k; ++j) {
                if (w[j] == 1)
                    continue;
                const auto chart = ChartSpec::pair(i, j);
                const auto pt = make_chart_point(w, chart, detail::random_point(s, detail::chart_vars(w, chart)));
                rep.records.push_back(detail::sample_record(w, c, 1, pt, expected, false));
            }
        }
    }
    return rep;
}

/// The image of rest^2 has dimension >= r+1 at points of a pair chart lying
/// in Delta, for c > (a_i-1)(a_j-1). Only Delta is sampled; nothing is
/// claimed off Delta.
inline JetReport verify_restP_delta(const WeightTuple& w, Int c, int trials, std::uint64_t seed = 0) {
    JetReport rep{"restP-2-delta", false, "", seed, trials, {}};
    const int k = static_cast<int>(w.size());
    const std::size_t expected = static_cast<std::size_t>(w.count_ones()); // r + 1
    for (int t = 0; t < trials; ++t) {
        PointSampler s(detail::trial_seed(seed, t));
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                if (w[i] == 1 || w[j] == 1 || std::gcd(w[i], w[j]) != 1)
                    continue;
                if (c <= checked::mul(w[i] - 1, w[j] - 1))
                    continue;
                const auto chart = ChartSpec::pair(i, j);
                const auto idx = chart_coordinates(w, chart);
                std::vector<mpq_class> q;
                for (int g : idx)
                    q.push_back(w[g] == 1 ? mpq_class(0) : s.nonzero());
                q.push_back(s.nonzero());
                const auto pt = make_chart_point(w, chart, std::move(q));
                rep.records.push_back(detail::sample_record(w, c, 1, pt, expected, true));
            }
    }
    if (rep.records.empty()) {
        rep.skipped = true;
        rep.skip_reason = "no coprime pair of weights > 1 with c > (a_i-1)(a_j-1)";
    }
    return rep;
}

} // namespace wphyp
