#pragma once

// Weighted projective space P(a_0,...,a_{n+1}): weight tuples, monomial bases
// of O(c), h^0 counts, singular strata and the affine chart models used by the
// jet oracles.

#include <algorithm>
#include <compare>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "arith.hpp"

namespace wphyp {

/// Sorted positive weights of P(a_0,...,a_{n+1}). Well-formedness is a
/// predicate here, not a construction invariant, so that invalid user input
/// can still be described.
class WeightTuple {
public:
    WeightTuple() = default;

    explicit WeightTuple(std::vector<Int> weights) : weights_(std::move(weights)) {
        if (weights_.size() < 2)
            throw std::invalid_argument("weight tuple needs at least two weights");
        for (Int a : weights_)
            if (a < 1)
                throw std::invalid_argument("weights must be positive integers");
        std::sort(weights_.begin(), weights_.end());
    }

    std::span<const Int> weights() const { return weights_; }
    const std::vector<Int>& vec() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    Int operator[](std::size_t i) const { return weights_[i]; }

    /// Dimension of a hypersurface in this space.
    int n() const { return static_cast<int>(weights_.size()) - 2; }

    Int sum() const {
        Int s = 0;
        for (Int a : weights_)
            s = checked::add(s, a);
        return s;
    }

    Int product() const {
        Int p = 1;
        for (Int a : weights_)
            p = checked::mul(p, a);
        return p;
    }

    Int max() const { return weights_.back(); }

    int count_ones() const {
        return static_cast<int>(std::count(weights_.begin(), weights_.end(), Int{1}));
    }

    bool well_formed() const {
        for (std::size_t skip = 0; skip < weights_.size(); ++skip) {
            Int g = 0;
            for (std::size_t i = 0; i < weights_.size(); ++i)
                if (i != skip)
                    g = std::gcd(g, weights_[i]);
            if (g != 1)
                return false;
        }
        return true;
    }

    auto operator<=>(const WeightTuple&) const = default;
    bool operator==(const WeightTuple&) const = default;

    std::string str() const {
        std::ostringstream os;
        os << "P(";
        for (std::size_t i = 0; i < weights_.size(); ++i)
            os << (i ? "," : "") << weights_[i];
        os << ")";
        return os.str();
    }

    /// Compact form, e.g. P(1^4,2).
    std::string compact() const {
        std::ostringstream os;
        os << "P(";
        for (std::size_t i = 0; i < weights_.size();) {
            std::size_t j = i;
            while (j < weights_.size() && weights_[j] == weights_[i])
                ++j;
            os << (i ? "," : "") << weights_[i];
            if (j - i > 1)
                os << "^" << (j - i);
            i = j;
        }
        os << ")";
        return os.str();
    }

private:
    std::vector<Int> weights_;
};

struct Monomial {
    std::vector<Int> exponents;
    Int weighted_degree = 0;

    bool operator==(const Monomial&) const = default;
};

namespace detail {

// reach[i][v]: v is a non-negative combination of weights[i..].
inline std::vector<std::vector<char>> suffix_reachability(const WeightTuple& w, Int c) {
    const std::size_t k = w.size();
    std::vector<std::vector<char>> reach(k + 1, std::vector<char>(static_cast<std::size_t>(c) + 1, 0));
    reach[k][0] = 1;
    for (std::size_t i = k; i-- > 0;) {
        const Int a = w[i];
        for (Int v = 0; v <= c; ++v)
            reach[i][v] = reach[i + 1][v] || (v >= a && reach[i][v - a]);
    }
    return reach;
}

} // namespace detail

/// Visits every exponent vector of weighted degree c in lexicographic order
/// with x_0 > x_1 > ... (largest exponent of x_0 first). The visitor returns
/// false to stop early; the function returns false iff it was stopped.
template <class Visitor>
bool for_each_monomial(const WeightTuple& w, Int c, Visitor&& visit) {
    if (c < 0)
        return true;
    const auto reach = detail::suffix_reachability(w, c);
    if (!reach[0][c])
        return true;
    const std::size_t k = w.size();
    Monomial m{std::vector<Int>(k, 0), c};

    auto rec = [&](auto& self, std::size_t i, Int remaining) -> bool {
        if (i + 1 == k) {
            m.exponents[i] = remaining / w[i];
            return visit(static_cast<const Monomial&>(m));
        }
        for (Int e = remaining / w[i]; e >= 0; --e) {
            Int rest = remaining - e * w[i];
            if (!reach[i + 1][rest])
                continue;
            m.exponents[i] = e;
            if (!self(self, i + 1, rest))
                return false;
        }
        m.exponents[i] = 0;
        return true;
    };
    return rec(rec, 0, c);
}

inline std::vector<Monomial> monomial_basis(const WeightTuple& w, Int c) {
    std::vector<Monomial> out;
    for_each_monomial(w, c, [&](const Monomial& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

/// Number of monomials of weighted degree c (coin-counting DP).
inline Int h0(const WeightTuple& w, Int c) {
    if (c < 0)
        return 0;
    std::vector<Int> ways(static_cast<std::size_t>(c) + 1, 0);
    ways[0] = 1;
    for (Int a : w.weights())
        for (Int v = a; v <= c; ++v)
            ways[v] = checked::add(ways[v], ways[v - a]);
    return ways[c];
}

struct SingularStratum {
    std::vector<int> index_set;
    Int stratum_gcd = 0;

    bool operator==(const SingularStratum&) const = default;
};

/// Maximal coordinate strata Pi_J with gcd{a_j : j in J} >= 2, ordered by J.
inline std::vector<SingularStratum> singular_strata(const WeightTuple& w) {
    std::vector<Int> candidates;
    for (Int a : w.weights())
        for (Int g = 2; g <= a; ++g)
            if (a % g == 0)
                candidates.push_back(g);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<SingularStratum> out;
    for (Int g : candidates) {
        SingularStratum s;
        Int common = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] % g == 0) {
                s.index_set.push_back(static_cast<int>(i));
                common = std::gcd(common, w[i]);
            }
        if (common != g)
            continue; // J_g is the maximal set of a larger gcd
        s.stratum_gcd = g;
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.index_set < b.index_set; });
    return out;
}

/// Affine chart of P: Unit(i) = {x_i != 0} with a_i = 1, or Pair(i, j) =
/// {x_i x_j != 0} with gcd(a_i, a_j) = 1.
struct ChartSpec {
    enum class Kind { Unit, Pair };
    Kind kind = Kind::Unit;
    int i = 0;
    int j = -1;

    static ChartSpec unit(int i) { return {Kind::Unit, i, -1}; }
    static ChartSpec pair(int i, int j) { return {Kind::Pair, i, j}; }

    bool operator==(const ChartSpec&) const = default;

    std::string str() const {
        return kind == Kind::Unit ? "Unit(" + std::to_string(i) + ")"
                                  : "Pair(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
};

struct BezoutPair {
    Int lambda;
    Int mu;
};

/// Smallest lambda >= 1 with lambda*a - mu*b = 1 for some mu >= 1.
inline BezoutPair minimal_bezout(Int a, Int b) {
    if (a < 1 || b < 1 || std::gcd(a, b) != 1)
        throw std::domain_error("minimal_bezout: weights must be positive and coprime");
    for (Int lambda = 1;; ++lambda) {
        Int t = checked::sub(checked::mul(lambda, a), 1);
        if (t % b == 0 && t / b >= 1)
            return {lambda, t / b};
    }
}

inline void check_chart(const WeightTuple& w, const ChartSpec& chart) {
    const int k = static_cast<int>(w.size());
    if (chart.i < 0 || chart.i >= k)
        throw std::domain_error("chart index out of range: " + chart.str());
    if (chart.kind == ChartSpec::Kind::Unit) {
        if (w[chart.i] != 1)
            throw std::domain_error("Unit chart needs a weight-1 coordinate: " + chart.str());
        return;
    }
    if (chart.j < 0 || chart.j >= k || chart.j == chart.i)
        throw std::domain_error("invalid pair chart: " + chart.str());
    if (std::gcd(w[chart.i], w[chart.j]) != 1)
        throw std::domain_error("pair chart needs coprime weights: " + chart.str());
}

/// Global indices of the affine coordinates x~_k of a chart (the u
/// coordinate of a pair chart is not listed).
inline std::vector<int> chart_coordinates(const WeightTuple& w, const ChartSpec& chart) {
    std::vector<int> coords;
    for (int k = 0; k < static_cast<int>(w.size()); ++k)
        if (k != chart.i && !(chart.kind == ChartSpec::Kind::Pair && k == chart.j))
            coords.push_back(k);
    return coords;
}

/// A monomial restricted to a chart: prod x~_k^{e_k} (times u^t on a pair chart).
struct LocalMonomial {
    std::vector<int> coordinates;
    std::vector<Int> exponents;
    bool has_u = false;
    Int u_exponent = 0;

    bool operator==(const LocalMonomial&) const = default;
};

/// On Unit(i) the coordinates are x~_k = x_k / x_i^{a_k}. On Pair(i, j), with
/// lambda*a_i - mu*a_j = 1 and Q = x_i^lambda x_j^-mu, they are x~_k = x_k / Q^{a_k}
/// and u = x_j^{a_i} / x_i^{a_j}; then x_i -> u^mu and x_j -> u^lambda, so the
/// u-exponent of m / Q^c is mu*e_i + lambda*e_j.
inline LocalMonomial chart_restriction(const WeightTuple& w, const Monomial& m, const ChartSpec& chart) {
    check_chart(w, chart);
    if (m.exponents.size() != w.size())
        throw std::domain_error("monomial length does not match weight tuple");
    LocalMonomial out;
    out.coordinates = chart_coordinates(w, chart);
    for (int k : out.coordinates)
        out.exponents.push_back(m.exponents[k]);
    if (chart.kind == ChartSpec::Kind::Pair) {
        const auto bz = minimal_bezout(w[chart.i], w[chart.j]);
        out.has_u = true;
        out.u_exponent = checked::add(checked::mul(bz.mu, m.exponents[chart.i]),
                                      checked::mul(bz.lambda, m.exponents[chart.j]));
    }
    return out;
}

/// Inverse of chart_restriction on Unit(i): x_i absorbs the remaining degree.
inline Monomial unit_chart_lift(const WeightTuple& w, const LocalMonomial& local, int i, Int c) {
    Monomial m{std::vector<Int>(w.size(), 0), c};
    Int used = 0;
    for (std::size_t t = 0; t < local.coordinates.size(); ++t) {
        m.exponents[local.coordinates[t]] = local.exponents[t];
        used = checked::add(used, checked::mul(local.exponents[t], w[local.coordinates[t]]));
    }
    if (used > c)
        throw std::domain_error("local monomial exceeds degree");
    m.exponents[i] = c - used;
    return m;
}

} // namespace wphyp
