#pragma once

// Exact rank computations over Q. Rows are scaled to primitive integer vectors
// first (row scaling does not change rank), then eliminated fraction-free.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace wphyp {

using RationalRow = std::vector<mpq_class>;
using IntegerRow = std::vector<mpz_class>;

/// Multiplies a rational row by the lcm of its denominators and divides out
/// the content.
inline IntegerRow clear_denominators(const RationalRow& row) {
    mpz_class l = 1;
    for (const auto& q : row)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntegerRow out(row.size());
    mpz_class g = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
        out[j] = row[j].get_num() * (l / row[j].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[j].get_mpz_t());
    }
    if (g > 1)
        for (auto& v : out)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return out;
}

/// Bareiss elimination with column skipping; every intermediate entry is a
/// minor of the input, so the divisions are exact.
inline std::size_t bareiss_rank(std::vector<IntegerRow> m) {
    if (m.empty())
        return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    for (const auto& r : m)
        if (r.size() != cols)
            throw std::invalid_argument("bareiss_rank: ragged matrix");

    std::size_t rank = 0;
    mpz_class prev = 1;
    mpz_class t;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[rank]);
        const mpz_class& p = m[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                t = p * m[i][j] - m[i][col] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

inline std::size_t rank_of(const std::vector<RationalRow>& m) {
    std::vector<IntegerRow> rows;
    rows.reserve(m.size());
    for (const auto& r : m)
        rows.push_back(clear_denominators(r));
    return bareiss_rank(std::move(rows));
}

/// Reference rank by plain Gaussian elimination over Q (test oracle).
inline std::size_t gaussian_rank(std::vector<RationalRow> m) {
    if (m.empty())
        return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col] == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0)
                continue;
            mpq_class f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// Incremental row echelon form: rows are added one at a time and reduced
/// against the basis so far. Basis rows are stored primitive; each one is zero
/// in the pivot columns of all earlier rows.
class FractionFreeEchelon {
public:
    explicit FractionFreeEchelon(std::size_t cols) : cols_(cols) {}

    std::size_t rank() const { return basis_.size(); }
    std::size_t cols() const { return cols_; }
    bool full() const { return basis_.size() == cols_; }

    /// Returns true iff the row increased the rank.
    bool add(const RationalRow& row) {
        if (row.size() != cols_)
            throw std::invalid_argument("FractionFreeEchelon: row length mismatch");
        if (full())
            return false;
        IntegerRow v = clear_denominators(row);
        mpz_class a, b;
        for (std::size_t k = 0; k < basis_.size(); ++k) {
            const std::size_t pc = pivots_[k];
            if (v[pc] == 0)
                continue;
            const IntegerRow& br = basis_[k];
            a = br[pc];
            b = v[pc];
            for (std::size_t j = 0; j < cols_; ++j)
                v[j] = a * v[j] - b * br[j];
            make_primitive(v);
        }
        std::size_t lead = 0;
        while (lead < cols_ && v[lead] == 0)
            ++lead;
        if (lead == cols_)
            return false;
        basis_.push_back(std::move(v));
        pivots_.push_back(lead);
        return true;
    }

private:
    static void make_primitive(IntegerRow& v) {
        mpz_class g = 0;
        for (const auto& x : v)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g > 1)
            for (auto& x : v)
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }

    std::size_t cols_;
    std::vector<IntegerRow> basis_;
    std::vector<std::size_t> pivots_;
};

} // namespace wphyp
