#pragma once

// Exact integer utilities: gcds, coprimality, trial-division factorization and
// the two-generator coin representation N = k*a + l*b.

#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wphyp {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

} // namespace checked

/// Greatest common divisor of a non-empty list of positive integers.
inline Int gcd_all(std::span<const Int> values) {
    if (values.empty())
        throw std::invalid_argument("gcd_all: empty list");
    Int g = 0;
    for (Int v : values)
        g = std::gcd(g, v);
    return g;
}

inline bool pairwise_coprime(std::span<const Int> values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            if (std::gcd(values[i], values[j]) != 1)
                return false;
    return true;
}

inline bool is_prime(Int v) {
    if (v < 2)
        return false;
    for (Int p = 2; p <= v / p; ++p)
        if (v % p == 0)
            return false;
    return true;
}

inline Int smallest_prime_factor(Int v) {
    if (v < 2)
        throw std::domain_error("smallest_prime_factor: argument must be >= 2, got " + std::to_string(v));
    for (Int p = 2; p <= v / p; ++p)
        if (v % p == 0)
            return p;
    return v;
}

struct PrimePower {
    Int prime;
    int exponent;
    bool operator==(const PrimePower&) const = default;
};

struct Factorization {
    Int value;
    std::vector<PrimePower> factors; // primes strictly increasing

    Int product() const {
        Int r = 1;
        for (const auto& f : factors)
            for (int e = 0; e < f.exponent; ++e)
                r = checked::mul(r, f.prime);
        return r;
    }
};

inline Factorization factorize(Int value) {
    if (value < 1)
        throw std::domain_error("factorize: argument must be positive");
    Factorization out{value, {}};
    Int rest = value;
    for (Int p = 2; p <= rest / p; ++p) {
        if (rest % p != 0)
            continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        out.factors.push_back({p, e});
    }
    if (rest > 1)
        out.factors.push_back({rest, 1});
    return out;
}

/// Non-negative (k, l) with N = k*a + l*b and l minimal, or nullopt when N is
/// not in the semigroup generated by a and b. Requires gcd(a, b) = 1.
/// Always present for N >= (a-1)(b-1).
inline std::optional<std::pair<Int, Int>> two_coin_representation(Int a, Int b, Int N) {
    if (a < 1 || b < 1)
        throw std::domain_error("two_coin_representation: generators must be positive");
    if (N < 0)
        throw std::domain_error("two_coin_representation: N must be non-negative");
    if (std::gcd(a, b) != 1)
        throw std::domain_error("two_coin_representation: generators must be coprime");
    if (a == 1)
        return std::pair{N, Int{0}};
    // Residues of N - l*b mod a are distinct for l in [0, a), so the minimal l
    // lies in that range whenever any representation exists.
    for (Int l = 0; l < a; ++l) {
        Int rest = checked::sub(N, checked::mul(l, b));
        if (rest < 0)
            return std::nullopt;
        if (rest % a == 0)
            return std::pair{rest / a, l};
    }
    return std::nullopt;
}

} // namespace wphyp
