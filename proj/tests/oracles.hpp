#pragma once

// Test-only reference computations, deliberately written along different
// paths from the library code they check.

#include "fibcheb/exact.hpp"
#include "fibcheb/polynomial.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace fibcheb::oracle {

/// k! computed directly.
inline Integer factorial(int k) {
    Integer r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

/// Plain product a (a+1) ... (a+k-1), no early exit.
inline Rational rising(const Rational& a, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= a + i;
    return r;
}

/// Term-by-term 2F1 sum up to `upper`, each term rebuilt from Pochhammer products.
/// Terms with (a)_k (b)_k = 0 are skipped before the denominator is formed.
inline Rational hyp2f1_sum(const Rational& a, const Rational& b, const Rational& c, const Rational& z, int upper) {
    Rational s = 0;
    for (int k = 0; k <= upper; ++k) {
        Rational top = rising(a, k) * rising(b, k);
        if (top == 0) continue;
        s += top * power(z, k) / (rising(c, k) * Rational(factorial(k)));
    }
    return s;
}

/// Pascal-triangle binomial table row n (independent of the multiplicative formula).
inline std::vector<Integer> pascal_row(int n) {
    std::vector<Integer> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<Integer> next(static_cast<std::size_t>(i + 1));
        next[0] = next[static_cast<std::size_t>(i)] = 1;
        for (int k = 1; k < i; ++k) next[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)] + row[static_cast<std::size_t>(k)];
        row = std::move(next);
    }
    return row;
}

/// Random rational with small numerator and denominator.
inline Rational random_rational(std::mt19937_64& rng, int bound = 40) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    return Rational(num(rng), den(rng));
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int max_degree = 8) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> c(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& v : c) v = random_rational(rng, 12);
    return Polynomial(std::move(c));
}

}  // namespace fibcheb::oracle
