#pragma once

/**
 * @file hypergeom.hpp
 * @brief Exact evaluation of terminating Gauss series 2F1(a, b; c; z) with
 *        rational parameters, and the Pfaff transformation
 *        2F1(a, b; c; z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)).
 */

#include "fibcheb/exact.hpp"

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace fibcheb {

/// Neither upper parameter is a nonpositive integer.
class NonTerminating : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// (c)_k vanishes before the series terminates.
class ZeroDenominator : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct Hypergeom2F1Spec {
    Rational a;
    Rational b;
    Rational c;
    Rational z;

    friend bool operator==(const Hypergeom2F1Spec&, const Hypergeom2F1Spec&) = default;
};

inline std::string to_string(const Hypergeom2F1Spec& s) {
    return "2F1(" + to_string(s.a) + ", " + to_string(s.b) + "; " + to_string(s.c) + "; " + to_string(s.z) + ")";
}

/// -r when r is a nonpositive integer.
inline std::optional<std::int64_t> nonpositive_integer_depth(const Rational& r) {
    if (!is_integer(r) || r > 0) return std::nullopt;
    Integer depth = -numerator(r);
    if (depth > Integer(std::numeric_limits<std::int32_t>::max())) throw std::domain_error("termination index too large");
    return static_cast<std::int64_t>(depth);
}

/// K = min{-a, -b} over the nonpositive-integer upper parameters.
inline std::optional<std::int64_t> termination_index(const Hypergeom2F1Spec& s) {
    auto ka = nonpositive_integer_depth(s.a);
    auto kb = nonpositive_integer_depth(s.b);
    if (ka && kb) return std::min(*ka, *kb);
    if (ka) return ka;
    return kb;
}

/// sum_{k=0}^{K} (a)_k (b)_k z^k / ((c)_k k!)
inline Rational eval_2f1(const Hypergeom2F1Spec& s) {
    auto K = termination_index(s);
    if (!K) throw NonTerminating("non-terminating series " + to_string(s));
    Rational sum = 0;
    Rational term = 1;
    for (std::int64_t k = 0;; ++k) {
        sum += term;
        if (k == *K) break;
        Rational den = s.c + k;
        if (den == 0) throw ZeroDenominator("(c)_k vanishes at k = " + std::to_string(k + 1) + " in " + to_string(s));
        term *= (s.a + k) * (s.b + k) * s.z / (den * (k + 1));
    }
    return sum;
}

inline Rational eval_2f1(const Rational& a, const Rational& b, const Rational& c, const Rational& z) {
    return eval_2f1(Hypergeom2F1Spec{a, b, c, z});
}

enum class FibRepresentation {
    ArgMinus4,  ///< 2F1((1-n)/2, (2-n)/2; 1-n; -4)
    Arg5,       ///< (n / 2^(n-1)) 2F1((1-n)/2, (2-n)/2; 3/2; 5)
};

inline Hypergeom2F1Spec fib_2f1_spec(std::int64_t n, FibRepresentation variant) {
    if (n < 1) throw std::invalid_argument("fib_as_2f1: n must be >= 1");
    Rational a(1 - n, 2);
    Rational b(2 - n, 2);
    if (variant == FibRepresentation::ArgMinus4) return {a, b, Rational(1 - n), Rational(-4)};
    return {a, b, Rational(3, 2), Rational(5)};
}

/// F_n written as a terminating 2F1 value.
inline Rational fib_as_2f1(std::int64_t n, FibRepresentation variant) {
    Rational series = eval_2f1(fib_2f1_spec(n, variant));
    if (variant == FibRepresentation::ArgMinus4) return series;
    return Rational(n) * pow2(1 - n) * series;
}

struct PfaffResult {
    Rational prefactor;
    Hypergeom2F1Spec spec;
};

/// (a, b; c; z) -> (1-z)^(-a) and (a, c-b; c; z/(z-1)). Requires a to be a
/// nonpositive integer so the prefactor is rational, and z != 1.
inline PfaffResult pfaff_transform(const Hypergeom2F1Spec& s) {
    auto depth = nonpositive_integer_depth(s.a);
    if (!depth) throw std::invalid_argument("pfaff_transform: a must be a nonpositive integer, got " + to_string(s.a));
    if (s.z == 1) throw std::invalid_argument("pfaff_transform: z must differ from 1");
    return {power(1 - s.z, *depth), Hypergeom2F1Spec{s.a, s.c - s.b, s.c, s.z / (s.z - 1)}};
}

}  // namespace fibcheb
