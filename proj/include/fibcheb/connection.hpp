#pragma once

/**
 * @file connection.hpp
 * @brief Connection coefficients between Fibonacci and Chebyshev polynomials.
 *
 * Four directions are supported:
 *
 *   T_in_F:  T_j     = j   sum_m (-1)^m C(j-m, j-2m) 2^(j-2m-1)/(j-m) 2F1(-m, j-m; j-2m+2; -4)        F_{j-2m+1}
 *   U_in_F:  U_j     = 2^j sum_m (-1)^(m+1) C(j, m) (2m-j-1)/(j-m+1) 2F1(-m, m-j-1; -j; -1/4)       F_{j-2m+1}
 *   F_in_T:  F_{j+1} =     sum_m C(j-m, j-2m) 2^(2m-j+1)/c_{j-2m}    2F1(-m, j-m+1; j-2m+1; -1/4)    T_{j-2m}
 *   F_in_U:  F_{j+1} = 2^-j sum_m C(j, m) (j-2m+1)/(j-m+1)          2F1(-m, m-j-1; -j; -4)          U_{j-2m}
 *
 * with m = 0 .. floor(j/2). The coefficients are generated term by term from
 * these formulas exactly as written, prefactor kept outside the sum. The
 * independent check is oracle_expand(), which converts any polynomial into a
 * degree-triangular basis by leading-term elimination.
 */

#include "fibcheb/exact.hpp"
#include "fibcheb/hypergeom.hpp"
#include "fibcheb/polynomial.hpp"
#include "fibcheb/sequences.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibcheb {

enum class ConnectionDirection { TInF, UInF, FInT, FInU };

inline constexpr std::array kAllDirections = {ConnectionDirection::TInF, ConnectionDirection::UInF,
                                              ConnectionDirection::FInT, ConnectionDirection::FInU};

/// CLI spelling: t-in-f, u-in-f, f-in-t, f-in-u.
inline const char* to_string(ConnectionDirection d) {
    switch (d) {
        case ConnectionDirection::TInF: return "t-in-f";
        case ConnectionDirection::UInF: return "u-in-f";
        case ConnectionDirection::FInT: return "f-in-t";
        case ConnectionDirection::FInU: return "f-in-u";
    }
    return "?";
}

inline ConnectionDirection parse_direction(std::string_view s) {
    for (auto d : kAllDirections) {
        if (s == to_string(d)) return d;
    }
    throw std::invalid_argument("unknown direction '" + std::string(s) + "'");
}

/// Family the expansion is written in.
inline SequenceKind target_kind(ConnectionDirection d) {
    switch (d) {
        case ConnectionDirection::TInF:
        case ConnectionDirection::UInF: return SequenceKind::FibonacciPoly;
        case ConnectionDirection::FInT: return SequenceKind::ChebyshevT;
        case ConnectionDirection::FInU: return SequenceKind::ChebyshevU;
    }
    return SequenceKind::FibonacciPoly;
}

/// Smallest valid source index: the Chebyshev-to-Fibonacci formulas start at j = 1.
inline std::int64_t min_source_index(ConnectionDirection d) {
    return target_kind(d) == SequenceKind::FibonacciPoly ? 1 : 0;
}

/// T_j, U_j, F_{j+1} or F_{j+1}.
inline const Polynomial& source_polynomial(std::int64_t j, ConnectionDirection d) {
    switch (d) {
        case ConnectionDirection::TInF: return chebyshev_t(j);
        case ConnectionDirection::UInF: return chebyshev_u(j);
        case ConnectionDirection::FInT:
        case ConnectionDirection::FInU: return fibonacci_poly(j + 1);
    }
    throw std::invalid_argument("unknown direction");
}

/// Index of the basis element carrying degree `degree` in `kind` (F_{d+1}, T_d, U_d).
inline std::int64_t basis_index_for_degree(SequenceKind kind, std::int64_t degree) {
    return kind == SequenceKind::FibonacciPoly ? degree + 1 : degree;
}

inline const Polynomial& basis_polynomial(SequenceKind kind, std::int64_t degree) {
    return sequence_poly(kind, basis_index_for_degree(kind, degree));
}

struct ExpansionTerm {
    std::int64_t m;
    std::int64_t target_index;   ///< n in F_n, T_n or U_n
    std::int64_t target_degree;  ///< degree of that basis element
    Rational coefficient;
};

struct CoefficientExpansion {
    std::int64_t source;
    ConnectionDirection direction;
    std::vector<ExpansionTerm> terms;  ///< ordered by m, i.e. by decreasing degree
};

/// Prefactor outside the sum: j, 2^j, 1 or 2^-j.
inline Rational outer_prefactor(ConnectionDirection d, std::int64_t j) {
    switch (d) {
        case ConnectionDirection::TInF: return Rational(j);
        case ConnectionDirection::UInF: return pow2(j);
        case ConnectionDirection::FInT: return Rational(1);
        case ConnectionDirection::FInU: return pow2(-j);
    }
    return Rational(1);
}

/// The m-th summand's scalar, excluding the outer prefactor.
inline Rational summand(ConnectionDirection d, std::int64_t j, std::int64_t m) {
    switch (d) {
        case ConnectionDirection::TInF:
            return sign_power(m) * Rational(binomial(j - m, j - 2 * m)) * pow2(j - 2 * m - 1) / (j - m) *
                   eval_2f1(Rational(-m), Rational(j - m), Rational(j - 2 * m + 2), Rational(-4));
        case ConnectionDirection::UInF:
            return sign_power(m + 1) * Rational(binomial(j, m)) * Rational(-j + 2 * m - 1, j - m + 1) *
                   eval_2f1(Rational(-m), Rational(-j + m - 1), Rational(-j), Rational(-1, 4));
        case ConnectionDirection::FInT:
            return 1 / c_normalizer(j - 2 * m) * Rational(binomial(j - m, j - 2 * m)) * pow2(-j + 2 * m + 1) *
                   eval_2f1(Rational(-m), Rational(j - m + 1), Rational(j - 2 * m + 1), Rational(-1, 4));
        case ConnectionDirection::FInU:
            return Rational(binomial(j, m)) * Rational(j - 2 * m + 1, j - m + 1) *
                   eval_2f1(Rational(-m), Rational(-j + m - 1), Rational(-j), Rational(-4));
    }
    throw std::invalid_argument("unknown direction");
}

/// Coefficient list of the source polynomial in the target basis.
inline CoefficientExpansion expand(std::int64_t j, ConnectionDirection d) {
    if (j < min_source_index(d)) {
        throw std::invalid_argument(std::string("expand(") + to_string(d) + "): j must be >= " +
                                    std::to_string(min_source_index(d)) + ", got " + std::to_string(j));
    }
    const SequenceKind kind = target_kind(d);
    const Rational prefactor = outer_prefactor(d, j);
    CoefficientExpansion out{j, d, {}};
    out.terms.reserve(static_cast<std::size_t>(j / 2 + 1));
    for (std::int64_t m = 0; m <= j / 2; ++m) {
        const std::int64_t degree = j - 2 * m;
        out.terms.push_back({m, basis_index_for_degree(kind, degree), degree, prefactor * summand(d, j, m)});
    }
    return out;
}

/// sum coefficient * basis(target), computed through the sequences module.
inline Polynomial reconstruct(const CoefficientExpansion& e) {
    const SequenceKind kind = target_kind(e.direction);
    Polynomial p;
    for (const auto& t : e.terms) p += sequence_poly(kind, t.target_index) * t.coefficient;
    return p;
}

struct BasisTerm {
    std::int64_t index;
    Rational coefficient;

    friend bool operator==(const BasisTerm&, const BasisTerm&) = default;
};

/// Expansion of p in a degree-triangular basis by top-down leading-term
/// elimination. Every degree from deg(p) down to 0 gets an entry, zeros included.
inline std::vector<BasisTerm> oracle_expand(const Polynomial& p, SequenceKind basis) {
    std::vector<BasisTerm> out;
    Polynomial rest = p;
    for (std::int64_t d = p.degree(); d >= 0; --d) {
        const Polynomial& element = basis_polynomial(basis, d);
        Rational coefficient = rest.coefficient(static_cast<std::size_t>(d)) / element.leading();
        if (coefficient != 0) rest -= element * coefficient;
        out.push_back({basis_index_for_degree(basis, d), std::move(coefficient)});
    }
    return out;
}

/// d_{j,m} = 2F1(-m, m-j-1; -j; -4)
inline Rational d_coefficient(std::int64_t j, std::int64_t m) {
    return eval_2f1(Rational(-m), Rational(-j + m - 1), Rational(-j), Rational(-4));
}

/// Exact value of
///   4 C(j-2,m-1)(j-2m+1)(j-m+1) d_{j-2,m-1} + C(j-1,m-1)(j-2m+2)(j-m) d_{j-1,m-1}
///   + C(j-1,m)(j-2m)(j-m+1) d_{j-1,m} - C(j,m)(j-m)(j-2m+1) d_{j,m}.
/// A d-value is only evaluated when its integer weight is nonzero.
inline Rational lemma_d_residual(std::int64_t j, std::int64_t m) {
    if (j < 2 || m < 0) throw std::invalid_argument("lemma_d_recurrence_check: need j >= 2 and m >= 0");
    auto weighted = [](const Integer& weight, std::int64_t dj, std::int64_t dm) {
        return weight == 0 ? Rational(0) : Rational(weight) * d_coefficient(dj, dm);
    };
    Rational r = 0;
    r += weighted(4 * binomial(j - 2, m - 1) * (j - 2 * m + 1) * (j - m + 1), j - 2, m - 1);
    r += weighted(binomial(j - 1, m - 1) * (j - 2 * m + 2) * (j - m), j - 1, m - 1);
    r += weighted(binomial(j - 1, m) * (j - 2 * m) * (j - m + 1), j - 1, m);
    r -= weighted(binomial(j, m) * (j - m) * (j - 2 * m + 1), j, m);
    return r;
}

inline bool lemma_d_recurrence_check(std::int64_t j, std::int64_t m) { return lemma_d_residual(j, m) == 0; }

}  // namespace fibcheb
