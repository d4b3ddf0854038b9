#pragma once

/**
 * @file integrals.hpp
 * @brief Weighted integrals over (-1, 1) against the Chebyshev weights
 *        1/sqrt(1-x^2) and sqrt(1-x^2), as exact rational multiples of pi.
 *
 * Two exact routes (monomial moments, Chebyshev expansion + orthogonality)
 * and one floating-point route (Gauss-Chebyshev quadrature). The closed forms
 * for products of Fibonacci and Chebyshev polynomials are evaluated alongside
 * and reported; the moment route is always the returned value.
 */

#include "fibcheb/connection.hpp"
#include "fibcheb/exact.hpp"
#include "fibcheb/hypergeom.hpp"
#include "fibcheb/polynomial.hpp"
#include "fibcheb/report.hpp"
#include "fibcheb/sequences.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace fibcheb {

enum class ChebyshevWeight {
    FirstKind,   ///< 1/sqrt(1-x^2)
    SecondKind,  ///< sqrt(1-x^2)
};

/// int x^(2n) w(x) dx / pi: (2n-1)!!/(2n)!! or (2n-1)!!/(2n+2)!!
inline Rational even_moment(std::int64_t n, ChebyshevWeight w) {
    const Integer top = double_factorial(2 * n - 1);
    return w == ChebyshevWeight::FirstKind ? Rational(top, double_factorial(2 * n)) : Rational(top, double_factorial(2 * n + 2));
}

inline PiMultiple weighted_integral_by_moments(const Polynomial& p, ChebyshevWeight w) {
    Rational total = 0;
    auto c = p.coefficients();
    for (std::size_t e = 0; e < c.size(); e += 2) {
        if (c[e] != 0) total += c[e] * even_moment(static_cast<std::int64_t>(e / 2), w);
    }
    return {total};
}

/// Expands p in T_n (first kind) or U_n (second kind); only the constant
/// basis element survives: int T_0 w = pi, int U_0 w = pi/2.
inline PiMultiple weighted_integral_by_expansion(const Polynomial& p, ChebyshevWeight w) {
    if (p.is_zero()) return {Rational(0)};
    const auto terms =
        oracle_expand(p, w == ChebyshevWeight::FirstKind ? SequenceKind::ChebyshevT : SequenceKind::ChebyshevU);
    const Rational& constant = terms.back().coefficient;
    return {w == ChebyshevWeight::FirstKind ? constant : constant / 2};
}

/// Exact value of int_{-1}^{1} p(x) w(x) dx.
inline PiMultiple oracle_weighted_integral(const Polynomial& p, ChebyshevWeight w) {
    return weighted_integral_by_moments(p, w);
}

/// Gauss-Chebyshev quadrature of the matching kind with `nodes` points; exact
/// for degree <= 2*nodes - 1, so fewer nodes than that is rejected.
template <class Real = double>
Real gauss_chebyshev(const Polynomial& p, ChebyshevWeight w, int nodes) {
    using std::cos;
    using std::sin;
    if (nodes < 1 || 2 * static_cast<std::int64_t>(nodes) - 1 < p.degree()) {
        throw std::invalid_argument("gauss_chebyshev: " + std::to_string(nodes) + " nodes cannot integrate degree " +
                                    std::to_string(p.degree()) + " exactly");
    }
    const Real pi = boost::math::constants::pi<Real>();
    Real sum = 0;
    if (w == ChebyshevWeight::FirstKind) {
        for (int i = 1; i <= nodes; ++i) sum += evaluate_approx(p, Real(cos(Real(2 * i - 1) * pi / Real(2 * nodes))));
        return sum * pi / Real(nodes);
    }
    for (int i = 1; i <= nodes; ++i) {
        const Real t = Real(i) * pi / Real(nodes + 1);
        const Real s = sin(t);
        sum += s * s * evaluate_approx(p, Real(cos(t)));
    }
    return sum * pi / Real(nodes + 1);
}

/// Quadrature working type. Products such as F_31 T_30 have monomial
/// coefficients near 1e11 while their integral is near 1e-9, so double
/// evaluation cannot resolve them; 50 significant digits can.
using QuadratureReal = boost::multiprecision::cpp_bin_float_50;

inline constexpr double kQuadratureRelTolerance = 1e-9;

inline int quadrature_nodes_for(const Polynomial& p) { return std::max(1, (p.degree() + 2) / 2); }

/// Quadrature value of the integral, rounded to double.
inline double quadrature_check(const Polynomial& p, ChebyshevWeight w, int nodes) {
    return static_cast<double>(gauss_chebyshev<QuadratureReal>(p, w, nodes));
}

/// |approx - exact| / |exact|, or |approx - exact| when exact is zero.
/// Both sides carried at QuadratureReal precision.
inline double quadrature_relative_error(const Polynomial& p, ChebyshevWeight w, const PiMultiple& exact) {
    const QuadratureReal approx = gauss_chebyshev<QuadratureReal>(p, w, quadrature_nodes_for(p));
    const QuadratureReal value = QuadratureReal(numerator(exact.coefficient)) / QuadratureReal(denominator(exact.coefficient)) *
                                 boost::math::constants::pi<QuadratureReal>();
    const QuadratureReal diff = abs(approx - value);
    return static_cast<double>(value == 0 ? diff : diff / abs(value));
}

struct IntegralResult {
    PiMultiple value;  ///< oracle value
    IdentityReport report;
};

namespace detail {

inline void require_j_ge_k(std::int64_t j, std::int64_t k, const char* what) {
    if (k < 0 || j < k) throw std::invalid_argument(std::string(what) + ": need j >= k >= 0");
}

inline std::vector<Param> jk_params(std::int64_t j, std::int64_t k) { return {{"j", Rational(j)}, {"k", Rational(k)}}; }

/// F-in-T coefficient of T_{j-2m} in F_{j+1}.
inline Rational fint_coefficient(std::int64_t j, std::int64_t m) {
    return 1 / c_normalizer(j - 2 * m) * Rational(binomial(j - m, j - 2 * m)) * pow2(-j + 2 * m + 1) *
           eval_2f1(Rational(-m), Rational(j - m + 1), Rational(j - 2 * m + 1), Rational(-1, 4));
}

/// F-in-U coefficient of U_{j-2m} in F_{j+1}.
inline Rational finu_coefficient(std::int64_t j, std::int64_t m) {
    return pow2(-j) * Rational(binomial(j, m)) * Rational(j - 2 * m + 1, j - m + 1) * d_coefficient(j, m);
}

}  // namespace detail

/// int F_{j+1} T_k / sqrt(1-x^2). Printed closed form for j+k even:
///   pi C((j+k)/2, k) / (2^k c_k) 2F1((k-j)/2, (j+k+2)/2; k+1; -1/4)
/// The reference drops the 1/c_k, which the orthogonality norm (pi/2) c_k cancels.
inline IntegralResult integral_fib_chebT(std::int64_t j, std::int64_t k) {
    detail::require_j_ge_k(j, k, "integral_fib_chebT");
    const PiMultiple oracle = oracle_weighted_integral(fibonacci_poly(j + 1) * chebyshev_t(k), ChebyshevWeight::FirstKind);
    PiMultiple printed{Rational(0)};
    PiMultiple reference{Rational(0)};
    if ((j + k) % 2 == 0) {
        const Rational base = Rational(binomial((j + k) / 2, k)) / pow2(k) *
                              eval_2f1(Rational(k - j, 2), Rational(j + k + 2, 2), Rational(k + 1), Rational(-1, 4));
        printed = {base / c_normalizer(k)};
        reference = {base};
    }
    return {oracle, make_report("int-FT", detail::jk_params(j, k), oracle, printed, reference)};
}

/// int sqrt(1-x^2) F_{j+1} U_k. Printed closed form for j+k even:
///   pi C(j, (j-k)/2) (k+1) / (2^j (j+k+2)) 2F1((k-j)/2, -(j+k+2)/2; -j; -4)
inline IntegralResult integral_fib_chebU(std::int64_t j, std::int64_t k) {
    detail::require_j_ge_k(j, k, "integral_fib_chebU");
    const PiMultiple oracle = oracle_weighted_integral(fibonacci_poly(j + 1) * chebyshev_u(k), ChebyshevWeight::SecondKind);
    PiMultiple printed{Rational(0)};
    if ((j + k) % 2 == 0) {
        printed = {Rational(binomial(j, (j - k) / 2)) * Rational(k + 1) / (pow2(j) * (j + k + 2)) *
                   eval_2f1(Rational(k - j, 2), Rational(-(j + k + 2), 2), Rational(-j), Rational(-4))};
    }
    return {oracle, make_report("int-FU", detail::jk_params(j, k), oracle, printed)};
}

/// How to read the undefined factor d_m in the first-kind product formula.
enum class DmInterpretation {
    Undefined,   ///< leave the printed formula unevaluated
    NormalizerK, ///< d_m = c_{k-2m}, which reproduces the integral when j = k
};

/// int F_{j+1} F_{k+1} w. The printed formulas pair the m-th terms of both
/// expansions, i.e. degrees j-2m and k-2m, which only line up when j = k. The
/// reference pairs degree-matched terms instead (m with m + (j-k)/2).
inline IntegralResult integral_fib_fib(std::int64_t j, std::int64_t k, ChebyshevWeight w,
                                       DmInterpretation dm = DmInterpretation::Undefined) {
    detail::require_j_ge_k(j, k, "integral_fib_fib");
    const PiMultiple oracle = oracle_weighted_integral(fibonacci_poly(j + 1) * fibonacci_poly(k + 1), w);
    const std::int64_t shift = (j - k) / 2;
    const bool paired = (j + k) % 2 == 0;

    if (w == ChebyshevWeight::SecondKind) {
        Rational printed = 0;
        Rational reference = 0;
        for (std::int64_t m = 0; m <= k / 2; ++m) {
            printed += Rational(binomial(j, m) * binomial(k, m)) *
                       Rational((k - 2 * m + 1) * (j - 2 * m + 1), (k - m + 1) * (j - m + 1)) * d_coefficient(k, m) *
                       d_coefficient(j, m);
            if (paired) reference += detail::finu_coefficient(k, m) * detail::finu_coefficient(j, m + shift);
        }
        printed /= pow2(k + j + 1);
        reference /= 2;
        return {oracle, make_report("int-FF2", detail::jk_params(j, k), oracle, PiMultiple{printed}, PiMultiple{reference})};
    }

    Rational reference = 0;
    if (paired) {
        for (std::int64_t m = 0; m <= k / 2; ++m) {
            reference +=
                detail::fint_coefficient(k, m) * detail::fint_coefficient(j, m + shift) * c_normalizer(k - 2 * m) / 2;
        }
    }
    Value printed = std::monostate{};
    std::string note = "d_m undefined; printed form not evaluated";
    if (dm == DmInterpretation::NormalizerK) {
        Rational s = 0;
        for (std::int64_t m = 0; m <= k / 2; ++m) {
            s += pow2(4 * m) * c_normalizer(k - 2 * m) * Rational(binomial(j - m, j - 2 * m) * binomial(k - m, k - 2 * m)) /
                 (c_normalizer(k - 2 * m) * c_normalizer(j - 2 * m)) *
                 eval_2f1(Rational(-m), Rational(k - m + 1), Rational(k - 2 * m + 1), Rational(-1, 4)) *
                 eval_2f1(Rational(-m), Rational(j - m + 1), Rational(j - 2 * m + 1), Rational(-1, 4));
        }
        printed = PiMultiple{s / pow2(k + j - 1)};
        note = "d_m read as c_{k-2m}";
    }
    return {oracle, make_report("int-FF1", detail::jk_params(j, k), oracle, printed, PiMultiple{reference}, note)};
}

}  // namespace fibcheb
