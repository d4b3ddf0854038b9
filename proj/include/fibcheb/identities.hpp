#pragma once

/**
 * @file identities.hpp
 * @brief Checkers for the identities that follow from the connection formulas:
 *        Fibonacci-number sums, the 2F1 chains, complex-argument and Laurent
 *        forms, the trigonometric form, and the derivative-sequence formulas.
 *
 * Every checker transcribes its formula as printed. Where that form is known
 * to disagree with the connection formula it was derived from, the record also
 * carries the corrected right-hand side (see make_report()).
 */

#include "fibcheb/connection.hpp"
#include "fibcheb/exact.hpp"
#include "fibcheb/hypergeom.hpp"
#include "fibcheb/polynomial.hpp"
#include "fibcheb/report.hpp"
#include "fibcheb/sequences.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace fibcheb {

namespace detail {

inline std::vector<Param> j_param(std::int64_t j) { return {{"j", Rational(j)}}; }

inline Rational fib(std::int64_t n) { return Rational(fibonacci_number(n)); }

/// 2F1(-m, j-m; j-2m+2; -4)
inline Rational f_tinf(std::int64_t j, std::int64_t m) {
    return eval_2f1(Rational(-m), Rational(j - m), Rational(j - 2 * m + 2), Rational(-4));
}
/// 2F1(-m, m-j-1; -j; -1/4)
inline Rational f_uinf(std::int64_t j, std::int64_t m) {
    return eval_2f1(Rational(-m), Rational(-j + m - 1), Rational(-j), Rational(-1, 4));
}
/// 2F1(-m, j-m+1; j-2m+1; -1/4)
inline Rational f_fint(std::int64_t j, std::int64_t m) {
    return eval_2f1(Rational(-m), Rational(j - m + 1), Rational(j - 2 * m + 1), Rational(-1, 4));
}
/// 2F1(-m, m-j-1; -j; -4)
inline Rational f_finu(std::int64_t j, std::int64_t m) { return d_coefficient(j, m); }

/// Evaluates one member of a chain, tagging any series error with its name.
template <class Fn>
Rational chain_member(const char* name, Fn&& fn) {
    try {
        return fn();
    } catch (const ZeroDenominator& e) {
        throw ZeroDenominator(std::string(name) + ": " + e.what());
    } catch (const NonTerminating& e) {
        throw NonTerminating(std::string(name) + ": " + e.what());
    }
}

}  // namespace detail

/// sum_m (-1)^m C(j-m, j-2m) 2^(j-2m-1)/(j-m) 2F1(-m, j-m; j-2m+2; -4) F_{j-2m+1}, printed as = 1.
/// Setting x = 1 in the T-in-F connection formula gives j * sum = T_j(1) = 1,
/// so the reference right-hand side is 1/j.
inline IdentityReport verify_cor_sum_T(std::int64_t j) {
    if (j < 1) throw std::invalid_argument("verify_cor_sum_T: j must be >= 1");
    Rational sum = 0;
    for (std::int64_t m = 0; m <= j / 2; ++m) {
        sum += sign_power(m) * Rational(binomial(j - m, j - 2 * m)) * pow2(j - 2 * m - 1) / (j - m) *
               detail::f_tinf(j, m) * detail::fib(j - 2 * m + 1);
    }
    Rational scaled = Rational(j) * sum;
    return make_report("sum-T", detail::j_param(j), sum, Rational(1), Rational(1, j), "j*sum = " + to_string(scaled));
}

/// 2^j sum_m (-1)^(m+1) C(j, m) (2m-j-1)/(j-m+1) 2F1(-m, m-j-1; -j; -1/4) F_{j-2m+1} = j + 1.
inline IdentityReport verify_cor_sum_U(std::int64_t j) {
    if (j < 1) throw std::invalid_argument("verify_cor_sum_U: j must be >= 1");
    Rational sum = 0;
    for (std::int64_t m = 0; m <= j / 2; ++m) {
        sum += sign_power(m + 1) * Rational(binomial(j, m)) * Rational(-j + 2 * m - 1, j - m + 1) *
               detail::f_uinf(j, m) * detail::fib(j - 2 * m + 1);
    }
    return make_report("sum-U", detail::j_param(j), pow2(j) * sum, Rational(j + 1));
}

/// The two expressions of F_{j+1} as sums of 2F1 values (x = 1 in F-in-T and F-in-U).
inline std::vector<IdentityReport> verify_fib_expressions(std::int64_t j) {
    if (j < 0) throw std::invalid_argument("verify_fib_expressions: j must be >= 0");
    Rational via_t = 0;
    Rational via_u = 0;
    for (std::int64_t m = 0; m <= j / 2; ++m) {
        via_t += 1 / c_normalizer(j - 2 * m) * Rational(binomial(j - m, j - 2 * m)) * pow2(-j + 2 * m + 1) *
                 detail::f_fint(j, m);
        via_u += Rational(binomial(j, m)) * Rational((j - 2 * m + 1) * (j - 2 * m + 1), j - m + 1) * detail::f_finu(j, m);
    }
    via_u *= pow2(-j);
    const Rational fj = detail::fib(j + 1);
    return {make_report("fibnum-T", detail::j_param(j), fj, via_t),
            make_report("fibnum-U", detail::j_param(j), fj, via_u)};
}

/// Members of the 2F1 chains for index j.
struct ChainValues {
    Rational fib_neg4;        ///< 2F1(-j/2, (1-j)/2; -j; -4)
    Rational sum_quarter;     ///< sum over 2F1(-m, j-m+1; j-2m+1; -1/4)
    Rational sum_neg4;        ///< 2^-j sum over 2F1(-m, m-j-1; -j; -4)
    Rational fib_arg5;        ///< 2F1(-j/2, (1-j)/2; 3/2; 5)
    Rational sum_fifth;       ///< 2/(j+1) sum over 5^m 2F1(-m, -m; j-2m+1; 1/5)
    Rational sum_four_fifths; ///< 2^-j sum over 5^m 2F1(-m, 1-m; -j; 4/5)
};

inline ChainValues chain_values(std::int64_t j) {
    if (j < 0) throw std::invalid_argument("verify_2f1_chain: j must be >= 0");
    using detail::chain_member;
    ChainValues v;
    v.fib_neg4 = chain_member("2F1(-j/2,(1-j)/2;-j;-4)", [&] {
        return eval_2f1(Rational(-j, 2), Rational(1 - j, 2), Rational(-j), Rational(-4));
    });
    v.sum_quarter = chain_member("sum over 2F1(...;-1/4)", [&] {
        Rational s = 0;
        for (std::int64_t m = 0; m <= j / 2; ++m) {
            s += 1 / c_normalizer(j - 2 * m) * Rational(binomial(j - m, j - 2 * m)) * pow2(-j + 2 * m + 1) *
                 detail::f_fint(j, m);
        }
        return s;
    });
    v.sum_neg4 = chain_member("sum over 2F1(...;-4)", [&] {
        Rational s = 0;
        for (std::int64_t m = 0; m <= j / 2; ++m) {
            s += Rational(binomial(j, m)) * Rational((j - 2 * m + 1) * (j - 2 * m + 1), j - m + 1) * detail::f_finu(j, m);
        }
        return pow2(-j) * s;
    });
    v.fib_arg5 = chain_member("2F1(-j/2,(1-j)/2;3/2;5)", [&] {
        return eval_2f1(Rational(-j, 2), Rational(1 - j, 2), Rational(3, 2), Rational(5));
    });
    v.sum_fifth = chain_member("sum over 2F1(...;1/5)", [&] {
        Rational s = 0;
        for (std::int64_t m = 0; m <= j / 2; ++m) {
            s += power(Rational(5), m) / c_normalizer(j - 2 * m) * Rational(binomial(j - m, j - 2 * m)) *
                 eval_2f1(Rational(-m), Rational(-m), Rational(j - 2 * m + 1), Rational(1, 5));
        }
        return Rational(2, j + 1) * s;
    });
    v.sum_four_fifths = chain_member("sum over 2F1(...;4/5)", [&] {
        Rational s = 0;
        for (std::int64_t m = 0; m <= j / 2; ++m) {
            s += power(Rational(5), m) * Rational(binomial(j, m)) * Rational((j - 2 * m + 1) * (j - 2 * m + 1), j - m + 1) *
                 eval_2f1(Rational(-m), Rational(1 - m), Rational(-j), Rational(4, 5));
        }
        return pow2(-j) * s;
    });
    return v;
}

/// Consecutive equalities of both chains. The last member of the second chain
/// equals F_{j+1}, not the 2F1(...; 5) value 2^j F_{j+1}/(j+1); its reference
/// rescales it by 2^j/(j+1).
inline std::vector<IdentityReport> verify_2f1_chain(std::int64_t j) {
    const ChainValues v = chain_values(j);
    const auto p = detail::j_param(j);
    return {
        make_report("chain-neg4-quarter", p, v.fib_neg4, v.sum_quarter),
        make_report("chain-quarter-neg4", p, v.sum_quarter, v.sum_neg4),
        make_report("chain-arg5-fifth", p, v.fib_arg5, v.sum_fifth),
        make_report("chain-fifth-fourfifths", p, v.sum_fifth, v.sum_four_fifths,
                    pow2(j) / (j + 1) * v.sum_four_fifths, "reference = 2^j/(j+1) * last member"),
    };
}

/// F_{n+1} = U_n(i/2)/i^n, U_n(-2i) = ((-i)^n/2) F_{3(n+1)}, and the two sums
/// obtained by evaluating the U-in-F formula at i/2 and -2i (upper limit floor(n/2)).
inline std::vector<IdentityReport> verify_complex_identities(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("verify_complex_identities: n must be >= 0");
    const Gaussian i = Gaussian::i();
    const Gaussian half_i(Rational(0), Rational(1, 2));
    const Gaussian minus_two_i(Rational(0), Rational(-2));
    const auto p = std::vector<Param>{{"n", Rational(n)}};
    const Polynomial& u = chebyshev_u(n);

    std::vector<IdentityReport> out;
    out.push_back(make_report("complex-1", p, Gaussian(detail::fib(n + 1)), evaluate(u, half_i) / power(i, n)));
    out.push_back(make_report("complex-2", p, evaluate(u, minus_two_i),
                              power(-i, n) * Gaussian(Rational(1, 2)) * Gaussian(detail::fib(3 * (n + 1)))));

    Gaussian sum_half = 0;
    Gaussian sum_two = 0;
    for (std::int64_t m = 0; m <= n / 2; ++m) {
        const Rational w = sign_power(m + 1) * Rational(binomial(n, m)) * Rational(-n + 2 * m - 1) / (n - m + 1) *
                           detail::f_uinf(n, m);
        const Polynomial& f = fibonacci_poly(n - 2 * m + 1);
        sum_half += Gaussian(w) * evaluate(f, half_i);
        sum_two += Gaussian(w) * evaluate(f, minus_two_i);
    }
    out.push_back(make_report("complex-sum-1", p, power(i, n) * Gaussian(detail::fib(n + 1)), Gaussian(pow2(n)) * sum_half));
    out.push_back(make_report("complex-sum-2", p, power(-i, n) * Gaussian(detail::fib(3 * n + 3)),
                              Gaussian(pow2(n + 1)) * sum_two));
    return out;
}

/// F_{j+1}((x+1/x)/2) = sum_m (1/c_{j-2m}) C(j-m, j-2m) 2^(2m-j) 2F1(-m, j-m+1; j-2m+1; -1/4) (x^(j-2m) + x^(2m-j)).
inline IdentityReport verify_laurent_identity(std::int64_t j, const Rational& x0) {
    if (j < 0) throw std::invalid_argument("verify_laurent_identity: j must be >= 0");
    if (x0 == 0) throw std::invalid_argument("verify_laurent_identity: x0 must be nonzero");
    const Rational lhs = evaluate(fibonacci_poly(j + 1), (x0 + 1 / x0) / 2);
    Rational rhs = 0;
    for (std::int64_t m = 0; m <= j / 2; ++m) {
        rhs += 1 / c_normalizer(j - 2 * m) * Rational(binomial(j - m, j - 2 * m)) * pow2(-j + 2 * m) * detail::f_fint(j, m) *
               (power(x0, j - 2 * m) + power(x0, 2 * m - j));
    }
    return make_report("laurent", {{"j", Rational(j)}, {"x0", x0}}, lhs, rhs);
}

/// |F_{j+1}(cos t) - sum_m a_m cos((j-2m) t)| with a_m the F-in-T coefficients.
template <class Real = double>
Real trig_identity_residual(std::int64_t j, Real theta) {
    using std::cos;
    using std::fabs;
    const CoefficientExpansion e = expand(j, ConnectionDirection::FInT);
    const Real lhs = evaluate_approx(fibonacci_poly(j + 1), Real(cos(theta)));
    Real rhs = 0;
    for (const auto& t : e.terms) {
        rhs += Real(numerator(t.coefficient)) / Real(denominator(t.coefficient)) * cos(Real(t.target_degree) * theta);
    }
    return fabs(lhs - rhs);
}

inline constexpr double kTrigTolerance = 1e-9;

/// Trigonometric form at theta = fraction * pi.
inline IdentityReport verify_trig_identity(std::int64_t j, const Rational& theta_over_pi) {
    if (j < 0) throw std::invalid_argument("verify_trig_identity: j must be >= 0");
    const long double theta = theta_over_pi.convert_to<long double>() * 3.141592653589793238462643383279502884L;
    const auto residual = static_cast<double>(trig_identity_residual<long double>(j, theta));
    return make_approx_report("trig", {{"j", Rational(j)}, {"theta/pi", theta_over_pi}}, residual, 0.0, kTrigTolerance,
                              "lhs is |F_{j+1}(cos t) - sum|");
}

/// The four derivative-sequence formulas at (j, q), q >= 1:
///   deriv-T-sum  sum of T-in-F summands times F^(q)_{j-2m+1}   = D^q T_j(1) / j  (j >= 1 only)
///   deriv-U-sum  sum of U-in-F summands times F^(q)_{j-2m+1}   = D^q U_j(1) / 2^j
///   deriv-T      F^(q)_{j+1} from the F-in-T coefficients
///   deriv-U      F^(q)_{j+1} from the F-in-U coefficients
/// Left-hand sides use symbolic differentiation. sqrt(pi)/Gamma(q+1/2) and
/// sqrt(pi)/Gamma(q+3/2) are exact rationals via gamma_half_ratio().
inline std::vector<IdentityReport> verify_derivative_corollaries(std::int64_t j, std::int64_t q) {
    if (j < 0) throw std::invalid_argument("verify_derivative_corollaries: j must be >= 0");
    if (q < 1) throw std::invalid_argument("verify_derivative_corollaries: q must be >= 1");
    const std::vector<Param> p{{"j", Rational(j)}, {"q", Rational(q)}};
    const Rational sign = sign_power(q + 1);
    const Rational g_half = gamma_half_ratio(q, HalfOffset::OneHalf);
    const Rational g_three_halves = gamma_half_ratio(q, HalfOffset::ThreeHalves);
    std::vector<IdentityReport> out;

    if (j >= 1) {
        Rational sum = 0;
        for (std::int64_t m = 0; m <= j / 2; ++m) {
            sum += sign_power(m) * Rational(binomial(j - m, j - 2 * m)) * pow2(j - 2 * m - 1) / (j - m) *
                   detail::f_tinf(j, m) * fib_deriv_value(q, j - 2 * m + 1);
        }
        const Rational printed =
            sign * g_half * Rational(j) * pochhammer(Rational(1 - j), q - 1) * pochhammer(Rational(j + 1), q - 1) / pow2(q);
        out.push_back(make_report("deriv-T-sum", p, sum, printed, cheb_deriv_at1(SequenceKind::ChebyshevT, q, j) / j));
    }

    {
        Rational sum = 0;
        for (std::int64_t m = 0; m <= j / 2; ++m) {
            sum += sign_power(m + 1) * Rational(binomial(j, m)) * Rational(-j + 2 * m - 1, j - m + 1) *
                   detail::f_uinf(j, m) * fib_deriv_value(q, j - 2 * m + 1);
        }
        const Rational printed = sign * g_three_halves * pochhammer(Rational(j), 3) * pochhammer(Rational(1 - j), q - 1) *
                                 pochhammer(Rational(j + 3), q - 1) / pow2(j + q + 1);
        out.push_back(make_report("deriv-U-sum", p, sum, printed, cheb_deriv_at1(SequenceKind::ChebyshevU, q, j) / pow2(j)));
    }

    const Rational direct = fib_deriv_value(q, j + 1);

    {
        Rational sum = 0;
        for (std::int64_t m = 0; m <= j / 2; ++m) {
            const std::int64_t n = j - 2 * m;
            sum += 1 / c_normalizer(n) * Rational(binomial(j - m, n)) * pow2(-j + 2 * m - q + 1) * Rational(n * n) *
                   pochhammer(Rational(n + 1), q - 1) * pochhammer(Rational(-n + 1), q - 1) * detail::f_fint(j, m);
        }
        out.push_back(make_report("deriv-T", p, direct, sign * g_half * sum));
    }

    {
        Rational sum = 0;
        Rational corrected = 0;
        for (std::int64_t m = 0; m <= j / 2; ++m) {
            const std::int64_t n = j - 2 * m;
            const Rational term = Rational(binomial(j, m)) * Rational(n * (n + 1) * (n + 1) * (n + 2), j - m + 1) *
                                  pochhammer(Rational(n + 3), q - 1) * detail::f_finu(j, m);
            sum += term;
            corrected += term * pochhammer(Rational(-n + 1), q - 1);
        }
        const Rational prefactor = sign * g_three_halves / pow2(j + q + 1);
        out.push_back(make_report("deriv-U", p, direct, prefactor * sum, prefactor * corrected,
                                  "reference inserts the factor (2m-j+1)_{q-1}"));
    }
    return out;
}

}  // namespace fibcheb
