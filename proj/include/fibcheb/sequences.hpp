#pragma once

/**
 * @file sequences.hpp
 * @brief Fibonacci polynomials F_n, Chebyshev polynomials T_n and U_n, the
 *        Fibonacci numbers, and their derivative values at x = 1.
 *
 * Each family has two independent constructions: the three-term recurrence
 * (cached, shared across threads) and the explicit binomial power form.
 */

#include "fibcheb/exact.hpp"
#include "fibcheb/polynomial.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace fibcheb {

enum class SequenceKind { FibonacciPoly, ChebyshevT, ChebyshevU };

inline const char* symbol(SequenceKind kind) {
    switch (kind) {
        case SequenceKind::FibonacciPoly: return "F";
        case SequenceKind::ChebyshevT: return "T";
        case SequenceKind::ChebyshevU: return "U";
    }
    return "?";
}

/// First-kind orthogonality normalizer: c_0 = 2, c_n = 1 for n > 0.
inline Rational c_normalizer(std::int64_t n) { return n == 0 ? Rational(2) : Rational(1); }

namespace detail {

inline void require_nonnegative(std::int64_t n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + ": index must be nonnegative, got " + std::to_string(n));
}

/// Grow-only table of p_0, p_1, ... generated by p_{n} = a(x) p_{n-1} - s p_{n-2}.
/// Entries live in a deque, so references handed out stay valid as it grows.
class RecurrenceCache {
public:
    RecurrenceCache(Polynomial p0, Polynomial p1, Polynomial multiplier, Rational sign)
        : multiplier_(std::move(multiplier)), sign_(std::move(sign)) {
        items_.push_back(std::move(p0));
        items_.push_back(std::move(p1));
    }

    const Polynomial& at(std::size_t n) {
        {
            std::shared_lock lock(mutex_);
            if (n < items_.size()) return items_[n];
        }
        std::unique_lock lock(mutex_);
        while (items_.size() <= n) {
            const auto k = items_.size();
            items_.push_back(multiplier_ * items_[k - 1] + items_[k - 2] * sign_);
        }
        return items_[n];
    }

private:
    std::shared_mutex mutex_;
    std::deque<Polynomial> items_;
    Polynomial multiplier_;
    Rational sign_;
};

inline RecurrenceCache& fibonacci_cache() {
    static RecurrenceCache cache(Polynomial{}, Polynomial{1}, Polynomial::x(), Rational(1));
    return cache;
}
inline RecurrenceCache& chebyshev_t_cache() {
    static RecurrenceCache cache(Polynomial{1}, Polynomial::x(), Polynomial::monomial(2, 1), Rational(-1));
    return cache;
}
inline RecurrenceCache& chebyshev_u_cache() {
    static RecurrenceCache cache(Polynomial{1}, Polynomial::monomial(2, 1), Polynomial::monomial(2, 1), Rational(-1));
    return cache;
}

}  // namespace detail

/// F_n(x) from F_{n+2} = x F_{n+1} + F_n, F_0 = 0, F_1 = 1.
inline const Polynomial& fibonacci_poly(std::int64_t n) {
    detail::require_nonnegative(n, "fibonacci_poly");
    return detail::fibonacci_cache().at(static_cast<std::size_t>(n));
}

/// F_n(x) = sum_j C(n-j-1, j) x^(n-2j-1).
inline Polynomial fibonacci_poly_powerform(std::int64_t n) {
    detail::require_nonnegative(n, "fibonacci_poly_powerform");
    if (n == 0) return {};
    std::vector<Rational> c(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j <= (n - 1) / 2; ++j) c[static_cast<std::size_t>(n - 2 * j - 1)] = Rational(binomial(n - j - 1, j));
    return Polynomial(std::move(c));
}

inline const Polynomial& chebyshev_t(std::int64_t n) {
    detail::require_nonnegative(n, "chebyshev_t");
    return detail::chebyshev_t_cache().at(static_cast<std::size_t>(n));
}

inline const Polynomial& chebyshev_u(std::int64_t n) {
    detail::require_nonnegative(n, "chebyshev_u");
    return detail::chebyshev_u_cache().at(static_cast<std::size_t>(n));
}

/// T_n(x) = (n/2) sum_r (-1)^r/(n-r) C(n-r, r) (2x)^(n-2r), T_0 = 1.
inline Polynomial chebyshev_t_powerform(std::int64_t n) {
    detail::require_nonnegative(n, "chebyshev_t_powerform");
    if (n == 0) return Polynomial{1};
    std::vector<Rational> c(static_cast<std::size_t>(n + 1));
    for (std::int64_t r = 0; r <= n / 2; ++r) {
        c[static_cast<std::size_t>(n - 2 * r)] =
            Rational(n, 2) * sign_power(r) / (n - r) * Rational(binomial(n - r, r)) * pow2(n - 2 * r);
    }
    return Polynomial(std::move(c));
}

/// U_n(x) = sum_r (-1)^r C(n-r, r) (2x)^(n-2r).
inline Polynomial chebyshev_u_powerform(std::int64_t n) {
    detail::require_nonnegative(n, "chebyshev_u_powerform");
    std::vector<Rational> c(static_cast<std::size_t>(n + 1));
    for (std::int64_t r = 0; r <= n / 2; ++r) {
        c[static_cast<std::size_t>(n - 2 * r)] = sign_power(r) * Rational(binomial(n - r, r)) * pow2(n - 2 * r);
    }
    return Polynomial(std::move(c));
}

/// Member n of the given family by recurrence. For FibonacciPoly this is F_n.
inline const Polynomial& sequence_poly(SequenceKind kind, std::int64_t n) {
    switch (kind) {
        case SequenceKind::FibonacciPoly: return fibonacci_poly(n);
        case SequenceKind::ChebyshevT: return chebyshev_t(n);
        case SequenceKind::ChebyshevU: return chebyshev_u(n);
    }
    throw std::invalid_argument("unknown sequence kind");
}

/// F_n = F_n(1), by the integer recurrence.
inline Integer fibonacci_number(std::int64_t n) {
    detail::require_nonnegative(n, "fibonacci_number");
    Integer a = 0;
    Integer b = 1;
    for (std::int64_t i = 0; i < n; ++i) {
        Integer next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

/// F^(q)_n = D^q F_n(x) at x = 1, by symbolic differentiation.
inline Rational fib_deriv_value(std::int64_t q, std::int64_t n) {
    detail::require_nonnegative(q, "fib_deriv_value");
    return evaluate(derivative(fibonacci_poly(n), static_cast<unsigned>(q)), Rational(1));
}

/// D^q T_n(1) = prod_{i<q} (n-i)(n+i)/(2i+1) and
/// D^q U_n(1) = (n+1) prod_{i<q} (n-i)(n+i+2)/(2i+3), for q >= 1.
inline Rational cheb_deriv_at1(SequenceKind kind, std::int64_t q, std::int64_t n) {
    if (q < 1) throw std::invalid_argument("cheb_deriv_at1: q must be >= 1 (use T_n(1) = 1, U_n(1) = n+1)");
    detail::require_nonnegative(n, "cheb_deriv_at1");
    Rational r = 1;
    switch (kind) {
        case SequenceKind::ChebyshevT:
            for (std::int64_t i = 0; i < q; ++i) r *= Rational((n - i) * (n + i), 2 * i + 1);
            return r;
        case SequenceKind::ChebyshevU:
            r = n + 1;
            for (std::int64_t i = 0; i < q; ++i) r *= Rational((n - i) * (n + i + 2), 2 * i + 3);
            return r;
        case SequenceKind::FibonacciPoly: break;
    }
    throw std::invalid_argument("cheb_deriv_at1: kind must be ChebyshevT or ChebyshevU");
}

}  // namespace fibcheb
