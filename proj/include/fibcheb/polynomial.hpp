#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over exact rationals.
 *
 * coefficients()[i] is the coefficient of x^i. Trailing zeros are always
 * stripped, so the zero polynomial has no coefficients and degree -1.
 */

#include "fibcheb/exact.hpp"

#include <algorithm>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fibcheb {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }
    Polynomial(std::initializer_list<Rational> coefficients) : c_(coefficients) { trim(); }

    /// coefficient * x^degree
    static Polynomial monomial(Rational coefficient, std::size_t degree) {
        std::vector<Rational> c(degree + 1);
        c[degree] = std::move(coefficient);
        return Polynomial(std::move(c));
    }
    static Polynomial constant(Rational value) { return Polynomial({std::move(value)}); }
    static Polynomial x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    std::span<const Rational> coefficients() const { return c_; }

    /// Coefficient of x^i, zero beyond the degree.
    Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& leading() const { return c_.back(); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) v *= s;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }

    /// Multiplication by x^k.
    Polynomial shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<Rational> r(k);
        r.insert(r.end(), c_.begin(), c_.end());
        return Polynomial(std::move(r));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
inline Polynomial scale(const Polynomial& p, const Rational& s) { return p * s; }

/// q-th formal derivative; q = 0 is the identity.
inline Polynomial derivative(const Polynomial& p, unsigned q = 1) {
    auto c = p.coefficients();
    if (static_cast<std::size_t>(q) >= c.size()) return {};
    std::vector<Rational> r(c.size() - q);
    for (std::size_t i = q; i < c.size(); ++i) {
        Integer falling = 1;
        for (std::size_t t = 0; t < q; ++t) falling *= i - t;
        r[i - q] = c[i] * falling;
    }
    return Polynomial(std::move(r));
}

/// Horner evaluation at x0; Scalar is Rational or Gaussian (anything
/// constructible from Rational with + and *).
template <class Scalar>
Scalar evaluate(const Polynomial& p, const Scalar& x0) {
    Scalar acc{};
    auto c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= x0;
        acc += Scalar(*it);
    }
    return acc;
}

/// Floating-point Horner evaluation; coefficients are rounded once to Real.
template <class Real>
Real evaluate_approx(const Polynomial& p, const Real& x0) {
    Real acc = 0;
    auto c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x0 + Real(numerator(*it)) / Real(denominator(*it));
    }
    return acc;
}

/// "c0 + c1*x + c2*x^2 + ..." over the nonzero terms; "0" for the zero polynomial.
inline std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    auto c = p.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += to_string(c[i]);
        if (i >= 1) s += "*x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

}  // namespace fibcheb
