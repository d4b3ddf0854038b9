#pragma once

/**
 * @file exact.hpp
 * @brief Exact scalars: arbitrary-precision integers, rationals and Gaussian
 *        rationals, plus the combinatorial primitives built on them.
 *
 * Rationals are always kept in canonical form (positive denominator, reduced,
 * zero is 0/1). No floating-point value ever enters this layer.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fibcheb {

// Expression templates off: values are stored in `auto` and passed to
// deduced templates throughout.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                               boost::multiprecision::et_off>;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// num/den in canonical form; den may be negative, zero throws.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// "p/q", with "/q" omitted when q = 1.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (Integer d = denominator(r); d != 1) {
        s += '/';
        s += d.str();
    }
    return s;
}

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed input.
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        std::string_view digits = part;
        if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
        if (digits.empty()) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        for (char ch : digits) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        if (part.front() == '+') part.remove_prefix(1);
        return Integer(std::string(part));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return make_rational(parse_int(text.substr(0, slash)), den);
}

/// Integer power with a possibly negative exponent; 0^negative throws.
inline Rational power(const Rational& base, std::int64_t exponent) {
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("zero raised to a negative power");
        return 1 / power(base, -exponent);
    }
    Rational result = 1;
    Rational b = base;
    for (auto e = static_cast<std::uint64_t>(exponent); e != 0; e >>= 1) {
        if (e & 1U) result *= b;
        if (e > 1) b *= b;
    }
    return result;
}

inline Rational pow2(std::int64_t exponent) {
    if (exponent >= 0) return Rational(Integer(1) << static_cast<unsigned>(exponent));
    return Rational(Integer(1), Integer(1) << static_cast<unsigned>(-exponent));
}

inline Rational sign_power(std::int64_t exponent) { return (exponent % 2 == 0) ? Rational(1) : Rational(-1); }

/// Complex number with exact rational parts.
class Gaussian {
public:
    Gaussian() = default;
    Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    Gaussian(int re) : re_(re) {}                   // NOLINT(google-explicit-constructor)
    Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gaussian i() { return {Rational(0), Rational(1)}; }

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }

    Gaussian conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    Gaussian operator-() const { return {-re_, -im_}; }

    Gaussian& operator+=(const Gaussian& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Gaussian& operator*=(const Gaussian& o) {
        Rational re = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(re);
        return *this;
    }
    Gaussian& operator/=(const Gaussian& o) {
        Rational n = o.norm();
        if (n == 0) throw std::domain_error("division by zero Gaussian");
        *this *= o.conj();
        re_ /= n;
        im_ /= n;
        return *this;
    }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }

    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

private:
    Rational re_;
    Rational im_;
};

inline Gaussian power(const Gaussian& base, std::int64_t exponent) {
    if (exponent < 0) return Gaussian(1) / power(base, -exponent);
    Gaussian result(1);
    for (std::int64_t e = 0; e < exponent; ++e) result *= base;
    return result;
}

/// "p/q+r/s*i" (sign of the imaginary part folded into the separator).
inline std::string to_string(const Gaussian& g) {
    std::string s = to_string(g.real());
    if (g.imag() < 0) {
        s += '-';
        s += to_string(Rational(-g.imag()));
    } else {
        s += '+';
        s += to_string(g.imag());
    }
    s += "*i";
    return s;
}

inline std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << to_string(g); }

// ---------------------------------------------------------------------------
// Combinatorial primitives
// ---------------------------------------------------------------------------

/// C(n, k); zero outside 0 <= k <= n. Rejects n < 0.
inline Integer binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative, got " + std::to_string(n));
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

/// Rising factorial (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.
inline Rational pochhammer(const Rational& a, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("pochhammer: k must be nonnegative");
    Rational result = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        result *= a + i;
        if (result == 0) break;
    }
    return result;
}

/// n!! with (-1)!! = 0!! = 1.
inline Integer double_factorial(std::int64_t n) {
    if (n < -1) throw std::invalid_argument("double_factorial: n must be >= -1");
    Integer result = 1;
    for (std::int64_t i = n; i > 1; i -= 2) result *= i;
    return result;
}

enum class HalfOffset { OneHalf, ThreeHalves };

/// sqrt(pi) / Gamma(q + offset) as an exact rational:
/// 2^q / (2q-1)!! for offset 1/2, 2^(q+1) / (2q+1)!! for offset 3/2.
inline Rational gamma_half_ratio(std::int64_t q, HalfOffset offset) {
    if (q < 0) throw std::invalid_argument("gamma_half_ratio: q must be nonnegative");
    if (offset == HalfOffset::OneHalf) return Rational(Integer(1) << static_cast<unsigned>(q), double_factorial(2 * q - 1));
    return Rational(Integer(1) << static_cast<unsigned>(q + 1), double_factorial(2 * q + 1));
}

/// Same as above with the offset given as a rational; only 1/2 and 3/2 are accepted.
inline Rational gamma_half_ratio(std::int64_t q, const Rational& offset) {
    if (offset == Rational(1, 2)) return gamma_half_ratio(q, HalfOffset::OneHalf);
    if (offset == Rational(3, 2)) return gamma_half_ratio(q, HalfOffset::ThreeHalves);
    throw std::invalid_argument("gamma_half_ratio: offset must be 1/2 or 3/2, got " + to_string(offset));
}

}  // namespace fibcheb
