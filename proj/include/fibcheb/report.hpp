#pragma once

/**
 * @file report.hpp
 * @brief Verification records shared by the identity and integral checkers.
 *
 * A record compares a computed left-hand side against the right-hand side of
 * a formula as printed. Where a printed formula is known to be off, the
 * record also carries a reference right-hand side (the form consistent with
 * the parent connection formula); the status is then PaperErratum when the
 * printed form misses and the reference hits.
 */

#include "fibcheb/exact.hpp"
#include "fibcheb/polynomial.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace fibcheb {

enum class Status { Pass, Fail, PaperErratum, Unevaluable };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "Pass";
        case Status::Fail: return "Fail";
        case Status::PaperErratum: return "PaperErratum";
        case Status::Unevaluable: return "Unevaluable";
    }
    return "?";
}

/// Exact rational multiple of pi.
struct PiMultiple {
    Rational coefficient;

    PiMultiple& operator+=(const PiMultiple& o) {
        coefficient += o.coefficient;
        return *this;
    }
    friend PiMultiple operator+(PiMultiple a, const PiMultiple& b) { return a += b; }
    friend PiMultiple operator-(const PiMultiple& a, const PiMultiple& b) { return {a.coefficient - b.coefficient}; }
    friend PiMultiple operator*(const Rational& s, const PiMultiple& p) { return {s * p.coefficient}; }
    friend PiMultiple operator*(const PiMultiple& p, const Rational& s) { return {p.coefficient * s}; }
    friend bool operator==(const PiMultiple&, const PiMultiple&) = default;

    double to_double() const { return coefficient.convert_to<double>() * 3.14159265358979323846; }
};

/// "p/q * pi"
inline std::string to_string(const PiMultiple& p) { return to_string(p.coefficient) + " * pi"; }

/// A floating-point value, used only by the non-exact checks.
struct Approx {
    double value = 0;
};

using Value = std::variant<std::monostate, Rational, Gaussian, PiMultiple, Polynomial, Approx>;

inline std::string to_string(const Value& v) {
    struct Visitor {
        std::string operator()(std::monostate) const { return "-"; }
        std::string operator()(const Rational& r) const { return fibcheb::to_string(r); }
        std::string operator()(const Gaussian& g) const { return fibcheb::to_string(g); }
        std::string operator()(const PiMultiple& p) const { return fibcheb::to_string(p); }
        std::string operator()(const Polynomial& p) const { return fibcheb::to_string(p); }
        std::string operator()(const Approx& a) const {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", a.value);
            return buf;
        }
    };
    return std::visit(Visitor{}, v);
}

inline Value difference(const Value& a, const Value& b) {
    if (a.index() != b.index()) return std::monostate{};
    if (auto* r = std::get_if<Rational>(&a)) return Value(*r - std::get<Rational>(b));
    if (auto* g = std::get_if<Gaussian>(&a)) return Value(*g - std::get<Gaussian>(b));
    if (auto* p = std::get_if<PiMultiple>(&a)) return Value(*p - std::get<PiMultiple>(b));
    if (auto* p = std::get_if<Polynomial>(&a)) return Value(*p - std::get<Polynomial>(b));
    if (auto* x = std::get_if<Approx>(&a)) return Value(Approx{x->value - std::get<Approx>(b).value});
    return std::monostate{};
}

struct Param {
    std::string name;
    Rational value;

    friend bool operator==(const Param&, const Param&) = default;
};

struct IdentityReport {
    std::string id;
    std::vector<Param> params;
    Status status = Status::Fail;
    Value lhs;
    Value rhs;        ///< printed right-hand side
    Value residual;   ///< lhs - rhs
    Value reference;  ///< corrected right-hand side, when one exists
    Value reference_residual;
    std::string note;
};

/// Deterministic order: identity id, then parameters.
inline bool report_less(const IdentityReport& a, const IdentityReport& b) {
    if (a.id != b.id) return a.id < b.id;
    const auto n = std::min(a.params.size(), b.params.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a.params[i].name != b.params[i].name) return a.params[i].name < b.params[i].name;
        if (a.params[i].value != b.params[i].value) return a.params[i].value < b.params[i].value;
    }
    return a.params.size() < b.params.size();
}

namespace detail {

inline bool is_zero(const Value& v) {
    if (auto* r = std::get_if<Rational>(&v)) return *r == 0;
    if (auto* g = std::get_if<Gaussian>(&v)) return *g == Gaussian();
    if (auto* p = std::get_if<PiMultiple>(&v)) return p->coefficient == 0;
    if (auto* p = std::get_if<Polynomial>(&v)) return p->is_zero();
    return false;
}

}  // namespace detail

/// Builds an exact record. Pass iff lhs == printed (and lhs == reference when
/// given); PaperErratum iff lhs != printed but lhs == reference; Fail otherwise.
/// A monostate printed value means the printed form could not be evaluated.
inline IdentityReport make_report(std::string id, std::vector<Param> params, Value lhs, Value printed,
                                  Value reference = std::monostate{}, std::string note = {}) {
    IdentityReport r;
    r.id = std::move(id);
    r.params = std::move(params);
    r.note = std::move(note);
    r.residual = difference(lhs, printed);
    const bool has_reference = !std::holds_alternative<std::monostate>(reference);
    if (has_reference) r.reference_residual = difference(lhs, reference);
    const bool printed_ok = !std::holds_alternative<std::monostate>(printed) && detail::is_zero(r.residual);
    const bool reference_ok = has_reference && detail::is_zero(r.reference_residual);
    if (std::holds_alternative<std::monostate>(printed)) {
        r.status = (!has_reference || reference_ok) ? Status::Unevaluable : Status::Fail;
    } else if (printed_ok) {
        r.status = (!has_reference || reference_ok) ? Status::Pass : Status::Fail;
    } else {
        r.status = reference_ok ? Status::PaperErratum : Status::Fail;
    }
    r.lhs = std::move(lhs);
    r.rhs = std::move(printed);
    r.reference = std::move(reference);
    return r;
}

/// Floating-point record: Pass iff |lhs - rhs| <= tolerance.
inline IdentityReport make_approx_report(std::string id, std::vector<Param> params, double lhs, double rhs,
                                         double tolerance, std::string note = {}) {
    IdentityReport r;
    r.id = std::move(id);
    r.params = std::move(params);
    r.lhs = Approx{lhs};
    r.rhs = Approx{rhs};
    r.residual = Approx{lhs - rhs};
    r.status = std::isfinite(lhs - rhs) && std::fabs(lhs - rhs) <= tolerance ? Status::Pass : Status::Fail;
    r.note = std::move(note);
    return r;
}

}  // namespace fibcheb
