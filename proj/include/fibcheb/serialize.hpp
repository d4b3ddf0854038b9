#pragma once

// JSON forms. Rationals are always strings "p/q", never numbers.

#include "fibcheb/connection.hpp"
#include "fibcheb/polynomial.hpp"
#include "fibcheb/report.hpp"

#include "json.hpp"

#include <string>
#include <variant>

namespace fibcheb {

using Json = nlohmann::ordered_json;

/// Dense coefficient array, index i = coefficient of x^i.
inline Json to_json(const Polynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coefficients()) a.push_back(to_string(c));
    return a;
}

inline Polynomial polynomial_from_json(const Json& a) {
    std::vector<Rational> c;
    for (const auto& v : a) c.push_back(parse_rational(v.get<std::string>()));
    return Polynomial(std::move(c));
}

inline Json to_json(const Value& v) {
    if (std::holds_alternative<std::monostate>(v)) return nullptr;
    if (auto* p = std::get_if<Polynomial>(&v)) return to_json(*p);
    if (auto* a = std::get_if<Approx>(&v)) return a->value;
    return to_string(v);
}

inline Json to_json(const IdentityReport& r) {
    Json params = Json::object();
    for (const auto& p : r.params) params[p.name] = to_string(p.value);
    Json j;
    j["id"] = r.id;
    j["params"] = std::move(params);
    j["status"] = to_string(r.status);
    j["lhs"] = to_json(r.lhs);
    j["rhs"] = to_json(r.rhs);
    j["residual"] = to_json(r.residual);
    if (!std::holds_alternative<std::monostate>(r.reference)) {
        j["reference"] = to_json(r.reference);
        j["reference_residual"] = to_json(r.reference_residual);
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline Json to_json(const CoefficientExpansion& e) {
    Json terms = Json::array();
    for (const auto& t : e.terms) {
        terms.push_back({{"m", t.m},
                         {"target", std::string(symbol(target_kind(e.direction))) + "_" + std::to_string(t.target_index)},
                         {"degree", t.target_degree},
                         {"coefficient", to_string(t.coefficient)}});
    }
    return {{"j", e.source}, {"direction", to_string(e.direction)}, {"terms", std::move(terms)}};
}

}  // namespace fibcheb
