#pragma once

/**
 * @file runner.hpp
 * @brief Batch driver behind the command-line tool: coefficient tables,
 *        verification sweeps, single integrals and single 2F1 evaluations.
 *
 * Sweeps are split into independent work items run on a small thread pool.
 * Results are merged and sorted before emission, so output does not depend on
 * the worker count.
 *
 * Exit codes: 0 success, 1 at least one Fail record, 2 invalid configuration.
 */

#include "fibcheb/connection.hpp"
#include "fibcheb/hypergeom.hpp"
#include "fibcheb/identities.hpp"
#include "fibcheb/integrals.hpp"
#include "fibcheb/report.hpp"
#include "fibcheb/serialize.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace fibcheb {

enum class Subcommand { Table, Verify, Integrate, Eval };
enum class OutputFormat { Json, Csv, Text };

/// Raised for any invalid run configuration; maps to exit code 2.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::array<const char*, 11> kSuites = {"all",     "cor51", "cor52",     "complex",  "chain",    "laurent",
                                                        "trig",    "integrals", "connection", "hypergeom", "sums"};

struct RunConfig {
    Subcommand subcommand = Subcommand::Verify;
    std::int64_t jmax = 20;
    std::int64_t qmax = 5;
    std::int64_t j = 0;
    std::int64_t k = 0;
    std::int64_t jmax_cap = 500;
    OutputFormat format = OutputFormat::Text;
    std::vector<std::string> suites{"all"};
    unsigned workers = 1;
    ConnectionDirection direction = ConnectionDirection::TInF;
    std::string integral_kind = "ft";
    DmInterpretation dm = DmInterpretation::Undefined;
    std::array<std::string, 4> eval_args{};  ///< a, b, c, z
};

/// FIBCHEB_WORKERS if set and positive, else the hardware concurrency.
inline unsigned default_workers() {
    if (const char* env = std::getenv("FIBCHEB_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

inline void validate(const RunConfig& c) {
    if (c.jmax < 0 || c.qmax < 0 || c.j < 0 || c.k < 0) throw ConfigError("ranges must be nonnegative");
    if (c.jmax > c.jmax_cap || c.j > c.jmax_cap) {
        throw ConfigError("index exceeds the safety cap " + std::to_string(c.jmax_cap));
    }
    if (c.workers == 0) throw ConfigError("worker count must be positive");
    for (const auto& s : c.suites) {
        if (std::find_if(kSuites.begin(), kSuites.end(), [&](const char* n) { return s == n; }) == kSuites.end()) {
            throw ConfigError("unknown suite '" + s + "'");
        }
    }
    if (c.subcommand == Subcommand::Integrate) {
        static const std::set<std::string> kinds{"ft", "fu", "ff1", "ff2"};
        if (!kinds.count(c.integral_kind)) throw ConfigError("unknown integral kind '" + c.integral_kind + "'");
        if (c.j < c.k) throw ConfigError("integrate needs j >= k");
    }
}

// ---------------------------------------------------------------------------
// Work items
// ---------------------------------------------------------------------------

using WorkItem = std::function<std::vector<IdentityReport>()>;

namespace detail {

inline std::vector<IdentityReport> one(IdentityReport r) { return {std::move(r)}; }

inline void add_sums(std::vector<WorkItem>& w, std::int64_t jmax) {
    for (std::int64_t j = 1; j <= jmax; ++j) {
        w.push_back([j] { return one(verify_cor_sum_T(j)); });
        w.push_back([j] { return one(verify_cor_sum_U(j)); });
    }
    for (std::int64_t j = 0; j <= jmax; ++j) w.push_back([j] { return verify_fib_expressions(j); });
}

inline void add_derivatives(std::vector<WorkItem>& w, std::int64_t jmax, std::int64_t qmax) {
    for (std::int64_t q = 1; q <= qmax; ++q) {
        for (std::int64_t j = 0; j <= jmax; ++j) w.push_back([j, q] { return verify_derivative_corollaries(j, q); });
    }
}

inline const std::array<Rational, 5>& laurent_points() {
    static const std::array<Rational, 5> points{Rational(1), Rational(2), Rational(-3), Rational(1, 2), Rational(7, 5)};
    return points;
}

inline constexpr int kTrigSamples = 16;

inline std::vector<IdentityReport> connection_reports(std::int64_t j, ConnectionDirection d) {
    const std::string base = std::string("connect-") + to_string(d);
    const std::vector<Param> p{{"j", Rational(j)}};
    const CoefficientExpansion e = expand(j, d);
    const Polynomial& source = source_polynomial(j, d);

    std::vector<IdentityReport> out;
    out.push_back(make_report(base + "-roundtrip", p, source, reconstruct(e)));

    // Both coefficient lists laid out by target degree as a polynomial in a dummy variable.
    std::vector<Rational> by_oracle(static_cast<std::size_t>(source.degree() + 1));
    for (const auto& t : oracle_expand(source, target_kind(d))) {
        const std::int64_t degree = target_kind(d) == SequenceKind::FibonacciPoly ? t.index - 1 : t.index;
        by_oracle[static_cast<std::size_t>(degree)] = t.coefficient;
    }
    std::vector<Rational> by_formula(by_oracle.size());
    for (const auto& t : e.terms) by_formula[static_cast<std::size_t>(t.target_degree)] = t.coefficient;
    out.push_back(make_report(base + "-oracle", p, Polynomial(std::move(by_oracle)), Polynomial(std::move(by_formula)),
                              std::monostate{}, "coefficient of y^d belongs to the degree-d basis element"));

    if (d == ConnectionDirection::FInT || d == ConnectionDirection::FInU) {
        const auto nonpositive = std::count_if(e.terms.begin(), e.terms.end(), [](const auto& t) { return t.coefficient <= 0; });
        out.push_back(make_report(base + "-positive", p, Rational(nonpositive), Rational(0), std::monostate{},
                                  "lhs counts nonpositive coefficients"));
    }
    return out;
}

inline void add_connection(std::vector<WorkItem>& w, std::int64_t jmax) {
    for (auto d : kAllDirections) {
        for (std::int64_t j = min_source_index(d); j <= jmax; ++j) w.push_back([j, d] { return connection_reports(j, d); });
    }
    for (std::int64_t j = 2; j <= jmax; ++j) {
        w.push_back([j] {
            std::vector<IdentityReport> out;
            for (std::int64_t m = 1; m <= j / 2; ++m) {
                out.push_back(make_report("lemma-d", {{"j", Rational(j)}, {"m", Rational(m)}}, lemma_d_residual(j, m), Rational(0)));
            }
            return out;
        });
    }
}

/// prefactor * eval(transformed) against eval(original).
inline IdentityReport pfaff_report(std::string id, std::vector<Param> p, const Hypergeom2F1Spec& spec) {
    const PfaffResult t = pfaff_transform(spec);
    return make_report(std::move(id), std::move(p), eval_2f1(spec), t.prefactor * eval_2f1(t.spec), std::monostate{},
                       to_string(spec) + " -> " + to_string(t.prefactor) + " * " + to_string(t.spec));
}

/// Puts the integer upper parameter first so the Pfaff prefactor is rational.
inline Hypergeom2F1Spec integer_a_first(Hypergeom2F1Spec s) {
    if (!nonpositive_integer_depth(s.a)) std::swap(s.a, s.b);
    return s;
}

inline void add_hypergeom(std::vector<WorkItem>& w, std::int64_t jmax) {
    for (std::int64_t n = 1; n <= jmax + 1; ++n) {
        w.push_back([n] {
            const std::vector<Param> p{{"n", Rational(n)}};
            const Rational fn(fibonacci_number(n));
            return std::vector<IdentityReport>{
                make_report("fib-2f1-neg4", p, fn, fib_as_2f1(n, FibRepresentation::ArgMinus4)),
                make_report("fib-2f1-arg5", p, fn, fib_as_2f1(n, FibRepresentation::Arg5)),
                pfaff_report("pfaff-fib-neg4", p, integer_a_first(fib_2f1_spec(n, FibRepresentation::ArgMinus4))),
                pfaff_report("pfaff-fib-arg5", p, integer_a_first(fib_2f1_spec(n, FibRepresentation::Arg5))),
            };
        });
    }
    for (std::int64_t j = 0; j <= jmax; ++j) {
        w.push_back([j] {
            std::vector<IdentityReport> out;
            for (std::int64_t m = 0; m <= j / 2; ++m) {
                const std::vector<Param> p{{"j", Rational(j)}, {"m", Rational(m)}};
                out.push_back(pfaff_report(
                    "pfaff-quarter", p, {Rational(-m), Rational(j - m + 1), Rational(j - 2 * m + 1), Rational(-1, 4)}));
                out.push_back(pfaff_report("pfaff-neg4", p, {Rational(-m), Rational(-j + m - 1), Rational(-j), Rational(-4)}));
            }
            return out;
        });
    }
}

inline std::vector<IdentityReport> integral_reports(std::int64_t j, std::int64_t k) {
    const std::vector<Param> p{{"j", Rational(j)}, {"k", Rational(k)}};
    std::vector<IdentityReport> out;
    auto quad = [&](const char* id, const Polynomial& integrand, ChebyshevWeight w, const PiMultiple& exact) {
        out.push_back(make_approx_report(id, p, quadrature_relative_error(integrand, w, exact), 0.0, kQuadratureRelTolerance,
                                         "lhs is the relative error of Gauss-Chebyshev quadrature"));
    };
    const Polynomial& fj = fibonacci_poly(j + 1);

    auto ft = integral_fib_chebT(j, k);
    out.push_back(ft.report);
    quad("quad-FT", fj * chebyshev_t(k), ChebyshevWeight::FirstKind, ft.value);

    auto fu = integral_fib_chebU(j, k);
    out.push_back(fu.report);
    quad("quad-FU", fj * chebyshev_u(k), ChebyshevWeight::SecondKind, fu.value);

    const Polynomial ff = fj * fibonacci_poly(k + 1);
    auto ff1 = integral_fib_fib(j, k, ChebyshevWeight::FirstKind);
    out.push_back(ff1.report);
    quad("quad-FF1", ff, ChebyshevWeight::FirstKind, ff1.value);

    auto ff2 = integral_fib_fib(j, k, ChebyshevWeight::SecondKind);
    out.push_back(ff2.report);
    quad("quad-FF2", ff, ChebyshevWeight::SecondKind, ff2.value);

    for (auto w : {ChebyshevWeight::FirstKind, ChebyshevWeight::SecondKind}) {
        out.push_back(make_report(w == ChebyshevWeight::FirstKind ? "moments-vs-expansion-1" : "moments-vs-expansion-2", p,
                                  weighted_integral_by_moments(ff, w), weighted_integral_by_expansion(ff, w)));
    }
    return out;
}

inline std::vector<WorkItem> verify_work(const RunConfig& c) {
    std::set<std::string> s(c.suites.begin(), c.suites.end());
    const bool all = s.count("all") != 0;
    auto on = [&](const char* name) { return all || s.count(name) != 0; };
    std::vector<WorkItem> w;
    if (on("cor51") || on("sums")) add_sums(w, c.jmax);
    if (on("cor52")) add_derivatives(w, c.jmax, c.qmax);
    if (on("complex")) {
        for (std::int64_t n = 0; n <= c.jmax; ++n) w.push_back([n] { return verify_complex_identities(n); });
    }
    if (on("chain")) {
        for (std::int64_t j = 0; j <= c.jmax; ++j) w.push_back([j] { return verify_2f1_chain(j); });
    }
    if (on("laurent")) {
        for (std::int64_t j = 0; j <= c.jmax; ++j) {
            w.push_back([j] {
                std::vector<IdentityReport> out;
                for (const auto& x0 : laurent_points()) out.push_back(verify_laurent_identity(j, x0));
                return out;
            });
        }
    }
    if (on("trig")) {
        for (std::int64_t j = 0; j <= c.jmax; ++j) {
            w.push_back([j] {
                std::vector<IdentityReport> out;
                for (int s = 0; s < kTrigSamples; ++s) out.push_back(verify_trig_identity(j, Rational(2 * s, kTrigSamples)));
                return out;
            });
        }
    }
    if (on("integrals")) {
        for (std::int64_t j = 0; j <= c.jmax; ++j) {
            for (std::int64_t k = 0; k <= j; ++k) w.push_back([j, k] { return integral_reports(j, k); });
        }
    }
    if (on("connection")) add_connection(w, c.jmax);
    if (on("hypergeom")) add_hypergeom(w, c.jmax);
    return w;
}

}  // namespace detail

/// Runs every item on `workers` threads. An exception escaping an item becomes
/// a Fail record carrying the message. The result is sorted.
inline std::vector<IdentityReport> run_work(const std::vector<WorkItem>& items, unsigned workers) {
    std::vector<std::vector<IdentityReport>> slots(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) {
            try {
                slots[i] = items[i]();
            } catch (const std::exception& e) {
                IdentityReport r;
                r.id = "error";
                r.params = {{"item", Rational(static_cast<long long>(i))}};
                r.status = Status::Fail;
                r.note = e.what();
                slots[i] = {std::move(r)};
            }
        }
    };
    const unsigned n = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(items.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::vector<IdentityReport> out;
    for (auto& s : slots) std::move(s.begin(), s.end(), std::back_inserter(out));
    std::stable_sort(out.begin(), out.end(), report_less);
    return out;
}

inline std::vector<IdentityReport> run_verification(const RunConfig& c) {
    return run_work(detail::verify_work(c), c.workers);
}

namespace detail {

inline std::string params_text(const IdentityReport& r) {
    std::string s;
    for (const auto& p : r.params) {
        if (!s.empty()) s += ' ';
        s += p.name + "=" + to_string(p.value);
    }
    return s;
}

inline int emit_verification(const RunConfig& c, const std::vector<IdentityReport>& reports, std::ostream& out) {
    std::map<std::string, std::map<std::string, std::size_t>> per_id;
    std::map<std::string, std::size_t> totals{{"Pass", 0}, {"Fail", 0}, {"PaperErratum", 0}, {"Unevaluable", 0}};
    for (const auto& r : reports) {
        ++per_id[r.id][to_string(r.status)];
        ++totals[to_string(r.status)];
    }
    const bool failed = totals["Fail"] != 0;

    if (c.format == OutputFormat::Json) {
        Json j;
        j["command"] = "verify";
        j["suites"] = c.suites;
        j["jmax"] = c.jmax;
        j["qmax"] = c.qmax;
        Json summary = {{"total", reports.size()}};
        for (const auto& [k, v] : totals) summary[k] = v;
        j["summary"] = std::move(summary);
        Json ids = Json::object();
        for (const auto& [id, counts] : per_id) {
            Json cj = Json::object();
            for (const auto& [k, v] : counts) cj[k] = v;
            ids[id] = std::move(cj);
        }
        j["identities"] = std::move(ids);
        Json records = Json::array();
        for (const auto& r : reports) {
            if (r.status != Status::Pass) records.push_back(to_json(r));
        }
        j["records"] = std::move(records);
        out << j.dump(2) << '\n';
    } else {
        for (const auto& r : reports) {
            if (r.status == Status::Pass) continue;
            out << to_string(r.status) << ' ' << r.id << " [" << params_text(r) << "] lhs=" << to_string(r.lhs)
                << " rhs=" << to_string(r.rhs) << " residual=" << to_string(r.residual);
            if (!std::holds_alternative<std::monostate>(r.reference)) {
                out << " reference=" << to_string(r.reference) << " reference_residual=" << to_string(r.reference_residual);
            }
            if (!r.note.empty()) out << " (" << r.note << ')';
            out << '\n';
        }
        for (const auto& [id, counts] : per_id) {
            out << id << ':';
            for (const auto& [k, v] : counts) out << ' ' << k << '=' << v;
            out << '\n';
        }
        out << "total: " << reports.size();
        for (const auto& [k, v] : totals) out << ' ' << k << '=' << v;
        out << '\n';
    }
    return failed ? 1 : 0;
}

inline int emit_table(const RunConfig& c, std::ostream& out) {
    const ConnectionDirection d = c.direction;
    const std::string sym = symbol(target_kind(d));
    if (c.format == OutputFormat::Json) {
        Json rows = Json::array();
        for (std::int64_t j = min_source_index(d); j <= c.jmax; ++j) {
            for (const auto& t : expand(j, d).terms) {
                rows.push_back({{"j", j},
                                {"m", t.m},
                                {"target", sym + "_" + std::to_string(t.target_index)},
                                {"degree", t.target_degree},
                                {"coefficient", to_string(t.coefficient)}});
            }
        }
        Json j;
        j["direction"] = to_string(d);
        j["jmax"] = c.jmax;
        j["rows"] = std::move(rows);
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "j,m,target,coefficient\n";
    for (std::int64_t j = min_source_index(d); j <= c.jmax; ++j) {
        for (const auto& t : expand(j, d).terms) {
            out << j << ',' << t.m << ',' << sym << '_' << t.target_index << ',' << to_string(t.coefficient) << '\n';
        }
    }
    return 0;
}

inline int emit_integral(const RunConfig& c, std::ostream& out) {
    IntegralResult r = [&] {
        if (c.integral_kind == "ft") return integral_fib_chebT(c.j, c.k);
        if (c.integral_kind == "fu") return integral_fib_chebU(c.j, c.k);
        if (c.integral_kind == "ff1") return integral_fib_fib(c.j, c.k, ChebyshevWeight::FirstKind, c.dm);
        return integral_fib_fib(c.j, c.k, ChebyshevWeight::SecondKind);
    }();
    if (c.format == OutputFormat::Json) {
        Json j;
        j["kind"] = c.integral_kind;
        j["j"] = c.j;
        j["k"] = c.k;
        j["value"] = to_string(r.value);
        j["report"] = to_json(r.report);
        out << j.dump(2) << '\n';
    } else {
        out << "value: " << to_string(r.value) << '\n';
        out << "printed: " << (std::holds_alternative<std::monostate>(r.report.rhs) ? "unevaluable" : to_string(r.report.rhs))
            << '\n';
        if (!std::holds_alternative<std::monostate>(r.report.reference)) {
            out << "reference: " << to_string(r.report.reference) << '\n';
        }
        out << "status: " << to_string(r.report.status) << '\n';
        if (!r.report.note.empty()) out << "note: " << r.report.note << '\n';
    }
    return r.report.status == Status::Fail ? 1 : 0;
}

inline int emit_eval(const RunConfig& c, std::ostream& out) {
    Hypergeom2F1Spec spec;
    try {
        spec = {parse_rational(c.eval_args[0]), parse_rational(c.eval_args[1]), parse_rational(c.eval_args[2]),
                parse_rational(c.eval_args[3])};
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    Rational value;
    try {
        value = eval_2f1(spec);
    } catch (const std::domain_error& e) {
        throw ConfigError(e.what());
    }
    out << to_string(value) << '\n';
    return 0;
}

}  // namespace detail

/// Executes one configured run. Diagnostics go to `err`.
inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        validate(c);
        switch (c.subcommand) {
            case Subcommand::Table: return detail::emit_table(c, out);
            case Subcommand::Verify: return detail::emit_verification(c, run_verification(c), out);
            case Subcommand::Integrate: return detail::emit_integral(c, out);
            case Subcommand::Eval: return detail::emit_eval(c, out);
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace fibcheb
