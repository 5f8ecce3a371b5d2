// hplane: exact-arithmetic CLI for the deformed plane x*y = q*y*x + h*y^2.
//
// Exit codes: 0 success, 1 verification/mismatch failure, 2 usage or parse error.

#include "hplane/binomials.hpp"
#include "hplane/expr.hpp"
#include "hplane/ncpoly.hpp"
#include "hplane/plane.hpp"
#include "hplane/render.hpp"
#include "hplane/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace hplane;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

NCPolynomial x_plus_y() { return NCPolynomial::x() + NCPolynomial::y(); }

PlaneSpec plane_from(const std::string& q_text, const std::string& h_text) {
    return {ParamValue::parse(q_text), ParamValue::parse(h_text)};
}

// (x+y)^n via the h-binomial closed form, evaluated at the plane's h
NCPolynomial closed_h_expansion(unsigned n, const ParamValue& h) {
    NCPolynomial p;
    for (unsigned k = 0; k <= n; ++k)
        p.add_term({k, n - k}, h_binomial(n, k).eval(std::nullopt, h.as_optional()));
    return p;
}

// (x+y)^n via the Gaussian binomial closed form, evaluated at the plane's q
NCPolynomial closed_q_expansion(unsigned n, const ParamValue& q) {
    NCPolynomial p;
    for (unsigned k = 0; k <= n; ++k)
        p.add_term({k, n - k}, q_binomial(n, k).eval(q.as_optional(), std::nullopt));
    return p;
}

void emit(const std::string& document) { std::cout << document; }

std::string json_doc(const ordered_json& j) { return j.dump(2) + "\n"; }

int run_expand(unsigned n, const PlaneSpec& plane, Format format) {
    // batched commutation: same values as word-by-word rewriting (the verify
    // suite enforces that), but polynomial cost, so large n stays usable
    const NCPolynomial expansion = nc_pow(x_plus_y(), n, plane, MulStrategy::batched);

    std::optional<NCPolynomial> closed;
    std::string closed_kind;
    if (plane.q.equals(Rational(1))) {
        closed = closed_h_expansion(n, plane.h);
        closed_kind = "h-binomial";
    } else if (plane.h.equals(Rational(0))) {
        closed = closed_q_expansion(n, plane.q);
        closed_kind = "q-binomial";
    }
    const bool match = !closed || *closed == expansion;
    if (!match) {
        std::cerr << "expand: brute-force expansion disagrees with the " << closed_kind
                  << " closed form\n  expansion   = " << expansion.str()
                  << "\n  closed form = " << closed->str() << "\n";
        return kExitVerifyFailure;
    }

    switch (format) {
        case Format::table: {
            std::ostringstream os;
            os << "(x+y)^" << n << "  [" << plane.str() << "]\n";
            os << "expansion   = " << expansion.str() << "\n";
            if (closed) {
                os << "closed form = " << closed->str() << "  (" << closed_kind << ")\n";
                os << "cross-check = ok\n";
            }
            emit(os.str());
            break;
        }
        case Format::json: {
            ordered_json j;
            j["plane"] = plane_json(plane);
            j["n"] = n;
            j["terms"] = ncpoly_json(expansion);
            if (closed) {
                j["closed_form"] = ordered_json{{"kind", closed_kind}, {"terms", ncpoly_json(*closed)}};
                j["cross_check"] = "ok";
            }
            emit(json_doc(j));
            break;
        }
        case Format::latex:
            emit("(x+y)^{" + std::to_string(n) + "} = " + ncpoly_latex(expansion) + "\n");
            break;
    }
    return kExitOk;
}

int run_coeff(unsigned n, long long k, const PlaneSpec& plane, Format format) {
    struct Route {
        std::string name;
        ParamPoly value;
    };
    std::vector<Route> routes;

    const bool in_range = k >= 0 && k <= static_cast<long long>(n);
    const NCPolynomial expansion = nc_pow(x_plus_y(), n, plane, MulStrategy::batched);
    const ParamPoly value =
        in_range ? expansion.coeff(static_cast<unsigned>(k), n - static_cast<unsigned>(k)) : ParamPoly();
    routes.push_back({"expansion (batched commutation)", value});

    // word-by-word rewriting visits exponentially many intermediate words,
    // so only use it as a cross-check at desk scale
    if (n <= 14) {
        const NCPolynomial naive = nc_pow(x_plus_y(), n, plane, MulStrategy::naive);
        ParamPoly via_naive =
            in_range ? naive.coeff(static_cast<unsigned>(k), n - static_cast<unsigned>(k)) : ParamPoly();
        routes.push_back({"expansion (naive rewriting)", via_naive});
    }

    if (plane.q.equals(Rational(1))) {
        routes.push_back(
            {"h-binomial closed form", h_binomial(n, k).eval(std::nullopt, plane.h.as_optional())});
        if (in_range) {
            ParamPoly rec = h_binomial_table(n).entry(n, static_cast<unsigned>(k))
                                .eval(std::nullopt, plane.h.as_optional());
            routes.push_back({"recurrence triangle", rec});
        }
    } else if (plane.h.equals(Rational(0))) {
        routes.push_back(
            {"Gaussian binomial (recurrence)", q_binomial(n, k).eval(plane.q.as_optional(), std::nullopt)});
        if (in_range) {
            ParamPoly num = q_pochhammer(ParamPoly::q(), n);
            ParamPoly den = q_pochhammer(ParamPoly::q(), static_cast<unsigned>(k)) *
                            q_pochhammer(ParamPoly::q(), n - static_cast<unsigned>(k));
            auto quotient = num.try_divide(den);
            if (!quotient) {
                std::cerr << "coeff: q-Pochhammer quotient is not an exact polynomial\n";
                return kExitVerifyFailure;
            }
            routes.push_back({"Pochhammer quotient", quotient->eval(plane.q.as_optional(), std::nullopt)});
        }
    }

    bool match = true;
    for (const Route& r : routes) match = match && r.value == value;
    if (!match) {
        std::cerr << "coeff: provenance routes disagree for n=" << n << " k=" << k << "\n";
        for (const Route& r : routes) std::cerr << "  " << r.name << " = " << r.value.str() << "\n";
        return kExitVerifyFailure;
    }

    switch (format) {
        case Format::table: {
            std::ostringstream os;
            os << "[" << n << " " << k << "]  [" << plane.str() << "]\n";
            os << "value = " << value.str() << "\n";
            if (!in_range) os << "out of range: zero by convention\n";
            for (const Route& r : routes)
                os << "  via " << r.name << " = " << r.value.str() << "\n";
            os << "cross-check = ok\n";
            emit(os.str());
            break;
        }
        case Format::json: {
            ordered_json j;
            j["plane"] = plane_json(plane);
            j["n"] = n;
            j["k"] = k;
            j["coeff"] = param_poly_json(value);
            ordered_json prov = ordered_json::array();
            for (const Route& r : routes)
                prov.push_back(ordered_json{{"route", r.name}, {"coeff", param_poly_json(r.value)}});
            j["provenance"] = std::move(prov);
            j["cross_check"] = "ok";
            emit(json_doc(j));
            break;
        }
        case Format::latex: {
            std::ostringstream os;
            os << "\\left[\\begin{smallmatrix}" << n << "\\\\" << k << "\\end{smallmatrix}\\right]_{"
               << plane.q.str() << "," << plane.h.str() << "} = " << param_poly_latex(value) << "\n";
            emit(os.str());
            break;
        }
    }
    return kExitOk;
}

int run_table(unsigned n_max, unsigned limit, const PlaneSpec& plane, Format format) {
    if (n_max > limit) {
        std::cerr << "table: max-n " << n_max << " exceeds the configured limit " << limit << "\n";
        return kExitUsage;
    }
    if (!plane.q.equals(Rational(1))) {
        std::cerr << "table: the coefficient triangle is defined in the q = 1 plane; pass --q 1\n";
        return kExitUsage;
    }

    CoeffTable table = h_binomial_table(n_max);
    for (unsigned n = 0; n <= n_max; ++n)
        for (unsigned k = 0; k <= n; ++k)
            if (table.entry(n, k) != h_binomial(n, k)) {
                std::cerr << "table: recurrence entry (" << n << ", " << k
                          << ") disagrees with the closed form\n  recurrence  = "
                          << table.entry(n, k).str() << "\n  closed form = " << h_binomial(n, k).str()
                          << "\n";
                return kExitVerifyFailure;
            }

    auto entry_at = [&](unsigned n, unsigned k) {
        return table.entry(n, k).eval(std::nullopt, plane.h.as_optional());
    };

    switch (format) {
        case Format::table: {
            std::ostringstream os;
            os << "h-binomial triangle up to n=" << n_max << "  [" << plane.str() << "]\n";
            for (unsigned n = 0; n <= n_max; ++n) {
                os << "n=" << n << ":";
                for (unsigned k = 0; k <= n; ++k) os << "  " << entry_at(n, k).str();
                os << "\n";
            }
            emit(os.str());
            break;
        }
        case Format::json: {
            ordered_json j;
            j["plane"] = plane_json(plane);
            j["n_max"] = n_max;
            ordered_json rows = ordered_json::array();
            for (unsigned n = 0; n <= n_max; ++n) {
                ordered_json entries = ordered_json::array();
                for (unsigned k = 0; k <= n; ++k) entries.push_back(param_poly_json(entry_at(n, k)));
                rows.push_back(ordered_json{{"n", n}, {"entries", std::move(entries)}});
            }
            j["rows"] = std::move(rows);
            emit(json_doc(j));
            break;
        }
        case Format::latex: {
            std::ostringstream os;
            os << "\\begin{array}{l}\n";
            for (unsigned n = 0; n <= n_max; ++n) {
                for (unsigned k = 0; k <= n; ++k)
                    os << (k ? " \\quad " : "") << param_poly_latex(entry_at(n, k));
                os << " \\\\\n";
            }
            os << "\\end{array}\n";
            emit(os.str());
            break;
        }
    }
    return kExitOk;
}

int run_normalize(const std::string& text, const PlaneSpec& plane, Format format) {
    ExprPtr e = parse(text);  // ParseError handled by the caller
    NCPolynomial normal = evaluate(*e, plane);
    switch (format) {
        case Format::table:
            emit(normal.str() + "\n");
            break;
        case Format::json: {
            ordered_json j;
            j["plane"] = plane_json(plane);
            j["terms"] = ncpoly_json(normal);
            emit(json_doc(j));
            break;
        }
        case Format::latex:
            emit(ncpoly_latex(normal) + "\n");
            break;
    }
    return kExitOk;
}

int run_verify(unsigned max_n, bool inject_fault, Format format) {
    if (format == Format::latex) {
        std::cerr << "verify: latex output is not supported; use table or json\n";
        return kExitUsage;
    }
    const std::vector<CheckResult> results = run_verification({max_n, inject_fault});
    const bool passed = all_passed(results);

    if (format == Format::json) {
        ordered_json j;
        j["max_n"] = max_n;
        ordered_json checks = ordered_json::array();
        for (const CheckResult& r : results) {
            ordered_json c{{"name", r.name}, {"scope", r.scope}, {"passed", r.passed}};
            if (!r.passed) c["counterexample"] = r.counterexample;
            checks.push_back(std::move(c));
        }
        j["checks"] = std::move(checks);
        j["passed"] = passed;
        emit(json_doc(j));
    } else {
        std::ostringstream os;
        std::size_t ok = 0;
        for (const CheckResult& r : results) {
            os << (r.passed ? "   ok  " : " FAIL  ") << std::left << std::setw(26) << r.name << " "
               << r.scope << "\n";
            if (!r.passed)
                os << "       counterexample: " << r.counterexample << "\n";
            else
                ++ok;
        }
        os << "verification: " << ok << "/" << results.size() << " checks passed (max_n = " << max_n
           << ")\n";
        emit(os.str());
    }
    return passed ? kExitOk : kExitVerifyFailure;
}

struct BenchRow {
    std::string name;
    MulStrategy strategy;
    Exec exec;
};

int run_bench(unsigned max_n, const std::vector<std::string>& strategy_names, const PlaneSpec& plane,
              Format format) {
    if (format == Format::latex) {
        std::cerr << "bench: latex output is not supported; use table or json\n";
        return kExitUsage;
    }
    if (strategy_names.empty()) {
        std::cerr << "bench: nothing to benchmark; pass at least one --strategy\n";
        return kExitUsage;
    }
    std::vector<BenchRow> rows;
    for (const std::string& name : strategy_names) {
        if (name == "naive")
            rows.push_back({name, MulStrategy::naive, Exec::serial});
        else if (name == "batched")
            rows.push_back({name, MulStrategy::batched, Exec::serial});
        else if (name == "naive-omp")
            rows.push_back({name, MulStrategy::naive, Exec::parallel});
        else if (name == "batched-omp")
            rows.push_back({name, MulStrategy::batched, Exec::parallel});
        else {
            std::cerr << "bench: unknown strategy \"" << name
                      << "\" (expected naive, batched, naive-omp or batched-omp)\n";
            return kExitUsage;
        }
    }

    struct Timing {
        double ms;
        NCPolynomial result;
    };
    std::vector<Timing> timings;
    for (const BenchRow& row : rows) {
        auto t0 = std::chrono::steady_clock::now();
        NCPolynomial r = nc_pow(x_plus_y(), max_n, plane, row.strategy, row.exec);
        auto t1 = std::chrono::steady_clock::now();
        timings.push_back({std::chrono::duration<double, std::milli>(t1 - t0).count(), std::move(r)});
    }

    for (std::size_t i = 1; i < timings.size(); ++i)
        if (timings[i].result != timings[0].result) {
            std::cerr << "bench: strategies \"" << rows[0].name << "\" and \"" << rows[i].name
                      << "\" disagree on nc_pow(x+y, " << max_n << ")\n  " << rows[0].name << " = "
                      << timings[0].result.str() << "\n  " << rows[i].name << " = "
                      << timings[i].result.str() << "\n";
            return kExitVerifyFailure;
        }

    if (format == Format::json) {
        ordered_json j;
        j["plane"] = plane_json(plane);
        j["max_n"] = max_n;
        ordered_json out_rows = ordered_json::array();
        for (std::size_t i = 0; i < rows.size(); ++i)
            out_rows.push_back(ordered_json{{"strategy", rows[i].name},
                                            {"milliseconds", timings[i].ms},
                                            {"terms", timings[i].result.term_count()}});
        j["rows"] = std::move(out_rows);
        j["results_equal"] = true;
        emit(json_doc(j));
    } else {
        std::ostringstream os;
        os << "nc_pow(x+y, " << max_n << ")  [" << plane.str() << "]\n";
        os << std::left << std::setw(14) << "strategy" << std::right << std::setw(12) << "time_ms"
           << std::setw(8) << "terms" << "\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            os << std::left << std::setw(14) << rows[i].name << std::right << std::setw(12)
               << std::fixed << std::setprecision(3) << timings[i].ms << std::setw(8)
               << timings[i].result.term_count() << "\n";
        }
        os << "results equal: yes\n";
        emit(os.str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic kernel for the deformed plane x*y = q*y*x + h*y^2"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // frees -h / --h for the deformation parameter

    struct {
        unsigned n = 0;
        long long k = 0;
        unsigned max_n = 12;
        unsigned limit = 64;
        std::string q = "1";
        std::string h = "sym";
        std::string format = "table";
        std::string expr_text;
        std::vector<std::string> strategies;
        bool inject_fault = false;
    } opt;

    auto add_plane_opts = [&](CLI::App* cmd) {
        cmd->set_help_flag("--help", "print help");
        cmd->add_option("--q", opt.q, "q as a rational (e.g. 2, -1, 1/2) or \"sym\"")
            ->capture_default_str();
        cmd->add_option("--h", opt.h, "h as a rational or \"sym\"")->capture_default_str();
    };
    auto add_format_opt = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format: table, json or latex")
            ->capture_default_str();
    };

    CLI::App* expand = app.add_subcommand("expand", "expand (x+y)^n to normal order");
    expand->add_option("--n", opt.n, "power to expand")->required();
    add_plane_opts(expand);
    add_format_opt(expand);

    CLI::App* coeff = app.add_subcommand("coeff", "coefficient of y^k x^{n-k} in (x+y)^n");
    coeff->add_option("--n", opt.n, "row")->required();
    coeff->add_option("--k", opt.k, "column (out of range yields 0)")->required();
    add_plane_opts(coeff);
    add_format_opt(coeff);

    CLI::App* table = app.add_subcommand("table", "coefficient triangle rows 0..max-n");
    table->add_option("--max-n", opt.max_n, "largest row")->required();
    table->add_option("--limit", opt.limit, "largest allowed max-n")->capture_default_str();
    add_plane_opts(table);
    add_format_opt(table);

    CLI::App* normalize = app.add_subcommand("normalize", "normal form of an expression in x, y");
    normalize->add_option("expr", opt.expr_text, "expression, e.g. \"x*y^2 - y^2*x\"")->required();
    add_plane_opts(normalize);
    add_format_opt(normalize);

    CLI::App* verify = app.add_subcommand("verify", "run the cross-verification suite");
    verify->add_option("--max-n", opt.max_n, "sweep bound")->capture_default_str();
    verify->add_flag("--inject-fault", opt.inject_fault)->group("");  // test hook, hidden
    add_format_opt(verify);

    CLI::App* bench = app.add_subcommand("bench", "time nc_pow(x+y, max-n) per strategy");
    bench->add_option("--max-n", opt.max_n, "power to time")->capture_default_str();
    bench->add_option("--strategy", opt.strategies,
                      "naive, batched, naive-omp or batched-omp (repeatable)");
    add_plane_opts(bench);
    add_format_opt(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const Format format = parse_format(opt.format);
        if (*expand) return run_expand(opt.n, plane_from(opt.q, opt.h), format);
        if (*coeff) return run_coeff(opt.n, opt.k, plane_from(opt.q, opt.h), format);
        if (*table) return run_table(opt.max_n, opt.limit, plane_from(opt.q, opt.h), format);
        if (*normalize) return run_normalize(opt.expr_text, plane_from(opt.q, opt.h), format);
        if (*verify) return run_verify(opt.max_n, opt.inject_fault, format);
        if (*bench) return run_bench(opt.max_n, opt.strategies, plane_from(opt.q, opt.h), format);
    } catch (const ParseError& e) {
        std::cerr << "parse error " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
    return kExitUsage;
}
