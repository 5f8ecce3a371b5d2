#include "hplane/render.hpp"

#include <sstream>
#include <stdexcept>

namespace hplane {

Format parse_format(const std::string& text) {
    if (text == "table") return Format::table;
    if (text == "json") return Format::json;
    if (text == "latex") return Format::latex;
    throw std::invalid_argument("unknown format \"" + text + "\" (expected table, json or latex)");
}

nlohmann::ordered_json param_poly_json(const ParamPoly& p) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::ordered_json term;
        term["q"] = m.q_deg;
        term["h"] = m.h_deg;
        term["num"] = c.num().get_str();
        term["den"] = c.den().get_str();
        arr.push_back(std::move(term));
    }
    return arr;
}

nlohmann::ordered_json ncpoly_json(const NCPolynomial& p) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::ordered_json term;
        term["y"] = m.y_exp;
        term["x"] = m.x_exp;
        term["coeff"] = param_poly_json(c);
        arr.push_back(std::move(term));
    }
    return arr;
}

nlohmann::ordered_json plane_json(const PlaneSpec& plane) {
    nlohmann::ordered_json j;
    j["q"] = plane.q.str();
    j["h"] = plane.h.str();
    return j;
}

namespace {

std::string rational_latex(const Rational& r) {
    if (r.is_integer()) return r.num().get_str();
    std::string sign = r.sign() < 0 ? "-" : "";
    return sign + "\\frac{" + r.num().get_str().substr(r.sign() < 0 ? 1 : 0) + "}{" +
           r.den().get_str() + "}";
}

void power_latex(std::ostream& os, const char* base, unsigned e) {
    if (e == 0) return;
    os << base;
    if (e > 1) os << "^{" << e << "}";
}

}  // namespace

std::string param_poly_latex(const ParamPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_vars = m.q_deg > 0 || m.h_deg > 0;
        if (!a.is_one() || !has_vars) os << rational_latex(a) << (has_vars ? " " : "");
        power_latex(os, "q", m.q_deg);
        if (m.q_deg > 0 && m.h_deg > 0) os << " ";
        power_latex(os, "h", m.h_deg);
    }
    return os.str();
}

std::string ncpoly_latex(const NCPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        // single-term coefficients contribute their sign to the joiner
        bool negative = c.terms().size() == 1 && c.terms().begin()->second.sign() < 0;
        os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        ParamPoly a = negative ? -c : c;
        bool scalar_term = m.y_exp == 0 && m.x_exp == 0;
        if (a.is_one()) {
            if (scalar_term) os << "1";
        } else if (a.terms().size() == 1) {
            os << param_poly_latex(a);
            if (!scalar_term) os << "\\, ";
        } else {
            os << "\\left(" << param_poly_latex(a) << "\\right)";
            if (!scalar_term) os << " ";
        }
        power_latex(os, "y", m.y_exp);
        if (m.y_exp > 0 && m.x_exp > 0) os << " ";
        power_latex(os, "x", m.x_exp);
    }
    return os.str();
}

}  // namespace hplane
