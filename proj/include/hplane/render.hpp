#pragma once

#include "hplane/ncpoly.hpp"
#include "hplane/param_poly.hpp"
#include "hplane/plane.hpp"

#include <json.hpp>

#include <string>

namespace hplane {

enum class Format { table, json, latex };

/// "table", "json" or "latex"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& text);

/// Coefficient polynomial as an array of {"q": i, "h": j, "num": "...", "den": "..."}
/// objects, ordered by (h-degree, q-degree) ascending. Big integers travel as
/// decimal strings.
nlohmann::ordered_json param_poly_json(const ParamPoly& p);

/// Normal form as an array of {"y": a, "x": b, "coeff": [...]} objects,
/// ordered by (a, b) ascending.
nlohmann::ordered_json ncpoly_json(const NCPolynomial& p);

/// {"q": "...", "h": "..."} with "sym" for symbolic parameters.
nlohmann::ordered_json plane_json(const PlaneSpec& plane);

std::string param_poly_latex(const ParamPoly& p);

/// LaTeX form with the y^k x^{n-k} monomial ordering.
std::string ncpoly_latex(const NCPolynomial& p);

}  // namespace hplane
