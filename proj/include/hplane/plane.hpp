#pragma once

#include "hplane/param_poly.hpp"
#include "hplane/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace hplane {

/// One deformation parameter: either the symbolic generator or an exact
/// rational evaluation.
class ParamValue {
  public:
    static ParamValue sym() { return ParamValue(std::nullopt); }
    static ParamValue of(Rational r) { return ParamValue(std::move(r)); }

    /// "sym" or a rational literal such as "2", "-1", "1/2".
    static ParamValue parse(const std::string& text) {
        if (text == "sym") return sym();
        return of(Rational::from_string(text));
    }

    bool is_symbolic() const { return !v_.has_value(); }

    const Rational& value() const {
        if (!v_) throw std::logic_error("ParamValue: symbolic parameter has no rational value");
        return *v_;
    }

    bool equals(const Rational& r) const { return v_ && *v_ == r; }

    std::optional<Rational> as_optional() const { return v_; }

    std::string str() const { return v_ ? v_->str() : "sym"; }

    friend bool operator==(const ParamValue&, const ParamValue&) = default;

  private:
    explicit ParamValue(std::optional<Rational> v) : v_(std::move(v)) {}
    std::optional<Rational> v_;
};

/// The pair (q, h) fixing the rewriting rule x*y -> q*y*x + h*y^2.
///
/// (q = 1, symbolic h) is the h-deformed plane, (symbolic q, h = 0) is the
/// Manin plane, and (1, 0) is the classical commuting plane.
struct PlaneSpec {
    ParamValue q = ParamValue::sym();
    ParamValue h = ParamValue::sym();

    static PlaneSpec h_plane() { return {ParamValue::of(1), ParamValue::sym()}; }
    static PlaneSpec manin_plane() { return {ParamValue::sym(), ParamValue::of(0)}; }
    static PlaneSpec classical() { return {ParamValue::of(1), ParamValue::of(0)}; }
    static PlaneSpec symbolic() { return {ParamValue::sym(), ParamValue::sym()}; }
    static PlaneSpec at(ParamValue q_val, ParamValue h_val) { return {std::move(q_val), std::move(h_val)}; }

    /// q as an element of the coefficient ring.
    ParamPoly q_coeff() const { return q.is_symbolic() ? ParamPoly::q() : ParamPoly(q.value()); }
    /// h as an element of the coefficient ring.
    ParamPoly h_coeff() const { return h.is_symbolic() ? ParamPoly::h() : ParamPoly(h.value()); }

    std::string str() const { return "q=" + q.str() + ", h=" + h.str(); }

    friend bool operator==(const PlaneSpec&, const PlaneSpec&) = default;
};

}  // namespace hplane
