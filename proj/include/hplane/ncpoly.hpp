#pragma once

#include "hplane/param_poly.hpp"
#include "hplane/plane.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

namespace hplane {

/// Basis word y^a x^b of the deformed plane, all y's left of all x's.
struct NormalMonomial {
    unsigned y_exp = 0;
    unsigned x_exp = 0;

    unsigned total_degree() const { return y_exp + x_exp; }

    // (y-exponent, x-exponent) ascending; x^n comes first, y^n last
    friend std::strong_ordering operator<=>(const NormalMonomial& a, const NormalMonomial& b) {
        return std::tie(a.y_exp, a.x_exp) <=> std::tie(b.y_exp, b.x_exp);
    }
    friend bool operator==(const NormalMonomial&, const NormalMonomial&) = default;
};

/// Normal-ordered element of the deformed plane algebra: a finite map from
/// basis words y^a x^b to nonzero coefficients in Q[q, h].
///
/// The normal form is unique (the rewrite rule is confluent), so equality of
/// term maps is equality in the algebra.
class NCPolynomial {
  public:
    using TermMap = std::map<NormalMonomial, ParamPoly>;

    NCPolynomial() = default;  // zero

    static NCPolynomial zero() { return {}; }
    static NCPolynomial one() { return monomial({0, 0}); }
    static NCPolynomial x() { return monomial({0, 1}); }
    static NCPolynomial y() { return monomial({1, 0}); }
    static NCPolynomial scalar(const ParamPoly& c) { return monomial({0, 0}, c); }

    static NCPolynomial monomial(const NormalMonomial& m, const ParamPoly& c = ParamPoly(1)) {
        NCPolynomial p;
        if (!c.is_zero()) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    ParamPoly coeff(unsigned y_exp, unsigned x_exp) const;

    void add_term(const NormalMonomial& m, const ParamPoly& c);

    NCPolynomial operator-() const;
    NCPolynomial& operator+=(const NCPolynomial& o);
    NCPolynomial& operator-=(const NCPolynomial& o);
    NCPolynomial& operator*=(const ParamPoly& c);  // scalar scale

    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
    friend NCPolynomial operator*(NCPolynomial a, const ParamPoly& c) { return a *= c; }
    friend NCPolynomial operator*(const ParamPoly& c, NCPolynomial a) { return a *= c; }

    /// Applies the evaluation homomorphism to every coefficient.
    NCPolynomial eval(const std::optional<Rational>& q_val, const std::optional<Rational>& h_val) const;

    /// Text form, terms by (y-exponent, x-exponent) ascending,
    /// e.g. "y*x + h*y^2" or "x^2 + 2*y*x + (1 + h)*y^2".
    std::string str() const;

    friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NCPolynomial& a, const NCPolynomial& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const NCPolynomial& p) { return os << p.str(); }

  private:
    TermMap terms_;
};

enum class Gen : std::uint8_t { x, y };
using Word = std::vector<Gen>;

/// Which reducible x*y pair the rewriter picks at each step. All choices
/// reach the same normal form; leftmost is the default.
enum class RewriteOrder { leftmost, rightmost, random };

enum class MulStrategy { naive, batched };
enum class Exec { serial, parallel };

/// Normal form of a word over {x, y}: repeatedly replaces an adjacent pair
/// x*y by q*y*x + h*y^2 until all y's are left of all x's.
NCPolynomial normalize_word(const Word& word, const PlaneSpec& plane,
                            RewriteOrder order = RewriteOrder::leftmost, std::uint64_t seed = 0);

/// Normal form of x * y^c: q^c * y^c * x + h * [c]_q * y^{c+1}.
NCPolynomial commute_x_past_y_power(unsigned c, const PlaneSpec& plane);

/// Normal form of x^k * y; at q = 1 this is sum_r k!/(k-r)! h^r y^{r+1} x^{k-r}.
NCPolynomial commute_x_power_past_y(unsigned k, const PlaneSpec& plane);

/// Normal form of x^x_pow * y^y_pow, computed by commuting whole powers.
NCPolynomial commute_x_power_past_y_power(unsigned x_pow, unsigned y_pow, const PlaneSpec& plane);

/// Normal form of the noncommutative product lhs * rhs (left factor written
/// left). The naive strategy concatenates basis words and rewrites them one
/// step at a time; the batched strategy commutes whole powers. Both return
/// identical values; Exec::parallel distributes the term pairs over OpenMP
/// threads and produces the same map as the serial path.
NCPolynomial nc_mul(const NCPolynomial& lhs, const NCPolynomial& rhs, const PlaneSpec& plane,
                    MulStrategy strategy = MulStrategy::batched, Exec exec = Exec::serial);

/// n-fold product by repeated nc_mul; nc_pow(p, 0) = 1.
NCPolynomial nc_pow(const NCPolynomial& base, unsigned n, const PlaneSpec& plane,
                    MulStrategy strategy = MulStrategy::batched, Exec exec = Exec::serial);

/// Checks that x' = x + h/(q-1) * y, y' = y satisfy x'*y' = q*y'*x' in the
/// plane with relation x*y = q*y*x + h*y^2. Throws std::domain_error for
/// q = 1 (the transformation is singular there).
bool manin_transformation_holds(const Rational& q_val, const ParamValue& h_val);

}  // namespace hplane
