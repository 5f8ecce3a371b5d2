#pragma once

#include "hplane/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>

namespace hplane {

/// One q^i * h^j power product in the parameter ring.
struct ParamMonomial {
    unsigned q_deg = 0;
    unsigned h_deg = 0;

    // storage and display order: by h-degree, then q-degree
    friend std::strong_ordering operator<=>(const ParamMonomial& a, const ParamMonomial& b) {
        return std::tie(a.h_deg, a.q_deg) <=> std::tie(b.h_deg, b.q_deg);
    }
    friend bool operator==(const ParamMonomial&, const ParamMonomial&) = default;
};

/// Sparse polynomial in the deformation parameters q and h over Rational.
///
/// Canonical sparse form: no stored coefficient is zero, so equality is
/// equality of the underlying term maps. This is the coefficient ring of
/// everything else in the library.
class ParamPoly {
  public:
    using TermMap = std::map<ParamMonomial, Rational>;

    ParamPoly() = default;  // zero
    ParamPoly(const Rational& c) { if (!c.is_zero()) terms_[{0, 0}] = c; }
    ParamPoly(int c) : ParamPoly(Rational(c)) {}

    static ParamPoly q() { return monomial(1, 0); }
    static ParamPoly h() { return monomial(0, 1); }
    static ParamPoly one() { return ParamPoly(1); }

    static ParamPoly monomial(unsigned q_deg, unsigned h_deg, const Rational& c = Rational(1)) {
        ParamPoly p;
        if (!c.is_zero()) p.terms_[{q_deg, h_deg}] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_constant() const;

    /// Value of a constant polynomial (zero for the zero polynomial).
    /// Throws std::logic_error if a parameter still occurs.
    Rational constant_value() const;

    Rational coeff(unsigned q_deg, unsigned h_deg) const;

    int deg_q() const;  // -1 for the zero polynomial
    int deg_h() const;

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const Rational& c);

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }
    friend ParamPoly operator*(const Rational& c, ParamPoly a) { return a *= c; }

    ParamPoly pow(unsigned e) const;

    /// Evaluation homomorphism: substitutes the given rational values for q
    /// and/or h; a parameter left unset stays symbolic.
    ParamPoly eval(const std::optional<Rational>& q_val, const std::optional<Rational>& h_val) const;

    /// Exact division: returns the quotient iff divisor divides *this in
    /// Q[q, h], otherwise nullopt. Throws std::domain_error for a zero divisor.
    std::optional<ParamPoly> try_divide(const ParamPoly& divisor) const;

    /// Canonical text form, terms by (h-degree, q-degree) ascending,
    /// e.g. "1 + 3*h + 2*h^2" or "3/2*q^2*h".
    std::string str() const;

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.str(); }

  private:
    void add_term(const ParamMonomial& m, const Rational& c);
    TermMap terms_;
};

/// [c]_q = 1 + q + ... + q^{c-1}; zero for c = 0.
ParamPoly q_integer(unsigned c);

}  // namespace hplane
