#include "hplane/param_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace hplane {

bool ParamPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == ParamMonomial{0, 0} &&
           terms_.begin()->second.is_one();
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ParamMonomial{0, 0});
}

Rational ParamPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("ParamPoly: not a constant: " + str());
    return terms_.begin()->second;
}

Rational ParamPoly::coeff(unsigned q_deg, unsigned h_deg) const {
    auto it = terms_.find({q_deg, h_deg});
    return it == terms_.end() ? Rational(0) : it->second;
}

int ParamPoly::deg_q() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.q_deg));
    return d;
}

int ParamPoly::deg_h() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.h_deg);
}

void ParamPoly::add_term(const ParamMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term({ma.q_deg + mb.q_deg, ma.h_deg + mb.h_deg}, ca * cb);
    return r;
}

ParamPoly ParamPoly::pow(unsigned e) const {
    ParamPoly r = one();
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

ParamPoly ParamPoly::eval(const std::optional<Rational>& q_val,
                          const std::optional<Rational>& h_val) const {
    ParamPoly r;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        ParamMonomial out = m;
        if (q_val) {
            v *= q_val->pow(m.q_deg);
            out.q_deg = 0;
        }
        if (h_val) {
            v *= h_val->pow(m.h_deg);
            out.h_deg = 0;
        }
        r.add_term(out, v);
    }
    return r;
}

std::optional<ParamPoly> ParamPoly::try_divide(const ParamPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("ParamPoly: division by zero polynomial");
    ParamPoly quotient;
    ParamPoly rem = *this;
    const auto& [dm, dc] = *divisor.terms_.rbegin();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.rbegin();
        if (rm.q_deg < dm.q_deg || rm.h_deg < dm.h_deg) return std::nullopt;
        ParamPoly t = monomial(rm.q_deg - dm.q_deg, rm.h_deg - dm.h_deg, rc / dc);
        quotient += t;
        rem -= t * divisor;
    }
    return quotient;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool has_vars = m.q_deg > 0 || m.h_deg > 0;
        bool printed = false;
        if (!a.is_one() || !has_vars) {
            os << a.str();
            printed = true;
        }
        if (m.q_deg > 0) {
            if (printed) os << "*";
            os << "q";
            if (m.q_deg > 1) os << "^" << m.q_deg;
            printed = true;
        }
        if (m.h_deg > 0) {
            if (printed) os << "*";
            os << "h";
            if (m.h_deg > 1) os << "^" << m.h_deg;
        }
    }
    return os.str();
}

ParamPoly q_integer(unsigned c) {
    ParamPoly r;
    for (unsigned i = 0; i < c; ++i) r += ParamPoly::monomial(i, 0);
    return r;
}

}  // namespace hplane
