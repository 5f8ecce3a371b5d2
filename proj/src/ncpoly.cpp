#include "hplane/ncpoly.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <random>
#include <sstream>
#include <stdexcept>

namespace hplane {

ParamPoly NCPolynomial::coeff(unsigned y_exp, unsigned x_exp) const {
    auto it = terms_.find({y_exp, x_exp});
    return it == terms_.end() ? ParamPoly() : it->second;
}

void NCPolynomial::add_term(const NormalMonomial& m, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPolynomial NCPolynomial::operator-() const {
    NCPolynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

NCPolynomial& NCPolynomial::operator*=(const ParamPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    // Q[q, h] has no zero divisors, so no term can vanish here
    for (auto& [m, v] : terms_) v = v * c;
    return *this;
}

NCPolynomial NCPolynomial::eval(const std::optional<Rational>& q_val,
                                const std::optional<Rational>& h_val) const {
    NCPolynomial r;
    for (const auto& [m, c] : terms_) r.add_term(m, c.eval(q_val, h_val));
    return r;
}

std::string NCPolynomial::str() const {
    if (terms_.empty()) return "0";
    auto mono_str = [](const NormalMonomial& m) {
        std::ostringstream os;
        if (m.y_exp > 0) {
            os << "y";
            if (m.y_exp > 1) os << "^" << m.y_exp;
        }
        if (m.x_exp > 0) {
            if (m.y_exp > 0) os << "*";
            os << "x";
            if (m.x_exp > 1) os << "^" << m.x_exp;
        }
        return os.str();
    };
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono = mono_str(m);
        int sign = 1;
        std::string coeff_text;
        if (c.terms().size() == 1) {
            const auto& [pm, r] = *c.terms().begin();
            sign = r.sign();
            coeff_text = ParamPoly::monomial(pm.q_deg, pm.h_deg, r.abs()).str();
        } else {
            coeff_text = "(" + c.str() + ")";
        }
        if (first) {
            if (sign < 0) os << "-";
            first = false;
        } else {
            os << (sign < 0 ? " - " : " + ");
        }
        if (mono.empty())
            os << coeff_text;
        else if (coeff_text == "1")
            os << mono;
        else
            os << coeff_text << "*" << mono;
    }
    return os.str();
}

namespace {

// q^e in the coefficient ring of the plane
ParamPoly plane_q_power(const PlaneSpec& plane, unsigned e) {
    if (plane.q.is_symbolic()) return ParamPoly::monomial(e, 0);
    return ParamPoly(plane.q.value().pow(e));
}

// [c]_q = 1 + q + ... + q^{c-1} in the coefficient ring of the plane
ParamPoly plane_q_integer(const PlaneSpec& plane, unsigned c) {
    if (plane.q.is_symbolic()) return q_integer(c);
    Rational sum(0);
    Rational p(1);
    const Rational& qv = plane.q.value();
    for (unsigned i = 0; i < c; ++i) {
        sum += p;
        p *= qv;
    }
    return ParamPoly(sum);
}

}  // namespace

NCPolynomial normalize_word(const Word& word, const PlaneSpec& plane, RewriteOrder order,
                            std::uint64_t seed) {
    const ParamPoly q_c = plane.q_coeff();
    const ParamPoly h_c = plane.h_coeff();

    std::map<Word, ParamPoly> agenda;
    agenda.emplace(word, ParamPoly(1));
    auto push = [&agenda](Word&& w, ParamPoly&& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = agenda.try_emplace(std::move(w), std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) agenda.erase(it);
        }
    };

    NCPolynomial out;
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> sites;
    while (!agenda.empty()) {
        auto node = agenda.extract(agenda.begin());
        const Word w = std::move(node.key());
        const ParamPoly c = std::move(node.mapped());

        sites.clear();
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] == Gen::x && w[i + 1] == Gen::y) sites.push_back(i);
        if (sites.empty()) {
            unsigned y_exp = 0;
            for (Gen g : w)
                if (g == Gen::y) ++y_exp;
            out.add_term({y_exp, static_cast<unsigned>(w.size()) - y_exp}, c);
            continue;
        }

        std::size_t at;
        switch (order) {
            case RewriteOrder::leftmost: at = sites.front(); break;
            case RewriteOrder::rightmost: at = sites.back(); break;
            default: {
                std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
                at = sites[pick(rng)];
            }
        }

        // x*y -> q*y*x + h*y*y, in place; both children keep the word length
        Word swap_child = w;
        swap_child[at] = Gen::y;
        swap_child[at + 1] = Gen::x;
        push(std::move(swap_child), c * q_c);

        Word square_child = w;
        square_child[at] = Gen::y;
        push(std::move(square_child), c * h_c);
    }
    return out;
}

NCPolynomial commute_x_power_past_y_power(unsigned x_pow, unsigned y_pow, const PlaneSpec& plane) {
    const unsigned max_y = y_pow + x_pow;
    std::vector<ParamPoly> q_pow(max_y + 1), q_int(max_y + 1);
    for (unsigned e = 0; e <= max_y; ++e) {
        q_pow[e] = plane_q_power(plane, e);
        q_int[e] = plane_q_integer(plane, e);
    }
    const ParamPoly h_c = plane.h_coeff();

    NCPolynomial acc = NCPolynomial::monomial({y_pow, 0});
    for (unsigned step = 0; step < x_pow; ++step) {
        // x * y^a x^b = q^a y^a x^{b+1} + h [a]_q y^{a+1} x^b
        NCPolynomial next;
        for (const auto& [m, c] : acc.terms()) {
            next.add_term({m.y_exp, m.x_exp + 1}, c * q_pow[m.y_exp]);
            if (!h_c.is_zero() && m.y_exp > 0)
                next.add_term({m.y_exp + 1, m.x_exp}, c * h_c * q_int[m.y_exp]);
        }
        acc = std::move(next);
    }
    return acc;
}

NCPolynomial commute_x_past_y_power(unsigned c, const PlaneSpec& plane) {
    return commute_x_power_past_y_power(1, c, plane);
}

NCPolynomial commute_x_power_past_y(unsigned k, const PlaneSpec& plane) {
    return commute_x_power_past_y_power(k, 1, plane);
}

namespace {

NCPolynomial term_product(const NormalMonomial& lm, const ParamPoly& lc, const NormalMonomial& rm,
                          const ParamPoly& rc, const PlaneSpec& plane, MulStrategy strategy) {
    const ParamPoly c = lc * rc;
    if (c.is_zero()) return {};
    NCPolynomial out;
    if (strategy == MulStrategy::batched) {
        // y^a1 x^b1 * y^a2 x^b2 = y^a1 (x^b1 y^a2) x^b2
        NCPolynomial mid = commute_x_power_past_y_power(lm.x_exp, rm.y_exp, plane);
        for (const auto& [m, mc] : mid.terms())
            out.add_term({lm.y_exp + m.y_exp, m.x_exp + rm.x_exp}, c * mc);
    } else {
        Word w;
        w.reserve(lm.total_degree() + rm.total_degree());
        w.insert(w.end(), lm.y_exp, Gen::y);
        w.insert(w.end(), lm.x_exp, Gen::x);
        w.insert(w.end(), rm.y_exp, Gen::y);
        w.insert(w.end(), rm.x_exp, Gen::x);
        out = normalize_word(w, plane);
        out *= c;
    }
    return out;
}

}  // namespace

NCPolynomial nc_mul(const NCPolynomial& lhs, const NCPolynomial& rhs, const PlaneSpec& plane,
                    MulStrategy strategy, Exec exec) {
    using Entry = NCPolynomial::TermMap::value_type;
    std::vector<const Entry*> ls, rs;
    ls.reserve(lhs.term_count());
    rs.reserve(rhs.term_count());
    for (const auto& t : lhs.terms()) ls.push_back(&t);
    for (const auto& t : rhs.terms()) rs.push_back(&t);
    const std::size_t n_pairs = ls.size() * rs.size();

#ifdef _OPENMP
    if (exec == Exec::parallel && n_pairs > 0) {
        std::vector<NCPolynomial> partial(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
        {
            NCPolynomial& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 4)
            for (long idx = 0; idx < static_cast<long>(n_pairs); ++idx) {
                const Entry& l = *ls[static_cast<std::size_t>(idx) / rs.size()];
                const Entry& r = *rs[static_cast<std::size_t>(idx) % rs.size()];
                local += term_product(l.first, l.second, r.first, r.second, plane, strategy);
            }
        }
        // exact coefficients: accumulation order does not affect the result
        NCPolynomial out;
        for (const NCPolynomial& p : partial) out += p;
        return out;
    }
#else
    (void)exec;
#endif

    NCPolynomial out;
    for (const Entry* l : ls)
        for (const Entry* r : rs)
            out += term_product(l->first, l->second, r->first, r->second, plane, strategy);
    return out;
}

NCPolynomial nc_pow(const NCPolynomial& base, unsigned n, const PlaneSpec& plane,
                    MulStrategy strategy, Exec exec) {
    NCPolynomial acc = NCPolynomial::one();
    for (unsigned i = 0; i < n; ++i) acc = nc_mul(acc, base, plane, strategy, exec);
    return acc;
}

bool manin_transformation_holds(const Rational& q_val, const ParamValue& h_val) {
    if (q_val == Rational(1))
        throw std::domain_error("manin transformation: singular at q = 1");
    const PlaneSpec plane{ParamValue::of(q_val), h_val};
    // x' = x + h/(q-1) * y, y' = y
    const ParamPoly shear = plane.h_coeff() * (q_val - Rational(1)).inverse();
    const NCPolynomial x_prime = NCPolynomial::x() + NCPolynomial::monomial({1, 0}, shear);
    const NCPolynomial y_prime = NCPolynomial::y();
    const NCPolynomial lhs = nc_mul(x_prime, y_prime, plane);
    const NCPolynomial rhs = nc_mul(y_prime, x_prime, plane) * plane.q_coeff();
    return (lhs - rhs).is_zero();
}

}  // namespace hplane
