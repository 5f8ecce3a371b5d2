#include "hplane/binomials.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hplane {

Rational rising_factorial(const Rational& a, unsigned k) {
    Rational r(1);
    Rational f = a;
    for (unsigned i = 0; i < k; ++i) {
        r *= f;
        f += Rational(1);
    }
    return r;
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(std::move(f), 1);
}

Rational binomial(unsigned n, long long k) {
    if (k < 0 || k > static_cast<long long>(n)) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, static_cast<unsigned long>(k));
    return Rational(std::move(b), 1);
}

ParamPoly q_pochhammer(const ParamPoly& a, unsigned k) {
    ParamPoly r = ParamPoly::one();
    for (unsigned i = 0; i < k; ++i)
        r = r * (ParamPoly::one() - ParamPoly::monomial(i, 0) * a);
    return r;
}

ParamPoly q_binomial(unsigned n, long long k) {
    if (k < 0 || k > static_cast<long long>(n)) return ParamPoly();
    // one Pascal row at a time; every intermediate value is a polynomial
    std::vector<ParamPoly> row{ParamPoly::one()};
    for (unsigned m = 1; m <= n; ++m) {
        std::vector<ParamPoly> next(m + 1);
        next[0] = ParamPoly::one();
        next[m] = ParamPoly::one();
        for (unsigned j = 1; j < m; ++j)
            next[j] = row[j - 1] + ParamPoly::monomial(j, 0) * row[j];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

ParamPoly h_binomial(unsigned n, long long k) {
    if (k < 0 || k > static_cast<long long>(n)) return ParamPoly();
    ParamPoly p = ParamPoly(binomial(n, k));
    for (unsigned r = 0; r < static_cast<unsigned>(k); ++r)
        p = p * (ParamPoly::one() + ParamPoly::monomial(0, 1, Rational(static_cast<long>(r))));
    return p;
}

const ParamPoly& CoeffTable::entry(unsigned n, unsigned k) const {
    auto it = entries_.find({n, k});
    if (it == entries_.end())
        throw std::out_of_range("CoeffTable: no entry (" + std::to_string(n) + ", " +
                                std::to_string(k) + ")");
    return it->second;
}

void CoeffTable::set(unsigned n, unsigned k, ParamPoly value) {
    entries_[{n, k}] = std::move(value);
}

std::vector<ParamPoly> CoeffTable::row(unsigned n) const {
    std::vector<ParamPoly> r;
    r.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) r.push_back(entry(n, k));
    return r;
}

CoeffTable h_binomial_table(unsigned n_max) {
    CoeffTable table(n_max);
    table.set(0, 0, ParamPoly::one());
    const ParamPoly h = ParamPoly::h();
    for (unsigned n = 1; n <= n_max; ++n) {
        table.set(n, 0, ParamPoly::one());
        for (unsigned k = 1; k < n; ++k) {
            ParamPoly weight = ParamPoly::one() + Rational(static_cast<long>(k) - 1) * h;
            table.set(n, k, table.entry(n - 1, k) + weight * table.entry(n - 1, k - 1));
        }
        ParamPoly diag_weight = ParamPoly::one() + Rational(static_cast<long>(n) - 1) * h;
        table.set(n, n, diag_weight * table.entry(n - 1, n - 1));
    }
    return table;
}

bool h_pascal_recurrence_holds(unsigned n, unsigned k) {
    if (k < 1 || k > n + 1)
        throw std::out_of_range("h_pascal_recurrence_holds: need 1 <= k <= n+1, got n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
    ParamPoly weight = ParamPoly::one() + ParamPoly::monomial(0, 1, Rational(static_cast<long>(k) - 1));
    ParamPoly lhs = h_binomial(n, static_cast<long long>(k)) +
                    weight * h_binomial(n, static_cast<long long>(k) - 1);
    return lhs == h_binomial(n + 1, static_cast<long long>(k));
}

bool h_ratio_recurrence_holds(unsigned n, unsigned k) {
    if (k > n)
        throw std::out_of_range("h_ratio_recurrence_holds: need 0 <= k <= n, got n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
    Rational scale(static_cast<long>(n) + 1, static_cast<long>(k) + 1);
    ParamPoly weight = ParamPoly::one() + ParamPoly::monomial(0, 1, Rational(static_cast<long>(k)));
    ParamPoly rhs = scale * (weight * h_binomial(n, static_cast<long long>(k)));
    return h_binomial(n + 1, static_cast<long long>(k) + 1) == rhs;
}

}  // namespace hplane
