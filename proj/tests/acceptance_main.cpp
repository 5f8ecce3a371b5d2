// Acceptance gate: eight exact-arithmetic criteria, printed one per line.
// Every comparison is exact equality in Q or Q[q, h]; there are no tolerances.
// Exit 0 iff all criteria pass.

#include "hplane/binomials.hpp"
#include "hplane/expr.hpp"
#include "hplane/ncpoly.hpp"
#include "hplane/plane.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>

using namespace hplane;

namespace {

NCPolynomial x_plus_y() { return NCPolynomial::x() + NCPolynomial::y(); }

NCPolynomial random_ncpoly(std::mt19937_64& rng, unsigned max_exp, unsigned max_terms) {
    std::uniform_int_distribution<unsigned> exp_dist(0, max_exp);
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<int> kind(0, 2);
    NCPolynomial p;
    unsigned n = nterms(rng);
    for (unsigned i = 0; i < n; ++i) {
        long c = coeff(rng);
        if (c == 0) c = 1;
        ParamPoly pc{Rational(c)};
        int k = kind(rng);
        if (k == 1) pc = pc * ParamPoly::q();
        if (k == 2) pc = pc * ParamPoly::h();
        p.add_term({exp_dist(rng), exp_dist(rng)}, pc);
    }
    return p;
}

ExprPtr random_tree(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> leaf_kind(0, 5);
    std::uniform_int_distribution<int> node_kind(0, 9);
    std::uniform_int_distribution<long> num(0, 12);
    std::uniform_int_distribution<long> den(1, 9);
    std::uniform_int_distribution<unsigned> expo(0, 6);

    int kind = depth <= 0 ? leaf_kind(rng) : node_kind(rng);
    switch (kind) {
        case 0: return make_var_x();
        case 1: return make_var_y();
        case 2: return make_param_q();
        case 3: return make_param_h();
        case 4: return make_literal(Rational(num(rng)));
        case 5: return make_literal(Rational(num(rng), den(rng)));
        case 6: return make_neg(random_tree(rng, depth - 1));
        case 7: return make_add(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 8: return make_sub(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
        case 9:
            if (rng() % 2) return make_mul(random_tree(rng, depth - 1), random_tree(rng, depth - 1));
            return make_pow(random_tree(rng, depth - 1), expo(rng));
    }
    return make_var_x();
}

// 1. Coefficient of y^k x^{n-k} in the brute-force expansion of (x+y)^n at
//    q = 1, symbolic h, equals binom(n,k) * prod_{r<k} (1 + r h) for all
//    0 <= k <= n <= 12, in under five seconds.
bool h_binomial_theorem(double& elapsed_s) {
    auto t0 = std::chrono::steady_clock::now();
    PlaneSpec plane = PlaneSpec::h_plane();
    bool ok = true;
    NCPolynomial acc = NCPolynomial::one();
    for (unsigned n = 0; n <= 12; ++n) {
        if (n > 0) acc = nc_mul(acc, x_plus_y(), plane, MulStrategy::naive);
        for (unsigned k = 0; k <= n; ++k) ok = ok && acc.coeff(k, n - k) == h_binomial(n, k);
    }
    elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return ok && elapsed_s < 5.0;
}

// 2. Normal forms of the generator-commutation words at q = 1, for all k <= 12:
//    x y^k = y^k x + k h y^{k+1} and x^k y = sum_r k!/(k-r)! h^r y^{r+1} x^{k-r}.
bool commutation_identities() {
    PlaneSpec plane = PlaneSpec::h_plane();
    bool ok = true;
    for (unsigned k = 0; k <= 12; ++k) {
        Word x_then_ys(k + 1, Gen::y);
        x_then_ys[0] = Gen::x;
        NCPolynomial lhs = normalize_word(x_then_ys, plane);
        NCPolynomial rhs = NCPolynomial::monomial({k, 1});
        rhs.add_term({k + 1, 0}, ParamPoly::h() * Rational(static_cast<long>(k)));
        ok = ok && lhs == rhs && commute_x_past_y_power(k, plane) == rhs;

        Word xs_then_y(k + 1, Gen::x);
        xs_then_y[k] = Gen::y;
        NCPolynomial lhs2 = normalize_word(xs_then_y, plane);
        NCPolynomial rhs2;
        for (unsigned r = 0; r <= k; ++r)
            rhs2.add_term({r + 1, k - r}, ParamPoly::h().pow(r) * (factorial(k) / factorial(k - r)));
        ok = ok && lhs2 == rhs2 && commute_x_power_past_y(k, plane) == rhs2;
    }
    return ok;
}

// 3. The addition and ratio recurrences hold symbolically in Q[h] over
//    0 <= k <= n <= 30, and the recurrence-built triangle matches the closed
//    form entrywise on the same range.
bool recurrences() {
    bool ok = true;
    for (unsigned n = 0; n <= 30; ++n) {
        for (unsigned k = 1; k <= n; ++k) ok = ok && h_pascal_recurrence_holds(n, k);
        for (unsigned k = 0; k <= n; ++k) ok = ok && h_ratio_recurrence_holds(n, k);
    }
    CoeffTable table = h_binomial_table(30);
    for (unsigned n = 0; n <= 30; ++n)
        for (unsigned k = 0; k <= n; ++k) ok = ok && table.entry(n, k) == h_binomial(n, k);
    return ok;
}

// 4. Specializations for all n <= 30: h = 0 gives the classical binomial,
//    h = 1 gives n!/(n-k)!; spot value [4 2] at h = 1 is 12.
bool specializations() {
    bool ok = true;
    for (unsigned n = 0; n <= 30; ++n)
        for (unsigned k = 0; k <= n; ++k) {
            ok = ok && h_binomial(n, k).eval(std::nullopt, Rational(0)) == ParamPoly(binomial(n, k));
            ok = ok && h_binomial(n, k).eval(std::nullopt, Rational(1)) ==
                           ParamPoly(factorial(n) / factorial(n - k));
        }
    return ok && h_binomial(4, 2).eval(std::nullopt, Rational(1)) == ParamPoly(12);
}

// 5. In the plane (symbolic q, h = 0), expansion coefficients for n <= 12
//    equal the Gaussian binomials obtained from the q-Pochhammer quotient
//    (q;q)_n / ((q;q)_k (q;q)_{n-k}) by exact polynomial division.
bool q_analogue() {
    PlaneSpec plane = PlaneSpec::manin_plane();
    ParamPoly q = ParamPoly::q();
    bool ok = true;
    NCPolynomial acc = NCPolynomial::one();
    for (unsigned n = 0; n <= 12; ++n) {
        if (n > 0) acc = nc_mul(acc, x_plus_y(), plane, MulStrategy::naive);
        for (unsigned k = 0; k <= n; ++k) {
            ParamPoly den = q_pochhammer(q, k) * q_pochhammer(q, n - k);
            auto quotient = q_pochhammer(q, n).try_divide(den);
            if (!quotient) return false;  // division must be exact
            ok = ok && acc.coeff(k, n - k) == *quotient && *quotient == q_binomial(n, k);
        }
    }
    return ok;
}

// 6. The shear x' = x + h/(q-1) y, y' = y satisfies Manin's relation
//    x'y' = q y'x' for q in {2, 3, -1, 1/2} with symbolic h, and the check
//    reports an error at the singular value q = 1.
bool transformation_check() {
    bool ok = true;
    for (const Rational& qv : {Rational(2), Rational(3), Rational(-1), Rational(1, 2)})
        ok = ok && manin_transformation_holds(qv, ParamValue::sym());
    try {
        manin_transformation_holds(Rational(1), ParamValue::sym());
        return false;
    } catch (const std::domain_error&) {
    }
    return ok;
}

// 7. Confluence: every word of length <= 10 reaches the same normal form
//    under leftmost, rightmost and randomized rewrite orders, and naive vs
//    batched nc_mul agree on 1000 randomized products of total degree <= 8.
bool confluence() {
    PlaneSpec sym = PlaneSpec::symbolic();
    bool ok = true;
    for (unsigned len = 0; len <= 10; ++len)
        for (unsigned bits = 0; bits < (1u << len); ++bits) {
            Word w(len);
            for (unsigned i = 0; i < len; ++i) w[i] = (bits >> i) & 1u ? Gen::y : Gen::x;
            NCPolynomial leftmost = normalize_word(w, sym, RewriteOrder::leftmost);
            ok = ok && leftmost == normalize_word(w, sym, RewriteOrder::rightmost);
            ok = ok && leftmost == normalize_word(w, sym, RewriteOrder::random, 31 * len + bits);
        }

    std::mt19937_64 rng(20260814);
    for (int i = 0; i < 1000; ++i) {
        NCPolynomial a = random_ncpoly(rng, 4, 4), b = random_ncpoly(rng, 4, 4);
        ok = ok && nc_mul(a, b, sym, MulStrategy::naive) == nc_mul(a, b, sym, MulStrategy::batched);
    }
    return ok;
}

// 8. The grammar round-trips 1000 randomized expression trees, and the
//    relation expressions normalize to exactly zero: the two q = 1 relations
//    and the defining relation of the general plane.
bool parser_round_trip() {
    std::mt19937_64 rng(1618);
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        ExprPtr t = random_tree(rng, 4);
        ok = ok && expr_equal(*t, *parse(expr_str(*t)));
    }
    PlaneSpec h_plane = PlaneSpec::h_plane();
    ok = ok && evaluate(*parse("x*y - y*x - h*y^2"), h_plane).is_zero();
    ok = ok && evaluate(*parse("x*y^2 - y^2*x - 2*h*y^3"), h_plane).is_zero();
    ok = ok && evaluate(*parse("x*y - q*y*x - h*y^2"), PlaneSpec::symbolic()).is_zero();
    return ok;
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&](int index, bool ok, const std::string& label) {
        std::printf("%s  %d. %s\n", ok ? "pass" : "FAIL", index, label.c_str());
        if (!ok) ++failures;
    };

    double elapsed_s = 0.0;
    bool c1 = h_binomial_theorem(elapsed_s);
    char timing[64];
    std::snprintf(timing, sizeof timing, " (%.2f s)", elapsed_s);
    report(1, c1,
           "h-binomial theorem: expansion coefficients for n <= 12, q = 1, symbolic h" +
               std::string(timing));
    report(2, commutation_identities(), "commutation identities x y^k and x^k y for k <= 12");
    report(3, recurrences(), "addition and ratio recurrences in Q[h], triangle agreement, n <= 30");
    report(4, specializations(), "specializations h = 0 -> binom(n,k), h = 1 -> n!/(n-k)!, n <= 30");
    report(5, q_analogue(), "q-analogue: Gaussian binomials via exact q-Pochhammer division, n <= 12");
    report(6, transformation_check(), "Manin shear holds at q in {2, 3, -1, 1/2}; error at q = 1");
    report(7, confluence(), "confluence on all words (L <= 10) and 1000 naive-vs-batched products");
    report(8, parser_round_trip(), "parser round-trip on 1000 trees; relations normalize to 0");

    if (failures == 0) {
        std::printf("acceptance: all 8 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d of 8 criteria FAILED\n", failures);
    return 1;
}
