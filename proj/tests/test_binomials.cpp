#include "hplane/binomials.hpp"

#include <doctest.h>

#include <optional>
#include <stdexcept>
#include <vector>

using namespace hplane;

TEST_CASE("rising_factorial") {
    CHECK(rising_factorial(Rational(5), 0) == Rational(1));
    CHECK(rising_factorial(Rational(2), 3) == Rational(24));  // 2*3*4
    CHECK(rising_factorial(Rational(1, 2), 2) == Rational(3, 4));
    CHECK(rising_factorial(Rational(-2), 4) == Rational(0));  // hits the zero factor
    CHECK(rising_factorial(Rational(1), 5) == factorial(5));
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(6) == Rational(720));
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(5, 0) == Rational(1));
    CHECK(binomial(5, 5) == Rational(1));
    CHECK(binomial(5, 6) == Rational(0));
    CHECK(binomial(5, -1) == Rational(0));
}

TEST_CASE("q_pochhammer") {
    ParamPoly q = ParamPoly::q();
    CHECK(q_pochhammer(q, 0).is_one());
    CHECK(q_pochhammer(q, 1) == ParamPoly(1) - q);
    CHECK(q_pochhammer(q, 2) == (ParamPoly(1) - q) * (ParamPoly(1) - q * q));
    // (1; q)_k = 0 for k >= 1: first factor vanishes
    CHECK(q_pochhammer(ParamPoly(1), 3).is_zero());
}

TEST_CASE("q_binomial") {
    CHECK(q_binomial(0, 0).is_one());
    CHECK(q_binomial(4, 0).is_one());
    CHECK(q_binomial(4, 4).is_one());
    CHECK(q_binomial(4, 5).is_zero());
    CHECK(q_binomial(4, -1).is_zero());
    CHECK(q_binomial(2, 1) == ParamPoly(1) + ParamPoly::q());
    CHECK(q_binomial(4, 2).str() == "1 + q + 2*q^2 + q^3 + q^4");

    SUBCASE("Gaussian symmetry and q = 1 specialization") {
        for (unsigned n = 0; n <= 12; ++n)
            for (unsigned k = 0; k <= n; ++k) {
                CHECK(q_binomial(n, k) == q_binomial(n, n - k));
                CHECK(q_binomial(n, k).eval(Rational(1), std::nullopt) == ParamPoly(binomial(n, k)));
            }
    }

    SUBCASE("matches the q-Pochhammer quotient exactly") {
        ParamPoly q = ParamPoly::q();
        for (unsigned n = 0; n <= 10; ++n)
            for (unsigned k = 0; k <= n; ++k) {
                ParamPoly den = q_pochhammer(q, k) * q_pochhammer(q, n - k);
                auto quotient = q_pochhammer(q, n).try_divide(den);
                REQUIRE(quotient.has_value());
                CHECK(*quotient == q_binomial(n, k));
            }
    }
}

TEST_CASE("h_binomial") {
    CHECK(h_binomial(0, 0).is_one());
    CHECK(h_binomial(5, 0).is_one());
    CHECK(h_binomial(3, 2).str() == "3 + 3*h");
    CHECK(h_binomial(3, 3).str() == "1 + 3*h + 2*h^2");
    CHECK(h_binomial(3, 4).is_zero());
    CHECK(h_binomial(3, -2).is_zero());

    SUBCASE("h-degree of the k-th coefficient is k - 1") {
        for (unsigned n = 1; n <= 12; ++n)
            for (unsigned k = 1; k <= n; ++k) CHECK(h_binomial(n, k).deg_h() == static_cast<int>(k) - 1);
    }

    SUBCASE("no k <-> n-k symmetry, unlike the Gaussian family") {
        CHECK(h_binomial(3, 1) != h_binomial(3, 2));
        CHECK(h_binomial(3, 1) == ParamPoly(3));
    }

    SUBCASE("specializations: h = 0 classical, h = 1 falling quotient") {
        for (unsigned n = 0; n <= 12; ++n)
            for (unsigned k = 0; k <= n; ++k) {
                CHECK(h_binomial(n, k).eval(std::nullopt, Rational(0)) == ParamPoly(binomial(n, k)));
                CHECK(h_binomial(n, k).eval(std::nullopt, Rational(1)) ==
                      ParamPoly(factorial(n) / factorial(n - k)));
            }
        CHECK(h_binomial(4, 2).eval(std::nullopt, Rational(1)) == ParamPoly(12));
    }
}

// The product form prod_{r<k} (1 + r h) equals h^k (a)_k at a = 1/h, where
// (a)_k is the rising factorial. Both sides are polynomial in h of degree
// < k + 1, so agreement at k + 1 sample points is agreement as polynomials.
TEST_CASE("h_binomial matches the rising-factorial form away from h = 0") {
    for (unsigned n = 0; n <= 10; ++n)
        for (unsigned k = 0; k <= n; ++k)
            for (long s = 1; s <= static_cast<long>(k) + 1; ++s) {
                Rational h(s, 1);
                Rational via_rising =
                    binomial(n, k) * h.pow(k) * rising_factorial(h.inverse(), k);
                CHECK(h_binomial(n, k).eval(std::nullopt, h).constant_value() == via_rising);
            }
}

// prod_{r<k} (1 + r h) = sum_j c(k, k-j) h^j with c(n, m) the unsigned
// Stirling numbers of the first kind, built here from their own recurrence.
TEST_CASE("h_binomial coefficients are Stirling numbers of the first kind") {
    const unsigned n_max = 10;
    std::vector<std::vector<Rational>> c(n_max + 1, std::vector<Rational>(n_max + 1, Rational(0)));
    c[0][0] = Rational(1);
    for (unsigned n = 0; n < n_max; ++n)
        for (unsigned m = 0; m <= n; ++m) {
            c[n + 1][m + 1] += c[n][m];
            c[n + 1][m] += Rational(static_cast<long>(n)) * c[n][m];
        }

    for (unsigned n = 0; n <= n_max; ++n)
        for (unsigned k = 0; k <= n; ++k)
            for (unsigned j = 0; j < k; ++j)
                CHECK(h_binomial(n, k).coeff(0, j) == binomial(n, k) * c[k][k - j]);
}

TEST_CASE("recurrence checkers") {
    for (unsigned n = 0; n <= 20; ++n) {
        for (unsigned k = 1; k <= n + 1; ++k) CHECK(h_pascal_recurrence_holds(n, k));
        for (unsigned k = 0; k <= n; ++k) CHECK(h_ratio_recurrence_holds(n, k));
    }
    CHECK_THROWS_AS(h_pascal_recurrence_holds(3, 0), std::out_of_range);
    CHECK_THROWS_AS(h_pascal_recurrence_holds(3, 5), std::out_of_range);
    CHECK_THROWS_AS(h_ratio_recurrence_holds(3, 4), std::out_of_range);
}

TEST_CASE("h_binomial_table") {
    CoeffTable table = h_binomial_table(12);
    CHECK(table.n_max() == 12);
    for (unsigned n = 0; n <= 12; ++n)
        for (unsigned k = 0; k <= n; ++k) CHECK(table.entry(n, k) == h_binomial(n, k));

    std::vector<ParamPoly> row2 = table.row(2);
    REQUIRE(row2.size() == 3);
    CHECK(row2[2] == ParamPoly(1) + ParamPoly::h());

    CHECK_THROWS_AS(table.entry(13, 0), std::out_of_range);
    CHECK_THROWS_AS(table.entry(2, 3), std::out_of_range);
    CHECK_THROWS_AS(table.row(13), std::out_of_range);
}
