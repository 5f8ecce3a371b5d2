#include "hplane/expr.hpp"

#include <doctest.h>

#include <random>
#include <string>

using namespace hplane;

namespace {

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

}  // namespace

TEST_CASE("parse shapes") {
    ExprPtr e = parse("(x+y)^2");
    REQUIRE(e->kind == ExprKind::pow);
    CHECK(e->exponent == 2);
    CHECK(e->lhs->kind == ExprKind::add);

    ExprPtr jux = parse("x y^2");
    REQUIRE(jux->kind == ExprKind::mul);
    CHECK(jux->lhs->kind == ExprKind::var_x);
    CHECK(jux->rhs->kind == ExprKind::pow);
    CHECK(expr_equal(*jux, *parse("x*y^2")));

    // a '-' never starts a juxtaposed factor; this is subtraction
    ExprPtr sub = parse("2 - 3");
    REQUIRE(sub->kind == ExprKind::sub);
    CHECK(sub->lhs->literal == Rational(2));
    CHECK(sub->rhs->literal == Rational(3));

    // '^' binds tighter than '*', which binds tighter than '+'
    ExprPtr prec = parse("x + y*q^2");
    REQUIRE(prec->kind == ExprKind::add);
    REQUIRE(prec->rhs->kind == ExprKind::mul);
    CHECK(prec->rhs->rhs->kind == ExprKind::pow);

    // unary minus binds looser than '^': -x^2 is -(x^2)
    ExprPtr negpow = parse("-x^2");
    REQUIRE(negpow->kind == ExprKind::neg);
    CHECK(negpow->lhs->kind == ExprKind::pow);
    CHECK(expr_equal(*parse("(-x)^2"), *make_pow(make_neg(make_var_x()), 2)));

    CHECK(parse("1/2")->literal == Rational(1, 2));
    CHECK(parse(" 1 / 2 ")->literal == Rational(1, 2));
    CHECK(parse("x^(3)")->exponent == 3);
}

TEST_CASE("parse errors carry 1-based positions") {
    auto expect_error = [](const std::string& input, std::size_t position,
                           const std::string& fragment) {
        try {
            parse(input);
            FAIL("no error for \"", input, "\"");
        } catch (const ParseError& e) {
            CHECK(e.position() == position);
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
        }
    };

    expect_error("x +* y", 4, "expected 'x', 'y', 'q', 'h', a number, '(' or '-'");
    expect_error("(x", 3, "expected ')'");
    expect_error("x^(-1)", 4, "negative exponent unsupported");
    expect_error("x^-1", 3, "negative exponent unsupported");
    expect_error("x^y", 3, "expected a nonnegative integer exponent");
    expect_error("x^1/2", 4, "fractional exponent unsupported");
    expect_error("x^99999999999999999999", 3, "exponent too large");
    expect_error("1/0", 3, "zero denominator");
    expect_error("", 1, "unexpected end of input");
    expect_error("x!", 2, "unexpected character '!'");
    expect_error("x y)", 4, "unexpected character ')'");
}

TEST_CASE("round trip on random trees") {
    std::mt19937_64 rng(8080);
    for (int i = 0; i < 1000; ++i) {
        ExprPtr t = random_tree(rng, 4);
        std::string text = expr_str(*t);
        ExprPtr back = parse(text);
        CHECK(expr_equal(*t, *back));
        CHECK(expr_str(*back) == text);
    }
}

TEST_CASE("fuzzing never escapes ParseError") {
    std::mt19937_64 rng(4040);
    const std::string charset = "xyqh0123456789+-*^/() ";
    std::uniform_int_distribution<std::size_t> pick(0, charset.size() - 1);
    std::uniform_int_distribution<std::size_t> length(0, 30);
    for (int i = 0; i < 2000; ++i) {
        std::string input;
        std::size_t len = length(rng);
        for (std::size_t j = 0; j < len; ++j) input += charset[pick(rng)];
        try {
            ExprPtr e = parse(input);
            CHECK(expr_equal(*e, *parse(expr_str(*e))));
        } catch (const ParseError& e) {
            CHECK(e.position() >= 1);
            CHECK(e.position() <= input.size() + 1);
        }
    }
}

TEST_CASE("evaluate") {
    PlaneSpec h_plane = PlaneSpec::h_plane();
    PlaneSpec sym = PlaneSpec::symbolic();

    SUBCASE("defining relations normalize to zero") {
        CHECK(evaluate(*parse("x*y - y*x - h*y^2"), h_plane).is_zero());
        CHECK(evaluate(*parse("x*y^2 - y^2*x - 2*h*y^3"), h_plane).is_zero());
        CHECK(evaluate(*parse("x*y - q*y*x - h*y^2"), sym).is_zero());
    }

    SUBCASE("simple values") {
        CHECK(evaluate(*parse("(x+y)^0"), sym) == NCPolynomial::one());
        CHECK(evaluate(*parse("x*y"), h_plane).str() == "y*x + h*y^2");
        CHECK(evaluate(*parse("q*h - h*q"), sym).is_zero());
        CHECK(evaluate(*parse("2x - x - x"), sym).is_zero());
        CHECK(evaluate(*parse("1/2 x + 3 / 2x"), sym).str() == "2*x");
    }

    SUBCASE("matches nc_pow on (x+y)^n") {
        NCPolynomial s = NCPolynomial::x() + NCPolynomial::y();
        for (unsigned n = 0; n <= 10; ++n) {
            std::string text = "(x + y)^" + std::to_string(n);
            CHECK(evaluate(*parse(text), sym) == nc_pow(s, n, sym));
        }
    }

    SUBCASE("strategies agree") {
        ExprPtr e = parse("(x + 2y)^3 - x*(y - x)^2");
        CHECK(evaluate(*e, sym, MulStrategy::naive) == evaluate(*e, sym, MulStrategy::batched));
    }
}
