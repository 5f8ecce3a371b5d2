#include "hplane/expr.hpp"

#include <cctype>
#include <sstream>

namespace hplane {

namespace {

ExprPtr leaf(ExprKind kind) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    return e;
}

ExprPtr binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
}

}  // namespace

ExprPtr make_var_x() { return leaf(ExprKind::var_x); }
ExprPtr make_var_y() { return leaf(ExprKind::var_y); }
ExprPtr make_param_q() { return leaf(ExprKind::param_q); }
ExprPtr make_param_h() { return leaf(ExprKind::param_h); }

ExprPtr make_literal(Rational value) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::literal;
    e->literal = std::move(value);
    return e;
}

ExprPtr make_neg(ExprPtr child) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::neg;
    e->lhs = std::move(child);
    return e;
}

ExprPtr make_add(ExprPtr lhs, ExprPtr rhs) { return binary(ExprKind::add, std::move(lhs), std::move(rhs)); }
ExprPtr make_sub(ExprPtr lhs, ExprPtr rhs) { return binary(ExprKind::sub, std::move(lhs), std::move(rhs)); }
ExprPtr make_mul(ExprPtr lhs, ExprPtr rhs) { return binary(ExprKind::mul, std::move(lhs), std::move(rhs)); }

ExprPtr make_pow(ExprPtr base, unsigned exponent) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::pow;
    e->lhs = std::move(base);
    e->exponent = exponent;
    return e;
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ExprKind::var_x:
        case ExprKind::var_y:
        case ExprKind::param_q:
        case ExprKind::param_h:
            return true;
        case ExprKind::literal:
            return a.literal == b.literal;
        case ExprKind::neg:
            return expr_equal(*a.lhs, *b.lhs);
        case ExprKind::pow:
            return a.exponent == b.exponent && expr_equal(*a.lhs, *b.lhs);
        default:
            return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
    }
}

namespace {

// precedence levels: 1 add/sub, 2 mul, 3 neg/pow, 4 atoms
int level_of(const Expr& e) {
    switch (e.kind) {
        case ExprKind::add:
        case ExprKind::sub:
            return 1;
        case ExprKind::mul:
            return 2;
        case ExprKind::neg:
        case ExprKind::pow:
            return 3;
        default:
            return 4;
    }
}

void print(std::ostream& os, const Expr& e, int min_level) {
    if (level_of(e) < min_level) {
        os << "(";
        print(os, e, 1);
        os << ")";
        return;
    }
    switch (e.kind) {
        case ExprKind::var_x: os << "x"; break;
        case ExprKind::var_y: os << "y"; break;
        case ExprKind::param_q: os << "q"; break;
        case ExprKind::param_h: os << "h"; break;
        case ExprKind::literal: os << e.literal.str(); break;
        case ExprKind::neg:
            os << "-";
            print(os, *e.lhs, 3);
            break;
        case ExprKind::add:
            print(os, *e.lhs, 1);
            os << " + ";
            print(os, *e.rhs, 2);
            break;
        case ExprKind::sub:
            print(os, *e.lhs, 1);
            os << " - ";
            print(os, *e.rhs, 2);
            break;
        case ExprKind::mul:
            print(os, *e.lhs, 2);
            os << "*";
            print(os, *e.rhs, 3);
            break;
        case ExprKind::pow:
            print(os, *e.lhs, 4);
            os << "^" << e.exponent;
            break;
    }
}

class Parser {
  public:
    explicit Parser(const std::string& input) : in_(input) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ < in_.size()) fail("unexpected character '" + std::string(1, in_[pos_]) + "'");
        return e;
    }

  private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(pos_ + 1, message);
    }

    void skip_ws() {
        while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= in_.size();
    }

    char peek() const { return in_[pos_]; }

    bool starts_atom_no_minus() {
        if (at_end()) return false;
        char c = peek();
        return c == 'x' || c == 'y' || c == 'q' || c == 'h' || c == '(' ||
               std::isdigit(static_cast<unsigned char>(c));
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        while (!at_end() && (peek() == '+' || peek() == '-')) {
            char op = peek();
            ++pos_;
            ExprPtr rhs = parse_term();
            e = op == '+' ? make_add(std::move(e), std::move(rhs))
                          : make_sub(std::move(e), std::move(rhs));
        }
        return e;
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        for (;;) {
            if (at_end()) break;
            if (peek() == '*') {
                ++pos_;
                e = make_mul(std::move(e), parse_factor());
            } else if (starts_atom_no_minus()) {
                // juxtaposition; a '-' here is binary subtraction, not a factor
                e = make_mul(std::move(e), parse_factor());
            } else {
                break;
            }
        }
        return e;
    }

    ExprPtr parse_factor() {
        // '-' binds looser than '^': -x^2 is -(x^2), (-x)^2 needs parentheses
        if (!at_end() && peek() == '-') {
            ++pos_;
            return make_neg(parse_factor());
        }
        ExprPtr e = parse_atom();
        if (!at_end() && peek() == '^') {
            ++pos_;
            e = make_pow(std::move(e), parse_exponent());
        }
        return e;
    }

    ExprPtr parse_atom() {
        if (at_end()) fail("unexpected end of input: expected 'x', 'y', 'q', 'h', a number, '(' or '-'");
        char c = peek();
        switch (c) {
            case 'x': ++pos_; return make_var_x();
            case 'y': ++pos_; return make_var_y();
            case 'q': ++pos_; return make_param_q();
            case 'h': ++pos_; return make_param_h();
            case '(': {
                ++pos_;
                ExprPtr e = parse_expr();
                if (at_end() || peek() != ')') fail("expected ')'");
                ++pos_;
                return e;
            }
            default:
                if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
                fail("expected 'x', 'y', 'q', 'h', a number, '(' or '-'");
        }
    }

    mpz_class parse_digits(const char* what) {
        skip_ws();
        std::size_t begin = pos_;
        while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) ++pos_;
        if (pos_ == begin) fail(std::string("expected ") + what);
        return mpz_class(in_.substr(begin, pos_ - begin), 10);  // base 0 would read "09" as octal
    }

    ExprPtr parse_rational() {
        mpz_class num = parse_digits("a number");
        skip_ws();
        if (pos_ < in_.size() && peek() == '/') {
            ++pos_;
            std::size_t den_pos = pos_;
            mpz_class den = parse_digits("a positive denominator");
            if (den == 0) throw ParseError(den_pos + 1, "zero denominator in rational literal");
            return make_literal(Rational(std::move(num), std::move(den)));
        }
        return make_literal(Rational(std::move(num), 1));
    }

    unsigned parse_exponent() {
        skip_ws();
        if (pos_ >= in_.size()) fail("expected a nonnegative integer exponent");
        bool parenthesized = false;
        if (peek() == '(') {
            parenthesized = true;
            ++pos_;
            skip_ws();
        }
        if (pos_ < in_.size() && peek() == '-')
            fail("negative exponent unsupported: exponents must be nonnegative integers");
        if (pos_ >= in_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a nonnegative integer exponent");
        std::size_t digits_begin = pos_;
        mpz_class value = parse_digits("a nonnegative integer exponent");
        if (pos_ < in_.size() && peek() == '/')
            fail("fractional exponent unsupported: exponents must be nonnegative integers");
        if (parenthesized) {
            skip_ws();
            if (pos_ >= in_.size() || peek() != ')') fail("expected ')' after exponent");
            ++pos_;
        }
        if (!value.fits_uint_p()) throw ParseError(digits_begin + 1, "exponent too large");
        return static_cast<unsigned>(value.get_ui());
    }

    const std::string& in_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string expr_str(const Expr& e) {
    std::ostringstream os;
    print(os, e, 1);
    return os.str();
}

ExprPtr parse(const std::string& input) { return Parser(input).run(); }

NCPolynomial evaluate(const Expr& e, const PlaneSpec& plane, MulStrategy strategy) {
    switch (e.kind) {
        case ExprKind::var_x: return NCPolynomial::x();
        case ExprKind::var_y: return NCPolynomial::y();
        case ExprKind::param_q: return NCPolynomial::scalar(plane.q_coeff());
        case ExprKind::param_h: return NCPolynomial::scalar(plane.h_coeff());
        case ExprKind::literal: return NCPolynomial::scalar(ParamPoly(e.literal));
        case ExprKind::neg: return -evaluate(*e.lhs, plane, strategy);
        case ExprKind::add: return evaluate(*e.lhs, plane, strategy) + evaluate(*e.rhs, plane, strategy);
        case ExprKind::sub: return evaluate(*e.lhs, plane, strategy) - evaluate(*e.rhs, plane, strategy);
        case ExprKind::mul:
            return nc_mul(evaluate(*e.lhs, plane, strategy), evaluate(*e.rhs, plane, strategy), plane,
                          strategy);
        case ExprKind::pow:
            return nc_pow(evaluate(*e.lhs, plane, strategy), e.exponent, plane, strategy);
    }
    throw std::logic_error("evaluate: unhandled node kind");
}

}  // namespace hplane
