#pragma once

#include "hplane/ncpoly.hpp"
#include "hplane/plane.hpp"
#include "hplane/rational.hpp"

#include <memory>
#include <stdexcept>
#include <string>

namespace hplane {

/// Syntax error with a 1-based character position.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t position, const std::string& message)
        : std::runtime_error("at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

enum class ExprKind { var_x, var_y, param_q, param_h, literal, neg, add, sub, mul, pow };

/// Expression tree over the generators x, y, the parameters q, h, and
/// nonnegative rational literals. Multiplication keeps written operand
/// order; this algebra is noncommutative.
struct Expr {
    ExprKind kind;
    Rational literal;                      // literal
    std::shared_ptr<const Expr> lhs, rhs;  // children; neg uses lhs only
    unsigned exponent = 0;                 // pow
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr make_var_x();
ExprPtr make_var_y();
ExprPtr make_param_q();
ExprPtr make_param_h();
ExprPtr make_literal(Rational value);  // value must be >= 0; negatives are neg nodes
ExprPtr make_neg(ExprPtr child);
ExprPtr make_add(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_sub(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_mul(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_pow(ExprPtr base, unsigned exponent);

bool expr_equal(const Expr& a, const Expr& b);

/// Canonical text form; parse(expr_str(e)) rebuilds an identical tree.
std::string expr_str(const Expr& e);

/// Grammar (whitespace insignificant, '*' optional between factors):
///   expr     := term (('+'|'-') term)*
///   term     := factor ('*'? factor)*
///   factor   := atom ('^' nat)?
///   atom     := 'x' | 'y' | 'q' | 'h' | rational | '(' expr ')' | '-' atom
///   rational := nat ('/' nat)?
/// Exponents must be nonnegative integer literals. Throws ParseError.
ExprPtr parse(const std::string& input);

/// Bottom-up evaluation into the normal-ordered algebra of the plane:
/// mul maps to nc_mul, pow to nc_pow, q and h to the plane's parameters.
NCPolynomial evaluate(const Expr& e, const PlaneSpec& plane,
                      MulStrategy strategy = MulStrategy::batched);

}  // namespace hplane
