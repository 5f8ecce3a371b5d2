#pragma once

#include "hplane/param_poly.hpp"
#include "hplane/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace hplane {

/// Rising factorial (a)_k = a (a+1) ... (a+k-1); 1 for k = 0.
Rational rising_factorial(const Rational& a, unsigned k);

/// n! as an exact rational.
Rational factorial(unsigned n);

/// Classical binomial coefficient; 0 for k < 0 or k > n.
Rational binomial(unsigned n, long long k);

/// q-Pochhammer symbol (a; q)_k = (1 - a)(1 - q a) ... (1 - q^{k-1} a).
ParamPoly q_pochhammer(const ParamPoly& a, unsigned k);

/// Gaussian binomial coefficient as a polynomial in q, via the Pascal-style
/// recurrence [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q. The quotient of
/// q-Pochhammer symbols gives the same polynomial; that route is kept as a
/// test oracle. Returns 0 for k < 0 or k > n.
ParamPoly q_binomial(unsigned n, long long k);

/// h-binomial coefficient binom(n,k) * prod_{r=0}^{k-1} (1 + r h), the
/// coefficient of y^k x^{n-k} in (x+y)^n under x*y = y*x + h*y^2.
/// Returns 0 for k < 0 or k > n; 1 for k = 0.
ParamPoly h_binomial(unsigned n, long long k);

/// Triangle of coefficients indexed by 0 <= k <= n <= n_max.
class CoeffTable {
  public:
    explicit CoeffTable(unsigned n_max) : n_max_(n_max) {}

    unsigned n_max() const { return n_max_; }

    const ParamPoly& entry(unsigned n, unsigned k) const;
    void set(unsigned n, unsigned k, ParamPoly value);

    std::vector<ParamPoly> row(unsigned n) const;

  private:
    unsigned n_max_;
    std::map<std::pair<unsigned, unsigned>, ParamPoly> entries_;
};

/// Builds the full h-binomial triangle bottom-up from the Pascal-style
/// recurrence C(n,k) = C(n-1,k) + (1 + (k-1)h) C(n-1,k-1), with C(n,0) = 1
/// and C(n,n) = (1 + (n-1)h) C(n-1,n-1). Every entry equals h_binomial(n,k).
CoeffTable h_binomial_table(unsigned n_max);

/// Addition recurrence of the h-binomial family:
/// [n k]_h + (1 + (k-1)h) [n k-1]_h = [n+1 k]_h.
/// Requires 1 <= k <= n+1; throws std::out_of_range otherwise.
bool h_pascal_recurrence_holds(unsigned n, unsigned k);

/// Ratio recurrence of the h-binomial family:
/// [n+1 k+1]_h = (n+1)/(k+1) (1 + k h) [n k]_h.
/// Requires 0 <= k <= n; throws std::out_of_range otherwise.
bool h_ratio_recurrence_holds(unsigned n, unsigned k);

}  // namespace hplane
