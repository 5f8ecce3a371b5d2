#include "hplane/verify.hpp"

#include "hplane/binomials.hpp"
#include "hplane/expr.hpp"
#include "hplane/ncpoly.hpp"
#include "hplane/plane.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <random>
#include <sstream>

namespace hplane {

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

class Suite {
  public:
    explicit Suite(const VerifyOptions& options) : opt_(options) {}

    std::vector<CheckResult> run() {
        check_x_past_y_power();
        check_x_power_past_y();
        check_h_binomial_theorem();
        check_q_binomial_theorem();
        check_q_binomial_quotient();
        check_pascal_recurrence();
        check_ratio_recurrence();
        check_table_matches_closed_form();
        check_specialization_h0();
        check_specialization_h1();
        check_manin_transformation();
        check_confluence();
        check_strategy_equivalence();
        check_specialization_commutes();
        check_exec_equivalence();
        return std::move(results_);
    }

  private:
    void record(const std::string& name, const std::string& scope, bool passed,
                const std::string& counterexample = "") {
        results_.push_back({name, scope, passed, passed ? "" : counterexample});
    }

    // x * y^c = q^c y^c x + h [c]_q y^{c+1}, against the single-step rewriter
    void check_x_past_y_power() {
        const PlaneSpec sym = PlaneSpec::symbolic();
        const PlaneSpec hp = PlaneSpec::h_plane();
        for (unsigned c = 0; c <= opt_.max_n; ++c) {
            Word w{Gen::x};
            w.insert(w.end(), c, Gen::y);
            NCPolynomial batched = commute_x_past_y_power(c, sym);
            NCPolynomial stepped = normalize_word(w, sym);
            if (batched != stepped) {
                record("x-past-y-power", sweep_scope(), false,
                       "c=" + std::to_string(c) + ": batched = " + batched.str() +
                           ", rewriter = " + stepped.str());
                return;
            }
            // q = 1 form: y^c x + c h y^{c+1}
            NCPolynomial expected = NCPolynomial::monomial({c, 1});
            expected.add_term({c + 1, 0}, ParamPoly::h() * Rational(static_cast<long>(c)));
            NCPolynomial got = commute_x_past_y_power(c, hp);
            if (got != expected) {
                record("x-past-y-power", sweep_scope(), false,
                       "c=" + std::to_string(c) + " at q=1: got " + got.str() + ", expected " +
                           expected.str());
                return;
            }
        }
        record("x-past-y-power", sweep_scope(), true);
    }

    // x^k y = sum_r k!/(k-r)! h^r y^{r+1} x^{k-r} at q = 1, and the general-q
    // batched form against the rewriter
    void check_x_power_past_y() {
        const PlaneSpec sym = PlaneSpec::symbolic();
        const PlaneSpec hp = PlaneSpec::h_plane();
        for (unsigned k = 0; k <= opt_.max_n; ++k) {
            Word w(k, Gen::x);
            w.push_back(Gen::y);
            NCPolynomial batched = commute_x_power_past_y(k, sym);
            NCPolynomial stepped = normalize_word(w, sym);
            if (batched != stepped) {
                record("x-power-past-y", sweep_scope(), false,
                       "k=" + std::to_string(k) + ": batched = " + batched.str() +
                           ", rewriter = " + stepped.str());
                return;
            }
            NCPolynomial expected;
            for (unsigned r = 0; r <= k; ++r) {
                Rational falling = factorial(k) / factorial(k - r);
                expected.add_term({r + 1, k - r}, ParamPoly::monomial(0, r, falling));
            }
            NCPolynomial got = commute_x_power_past_y(k, hp);
            if (got != expected) {
                record("x-power-past-y", sweep_scope(), false,
                       "k=" + std::to_string(k) + " at q=1: got " + got.str() + ", expected " +
                           expected.str());
                return;
            }
        }
        record("x-power-past-y", sweep_scope(), true);
    }

    // coefficient of y^k x^{n-k} in (x+y)^n at q=1 equals the h-binomial closed form
    void check_h_binomial_theorem() {
        const PlaneSpec hp = PlaneSpec::h_plane();
        const std::string scope = sweep_scope() + ", q = 1, h symbolic";
        NCPolynomial power = NCPolynomial::one();
        for (unsigned n = 0; n <= opt_.max_n; ++n) {
            if (n > 0) power = nc_mul(power, x_plus_y(), hp, MulStrategy::naive);
            for (unsigned k = 0; k <= n; ++k) {
                ParamPoly expected = h_binomial(n, k);
                if (opt_.inject_fault && n == opt_.max_n && k == std::min(1u, n))
                    expected += ParamPoly::one();
                ParamPoly got = power.coeff(k, n - k);
                if (got != expected) {
                    record("h-binomial-theorem", scope, false,
                           "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                               ": expansion = " + got.str() + ", closed form = " + expected.str());
                    return;
                }
            }
        }
        record("h-binomial-theorem", scope, true);
    }

    // coefficient of y^k x^{n-k} in (x+y)^n at h=0 equals the Gaussian binomial
    void check_q_binomial_theorem() {
        const PlaneSpec mp = PlaneSpec::manin_plane();
        const std::string scope = sweep_scope() + ", q symbolic, h = 0";
        NCPolynomial power = NCPolynomial::one();
        for (unsigned n = 0; n <= opt_.max_n; ++n) {
            if (n > 0) power = nc_mul(power, x_plus_y(), mp, MulStrategy::naive);
            for (unsigned k = 0; k <= n; ++k) {
                ParamPoly expected = q_binomial(n, k);
                ParamPoly got = power.coeff(k, n - k);
                if (got != expected) {
                    record("q-binomial-theorem", scope, false,
                           "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                               ": expansion = " + got.str() + ", closed form = " + expected.str());
                    return;
                }
            }
        }
        record("q-binomial-theorem", scope, true);
    }

    // the recurrence-built Gaussian binomial equals the q-Pochhammer quotient
    void check_q_binomial_quotient() {
        for (unsigned n = 0; n <= opt_.max_n; ++n) {
            for (unsigned k = 0; k <= n; ++k) {
                ParamPoly numerator = q_pochhammer(ParamPoly::q(), n);
                ParamPoly denominator = q_pochhammer(ParamPoly::q(), k) * q_pochhammer(ParamPoly::q(), n - k);
                auto quotient = numerator.try_divide(denominator);
                if (!quotient || *quotient != q_binomial(n, k)) {
                    record("q-binomial-quotient", sweep_scope(), false,
                           "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                               (quotient ? ": quotient = " + quotient->str() +
                                               ", recurrence = " + q_binomial(n, k).str()
                                         : ": quotient not exact"));
                    return;
                }
            }
        }
        record("q-binomial-quotient", sweep_scope(), true);
    }

    void check_pascal_recurrence() {
        for (unsigned n = 0; n <= opt_.max_n; ++n)
            for (unsigned k = 1; k <= n + 1; ++k)
                if (!h_pascal_recurrence_holds(n, k)) {
                    record("h-pascal-recurrence", sweep_scope(), false,
                           "n=" + std::to_string(n) + " k=" + std::to_string(k));
                    return;
                }
        record("h-pascal-recurrence", sweep_scope(), true);
    }

    void check_ratio_recurrence() {
        for (unsigned n = 0; n <= opt_.max_n; ++n)
            for (unsigned k = 0; k <= n; ++k)
                if (!h_ratio_recurrence_holds(n, k)) {
                    record("h-ratio-recurrence", sweep_scope(), false,
                           "n=" + std::to_string(n) + " k=" + std::to_string(k));
                    return;
                }
        record("h-ratio-recurrence", sweep_scope(), true);
    }

    void check_table_matches_closed_form() {
        CoeffTable table = h_binomial_table(opt_.max_n);
        for (unsigned n = 0; n <= opt_.max_n; ++n)
            for (unsigned k = 0; k <= n; ++k)
                if (table.entry(n, k) != h_binomial(n, k)) {
                    record("recurrence-table", sweep_scope(), false,
                           "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": table = " +
                               table.entry(n, k).str() + ", closed form = " + h_binomial(n, k).str());
                    return;
                }
        record("recurrence-table", sweep_scope(), true);
    }

    void check_specialization_h0() {
        for (unsigned n = 0; n <= opt_.max_n; ++n)
            for (unsigned k = 0; k <= n; ++k) {
                ParamPoly at0 = h_binomial(n, k).eval(std::nullopt, Rational(0));
                if (at0 != ParamPoly(binomial(n, k))) {
                    record("specialization-h0", sweep_scope(), false,
                           "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": got " + at0.str());
                    return;
                }
            }
        record("specialization-h0", sweep_scope(), true);
    }

    void check_specialization_h1() {
        for (unsigned n = 0; n <= opt_.max_n; ++n)
            for (unsigned k = 0; k <= n; ++k) {
                ParamPoly at1 = h_binomial(n, k).eval(std::nullopt, Rational(1));
                Rational expected = factorial(n) / factorial(n - k);
                if (at1 != ParamPoly(expected)) {
                    record("specialization-h1", sweep_scope(), false,
                           "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": got " + at1.str() +
                               ", expected " + expected.str());
                    return;
                }
            }
        record("specialization-h1", sweep_scope(), true);
    }

    void check_manin_transformation() {
        const std::string scope = "q in {2, 3, -1, 1/2}, h symbolic; error at q = 1";
        for (const Rational& qv : {Rational(2), Rational(3), Rational(-1), Rational(1, 2)}) {
            if (!manin_transformation_holds(qv, ParamValue::sym())) {
                record("manin-transformation", scope, false, "fails at q = " + qv.str());
                return;
            }
        }
        bool threw = false;
        try {
            manin_transformation_holds(Rational(1), ParamValue::sym());
        } catch (const std::domain_error&) {
            threw = true;
        }
        record("manin-transformation", scope, threw, threw ? "" : "no error reported at q = 1");
    }

    // every rewriting order reaches the same normal form, for all words up to
    // length min(max_n, 10)
    void check_confluence() {
        const unsigned max_len = std::min(opt_.max_n, 10u);
        const PlaneSpec sym = PlaneSpec::symbolic();
        const std::string scope = "all words of length <= " + std::to_string(max_len);

        std::vector<Word> words;
        for (unsigned len = 0; len <= max_len; ++len)
            for (std::uint64_t bits = 0; bits < (1ull << len); ++bits) {
                Word w(len);
                for (unsigned i = 0; i < len; ++i) w[i] = (bits >> i) & 1 ? Gen::y : Gen::x;
                words.push_back(std::move(w));
            }

        long first_bad = -1;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
        for (long i = 0; i < static_cast<long>(words.size()); ++i) {
            const Word& w = words[static_cast<std::size_t>(i)];
            NCPolynomial leftmost = normalize_word(w, sym, RewriteOrder::leftmost);
            bool ok = normalize_word(w, sym, RewriteOrder::rightmost) == leftmost &&
                      normalize_word(w, sym, RewriteOrder::random, 7u * i + 1) == leftmost &&
                      normalize_word(w, sym, RewriteOrder::random, 7u * i + 2) == leftmost;
            if (!ok) {
#ifdef _OPENMP
#pragma omp critical
#endif
                if (first_bad < 0 || i < first_bad) first_bad = i;
            }
        }
        if (first_bad >= 0) {
            std::ostringstream os;
            os << "word #" << first_bad << " (";
            for (Gen g : words[static_cast<std::size_t>(first_bad)]) os << (g == Gen::x ? 'x' : 'y');
            os << ") has order-dependent normal forms";
            record("confluence", scope, false, os.str());
        } else {
            record("confluence", scope, true);
        }
    }

    void check_strategy_equivalence() {
        std::mt19937_64 rng(20260814);
        const PlaneSpec sym = PlaneSpec::symbolic();
        const std::string scope = "200 random products of total degree <= 8";
        for (int i = 0; i < 200; ++i) {
            NCPolynomial a = random_ncpoly(rng, 2, 3);
            NCPolynomial b = random_ncpoly(rng, 2, 3);
            NCPolynomial naive = nc_mul(a, b, sym, MulStrategy::naive);
            NCPolynomial batched = nc_mul(a, b, sym, MulStrategy::batched);
            if (naive != batched) {
                record("strategy-equivalence", scope, false,
                       "lhs = " + a.str() + ", rhs = " + b.str() + ": naive = " + naive.str() +
                           ", batched = " + batched.str());
                return;
            }
        }
        record("strategy-equivalence", scope, true);
    }

    // evaluating parameters after expanding equals expanding in the evaluated plane
    void check_specialization_commutes() {
        const unsigned max_n = std::min(opt_.max_n, 8u);
        const PlaneSpec sym = PlaneSpec::symbolic();
        const std::string scope = "(q,h) in {(1,0),(1,1),(2,0),(2,3)}, n <= " + std::to_string(max_n);
        const std::pair<long, long> spots[] = {{1, 0}, {1, 1}, {2, 0}, {2, 3}};
        for (unsigned n = 0; n <= max_n; ++n) {
            NCPolynomial symbolic = nc_pow(x_plus_y(), n, sym);
            for (auto [qv, hv] : spots) {
                PlaneSpec at{ParamValue::of(Rational(qv)), ParamValue::of(Rational(hv))};
                NCPolynomial evaluated = symbolic.eval(Rational(qv), Rational(hv));
                NCPolynomial direct = nc_pow(x_plus_y(), n, at);
                if (evaluated != direct) {
                    record("specialization-commutes", scope, false,
                           "n=" + std::to_string(n) + " q=" + std::to_string(qv) +
                               " h=" + std::to_string(hv) + ": eval-after = " + evaluated.str() +
                               ", direct = " + direct.str());
                    return;
                }
            }
        }
        record("specialization-commutes", scope, true);
    }

    void check_exec_equivalence() {
        std::mt19937_64 rng(991);
        const PlaneSpec sym = PlaneSpec::symbolic();
        const std::string scope = "50 random products, serial vs OpenMP";
        for (int i = 0; i < 50; ++i) {
            NCPolynomial a = random_ncpoly(rng, 3, 4);
            NCPolynomial b = random_ncpoly(rng, 3, 4);
            NCPolynomial serial = nc_mul(a, b, sym, MulStrategy::batched, Exec::serial);
            NCPolynomial parallel = nc_mul(a, b, sym, MulStrategy::batched, Exec::parallel);
            if (serial != parallel) {
                record("exec-equivalence", scope, false,
                       "lhs = " + a.str() + ", rhs = " + b.str() + ": serial = " + serial.str() +
                           ", parallel = " + parallel.str());
                return;
            }
        }
        record("exec-equivalence", scope, true);
    }

    std::string sweep_scope() const { return "n <= " + std::to_string(opt_.max_n); }

    VerifyOptions opt_;
    std::vector<CheckResult> results_;
};

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    return Suite(options).run();
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.passed) return false;
    return true;
}

}  // namespace hplane
