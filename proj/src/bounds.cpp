#include "treeprofile/bounds.hpp"

#include <string>

#include "treeprofile/catalog.hpp"
#include "treeprofile/counting.hpp"
#include "treeprofile/enumeration.hpp"

namespace treeprofile {

namespace {

std::string ctx(const Tree& t, int k) {
    return "n=" + std::to_string(t.n()) + " k=" + std::to_string(k);
}

mpq_class pow_int(const mpq_class& base, unsigned e) {
    mpq_class r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    return r;
}

// ceil((k-1)^{3/2}) = smallest m with m^2 >= (k-1)^3.
mpz_class ceil_pow_3_2(int km1) {
    mpz_class cube;
    mpz_ui_pow_ui(cube.get_mpz_t(), km1, 3);
    mpz_class lo, hi;
    rational_pow_bounds(mpz_class(km1), mpq_class(3, 2), lo, hi);
    return hi;
}

} // namespace

void rational_pow_bounds(const mpz_class& base, const mpq_class& exp,
                         mpz_class& lo, mpz_class& hi) {
    mpq_class e(exp);
    e.canonicalize();
    unsigned long p = mpz_get_ui(mpq_numref(e.get_mpq_t()));
    unsigned long q = mpz_get_ui(mpq_denref(e.get_mpq_t()));
    mpz_class powed;
    mpz_pow_ui(powed.get_mpz_t(), base.get_mpz_t(), p);
    int exact = mpz_root(lo.get_mpz_t(), powed.get_mpz_t(), q);
    hi = exact ? lo : lo + 1;
}

BoundReport check_simple_bound(const Tree& t, int k) {
    BoundReport r;
    r.name = "simple_bound";
    r.context = ctx(t, k);
    r.lhs = count_all_subtrees(t, k);
    r.rhs = simple_upper_bound(t, k);
    r.holds = r.lhs <= r.rhs;
    return r;
}

BoundReport check_star_moment_bound(const Tree& t, int k) {
    if (k < 3) throw invalid_input("KTooSmall", "star moment bound requires k >= 3");
    BoundReport r;
    r.name = "star_moment_bound";
    r.context = ctx(t, k);
    mpq_class moment(degree_moment(t, k - 1));
    r.lhs = moment / pow_int(mpq_class(k - 1), k - 1) - t.n();
    r.rhs = count_stars(t, k);
    r.holds = r.lhs <= r.rhs;
    return r;
}

BoundReport check_many_paths(const Tree& t, int k) {
    BoundReport r;
    r.name = "many_paths";
    int diam = diameter(t);
    r.context = ctx(t, k) + " diam=" + std::to_string(diam);
    if (diam < 2 * k - 2) {
        r.applicable = false;
        r.holds = true;
        return r;
    }
    r.lhs = mpq_class(t.n(), 2);
    r.lhs.canonicalize();
    r.rhs = count_paths(t, k);
    r.holds = r.lhs <= r.rhs;
    return r;
}

BoundReport check_unbalanced_bound(const Tree& t, int k, const mpq_class& a) {
    BoundReport r;
    r.name = "unbalanced_bound";
    r.context = ctx(t, k) + " a=" + a.get_str();
    auto cat = TreeCatalog::build(k);
    auto part = balance_partition(t, k, a, cat);
    r.lhs = part.unbalanced;
    r.rhs = mpq_class(factorial(k - 1) * degree_moment(t, k - 1)) / a;
    r.holds = r.lhs <= r.rhs;
    return r;
}

BoundReport check_balanced_bound(const Tree& t, int k, const mpq_class& a) {
    BoundReport r;
    r.name = "balanced_bound";
    r.context = ctx(t, k) + " a=" + a.get_str();
    auto cat = TreeCatalog::build(k);
    auto part = balance_partition(t, k, a, cat);
    r.lhs = part.balanced_nonstar;
    r.rhs = 2 * mpq_class(factorial(k - 1) * degree_moment(t, k - 2)) *
            pow_int(a, (k - 2) * (k - 2));
    r.holds = r.lhs <= r.rhs;
    return r;
}

BoundReport check_holder(const Tree& t, int k) {
    if (k < 3) throw invalid_input("KTooSmall", "Holder check requires k >= 3");
    BoundReport r;
    r.name = "holder";
    r.context = ctx(t, k);
    // Both sides raised to the (k-1)-th power, keeping everything integral.
    mpz_class lhs, rhs;
    mpz_class m2 = degree_moment(t, k - 2);
    mpz_class m1 = degree_moment(t, k - 1);
    mpz_pow_ui(lhs.get_mpz_t(), m2.get_mpz_t(), k - 1);
    mpz_pow_ui(rhs.get_mpz_t(), m1.get_mpz_t(), k - 2);
    rhs *= t.n();
    r.lhs = lhs;
    r.rhs = rhs;
    r.holds = r.lhs <= r.rhs;
    r.rounding = "both sides raised to power k-1";
    return r;
}

BoundReport check_mix_lower_bound(const Tree& t, int k) {
    int diam = diameter(t);
    if (diam < 2 * k - 2)
        throw infeasible("NotApplicable",
                         "mix lower bound needs diameter >= 2k-2, have " + std::to_string(diam));
    BoundReport r;
    r.name = "mix_lower_bound";
    r.context = ctx(t, k) + " diam=" + std::to_string(diam);
    r.lhs = 1 / (2 * pow_int(mpq_class(k - 1), k - 1) * mpq_class(factorial(k - 1)));
    mpz_class z = count_all_subtrees(t, k);
    r.rhs = mpq_class(count_stars(t, k) + count_paths(t, k)) / mpq_class(z);
    r.holds = r.lhs <= r.rhs;
    return r;
}

DiamConstants diam_constants(int k, int D) {
    if (k < 3 || D < 1)
        throw invalid_input("InvalidParam", "diam_constants requires k >= 3 and D >= 1");
    DiamConstants c;
    c.k = k;
    c.D = 1;
    c.beta = k - 1;
    c.n_threshold = k;
    mpq_class base_alpha = 1 / pow_int(mpq_class(k), k - 1);
    c.alpha_lo = c.alpha_hi = base_alpha;
    c.alpha_exact = true;

    mpq_class cand1 = 1 / pow_int(mpq_class(k - 1), k - 1);
    for (int d = 2; d <= D; ++d) {
        DiamConstants next;
        next.k = k;
        next.D = d;
        mpq_class beta_cap(2 * (k - 1), 3);
        beta_cap.canonicalize();
        mpq_class beta_rec((c.beta + 2) / 3);
        beta_rec.canonicalize();
        next.beta = std::min(beta_cap, beta_rec);

        mpz_class grown = c.n_threshold + 2;
        mpz_class cube;
        mpz_pow_ui(cube.get_mpz_t(), grown.get_mpz_t(), 3);
        next.n_threshold = std::max(ceil_pow_3_2(k - 1), cube);

        c.beta.canonicalize();
        if (mpz_cmp_ui(mpq_denref(c.beta.get_mpq_t()), 1) == 0) {
            // Integer exponent: exact power of N_{D-1}+2.
            unsigned long e = mpz_get_ui(mpq_numref(c.beta.get_mpq_t()));
            mpz_class pw;
            mpz_pow_ui(pw.get_mpz_t(), grown.get_mpz_t(), e);
            mpq_class cand2_lo = c.alpha_lo / mpq_class(pw);
            mpq_class cand2_hi = c.alpha_hi / mpq_class(pw);
            next.alpha_lo = std::min(cand1, cand2_lo);
            next.alpha_hi = std::min(cand1, cand2_hi);
            next.alpha_exact = c.alpha_exact;
        } else {
            // (N+2)^beta is irrational; bracket it with integer roots.
            mpz_class plo, phi;
            rational_pow_bounds(grown, c.beta, plo, phi);
            mpq_class cand2_lo(c.alpha_lo / mpq_class(phi));
            mpq_class cand2_hi(c.alpha_hi / mpq_class(plo));
            next.alpha_lo = std::min(cand1, cand2_lo);
            next.alpha_hi = std::min(cand1, cand2_hi);
            next.alpha_exact = false;
        }
        next.alpha_lo.canonicalize();
        next.alpha_hi.canonicalize();
        c = next;
    }
    return c;
}

BoundReport check_diam_claim(const Tree& t, int k, int D) {
    int rad = radius(t);
    if (rad > D)
        throw infeasible("HeightExceeded",
                         "radius " + std::to_string(rad) + " exceeds D = " + std::to_string(D));
    DiamConstants c = diam_constants(k, D);
    BoundReport r;
    r.name = "diam_claim";
    r.context = ctx(t, k) + " D=" + std::to_string(D);
    r.rhs = count_stars(t, k);
    mpz_class excess = t.n() - c.n_threshold;
    if (excess <= 0) {
        r.lhs = 0;
        r.holds = true;
        return r;
    }
    // Upper bound on alpha * excess^beta certifies "holds".
    mpz_class plo, phi;
    rational_pow_bounds(excess, c.beta, plo, phi);
    r.lhs = c.alpha_hi * mpq_class(phi);
    r.lhs.canonicalize();
    r.holds = r.lhs <= r.rhs;
    if (phi != plo || !c.alpha_exact) r.rounding = "lhs rounded up";
    return r;
}

} // namespace treeprofile
