#pragma once

#include <string>

#include <gmpxx.h>

#include "treeprofile/tree.hpp"

namespace treeprofile {

struct BoundReport {
    std::string name;
    mpq_class lhs;
    mpq_class rhs;
    bool holds = false;
    bool applicable = true;
    std::string context;  // n, k, a, diameter as applicable
    std::string rounding; // empty when the comparison is exact
};

// Constants of the bounded-diameter star lower bound, computed by the
// recursion alpha_1 = k^{-(k-1)}, beta_1 = k-1, N_1 = k;
//   alpha_D = min((k-1)^{-(k-1)}, alpha_{D-1}/(N_{D-1}+2)^{beta_{D-1}})
//   beta_D  = min(2(k-1)/3, (beta_{D-1}+2)/3)
//   N_D     = max(ceil((k-1)^{3/2}), (N_{D-1}+2)^3)
// When beta_{D-1} is not an integer, alpha_D is carried as a certified
// interval [alpha_lo, alpha_hi] via outward-rounded integer roots.
struct DiamConstants {
    int k = 0;
    int D = 0;
    mpq_class beta;
    mpz_class n_threshold;
    mpq_class alpha_lo;
    mpq_class alpha_hi;
    bool alpha_exact = true;
};

// Certified integer bounds on base^(p/q): lo^q <= base^p <= hi^q fails in
// general, what holds is lo <= base^(p/q) <= hi.
void rational_pow_bounds(const mpz_class& base, const mpq_class& exp,
                         mpz_class& lo, mpz_class& hi);

BoundReport check_simple_bound(const Tree& t, int k);
BoundReport check_star_moment_bound(const Tree& t, int k);
BoundReport check_many_paths(const Tree& t, int k);
BoundReport check_unbalanced_bound(const Tree& t, int k, const mpq_class& a);
BoundReport check_balanced_bound(const Tree& t, int k, const mpq_class& a);
BoundReport check_holder(const Tree& t, int k);
BoundReport check_mix_lower_bound(const Tree& t, int k);

DiamConstants diam_constants(int k, int D);
BoundReport check_diam_claim(const Tree& t, int k, int D);

} // namespace treeprofile
