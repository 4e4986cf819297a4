#pragma once

#include <gmpxx.h>

#include "treeprofile/tree.hpp"

namespace treeprofile {

// Exact number of k-vertex subtrees Z_k(T). Linear-time knapsack DP over a
// rooted copy of the tree, counts truncated at degree k.
mpz_class count_all_subtrees(const Tree& t, int k);

// Exact number of k-vertex induced paths c(P_k, T), k >= 2.
mpz_class count_paths(const Tree& t, int k);

// Exact number of k-vertex stars c(S_k, T) = sum_v C(d(v), k-1), k >= 3.
mpz_class count_stars(const Tree& t, int k);

// (k-1)! * sum_v d(v)^{k-1}; an upper bound on Z_k(T).
mpz_class simple_upper_bound(const Tree& t, int k);

// Total number of connected induced subgraphs of all sizes (no truncation
// cap beyond n); consistency anchor for the DP.
mpz_class count_all_connected(const Tree& t);

mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);

} // namespace treeprofile
