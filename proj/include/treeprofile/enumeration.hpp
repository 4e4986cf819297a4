#pragma once

#include <functional>
#include <vector>

#include <gmpxx.h>

#include "treeprofile/catalog.hpp"
#include "treeprofile/tree.hpp"

namespace treeprofile {

inline constexpr long long kDefaultEnumerationCap = 10'000'000;

struct ProfileResult {
    int k = 0;
    mpz_class z_k;
    std::vector<mpz_class> counts;     // 1-based index j-1 -> c(T_j^k, T)
    std::vector<double> proportions;   // counts / z_k
    std::vector<mpq_class> exact_proportions;

    bool operator==(const ProfileResult& other) const {
        return k == other.k && z_k == other.z_k && counts == other.counts;
    }
};

struct BalancePartition {
    mpq_class a;
    mpz_class stars;
    mpz_class unbalanced;       // Z_k(T, a)
    mpz_class balanced_nonstar; // Zbar_k(T, a)
};

// Visits every k-vertex connected induced subgraph exactly once, as a
// sorted vertex set. Deterministic order: anchors in increasing index,
// extensions restricted to higher-indexed vertices.
using SubtreeVisitor = std::function<void(const std::vector<Vertex>&)>;
long long enumerate_subtrees(const Tree& t, int k, const SubtreeVisitor& visit,
                             long long cap = kDefaultEnumerationCap);

// Exact weight of an edge of t: larger endpoint degree over smaller.
mpq_class edge_weight(const Tree& t, Vertex u, Vertex v);

// Full k-profile by enumeration + catalog classification. threads > 1
// partitions anchors across workers; counts are merged by summation, so
// the result does not depend on the thread count.
ProfileResult profile(const Tree& t, int k, const TreeCatalog& cat,
                      long long cap = kDefaultEnumerationCap, int threads = 1);

// Star / a-unbalanced / balanced-non-star split of the k-vertex subtrees.
BalancePartition balance_partition(const Tree& t, int k, const mpq_class& a,
                                   const TreeCatalog& cat,
                                   long long cap = kDefaultEnumerationCap);

// Independent oracle: all C(n,k) subsets, keep those inducing k-1 edges.
ProfileResult brute_force_profile(const Tree& t, int k, const TreeCatalog& cat,
                                  long long cap = kDefaultEnumerationCap);

} // namespace treeprofile
