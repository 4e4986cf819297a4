#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "treeprofile/counting.hpp"
#include "treeprofile/families.hpp"

using namespace treeprofile;

namespace {

// Brute-force oracle: iterate all k-subsets; a k-subset of a tree induces
// a subtree iff it induces exactly k-1 edges.
struct BruteCounts {
    mpz_class total, paths, stars;
};

BruteCounts brute_counts(const Tree& t, int k) {
    BruteCounts out{0, 0, 0};
    int n = t.n();
    std::vector<Vertex> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = i;
    while (true) {
        int edges = 0;
        std::vector<int> deg(k, 0);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (t.has_edge(combo[i], combo[j])) {
                    ++edges;
                    ++deg[i];
                    ++deg[j];
                }
        if (edges == k - 1) {
            out.total += 1;
            int max_deg = 0;
            for (int d : deg) max_deg = std::max(max_deg, d);
            if (max_deg <= 2) out.paths += 1;
            if (max_deg == k - 1) out.stars += 1;
        }
        int pos = k - 1;
        while (pos >= 0 && combo[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++combo[pos];
        for (int i = pos + 1; i < k; ++i) combo[i] = combo[i - 1] + 1;
    }
    return out;
}

Tree subdivided_3star() {
    // Center 0, three arms of two edges each.
    return Tree::from_edge_list(
        {{{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}, 7});
}

} // namespace

TEST_CASE("count_all_subtrees examples") {
    CHECK(count_all_subtrees(path(10), 4) == 7);
    CHECK(count_all_subtrees(star(6), 4) == 10);
    CHECK(count_all_subtrees(caterpillar(3), 5) == 12);
    CHECK(count_all_subtrees(path(3), 7) == 0);
}

TEST_CASE("count_paths examples") {
    CHECK(count_paths(path(10), 4) == 7);
    CHECK(count_paths(star(7), 4) == 0);
    CHECK(count_paths(caterpillar(3), 5) == 4);
}

TEST_CASE("count_paths at k=2 counts edges") {
    for (int seed = 0; seed < 30; ++seed) {
        Tree t = random_prufer(5 + seed % 20, 7000 + seed);
        CHECK(count_paths(t, 2) == t.n() - 1);
    }
}

TEST_CASE("count_stars examples") {
    CHECK(count_stars(star(6), 4) == 10);
    CHECK(count_stars(path(6), 4) == 0);
    CHECK(count_stars(caterpillar(3), 4) == 3);
    CHECK_THROWS_WITH_AS(count_stars(path(6), 2), doctest::Contains("KTooSmall"), Error);
}

TEST_CASE("simple_upper_bound examples") {
    CHECK(simple_upper_bound(path(10), 4) == 396);
    CHECK(simple_upper_bound(star(6), 4) == 780);
    CHECK(simple_upper_bound(star(1), 1) == 1);
}

TEST_CASE("oracle equivalence on a random corpus") {
    Xorshift64Star rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 5 + static_cast<int>(rng.next() % 10); // 5..14
        Tree t = random_prufer(n, rng.next());
        for (int k = 3; k <= 7 && k <= n; ++k) {
            auto oracle = brute_counts(t, k);
            CHECK(count_all_subtrees(t, k) == oracle.total);
            CHECK(count_paths(t, k) == oracle.paths);
            if (k >= 3) CHECK(count_stars(t, k) == oracle.stars);
            CHECK(count_all_subtrees(t, k) <= simple_upper_bound(t, k));
        }
    }
}

TEST_CASE("oracle equivalence on structured trees") {
    for (const Tree& t : {caterpillar(3), subdivided_3star(), complete_dary(2, 2), star(13)}) {
        for (int k = 3; k <= 6; ++k) {
            auto oracle = brute_counts(t, k);
            CHECK(count_all_subtrees(t, k) == oracle.total);
            CHECK(count_paths(t, k) == oracle.paths);
            CHECK(count_stars(t, k) == oracle.stars);
        }
    }
}

TEST_CASE("DP internal consistency: sizes sum to the connected-subgraph total") {
    for (int seed = 0; seed < 20; ++seed) {
        Tree t = random_prufer(12, 31 + seed);
        mpz_class by_size = 0;
        for (int k = 1; k <= t.n(); ++k) by_size += count_all_subtrees(t, k);
        CHECK(by_size == count_all_connected(t));
    }
}

TEST_CASE("deep path does not overflow the stack") {
    Tree t = path(200000);
    CHECK(count_all_subtrees(t, 5) == 200000 - 4);
    CHECK(count_paths(t, 5) == 200000 - 4);
}
