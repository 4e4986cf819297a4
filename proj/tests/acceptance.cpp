// Acceptance suite: one pass/fail line per criterion. Exit 0 when all pass,
// 3 when a proven inequality is violated, 1 otherwise.

#include <cmath>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "treeprofile/bounds.hpp"
#include "treeprofile/canonical.hpp"
#include "treeprofile/catalog.hpp"
#include "treeprofile/counting.hpp"
#include "treeprofile/enumeration.hpp"
#include "treeprofile/experiments.hpp"
#include "treeprofile/families.hpp"

using namespace treeprofile;

namespace {

int failures = 0;
int theorem_failures = 0;

void report(int number, const std::string& name, bool pass, bool theorem = false) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion-" << number << " " << name << "\n";
    if (!pass) {
        ++failures;
        if (theorem) ++theorem_failures;
    }
}

std::vector<Tree> corpus(int count, int n_min, int n_max, std::uint64_t seed0) {
    std::vector<Tree> trees;
    Xorshift64Star rng(seed0);
    for (int i = 0; i < count; ++i) {
        int n = n_min + static_cast<int>(rng.next() % static_cast<std::uint64_t>(n_max - n_min + 1));
        trees.push_back(random_prufer(n, rng.next()));
    }
    return trees;
}

void criterion_1_and_3() {
    bool profiles_ok = true, counters_ok = true, stars_ok = true;
    auto trees = corpus(200, 5, 14, 20260824);
    for (const auto& t : trees) {
        for (int k = 4; k <= 6; ++k) {
            if (k > t.n()) continue;
            auto cat = TreeCatalog::build(k);
            auto fast = profile(t, k, cat);
            auto slow = brute_force_profile(t, k, cat);
            if (!(fast == slow)) profiles_ok = false;
            if (count_all_subtrees(t, k) != slow.z_k) counters_ok = false;
            if (count_paths(t, k) != slow.counts[0]) counters_ok = false;
            if (count_stars(t, k) != slow.counts[1]) stars_ok = false;
        }
    }
    report(1, "oracle-equivalence (200 trees, k in {4,5,6})", profiles_ok && counters_ok);
    report(3, "star-count formula vs oracle", stars_ok);
}

void criterion_2() {
    bool ok = true;
    double prev_p1 = -1;
    double p1_500 = 0;
    for (int n : {10, 50, 200, 500}) {
        Tree t = caterpillar(n);
        if (count_stars(t, 5) != 0) ok = false;
        mpq_class p1(count_paths(t, 5), count_all_subtrees(t, 5));
        p1.canonicalize();
        double p1d = p1.get_d();
        if (p1d < prev_p1) ok = false;
        prev_p1 = p1d;
        if (n == 500) p1_500 = p1d;
    }
    if (std::abs(p1_500 - 0.5) > 0.02) ok = false;
    report(2, "caterpillar: p2^(5)=0, p1^(5) nondecreasing toward 1/2", ok);
}

void criterion_4() {
    bool ok = true;
    auto trees = corpus(50, 8, 40, 777001);
    std::vector<mpq_class> grid{mpq_class(3, 2), mpq_class(2), mpq_class(3)};
    for (const auto& t : trees)
        for (int k = 4; k <= 5; ++k) {
            if (k > t.n()) continue;
            auto cat = TreeCatalog::build(k);
            mpz_class z = count_all_subtrees(t, k);
            for (const auto& a : grid) {
                auto part = balance_partition(t, k, a, cat);
                if (part.stars + part.unbalanced + part.balanced_nonstar != z) ok = false;
            }
        }
    report(4, "partition identity stars + Z_k(T,a) + Zbar_k(T,a) = Z_k(T)", ok);
}

void criterion_5_and_6() {
    bool ineq_ok = true, diam_ok = true;
    mpq_class mix_threshold_k4(1, 324);
    auto big = corpus(1000, 5, 200, 550001);
    for (const auto& t : big)
        for (int k = 4; k <= 6; ++k) {
            if (!check_simple_bound(t, k).holds) ineq_ok = false;
            if (!check_star_moment_bound(t, k).holds) ineq_ok = false;
            if (!check_holder(t, k).holds) ineq_ok = false;
            auto mp = check_many_paths(t, k);
            if (mp.applicable && !mp.holds) diam_ok = false;
            if (k == 4 && diameter(t) >= 2 * k - 2) {
                auto mix = check_mix_lower_bound(t, k);
                if (mix.lhs != mix_threshold_k4 || !mix.holds) diam_ok = false;
            }
        }
    auto small = corpus(50, 8, 40, 660001);
    std::vector<mpq_class> grid{mpq_class(3, 2), mpq_class(2), mpq_class(3)};
    for (const auto& t : small)
        for (int k = 4; k <= 6; ++k) {
            if (k > t.n()) continue;
            for (const auto& a : grid) {
                if (!check_unbalanced_bound(t, k, a).holds) ineq_ok = false;
                if (!check_balanced_bound(t, k, a).holds) ineq_ok = false;
            }
        }
    report(5, "inequality suite (simple, star-moment, Holder, unbalanced, balanced)",
           ineq_ok, true);
    report(6, "diameter lemmas (many paths; mix >= 1/324 at k=4)", diam_ok, true);
}

struct HandConstants {
    mpq_class beta;
    mpz_class n;
    mpq_class alpha_lo;
    mpq_class alpha_hi;
};

void criterion_7() {
    bool ok = true;
    // Hand-evaluated recursion values, (k, D) in {3,4,5} x {1,2,3}.
    auto hand = [](int k, int D) -> HandConstants {
        if (k == 3) {
            if (D == 1) return {2, 3, {1, 9}, {1, 9}};
            if (D == 2) return {{4, 3}, 125, {1, 225}, {1, 225}};
            // 638^3 < 127^4 < 639^3
            return {{10, 9}, 2048383, {1, 143775}, {1, 143550}};
        }
        if (k == 4) {
            if (D == 1) return {3, 4, {1, 64}, {1, 64}};
            if (D == 2) return {{5, 3}, 216, {1, 13824}, {1, 13824}};
            // 7896^3 < 218^5 < 7897^3
            return {{11, 9}, 10360232, {1, 109168128}, {1, 109154304}};
        }
        if (D == 1) return {4, 5, {1, 625}, {1, 625}};
        if (D == 2) return {2, 343, {1, 1500625}, {1, 1500625}};
        return {{4, 3}, 41063625, {1, mpz_class("178611890625")}, {1, mpz_class("178611890625")}};
    };
    for (int k : {3, 4, 5})
        for (int D : {1, 2, 3}) {
            auto got = diam_constants(k, D);
            auto want = hand(k, D);
            if (got.beta != want.beta || got.n_threshold != want.n ||
                got.alpha_lo != want.alpha_lo || got.alpha_hi != want.alpha_hi) {
                ok = false;
                std::cout << "  diam_constants mismatch at k=" << k << " D=" << D << "\n";
            }
        }
    for (int d : {10, 15, 20})
        if (!check_diam_claim(complete_dary(d, 2), 4, 2).holds) ok = false;
    report(7, "bounded-diameter constants and claim", ok, true);
}

void criterion_8() {
    auto rows = cross_size_report({1000, 10000}, 4);
    bool ok = rows.size() == 4;
    if (ok) {
        const auto& k4s = rows[0];
        const auto& k5s = rows[1];
        const auto& k4b = rows[2];
        const auto& k5b = rows[3];
        if (!(k4b.p2 < k4s.p2)) {
            ok = false;
            std::cout << "  p2^(4) did not decrease: " << format_double(k4s.p2) << " -> "
                      << format_double(k4b.p2) << "\n";
        }
        if (!(k5b.p2 > k5s.p2)) ok = false;
        if (!(k5b.moment_over_n >= 2.0 * k5s.moment_over_n)) {
            ok = false;
            std::cout << "  sum d^4 / n grew only " << format_double(k5s.moment_over_n)
                      << " -> " << format_double(k5b.moment_over_n)
                      << " (factor " << format_double(k5b.moment_over_n / k5s.moment_over_n)
                      << ", needed 2)\n";
        }
        if (!(k4s.moment_over_n < 9.0 && k4b.moment_over_n < 9.0)) ok = false;
    }
    report(8, "extended star cross-size directional checks at k=4", ok);
}

void criterion_9() {
    bool ok = true;
    const int expected[] = {0, 0, 0, 0, 2, 3, 6, 11, 23};
    for (int k = 4; k <= 8; ++k) {
        if (TreeCatalog::build(k).size() != expected[k]) ok = false;
        std::set<CanonicalCode> codes;
        long long total = 1;
        for (int i = 0; i < k - 2; ++i) total *= k;
        for (long long code = 0; code < total; ++code) {
            std::vector<Vertex> seq(k - 2);
            long long c = code;
            for (auto& s : seq) {
                s = static_cast<Vertex>(c % k);
                c /= k;
            }
            codes.insert(free_code(prufer_decode(seq, k)));
        }
        if (static_cast<int>(codes.size()) != expected[k]) ok = false;
    }
    report(9, "catalog sizes 2,3,6,11,23 vs exhaustive Prufer dedup", ok);
}

std::string determinism_transcript(int threads) {
    std::ostringstream out;
    auto trees = corpus(10, 8, 20, 880001);
    for (const auto& t : trees) {
        auto cat = TreeCatalog::build(5);
        if (t.n() < 5) continue;
        auto p = profile(t, 5, cat, kDefaultEnumerationCap, threads);
        out << p.z_k.get_str();
        for (const auto& c : p.counts) out << ',' << c.get_str();
        out << '\n';
    }
    write_csv(out, run_sequence({"caterpillar", {}}, 5, {10, 50}));
    write_csv(out, cross_size_report({1000}, 4));
    return out.str();
}

void criterion_10() {
    report(10, "byte-identical output at thread counts 1 and 8",
           determinism_transcript(1) == determinism_transcript(8));
}

} // namespace

int main() {
    criterion_1_and_3();
    criterion_2();
    criterion_4();
    criterion_5_and_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (theorem_failures) return 3;
    return failures ? 1 : 0;
}
