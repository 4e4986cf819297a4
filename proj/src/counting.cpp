#include "treeprofile/counting.hpp"

#include <algorithm>
#include <vector>

namespace treeprofile {

namespace {

// BFS order from vertex 0 with parent pointers; children are processed by
// walking the order in reverse, so no recursion anywhere.
struct Rooting {
    std::vector<Vertex> order;
    std::vector<Vertex> parent;
};

Rooting root_at_zero(const Tree& t) {
    Rooting r;
    r.order.reserve(t.n());
    r.parent.assign(t.n(), -2);
    r.order.push_back(0);
    r.parent[0] = -1;
    for (size_t i = 0; i < r.order.size(); ++i) {
        Vertex v = r.order[i];
        for (Vertex w : t.neighbors(v))
            if (r.parent[w] == -2) {
                r.parent[w] = v;
                r.order.push_back(w);
            }
    }
    return r;
}

// f[v][s] = number of connected induced subgraphs of s vertices, contained
// in v's subtree and containing v. cap = max polynomial degree.
std::vector<std::vector<mpz_class>> subtree_count_dp(const Tree& t, int cap, const Rooting& r) {
    std::vector<std::vector<mpz_class>> f(t.n());
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
        Vertex v = *it;
        std::vector<mpz_class> poly{0, 1}; // x
        for (Vertex w : t.neighbors(v)) {
            if (r.parent[w] != v) continue;
            const auto& g = f[w];
            // poly *= (1 + g), truncated at cap
            std::vector<mpz_class> out(std::min<size_t>(cap + 1, poly.size() + g.size() - 1), 0);
            for (size_t i = 0; i < poly.size(); ++i) {
                if (poly[i] == 0) continue;
                if (i < out.size()) out[i] += poly[i];
                for (size_t j = 1; j < g.size() && i + j < out.size(); ++j)
                    out[i + j] += poly[i] * g[j];
            }
            poly = std::move(out);
        }
        f[v] = std::move(poly);
    }
    return f;
}

} // namespace

mpz_class count_all_subtrees(const Tree& t, int k) {
    if (k < 1) throw invalid_input("InvalidParam", "k must be >= 1");
    if (k > t.n()) return 0;
    auto r = root_at_zero(t);
    auto f = subtree_count_dp(t, k, r);
    mpz_class total = 0;
    for (Vertex v = 0; v < t.n(); ++v)
        if (static_cast<int>(f[v].size()) > k) total += f[v][k];
    return total;
}

mpz_class count_all_connected(const Tree& t) {
    auto r = root_at_zero(t);
    auto f = subtree_count_dp(t, t.n(), r);
    mpz_class total = 0;
    for (Vertex v = 0; v < t.n(); ++v)
        for (const auto& c : f[v]) total += c;
    return total;
}

mpz_class count_paths(const Tree& t, int k) {
    if (k < 2) throw invalid_input("InvalidParam", "count_paths requires k >= 2");
    if (k > t.n()) return 0;
    auto r = root_at_zero(t);
    // down[v][l] = number of descending paths of l vertices starting at v.
    std::vector<std::vector<mpz_class>> down(t.n());
    mpz_class total = 0;
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
        Vertex v = *it;
        std::vector<mpz_class> dv(k + 1, 0);
        dv[1] = 1;
        // acc[l] = sum of down[c][l] over children seen so far; pairs of
        // distinct child branches joined at v give the bent paths.
        std::vector<mpz_class> acc(k + 1, 0);
        for (Vertex w : t.neighbors(v)) {
            if (r.parent[w] != v) continue;
            const auto& dw = down[w];
            for (int l2 = 1; l2 < k; ++l2) {
                if (dw[l2] == 0) continue;
                int l1 = k - 1 - l2;
                if (l1 >= 1) total += acc[l1] * dw[l2];
            }
            for (int l = 1; l < k; ++l) {
                acc[l] += dw[l];
                dv[l + 1] += dw[l];
            }
        }
        total += dv[k]; // straight descending path topped at v
        down[v] = std::move(dv);
    }
    return total;
}

mpz_class count_stars(const Tree& t, int k) {
    if (k < 3) throw invalid_input("KTooSmall", "count_stars requires k >= 3");
    mpz_class total = 0, b;
    for (Vertex v = 0; v < t.n(); ++v) {
        int d = t.degree(v);
        if (d < k - 1) continue;
        mpz_bin_uiui(b.get_mpz_t(), d, k - 1);
        total += b;
    }
    return total;
}

mpz_class simple_upper_bound(const Tree& t, int k) {
    if (k < 1) throw invalid_input("InvalidParam", "k must be >= 1");
    return factorial(k - 1) * degree_moment(t, k - 1);
}

mpz_class factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

mpz_class binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

} // namespace treeprofile
