#include "treeprofile/enumeration.hpp"

#include <algorithm>
#include <thread>

#include "treeprofile/canonical.hpp"
#include "treeprofile/counting.hpp"

namespace treeprofile {

namespace {

// Connected-set enumeration with anchor exclusion. For a fixed anchor v,
// every connected k-set whose minimum vertex is v is emitted exactly once:
// each extension candidate is branched on as chosen-next (recurse) and then
// dropped for good (rest of the loop).
class AnchorEnumerator {
public:
    AnchorEnumerator(const Tree& t, int k, const SubtreeVisitor& visit)
        : t_(t), k_(k), visit_(visit), in_frontier_(t.n(), 0) {}

    long long run(Vertex anchor) {
        anchor_ = anchor;
        set_.clear();
        set_.push_back(anchor);
        in_frontier_[anchor] = 1;
        std::vector<Vertex> ext;
        for (Vertex w : t_.neighbors(anchor))
            if (w > anchor) {
                in_frontier_[w] = 1;
                ext.push_back(w);
            }
        visits_ = 0;
        extend(ext);
        in_frontier_[anchor] = 0;
        for (Vertex w : ext) in_frontier_[w] = 0;
        return visits_;
    }

private:
    void extend(std::vector<Vertex>& ext) {
        if (static_cast<int>(set_.size()) == k_) {
            sorted_ = set_;
            std::sort(sorted_.begin(), sorted_.end());
            visit_(sorted_);
            ++visits_;
            return;
        }
        for (size_t i = 0; i < ext.size(); ++i) {
            Vertex w = ext[i];
            std::vector<Vertex> next(ext.begin() + i + 1, ext.end());
            size_t fresh_from = next.size();
            for (Vertex u : t_.neighbors(w))
                if (u > anchor_ && !in_frontier_[u]) {
                    in_frontier_[u] = 1;
                    next.push_back(u);
                }
            set_.push_back(w);
            extend(next);
            set_.pop_back();
            for (size_t j = fresh_from; j < next.size(); ++j) in_frontier_[next[j]] = 0;
        }
    }

    const Tree& t_;
    int k_;
    const SubtreeVisitor& visit_;
    Vertex anchor_ = 0;
    std::vector<char> in_frontier_;
    std::vector<Vertex> set_;
    std::vector<Vertex> sorted_;
    long long visits_ = 0;
};

// Induced subtree on a sorted vertex set, relabeled to 0..k-1.
Tree induced_tree(const Tree& t, const std::vector<Vertex>& verts) {
    EdgeList el;
    el.declared_n = static_cast<int>(verts.size());
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (t.has_edge(verts[i], verts[j]))
                el.pairs.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Tree::from_edge_list(el);
}

void check_profile_pre(const Tree& t, int k, const TreeCatalog& cat) {
    if (k < 4) throw invalid_input("KTooSmall", "profiles are defined for k >= 4");
    if (cat.k() != k) throw invalid_input("SizeMismatch", "catalog k does not match requested k");
    if (k > t.n())
        throw infeasible("DegenerateProfile", "Z_k = 0 for k > n");
}

void check_cap(const mpz_class& z, long long cap) {
    if (z > mpz_class(std::to_string(cap)))
        throw infeasible("CapExceeded",
                         "enumeration needs " + z.get_str() + " visits, cap is " + std::to_string(cap));
}

void finish_profile(ProfileResult& result) {
    mpz_class sum = 0;
    for (const auto& c : result.counts) sum += c;
    result.z_k = sum;
    result.proportions.resize(result.counts.size());
    result.exact_proportions.resize(result.counts.size());
    for (size_t j = 0; j < result.counts.size(); ++j) {
        mpq_class q(result.counts[j], result.z_k);
        q.canonicalize();
        result.exact_proportions[j] = q;
        result.proportions[j] = q.get_d();
    }
}

} // namespace

long long enumerate_subtrees(const Tree& t, int k, const SubtreeVisitor& visit, long long cap) {
    if (k < 1 || k > t.n())
        throw invalid_input("InvalidParam", "enumerate_subtrees requires 1 <= k <= n");
    mpz_class z = count_all_subtrees(t, k);
    check_cap(z, cap);
    long long total = 0;
    AnchorEnumerator en(t, k, visit);
    for (Vertex v = 0; v < t.n(); ++v) total += en.run(v);
    return total;
}

mpq_class edge_weight(const Tree& t, Vertex u, Vertex v) {
    if (!t.has_edge(u, v))
        throw invalid_input("NotAnEdge",
                            "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    int du = t.degree(u), dv = t.degree(v);
    mpq_class w(std::max(du, dv), std::min(du, dv));
    w.canonicalize();
    return w;
}

ProfileResult profile(const Tree& t, int k, const TreeCatalog& cat, long long cap, int threads) {
    check_profile_pre(t, k, cat);
    mpz_class z = count_all_subtrees(t, k);
    check_cap(z, cap);

    int nthreads = std::max(1, threads);
    std::vector<std::vector<mpz_class>> partial(nthreads,
                                                std::vector<mpz_class>(cat.size(), 0));
    auto work = [&](int tid) {
        auto& counts = partial[tid];
        SubtreeVisitor visit = [&](const std::vector<Vertex>& verts) {
            int idx = cat.classify(induced_tree(t, verts));
            counts[idx - 1] += 1;
        };
        AnchorEnumerator en(t, k, visit);
        for (Vertex v = tid; v < t.n(); v += nthreads) en.run(v);
    };
    if (nthreads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int tid = 0; tid < nthreads; ++tid) pool.emplace_back(work, tid);
        for (auto& th : pool) th.join();
    }

    ProfileResult result;
    result.k = k;
    result.counts.assign(cat.size(), 0);
    for (const auto& counts : partial)
        for (int j = 0; j < cat.size(); ++j) result.counts[j] += counts[j];
    finish_profile(result);
    if (result.z_k != z)
        throw Error(ErrorClass::Internal, "Internal", "enumeration and DP disagree on Z_k");
    return result;
}

BalancePartition balance_partition(const Tree& t, int k, const mpq_class& a,
                                   const TreeCatalog& cat, long long cap) {
    if (a <= 1) throw invalid_input("AInvalid", "threshold a must be > 1");
    check_profile_pre(t, k, cat);
    mpz_class z = count_all_subtrees(t, k);
    check_cap(z, cap);

    BalancePartition part;
    part.a = a;
    std::vector<int> sdeg(t.n(), 0);
    SubtreeVisitor visit = [&](const std::vector<Vertex>& verts) {
        // Subtree-internal degrees.
        for (Vertex v : verts) sdeg[v] = 0;
        int max_deg = 0;
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                if (t.has_edge(verts[i], verts[j])) {
                    max_deg = std::max({max_deg, ++sdeg[verts[i]], ++sdeg[verts[j]]});
                }
        if (max_deg == k - 1) {
            part.stars += 1;
            return;
        }
        // a-unbalanced: some edge with both subtree-degrees >= 2 and host
        // weight >= a.
        bool unbalanced = false;
        for (size_t i = 0; i < verts.size() && !unbalanced; ++i)
            for (size_t j = i + 1; j < verts.size(); ++j) {
                Vertex u = verts[i], v = verts[j];
                if (sdeg[u] < 2 || sdeg[v] < 2 || !t.has_edge(u, v)) continue;
                if (edge_weight(t, u, v) >= a) {
                    unbalanced = true;
                    break;
                }
            }
        if (unbalanced)
            part.unbalanced += 1;
        else
            part.balanced_nonstar += 1;
    };
    AnchorEnumerator en(t, k, visit);
    for (Vertex v = 0; v < t.n(); ++v) en.run(v);
    return part;
}

ProfileResult brute_force_profile(const Tree& t, int k, const TreeCatalog& cat, long long cap) {
    check_profile_pre(t, k, cat);
    check_cap(binomial(t.n(), k), cap);

    ProfileResult result;
    result.k = k;
    result.counts.assign(cat.size(), 0);

    std::vector<Vertex> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = i;
    int n = t.n();
    while (true) {
        // Induced subgraph of a tree is a forest; k vertices spanning k-1
        // induced edges therefore form a subtree.
        int edges = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (t.has_edge(combo[i], combo[j])) ++edges;
        if (edges == k - 1)
            result.counts[cat.classify(induced_tree(t, combo)) - 1] += 1;

        int pos = k - 1;
        while (pos >= 0 && combo[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++combo[pos];
        for (int i = pos + 1; i < k; ++i) combo[i] = combo[i - 1] + 1;
    }
    finish_profile(result);
    return result;
}

} // namespace treeprofile
