#include "treeprofile/canonical.hpp"

#include <algorithm>
#include <deque>

namespace treeprofile {

CanonicalCode rooted_code(const Tree& t, Vertex root) {
    if (root < 0 || root >= t.n())
        throw invalid_input("InvalidIndex", "root " + std::to_string(root) + " out of range");

    int n = t.n();
    std::vector<Vertex> order;
    order.reserve(n);
    std::vector<Vertex> parent(n, -1);
    order.push_back(root);
    parent[root] = root;
    for (size_t i = 0; i < order.size(); ++i) {
        Vertex v = order[i];
        for (Vertex w : t.neighbors(v))
            if (parent[w] == -1) {
                parent[w] = v;
                order.push_back(w);
            }
    }
    parent[root] = -1;

    // Bottom-up: each vertex's code is '(' + sorted child codes + ')'.
    std::vector<std::string> code(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        std::vector<std::string> kids;
        for (Vertex w : t.neighbors(v))
            if (parent[w] == v) kids.push_back(std::move(code[w]));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (auto& kid : kids) s += kid;
        s += ')';
        code[v] = std::move(s);
    }
    return code[root];
}

std::vector<Vertex> centers(const Tree& t) {
    int n = t.n();
    if (n == 1) return {0};
    if (n == 2) return {0, 1};
    std::vector<int> deg(n);
    std::deque<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        std::deque<Vertex> next;
        remaining -= static_cast<int>(layer.size());
        for (Vertex v : layer) {
            deg[v] = 0;
            for (Vertex w : t.neighbors(v))
                if (deg[w] > 0 && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<Vertex> c(layer.begin(), layer.end());
    std::sort(c.begin(), c.end());
    return c;
}

CanonicalCode free_code(const Tree& t) {
    auto c = centers(t);
    if (c.size() == 1) return rooted_code(t, c[0]);
    return std::min(rooted_code(t, c[0]), rooted_code(t, c[1]));
}

bool is_isomorphic(const Tree& t1, const Tree& t2) {
    if (t1.n() != t2.n()) return false;
    return free_code(t1) == free_code(t2);
}

} // namespace treeprofile
