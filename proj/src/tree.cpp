#include "treeprofile/tree.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

namespace treeprofile {

Tree Tree::from_edge_list(const EdgeList& edges) {
    int n = edges.declared_n;
    if (edges.pairs.empty()) {
        if (n != 1)
            throw invalid_input("Disconnected",
                                "empty edge list only represents the single-vertex tree (declare n=1)");
        return Tree(1, {{}});
    }
    int max_idx = 0;
    for (auto [u, v] : edges.pairs) {
        if (u < 0 || v < 0)
            throw invalid_input("InvalidIndex",
                                "negative vertex index in edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        max_idx = std::max({max_idx, u, v});
    }
    if (n < 0) n = max_idx + 1;
    if (max_idx >= n)
        throw invalid_input("InvalidIndex",
                            "vertex index " + std::to_string(max_idx) + " out of range for n=" + std::to_string(n));

    std::set<std::pair<Vertex, Vertex>> seen;
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : edges.pairs) {
        if (u == v)
            throw invalid_input("InvalidIndex", "self-loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw invalid_input("DuplicateEdge",
                                "edge (" + std::to_string(key.first) + "," + std::to_string(key.second) + ") repeated");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    if (static_cast<int>(edges.pairs.size()) != n - 1) {
        if (static_cast<int>(edges.pairs.size()) > n - 1)
            throw invalid_input("CycleDetected",
                                std::to_string(edges.pairs.size()) + " edges on " + std::to_string(n) + " vertices");
        throw invalid_input("Disconnected",
                            "only " + std::to_string(edges.pairs.size()) + " edges on " + std::to_string(n) + " vertices");
    }
    // n-1 edges: connected iff acyclic; one BFS settles both.
    std::vector<char> visited(n, 0);
    std::deque<Vertex> queue{0};
    visited[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : adj[v])
            if (!visited[w]) {
                visited[w] = 1;
                ++reached;
                queue.push_back(w);
            }
    }
    if (reached != n) {
        Vertex missing = 0;
        while (visited[missing]) ++missing;
        throw invalid_input("Disconnected",
                            "vertex " + std::to_string(missing) + " unreachable from vertex 0");
    }
    for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    return Tree(n, std::move(adj));
}

bool Tree::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Tree::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(n_ > 0 ? n_ - 1 : 0);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Tree prufer_decode(const std::vector<Vertex>& seq, int n) {
    if (n < 2)
        throw invalid_input("InvalidParam", "prufer_decode requires n >= 2");
    if (static_cast<int>(seq.size()) != n - 2)
        throw invalid_input("LengthMismatch",
                            "sequence length " + std::to_string(seq.size()) + " != n-2 = " + std::to_string(n - 2));
    for (Vertex s : seq)
        if (s < 0 || s >= n)
            throw invalid_input("InvalidIndex", "sequence entry " + std::to_string(s) + " out of range");

    std::vector<int> deg(n, 1);
    for (Vertex s : seq) ++deg[s];

    EdgeList el;
    el.declared_n = n;
    // Always join the smallest current leaf with the next sequence entry.
    // ptr scans forward; leaves appearing behind it are consumed immediately.
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    Vertex leaf = ptr;
    for (Vertex s : seq) {
        el.pairs.emplace_back(leaf, s);
        deg[leaf] = 0;
        if (--deg[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            while (deg[++ptr] != 1) {}
            leaf = ptr;
        }
    }
    // Last edge joins the remaining leaf with n-1.
    el.pairs.emplace_back(leaf, n - 1);
    return Tree::from_edge_list(el);
}

std::vector<Vertex> prufer_encode(const Tree& t) {
    int n = t.n();
    if (n < 2)
        throw invalid_input("TooSmall", "prufer_encode requires n >= 2");
    std::vector<int> deg(n);
    for (Vertex v = 0; v < n; ++v) deg[v] = t.degree(v);

    std::vector<Vertex> seq;
    seq.reserve(n - 2);
    int ptr = -1;
    while (++ptr < n && deg[ptr] != 1) {}
    Vertex leaf = ptr;
    for (int i = 0; i < n - 2; ++i) {
        Vertex parent = -1;
        for (Vertex w : t.neighbors(leaf))
            if (deg[w] > 0) { parent = w; break; }
        seq.push_back(parent);
        deg[leaf] = 0;
        if (--deg[parent] == 1 && parent < ptr) {
            leaf = parent;
        } else {
            while (++ptr < n && deg[ptr] != 1) {}
            leaf = ptr;
        }
    }
    return seq;
}

namespace {

// BFS returning (farthest vertex, distance array).
std::pair<Vertex, std::vector<int>> bfs(const Tree& t, Vertex src) {
    std::vector<int> dist(t.n(), -1);
    std::deque<Vertex> queue{src};
    dist[src] = 0;
    Vertex far = src;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        if (dist[v] > dist[far]) far = v;
        for (Vertex w : t.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return {far, std::move(dist)};
}

} // namespace

int diameter(const Tree& t) {
    auto [a, d0] = bfs(t, 0);
    auto [b, d1] = bfs(t, a);
    return d1[b];
}

int radius(const Tree& t) {
    // Endpoints of a diametral path; the radius is ceil(diam/2) in a tree,
    // but we also need it consistent with an actual center, so compute it
    // directly from the two endpoint distance arrays.
    auto [a, d0] = bfs(t, 0);
    auto [b, da] = bfs(t, a);
    auto [c, db] = bfs(t, b);
    (void)c;
    int best = t.n();
    for (Vertex v = 0; v < t.n(); ++v)
        best = std::min(best, std::max(da[v], db[v]));
    return best;
}

mpz_class degree_moment(const Tree& t, unsigned r) {
    mpz_class sum = 0, p;
    for (Vertex v = 0; v < t.n(); ++v) {
        mpz_ui_pow_ui(p.get_mpz_t(), t.degree(v), r);
        sum += p;
    }
    return sum;
}

Tree read_edge_list(std::istream& in) {
    EdgeList el;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ss(line.substr(start));
        std::string first;
        ss >> first;
        if (first == "n") {
            if (!(ss >> el.declared_n))
                throw invalid_input("InvalidInput", "malformed n-declaration at line " + std::to_string(lineno));
            continue;
        }
        Vertex u, v;
        try {
            u = std::stoi(first);
        } catch (...) {
            throw invalid_input("InvalidInput", "bad token '" + first + "' at line " + std::to_string(lineno));
        }
        if (!(ss >> v))
            throw invalid_input("InvalidInput", "expected two indices at line " + std::to_string(lineno));
        el.pairs.emplace_back(u, v);
    }
    return Tree::from_edge_list(el);
}

Tree read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw invalid_input("InvalidInput", "cannot open file '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Tree& t) {
    if (t.n() == 1) {
        out << "n 1\n";
        return;
    }
    for (auto [u, v] : t.edges()) out << u << ' ' << v << '\n';
}

} // namespace treeprofile
