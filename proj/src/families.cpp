#include "treeprofile/families.hpp"

#include <cmath>

namespace treeprofile {

namespace {

Tree from_pairs(std::vector<std::pair<Vertex, Vertex>> pairs, int n) {
    EdgeList el;
    el.pairs = std::move(pairs);
    el.declared_n = n;
    return Tree::from_edge_list(el);
}

} // namespace

Tree path(int n) {
    if (n < 1) throw invalid_input("InvalidParam", "path requires n >= 1");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
    return from_pairs(std::move(pairs), n);
}

Tree star(int n) {
    if (n < 1) throw invalid_input("InvalidParam", "star requires n >= 1");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 1; v < n; ++v) pairs.emplace_back(0, v);
    return from_pairs(std::move(pairs), n);
}

Tree caterpillar(int n) {
    if (n < 1) throw invalid_input("InvalidParam", "caterpillar requires n >= 1");
    // Spine 0..n+1, legs n+2..2n+1 with leg i attached to spine vertex i+1.
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v = 0; v <= n; ++v) pairs.emplace_back(v, v + 1);
    for (Vertex i = 0; i < n; ++i) pairs.emplace_back(i + 1, n + 2 + i);
    return from_pairs(std::move(pairs), 2 * n + 2);
}

int extended_star_center_degree(int n, int k) {
    double exponent = 2.0 / (2 * k - 1);
    double raw = std::pow(static_cast<double>(n), exponent);
    int d = static_cast<int>(std::floor(raw + 0.5)); // round half up
    return std::max(3, d);
}

Tree extended_star(int n, int k) {
    if (n < 10 || k < 4)
        throw invalid_input("InvalidParam", "extended_star requires n >= 10 and k >= 4");
    int d = extended_star_center_degree(n, k);
    // d arms totaling n-1 vertices; remainder spread one per arm from arm 0.
    int base = (n - 1) / d;
    int rem = (n - 1) % d;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    Vertex next = 1;
    for (int arm = 0; arm < d; ++arm) {
        int len = base + (arm < rem ? 1 : 0);
        Vertex prev = 0;
        for (int j = 0; j < len; ++j) {
            pairs.emplace_back(prev, next);
            prev = next++;
        }
    }
    return from_pairs(std::move(pairs), n);
}

Tree complete_dary(int d, int height) {
    if (d < 2 || height < 1)
        throw invalid_input("InvalidParam", "complete_dary requires d >= 2 and height >= 1");
    long long n = 1, layer = 1;
    for (int h = 0; h < height; ++h) {
        layer *= d;
        n += layer;
        if (n > 1000000)
            throw infeasible("SizeCap", "complete_dary size exceeds 10^6 vertices");
    }
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(n - 1);
    for (Vertex v = 1; v < n; ++v) pairs.emplace_back((v - 1) / d, v);
    return from_pairs(std::move(pairs), static_cast<int>(n));
}

Tree random_prufer(int n, std::uint64_t seed) {
    if (n < 2) throw invalid_input("InvalidParam", "random_prufer requires n >= 2");
    Xorshift64Star rng(seed);
    std::vector<Vertex> seq(n - 2);
    for (auto& s : seq) s = static_cast<Vertex>(rng.next() % static_cast<std::uint64_t>(n));
    return prufer_decode(seq, n);
}

Tree make_family(const FamilySpec& spec) {
    auto get = [&](const std::string& key) -> long long {
        auto it = spec.params.find(key);
        if (it == spec.params.end())
            throw invalid_input("InvalidParam", "family '" + spec.name + "' needs parameter '" + key + "'");
        return it->second;
    };
    if (spec.name == "path") return path(static_cast<int>(get("n")));
    if (spec.name == "star") return star(static_cast<int>(get("n")));
    if (spec.name == "caterpillar") return caterpillar(static_cast<int>(get("n")));
    if (spec.name == "extended_star")
        return extended_star(static_cast<int>(get("n")), static_cast<int>(get("k")));
    if (spec.name == "complete_dary")
        return complete_dary(static_cast<int>(get("d")), static_cast<int>(get("height")));
    if (spec.name == "random_prufer")
        return random_prufer(static_cast<int>(get("n")), static_cast<std::uint64_t>(get("seed")));
    throw invalid_input("InvalidParam", "unknown family '" + spec.name + "'");
}

} // namespace treeprofile
