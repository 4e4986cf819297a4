#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "treeprofile/errors.hpp"

namespace treeprofile {

using Vertex = int;

struct EdgeList {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    // Declared vertex count; -1 means "infer as max index + 1". Needed for
    // the single-vertex tree, which has no edges to infer from.
    int declared_n = -1;
};

// Immutable tree on vertices 0..n-1. Validated at construction: connected,
// acyclic, exactly n-1 edges.
class Tree {
public:
    static Tree from_edge_list(const EdgeList& edges);

    int n() const { return n_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<std::vector<Vertex>>& adjacency() const { return adj_; }

    bool has_edge(Vertex u, Vertex v) const;

    // All edges as (u,v) with u < v, sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

private:
    Tree(int n, std::vector<std::vector<Vertex>> adj)
        : n_(n), adj_(std::move(adj)) {}

    int n_;
    std::vector<std::vector<Vertex>> adj_;
};

// Prufer sequences: the standard bijection between labeled trees on n >= 2
// vertices and sequences of length n-2 over {0,...,n-1}.
Tree prufer_decode(const std::vector<Vertex>& seq, int n);
std::vector<Vertex> prufer_encode(const Tree& t);

// Longest path length in edges, by double BFS.
int diameter(const Tree& t);

// Eccentricity minimum; a center vertex achieves it.
int radius(const Tree& t);

// Sum over vertices of d(v)^r, exact.
mpz_class degree_moment(const Tree& t, unsigned r);

// Edge-list text format: one edge per line, '#' comments and blank lines
// ignored, optional leading "n <count>" line.
Tree read_edge_list(std::istream& in);
Tree read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Tree& t);

} // namespace treeprofile
