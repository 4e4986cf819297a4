#pragma once

#include <string>
#include <vector>

#include "treeprofile/tree.hpp"

namespace treeprofile {

// Balanced-parenthesis AHU string; equal codes <=> isomorphic trees
// (rooted version for rooted_code, free version for free_code).
using CanonicalCode = std::string;

CanonicalCode rooted_code(const Tree& t, Vertex root);

// Center vertices (one or two) found by peeling leaves.
std::vector<Vertex> centers(const Tree& t);

// Root at the center; with two centers, the lexicographically smaller of
// the two rooted codes.
CanonicalCode free_code(const Tree& t);

bool is_isomorphic(const Tree& t1, const Tree& t2);

} // namespace treeprofile
