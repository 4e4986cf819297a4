#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "treeprofile/tree.hpp"

namespace treeprofile {

Tree path(int n);
Tree star(int n);

// Spine v_0..v_{n+1} with one leg on each of v_1..v_n; 2n+2 vertices.
Tree caterpillar(int n);

// One center of degree d = max(3, round(n^{2/(2k-1)})), with d near-equal
// path arms totaling n-1 vertices.
Tree extended_star(int n, int k);

// Center degree used by extended_star.
int extended_star_center_degree(int n, int k);

// Complete d-ary tree of the given height, as an unrooted tree.
Tree complete_dary(int d, int height);

// Uniform random labeled tree via a decoded Prufer sequence. The generator
// is xorshift64* (Marsaglia xorshift with the 2685821657736338717 multiplier,
// shifts 12/25/27); entries are taken modulo n. Part of the format contract:
// the same (n, seed) reproduces the same tree everywhere.
Tree random_prufer(int n, std::uint64_t seed);

// The raw generator, exposed so corpora can be documented and reproduced.
struct Xorshift64Star {
    std::uint64_t state;
    explicit Xorshift64Star(std::uint64_t seed)
        : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        std::uint64_t x = state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state = x;
        return x * 2685821657736338717ull;
    }
};

struct FamilySpec {
    std::string name; // caterpillar | extended_star | complete_dary | path | star | random_prufer
    std::map<std::string, long long> params; // n, k, d, height, seed as applicable
};

Tree make_family(const FamilySpec& spec);

} // namespace treeprofile
