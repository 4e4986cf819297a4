#pragma once

#include <unordered_map>
#include <vector>

#include "treeprofile/canonical.hpp"
#include "treeprofile/tree.hpp"

namespace treeprofile {

inline constexpr int kCatalogMaxK = 12;

// Ordered list of all nonisomorphic k-vertex trees: entry 1 is the path,
// entry 2 the star (k >= 4), remaining entries sorted by canonical code.
// Indices are 1-based throughout.
class TreeCatalog {
public:
    struct Entry {
        CanonicalCode code;
        Tree tree;
    };

    static TreeCatalog build(int k);

    int k() const { return k_; }
    int size() const { return static_cast<int>(entries_.size()); }
    const Entry& entry(int index_1based) const { return entries_[index_1based - 1]; }
    const std::vector<Entry>& entries() const { return entries_; }

    // 1-based catalog index of a k-vertex tree.
    int classify(const Tree& s) const;
    // Lookup by precomputed free code; 0 if unknown.
    int index_of(const CanonicalCode& code) const;

private:
    TreeCatalog(int k, std::vector<Entry> entries);

    int k_;
    std::vector<Entry> entries_;
    std::unordered_map<CanonicalCode, int> index_;
};

} // namespace treeprofile
