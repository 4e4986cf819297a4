#include "treeprofile/catalog.hpp"

#include <algorithm>
#include <map>

#include "treeprofile/families.hpp"

namespace treeprofile {

TreeCatalog::TreeCatalog(int k, std::vector<Entry> entries)
    : k_(k), entries_(std::move(entries)) {
    for (int i = 0; i < static_cast<int>(entries_.size()); ++i)
        index_.emplace(entries_[i].code, i + 1);
}

TreeCatalog TreeCatalog::build(int k) {
    if (k < 1)
        throw invalid_input("InvalidParam", "catalog requires k >= 1");
    if (k > kCatalogMaxK)
        throw infeasible("KTooLarge", "catalog capped at k = " + std::to_string(kCatalogMaxK));

    // Leaf augmentation: attach a new leaf to every vertex of every
    // (k-1)-vertex tree, dedup by free code.
    std::map<CanonicalCode, Tree> classes;
    {
        EdgeList single;
        single.declared_n = 1;
        Tree t1 = Tree::from_edge_list(single);
        classes.emplace(free_code(t1), t1);
    }
    for (int size = 2; size <= k; ++size) {
        std::map<CanonicalCode, Tree> next;
        for (const auto& [code, t] : classes) {
            for (Vertex v = 0; v < t.n(); ++v) {
                EdgeList el;
                el.declared_n = t.n() + 1;
                for (auto e : t.edges()) el.pairs.push_back(e);
                el.pairs.emplace_back(v, t.n());
                Tree grown = Tree::from_edge_list(el);
                next.emplace(free_code(grown), grown);
            }
        }
        classes = std::move(next);
    }

    std::vector<Entry> entries;
    entries.reserve(classes.size());
    CanonicalCode path_code = k >= 2 ? free_code(path(k)) : free_code(classes.begin()->second);
    CanonicalCode star_code = k >= 2 ? free_code(star(k)) : path_code;
    auto take = [&](const CanonicalCode& code) {
        auto it = classes.find(code);
        if (it != classes.end()) {
            entries.push_back({it->first, it->second});
            classes.erase(it);
        }
    };
    take(path_code);
    take(star_code); // no-op when star == path (k <= 4 path/star coincide only for k <= 3)
    for (const auto& [code, t] : classes) entries.push_back({code, t});

    return TreeCatalog(k, std::move(entries));
}

int TreeCatalog::classify(const Tree& s) const {
    if (s.n() != k_)
        throw invalid_input("SizeMismatch",
                            "tree has " + std::to_string(s.n()) + " vertices, catalog k = " + std::to_string(k_));
    int idx = index_of(free_code(s));
    if (idx == 0)
        throw Error(ErrorClass::Internal, "Internal", "k-vertex tree missing from catalog");
    return idx;
}

int TreeCatalog::index_of(const CanonicalCode& code) const {
    auto it = index_.find(code);
    return it == index_.end() ? 0 : it->second;
}

} // namespace treeprofile
