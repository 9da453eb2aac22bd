#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ribbon/family.hpp"

namespace ribbon {

// Connected ribbon graphs of genus g with m boundaries, V vertices and
// E = V + 2g-2+m edges, every valency >= 2, one per isomorphism class.
// Built by iterated vertex splitting from one-vertex graphs; contracting any
// non-loop edge inverts a split, so every class is reached.
const std::vector<RibbonGraph>& underlying_graphs(int g, int m, int vertices);

struct GradedBasis {
    FamilySpec spec;
    int degree = 0;
    std::vector<std::string> keys;  // sorted
    std::vector<std::shared_ptr<const OrientedGraph>> reps;
    std::unordered_map<std::string, std::size_t> index;

    std::size_t size() const { return keys.size(); }
    std::optional<std::size_t> find(const std::string& key) const {
        auto it = index.find(key);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
    void add(std::string key, std::shared_ptr<const OrientedGraph> rep);
    void finalize();  // sort by key and rebuild the index
};

// Degree piece of a family (not PCY; see pcy_basis).  Excludes classes that
// vanish by an orientation-reversing automorphism.  Memoized in-process.
std::shared_ptr<const GradedBasis> basis(const FamilySpec& spec, int degree);

// Persistent storage consulted by basis() before enumerating.
class BasisStore {
public:
    virtual ~BasisStore() = default;
    virtual std::shared_ptr<const GradedBasis> load(const FamilySpec& spec, int degree) = 0;
    virtual void save(const GradedBasis& b) = 0;
};
// Not owned; nullptr disables.
void set_basis_store(BasisStore* store);

// Drop in-process memo tables.
void clear_memo();

}  // namespace ribbon
