#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclift/cycles.hpp"
#include "cyclift/tanner_graph.hpp"

namespace cyclift {

// An (a, b) trapping set: a variable nodes whose induced subgraph has b
// odd-degree check nodes. b and the constituent cycles C(t) are always
// recomputed from the graph, never trusted from input. Cycles are stored
// with base-graph edge ids.
struct TrappingSet {
    std::vector<int> vars;              // sorted original variable indices
    int b = 0;                          // odd-degree checks in the induced subgraph
    InducedSubgraph subgraph;           // cached induced subgraph
    std::vector<Cycle> cycles;          // C(t), up to the catalog's max cycle length
    std::optional<int> critical_number; // known critical number, if any

    int a() const { return static_cast<int>(vars.size()); }
};

TrappingSet make_trapping_set(const TannerGraph& G, std::vector<int> vars, int max_cycle_len,
                              std::optional<int> critical_number = std::nullopt);

// Cycles of the induced subgraph containing a given base-graph edge (C^e(t)).
// Throws validation_error when e is not an edge of the induced subgraph.
std::vector<Cycle> edge_cycles(const TrappingSet& t, int edge_id);

// Catalog ordered by (critical number, a, b, lexicographic variable ids);
// unknown critical numbers sort last. The order is restored after every
// insertion.
class TrappingSetCatalog {
public:
    // Throws validation_error on a duplicate variable set.
    void insert(TrappingSet t);

    const std::vector<TrappingSet>& sets() const { return sets_; }
    bool empty() const { return sets_.empty(); }
    std::size_t size() const { return sets_.size(); }
    const TrappingSet& operator[](std::size_t k) const { return sets_[k]; }

private:
    std::vector<TrappingSet> sets_;
};

// Catalog file: one record per line, "a b critical_number v1,v2,...,va" with
// 0-based variable indices; "-" marks an unknown critical number; "#" starts
// a comment. The declared b must match the recomputed value.
TrappingSetCatalog load_catalog(std::string_view text, const TannerGraph& G, int max_cycle_len);
std::string emit_catalog(const TrappingSetCatalog& catalog);
TrappingSetCatalog read_catalog_file(const std::string& path, const TannerGraph& G,
                                     int max_cycle_len);
void write_catalog_file(const std::string& path, const TrappingSetCatalog& catalog);

// Default cycle-length bound for catalogs: girth + 4 (8 for a forest).
int default_catalog_cycle_len(const TannerGraph& G);

}  // namespace cyclift
