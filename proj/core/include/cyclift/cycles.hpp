#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclift/tanner_graph.hpp"

namespace cyclift {

// A simple cycle stored as its edge-id sequence in canonical form: rotated to
// start at the smallest edge id, direction chosen as the lexicographically
// smaller of the two traversals.
struct Cycle {
    std::vector<int> edge_ids;

    int length() const { return static_cast<int>(edge_ids.size()); }
    bool contains_edge(int e) const;

    bool operator==(const Cycle& other) const { return edge_ids == other.edge_ids; }
    bool operator<(const Cycle& other) const { return edge_ids < other.edge_ids; }
};

Cycle canonical_cycle(std::vector<int> edge_ids);

// Node sequence of the canonical traversal: node_seq[i] is incident to
// edge_ids[i-1] and edge_ids[i]; node_seq[0] is shared by the last and first
// edges. Length equals the cycle length.
std::vector<int> cycle_nodes(const TannerGraph& G, const Cycle& c);

struct EnumerateOptions {
    std::optional<int> through_node;  // keep only cycles visiting this node id
    std::optional<int> through_edge;  // keep only cycles containing this edge id
    std::optional<std::uint64_t> cap; // throw budget_error past this many cycles
};

// All distinct simple cycles of length <= max_len (max_len even, >= 4),
// sorted canonically. Throws budget_error when a cap is given and exceeded.
std::vector<Cycle> enumerate_cycles(const TannerGraph& G, int max_len,
                                    const EnumerateOptions& opts = {});

// Length of the shortest cycle, or nullopt for a forest. BFS from every node.
std::optional<int> girth(const TannerGraph& G);

// Subgraph induced by a set of variable nodes: those variables, every check
// adjacent to at least one of them, and all edges in between. Node and edge
// ids are renumbered; the maps recover the originals.
struct InducedSubgraph {
    TannerGraph graph;
    std::vector<int> var_map;    // subgraph var index -> original var index
    std::vector<int> check_map;  // subgraph check index -> original check index
    std::vector<int> edge_map;   // subgraph edge id -> original edge id
    std::vector<int> odd_checks; // original check indices with odd induced degree
    int odd_check_count() const { return static_cast<int>(odd_checks.size()); }
};

InducedSubgraph induced_subgraph(const TannerGraph& G, const std::vector<int>& vars);

}  // namespace cyclift
