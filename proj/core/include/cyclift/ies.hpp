#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cyclift/perm_index.hpp"
#include "cyclift/tanner_graph.hpp"
#include "cyclift/trapping.hpp"

namespace cyclift {

struct IesOptions {
    // Literal Step-11 semantics: stop the whole run when a trapping set
    // cannot be finished. The default records the failure and moves on to
    // the next set.
    bool strict = false;
};

enum class IesSetStatus {
    Eliminated,  // every cycle of the set has order > 1
    Partial,     // some cycles survive after phase-2 exhaustion
    Untouched,   // no candidate edge was available at all (or the run had stopped)
};

struct SwappedEdge {
    int edge_id;
    int var;
    int check;
    int index;  // assigned permutation index in [1, N-1]
};

struct IesSetReport {
    std::vector<int> vars;
    IesSetStatus status = IesSetStatus::Untouched;
    std::vector<SwappedEdge> swapped;        // edges swapped while processing this set
    std::vector<int> cycle_orders;           // parallel to the set's cycles, final D
    int surviving_cycles = 0;                // cycles still of order 1
};

// Algorithm state: ProcessedSet / SwappedSet / IndexSet.
struct IesState {
    std::set<int> processed_edges;
    std::set<int> swapped_edges;
    std::map<int, int> index_assignments;  // edge id -> index in [1, N-1]
};

struct IesResult {
    PermutationIndexMatrix D;
    std::vector<IesSetReport> per_set;
    IesState state;
    bool all_eliminated = false;
    bool stopped_early = false;  // strict mode hit a dead end
    int total_surviving_cycles = 0;
};

// Intentional edge swapping: orders the catalog's trapping sets, then picks
// edges and cyclic permutation indices so that every constituent cycle gets
// order > 1. Edges never swapped keep index 0. Deterministic for fixed
// inputs.
IesResult run_ies(const TannerGraph& G, const ParityCheckMatrix& H, const TrappingSetCatalog& T,
                  int N, const IesOptions& options = {});

// Greedy minimum-cardinality cover of C(t): repeatedly picks the candidate
// edge lying on the most uncovered cycles (ties to the smallest edge id).
struct EdgeCover {
    std::vector<int> edges;  // in pick order
    bool covered_all = false;
};
EdgeCover select_edges(const TrappingSet& t, const std::vector<int>& candidates);

// Smallest index v in [1, N-1] such that with D[e] = v every constraint
// cycle has order > 1; writes the index into D on success. Returns nullopt
// (and leaves D untouched) when no index works.
std::optional<int> assign_index(const TannerGraph& G, PermutationIndexMatrix& D, int edge_id,
                                const std::vector<Cycle>& constraint_cycles);

std::string format_ies_report(const IesResult& result, const TannerGraph& G);

}  // namespace cyclift
