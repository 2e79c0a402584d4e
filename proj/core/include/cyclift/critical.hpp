#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclift/decoder.hpp"
#include "cyclift/tanner_graph.hpp"
#include "cyclift/trapping.hpp"

namespace cyclift {

// Exhaustive-search scope: every weight-w subset of all variables, or of a
// fixed variable set.
struct SearchScope {
    enum class Kind { AllVariables, WithinSet };
    Kind kind = Kind::AllVariables;
    std::vector<int> vars;  // used by WithinSet

    static SearchScope all_variables() { return {}; }
    static SearchScope within_set(std::vector<int> vars) {
        return {Kind::WithinSet, std::move(vars)};
    }
};

struct CriticalSearchOptions {
    int max_weight = 3;
    std::uint64_t pattern_cap = 50'000'000;  // throw budget_error past this estimate
    int n_threads = 0;                       // 0 = hardware concurrency
};

struct CriticalSearchResult {
    // Smallest weight <= max_weight with a decoding failure; nullopt when
    // everything up to max_weight decodes ("none <= max_weight").
    std::optional<int> J;
    std::vector<std::vector<int>> failures;  // the weight-J failing supports, sorted
    std::uint64_t patterns_tested = 0;
};

// Decodes the all-zero codeword plus every error pattern in scope, weight by
// weight, until a failing weight is found. Deterministic: the result does
// not depend on the thread count.
CriticalSearchResult critical_number_search(const TannerGraph& G, const DecoderConfig& config,
                                            const CriticalSearchOptions& options,
                                            const SearchScope& scope = {});

struct HarvestOptions {
    int max_cycle_len = 0;  // 0 = girth + 4
    int period_cap = 16;    // oscillation-detection window
};

// Turns confirmed decoder failures into a trapping-set catalog: each failure
// is decoded to the iteration cap and its error support is the union over
// one detected oscillation period of the final decoder state (the final
// support when no period <= period_cap is found). Duplicates collapse; the
// critical number of a set is the smallest originating pattern weight.
TrappingSetCatalog harvest_trapping_sets(const std::vector<std::vector<int>>& failures,
                                         const TannerGraph& G, const DecoderConfig& config,
                                         const HarvestOptions& options = {});

}  // namespace cyclift
