#pragma once

#include <optional>
#include <string>

#include "cyclift/gf2.hpp"
#include "cyclift/ies.hpp"
#include "cyclift/lifting.hpp"
#include "cyclift/parity_check.hpp"
#include "cyclift/trapping.hpp"

namespace cyclift {

struct DesignOptions {
    bool strict = false;       // propagate the literal Step-11 stop
    bool compute_girth = true; // lifted-girth computation can be skipped for speed
};

struct DesignResult {
    int N = 0;                   // selected lifting degree
    IesResult ies;
    ParityCheckMatrix lifted;    // materialized lifted parity-check matrix
    Rational base_rate;
    Rational lifted_rate;
    std::optional<int> base_girth;
    std::optional<int> lifted_girth;
    bool success = false;        // every catalog set eliminated at the selected N
    bool nothing_to_do = false;  // empty catalog
    std::string report;
};

// Runs IES for each N in [N_lo, N_hi] ascending and stops at the first
// degree that eliminates every cataloged trapping set; otherwise the design
// with the fewest surviving cycles (smallest N on ties) is returned. An
// empty catalog yields the all-zero D at N_lo.
DesignResult design_pipeline(const ParityCheckMatrix& H, const TannerGraph& G,
                             const TrappingSetCatalog& catalog, int N_lo, int N_hi,
                             const DesignOptions& options = {});

}  // namespace cyclift
