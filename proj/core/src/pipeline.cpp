#include "cyclift/pipeline.hpp"

#include <sstream>

#include "cyclift/cycles.hpp"
#include "cyclift/errors.hpp"

namespace cyclift {

namespace {

std::string rate_string(const Rational& r) {
    std::ostringstream out;
    out.precision(6);
    out << r.num << '/' << r.den << " (" << r.to_double() << ')';
    return out.str();
}

std::string girth_string(const std::optional<int>& g) {
    return g ? std::to_string(*g) : "inf";
}

}  // namespace

DesignResult design_pipeline(const ParityCheckMatrix& H, const TannerGraph& G,
                             const TrappingSetCatalog& catalog, int N_lo, int N_hi,
                             const DesignOptions& options) {
    if (N_lo < 2 || N_hi < N_lo) {
        throw validation_error("need 2 <= N_lo <= N_hi");
    }

    std::optional<IesResult> best;
    int best_N = N_lo;
    for (int N = N_lo; N <= N_hi && !catalog.empty(); ++N) {
        IesOptions ies_options;
        ies_options.strict = options.strict;
        IesResult attempt = run_ies(G, H, catalog, N, ies_options);
        bool better = !best || attempt.total_surviving_cycles < best->total_surviving_cycles;
        if (better) {
            best = attempt;
            best_N = N;
        }
        if (attempt.all_eliminated) break;
    }

    if (!best) {
        // Empty catalog: the all-zero D at the smallest degree.
        best.emplace(IesResult{PermutationIndexMatrix(H, N_lo)});
        best->all_eliminated = true;
        best_N = N_lo;
    }

    LiftedCode lifted_code = lift(H, best->D);
    DesignResult result{best_N, std::move(*best), lifted_code.parity_check()};
    result.nothing_to_do = catalog.empty();
    result.success = result.ies.all_eliminated && !result.ies.stopped_early;
    result.base_rate = code_rate(H);
    result.lifted_rate = code_rate(result.lifted);
    if (options.compute_girth) {
        result.base_girth = girth(G);
        result.lifted_girth = girth(lifted_code.graph());
    }

    std::ostringstream report;
    report << "design N=" << result.N << "\n";
    report << "base: " << H.m() << "x" << H.n() << " rate " << rate_string(result.base_rate);
    if (options.compute_girth) report << " girth " << girth_string(result.base_girth);
    report << "\n";
    report << "lifted: " << result.lifted.m() << "x" << result.lifted.n() << " rate "
           << rate_string(result.lifted_rate);
    if (options.compute_girth) report << " girth " << girth_string(result.lifted_girth);
    report << "\n";
    if (result.nothing_to_do) {
        report << "empty catalog: nothing to do, emitted the all-zero index matrix\n";
    } else {
        report << format_ies_report(result.ies, G);
    }
    result.report = report.str();
    return result;
}

}  // namespace cyclift
