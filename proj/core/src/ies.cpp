#include "cyclift/ies.hpp"

#include <algorithm>
#include <sstream>

#include "cyclift/errors.hpp"

namespace cyclift {

namespace {

// Alternating-sum index of c with edge `excluded` left out, plus the sign
// (+1 variable->check, -1 check->variable) the excluded edge would carry in
// the canonical traversal.
struct IndexDecomposition {
    int base;  // index of the cycle with the excluded edge contributing 0
    int sign;  // +1 or -1
};

IndexDecomposition decompose_cycle_index(const TannerGraph& G, const PermutationIndexMatrix& D,
                                         const Cycle& c, int excluded_edge) {
    const int N = D.N();
    auto nodes = cycle_nodes(G, c);
    long long sum = 0;
    int sign = 0;
    for (int k = 0; k < c.length(); ++k) {
        const int e = c.edge_ids[k];
        const int s = G.is_var_node(nodes[k]) ? 1 : -1;
        if (e == excluded_edge) {
            sign = s;
            continue;
        }
        sum += s * D.edge_index(G, e);
    }
    if (sign == 0) {
        throw validation_error("edge " + std::to_string(excluded_edge) + " is not on the cycle");
    }
    return {static_cast<int>(((sum % N) + N) % N), sign};
}

std::vector<int> sorted_cycle_edges(const std::vector<Cycle>& cycles) {
    std::vector<int> edges;
    for (const Cycle& c : cycles) {
        edges.insert(edges.end(), c.edge_ids.begin(), c.edge_ids.end());
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace

std::optional<int> assign_index(const TannerGraph& G, PermutationIndexMatrix& D, int edge_id,
                                const std::vector<Cycle>& constraint_cycles) {
    const int N = D.N();
    // Each constraint cycle forbids at most one residue: the v solving
    // base + sign*v = 0 (mod N).
    std::vector<char> forbidden(N, 0);
    forbidden[0] = 1;
    for (const Cycle& c : constraint_cycles) {
        if (!c.contains_edge(edge_id)) continue;
        auto dec = decompose_cycle_index(G, D, c, edge_id);
        int v = dec.sign > 0 ? (N - dec.base) % N : dec.base;
        forbidden[v] = 1;
    }
    for (int v = 1; v < N; ++v) {
        if (!forbidden[v]) {
            D.set_edge_index(G, edge_id, v);
            return v;
        }
    }
    return std::nullopt;
}

EdgeCover select_edges(const TrappingSet& t, const std::vector<int>& candidates) {
    EdgeCover cover;
    std::vector<char> covered(t.cycles.size(), 0);
    std::vector<int> pool = candidates;
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

    std::size_t remaining = t.cycles.size();
    while (remaining > 0) {
        int best_edge = -1;
        int best_count = 0;
        for (int e : pool) {
            int count = 0;
            for (std::size_t k = 0; k < t.cycles.size(); ++k) {
                if (!covered[k] && t.cycles[k].contains_edge(e)) ++count;
            }
            if (count > best_count) {
                best_count = count;
                best_edge = e;
            }
        }
        if (best_edge < 0) break;  // some cycle has no candidate edge
        cover.edges.push_back(best_edge);
        for (std::size_t k = 0; k < t.cycles.size(); ++k) {
            if (!covered[k] && t.cycles[k].contains_edge(best_edge)) {
                covered[k] = 1;
                --remaining;
            }
        }
    }
    cover.covered_all = remaining == 0;
    return cover;
}

IesResult run_ies(const TannerGraph& G, const ParityCheckMatrix& H, const TrappingSetCatalog& T,
                  int N, const IesOptions& options) {
    if (N < 2) throw validation_error("IES needs a lifting degree N >= 2");
    for (const TrappingSet& t : T.sets()) {
        for (const Cycle& c : t.cycles) {
            for (int e : c.edge_ids) {
                if (e < 0 || e >= G.n_edges()) {
                    throw validation_error("catalog references edge " + std::to_string(e) +
                                           " absent from the graph");
                }
            }
        }
        for (int v : t.vars) {
            if (v < 0 || v >= G.n_vars()) {
                throw validation_error("catalog references variable " + std::to_string(v) +
                                       " absent from the graph");
            }
        }
    }

    IesResult result{PermutationIndexMatrix(H, N)};
    // Cycles of every processed set, for the phase-2 constraint
    // C^e(ProcessedSet u t).
    std::vector<Cycle> processed_cycles;

    for (const TrappingSet& t : T.sets()) {
        IesSetReport report;
        report.vars = t.vars;

        if (result.stopped_early) {
            report.status = IesSetStatus::Untouched;
            report.surviving_cycles = 0;
            for (const Cycle& c : t.cycles) {
                int order = cycle_order(G, result.D, c);
                report.cycle_orders.push_back(order);
                if (order == 1) ++report.surviving_cycles;
            }
            result.per_set.push_back(std::move(report));
            continue;
        }

        const std::vector<int> current_edges = sorted_cycle_edges(t.cycles);
        auto surviving = [&]() {
            std::vector<std::size_t> out;
            for (std::size_t k = 0; k < t.cycles.size(); ++k) {
                if (cycle_order(G, result.D, t.cycles[k]) == 1) out.push_back(k);
            }
            return out;
        };

        auto record_swap = [&](int e, int v) {
            result.state.swapped_edges.insert(e);
            result.state.index_assignments[e] = v;
            report.swapped.push_back({e, G.edge(e).var, G.edge(e).check, v});
        };

        // Phase 1 (Steps 4-6): candidates exclude edges of processed sets.
        // An edge whose index search fails is dropped and the greedy pick
        // repeats; whatever remains uncovered falls through to phase 2.
        auto uncovered = surviving();
        std::vector<int> phase1;
        for (int e : current_edges) {
            if (!result.state.processed_edges.count(e)) phase1.push_back(e);
        }
        while (!uncovered.empty() && !phase1.empty()) {
            int best_edge = -1;
            int best_count = 0;
            for (int e : phase1) {
                int count = 0;
                for (std::size_t k : uncovered) {
                    if (t.cycles[k].contains_edge(e)) ++count;
                }
                if (count > best_count) {
                    best_count = count;
                    best_edge = e;
                }
            }
            if (best_edge < 0) break;
            std::vector<Cycle> constraint;
            for (const Cycle& c : t.cycles) {
                if (c.contains_edge(best_edge)) constraint.push_back(c);
            }
            auto v = assign_index(G, result.D, best_edge, constraint);
            if (v) {
                record_swap(best_edge, *v);
                uncovered = surviving();
            }
            phase1.erase(std::find(phase1.begin(), phase1.end(), best_edge));
        }

        // Phase 2 (Steps 8-11): previously swapped edges are off limits; the
        // constraint widens to every cycle of the processed sets plus t.
        bool dead_end = false;
        std::vector<int> pool = current_edges;  // narrowed by Step 10
        while (!uncovered.empty() && !dead_end) {
            std::vector<int> candidates;
            for (int e : pool) {
                if (!result.state.swapped_edges.count(e)) candidates.push_back(e);
            }
            // |C^e(t)| descending, then edge id.
            std::stable_sort(candidates.begin(), candidates.end(), [&](int x, int y) {
                auto weight = [&](int e) {
                    int count = 0;
                    for (const Cycle& c : t.cycles) count += c.contains_edge(e);
                    return count;
                };
                int wx = weight(x), wy = weight(y);
                if (wx != wy) return wx > wy;
                return x < y;
            });

            bool advanced = false;
            for (int e : candidates) {
                std::vector<Cycle> constraint;
                for (const Cycle& c : processed_cycles) {
                    if (c.contains_edge(e)) constraint.push_back(c);
                }
                for (const Cycle& c : t.cycles) {
                    if (c.contains_edge(e)) constraint.push_back(c);
                }
                auto v = assign_index(G, result.D, e, constraint);
                if (!v) continue;
                record_swap(e, *v);
                uncovered = surviving();
                // Step 10: drop the edges of the cycles through e.
                std::vector<Cycle> through;
                for (const Cycle& c : t.cycles) {
                    if (c.contains_edge(e)) through.push_back(c);
                }
                for (int dropped : sorted_cycle_edges(through)) {
                    auto it = std::find(pool.begin(), pool.end(), dropped);
                    if (it != pool.end()) pool.erase(it);
                }
                advanced = true;
                break;
            }
            if (!advanced) dead_end = true;  // Steps 8/11 exhausted
        }

        if (uncovered.empty()) {
            report.status = IesSetStatus::Eliminated;
        } else {
            report.status = report.swapped.empty() ? IesSetStatus::Untouched : IesSetStatus::Partial;
        }
        if (dead_end && options.strict) result.stopped_early = true;

        report.surviving_cycles = static_cast<int>(uncovered.size());
        for (const Cycle& c : t.cycles) {
            report.cycle_orders.push_back(cycle_order(G, result.D, c));
        }

        // Step 7: the set's cycle edges join ProcessedSet; its cycles join
        // the phase-2 constraint pool.
        for (int e : current_edges) result.state.processed_edges.insert(e);
        processed_cycles.insert(processed_cycles.end(), t.cycles.begin(), t.cycles.end());

        result.per_set.push_back(std::move(report));
    }

    result.all_eliminated = true;
    result.total_surviving_cycles = 0;
    for (const auto& rep : result.per_set) {
        result.total_surviving_cycles += rep.surviving_cycles;
        if (rep.status != IesSetStatus::Eliminated) result.all_eliminated = false;
    }
    return result;
}

std::string format_ies_report(const IesResult& result, const TannerGraph& G) {
    std::ostringstream out;
    out << "trapping sets: " << result.per_set.size() << "\n";
    int idx = 0;
    for (const auto& rep : result.per_set) {
        out << "set " << idx++ << " a=" << rep.vars.size() << " vars=";
        for (std::size_t k = 0; k < rep.vars.size(); ++k) {
            if (k) out << ',';
            out << rep.vars[k];
        }
        const char* status = rep.status == IesSetStatus::Eliminated ? "eliminated"
                             : rep.status == IesSetStatus::Partial  ? "partial"
                                                                    : "untouched";
        out << " status=" << status;
        out << " swapped=";
        for (std::size_t k = 0; k < rep.swapped.size(); ++k) {
            if (k) out << ',';
            const auto& s = rep.swapped[k];
            out << "e" << s.edge_id << "(b" << s.var << ",c" << s.check << ")=" << s.index;
        }
        if (rep.swapped.empty()) out << "-";
        out << " cycle_orders=";
        for (std::size_t k = 0; k < rep.cycle_orders.size(); ++k) {
            if (k) out << ',';
            out << rep.cycle_orders[k];
        }
        if (rep.cycle_orders.empty()) out << "-";
        out << "\n";
    }
    out << (result.all_eliminated ? "all trapping sets eliminated"
                                  : "surviving cycles: " +
                                        std::to_string(result.total_surviving_cycles))
        << "\n";
    return out.str();
}

}  // namespace cyclift
