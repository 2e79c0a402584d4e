#include "cyclift/lifting.hpp"

#include <algorithm>
#include <string>

#include "cyclift/errors.hpp"

namespace cyclift {

LiftedCode::LiftedCode(ParityCheckMatrix base, PermutationIndexMatrix D)
    : base_(std::move(base)), D_(std::move(D)) {
    if (!D_.support_matches(base_)) {
        throw validation_error("permutation index matrix support does not match H");
    }
}

const ParityCheckMatrix& LiftedCode::parity_check() const& {
    if (!lifted_) {
        const int N = this->N();
        std::vector<std::pair<int, int>> entries;
        entries.reserve(base_.entry_count() * static_cast<std::size_t>(N));
        for (int i = 0; i < base_.m(); ++i) {
            for (int j : base_.row(i)) {
                const int d = D_.at(i, j);
                for (int r = 0; r < N; ++r) {
                    entries.emplace_back(i * N + r, j * N + (r + d) % N);
                }
            }
        }
        lifted_ = std::make_shared<const ParityCheckMatrix>(base_.m() * N, base_.n() * N,
                                                            std::move(entries));
    }
    return *lifted_;
}

const TannerGraph& LiftedCode::graph() const& {
    if (!lifted_graph_) {
        lifted_graph_ = std::make_shared<const TannerGraph>(parity_check());
    }
    return *lifted_graph_;
}

LiftedCode lift(const ParityCheckMatrix& H, const PermutationIndexMatrix& D) {
    return LiftedCode(H, D);
}

ParityCheckMatrix block_component(const ParityCheckMatrix& H, const PermutationIndexMatrix& D,
                                  int d) {
    if (!D.support_matches(H)) {
        throw validation_error("permutation index matrix support does not match H");
    }
    std::vector<std::pair<int, int>> entries;
    for (int i = 0; i < H.m(); ++i) {
        for (int j : H.row(i)) {
            if (D.at(i, j) == d) entries.emplace_back(i, j);
        }
    }
    return ParityCheckMatrix(H.m(), H.n(), std::move(entries));
}

ParityCheckMatrix block_circulant_form(const ParityCheckMatrix& H,
                                       const PermutationIndexMatrix& D) {
    if (!D.support_matches(H)) {
        throw validation_error("permutation index matrix support does not match H");
    }
    const int N = D.N();
    const int m = H.m();
    const int n = H.n();
    std::vector<std::pair<int, int>> entries;
    entries.reserve(H.entry_count() * static_cast<std::size_t>(N));
    for (int i = 0; i < m; ++i) {
        for (int j : H.row(i)) {
            const int d = D.at(i, j);
            // A_d occupies block (r, s) whenever (r - s) mod N == d.
            for (int s = 0; s < N; ++s) {
                const int r = (s + d) % N;
                entries.emplace_back(r * m + i, s * n + j);
            }
        }
    }
    return ParityCheckMatrix(m * N, n * N, std::move(entries));
}

Theorem1Report verify_theorem1(const TannerGraph& base_graph, const LiftedCode& lifted,
                               const Cycle& c) {
    const int N = lifted.N();
    Theorem1Report report;
    report.permutation_index = cycle_permutation_index(base_graph, lifted.D(), c);
    report.order = shift_order(report.permutation_index, N);

    const TannerGraph& Gl = lifted.graph();
    auto nodes = cycle_nodes(base_graph, c);
    const int len = c.length();

    // Rotate so the walk starts at a variable node.
    int start_pos = 0;
    while (!base_graph.is_var_node(nodes[start_pos])) ++start_pos;
    const int start_var = nodes[start_pos];

    // Walk the inverse image in the materialized lifted graph. From a lifted
    // node, the next edge is the unique incident edge landing in the next
    // base node's block; no shift arithmetic is consulted.
    auto step = [&](int lifted_node, int pos) {
        const int base_next = nodes[(start_pos + pos + 1) % len];
        int lo, hi;
        bool next_is_var = base_graph.is_var_node(base_next);
        if (next_is_var) {
            lo = lifted.lifted_var(base_next, 0);
            hi = lo + N;
        } else {
            lo = Gl.n_vars() + lifted.lifted_check(base_next - base_graph.n_vars(), 0);
            hi = lo + N;
        }
        for (int e : Gl.node_edges(lifted_node)) {
            int nb = Gl.other_endpoint(e, lifted_node);
            if (nb >= lo && nb < hi) return nb;
        }
        throw validation_error("lifted graph is missing a copy of a base edge");
    };

    std::vector<char> visited(N, 0);
    for (int copy = 0; copy < N; ++copy) {
        if (visited[copy]) continue;
        int node = lifted.lifted_var(start_var, copy);
        int steps = 0;
        do {
            for (int pos = 0; pos < len; ++pos) {
                node = step(node, pos);
                ++steps;
            }
            visited[node - lifted.lifted_var(start_var, 0)] = 1;
        } while (node != lifted.lifted_var(start_var, copy));
        report.cycle_count += 1;
        report.cycle_lengths.push_back(steps);
    }

    report.consistent = report.cycle_count == N / report.order &&
                        std::all_of(report.cycle_lengths.begin(), report.cycle_lengths.end(),
                                    [&](int L) { return L == report.order * len; });
    return report;
}

}  // namespace cyclift
