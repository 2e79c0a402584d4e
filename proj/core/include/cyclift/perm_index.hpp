#pragma once

#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclift/cycles.hpp"
#include "cyclift/parity_check.hpp"
#include "cyclift/tanner_graph.hpp"

namespace cyclift {

// Composition of cyclic shifts: I^(d1) x I^(d2) = I^((d1 + d2) mod N).
inline int compose_shift_indices(int d1, int d2, int N) { return (d1 + d2) % N; }

// Matrix D of edge permutation indices for a cyclic N-lifting. Finite
// entries d_ij in [0, N-1] sit exactly on the support of the associated
// parity-check matrix; everywhere else the entry is infinity (absent).
class PermutationIndexMatrix {
public:
    // All-zero indices on the support of H.
    PermutationIndexMatrix(const ParityCheckMatrix& H, int N);

    int N() const { return N_; }
    int m() const { return m_; }
    int n() const { return n_; }

    // nullopt encodes the infinity entries off the support.
    std::optional<int> get(int i, int j) const;
    int at(int i, int j) const;  // throws on an infinity entry
    void set(int i, int j, int d);

    bool support_matches(const ParityCheckMatrix& H) const;

    // Index for a graph edge {b_j, c_i}.
    int edge_index(const TannerGraph& G, int edge_id) const {
        const auto& e = G.edge(edge_id);
        return at(e.check, e.var);
    }
    void set_edge_index(const TannerGraph& G, int edge_id, int d) {
        const auto& e = G.edge(edge_id);
        set(e.check, e.var, d);
    }

    std::size_t support_size() const;

private:
    friend PermutationIndexMatrix parse_dmatrix(std::string_view);
    PermutationIndexMatrix() = default;

    int N_ = 1;
    int m_ = 0;
    int n_ = 0;
    std::vector<std::vector<int>> support_;  // per row: sorted column indices
    std::vector<std::vector<int>> values_;   // parallel to support_
};

// D-matrix file format: line 1 "m n N"; then m lines of n tokens, each a
// decimal in [0, N-1] or "-" for infinity.
PermutationIndexMatrix parse_dmatrix(std::string_view text);
std::string emit_dmatrix(const PermutationIndexMatrix& D);
PermutationIndexMatrix read_dmatrix_file(const std::string& path);
void write_dmatrix_file(const std::string& path, const PermutationIndexMatrix& D);

// Permutation index of a walk (Lemma-1 alternating sum): an edge traversed
// variable->check contributes +d_ij, check->variable contributes -d_ij,
// all mod N. start_node is a unified graph node id; edges may repeat.
int path_permutation_index(const TannerGraph& G, const PermutationIndexMatrix& D,
                           std::span<const int> edge_ids, int start_node);

// Index of a cycle traversed from its canonical start node. The reverse
// direction gives (N - d) mod N; both have the same order.
int cycle_permutation_index(const TannerGraph& G, const PermutationIndexMatrix& D, const Cycle& c);

// Order of d in Z_N.
inline int shift_order(int d, int N) { return N / std::gcd(((d % N) + N) % N, N); }

// Order of the cycle in the sense of Theorem 1: the inverse image of c in
// the lifted graph is N/k cycles of length k*len(c), k = N/gcd(d, N).
int cycle_order(const TannerGraph& G, const PermutationIndexMatrix& D, const Cycle& c);

}  // namespace cyclift
