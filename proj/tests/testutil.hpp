#pragma once

// Shared fixtures and independent oracles for the test suites.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "cyclift/cycles.hpp"
#include "cyclift/parity_check.hpp"
#include "cyclift/perm_index.hpp"
#include "cyclift/rng.hpp"
#include "cyclift/tanner_graph.hpp"

namespace testutil {

using cyclift::Cycle;
using cyclift::ParityCheckMatrix;
using cyclift::PermutationIndexMatrix;
using cyclift::SplitMix64;
using cyclift::TannerGraph;

// ---------------------------------------------------------------------------
// Fixtures

// The (155, 64) Tanner code: a 3x5 array of 31x31 circulant permutation
// blocks with shift 5^i * 2^j mod 31 in block (i, j). (3,5)-regular,
// girth 8, GF(2) rank 91.
inline ParityCheckMatrix make_tanner_155() {
    const int P = 31;
    std::vector<std::pair<int, int>> entries;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 5; ++j) {
            int shift = 1;
            for (int k = 0; k < i; ++k) shift = shift * 5 % P;
            for (int k = 0; k < j; ++k) shift = shift * 2 % P;
            for (int r = 0; r < P; ++r) {
                entries.emplace_back(i * P + r, j * P + (r + shift) % P);
            }
        }
    }
    return ParityCheckMatrix(3 * P, 5 * P, std::move(entries));
}

// (5,3) trapping-set shape: variables u1, u2 joined to w1, w2, w3 through six
// degree-2 checks (a K_{2,3} once the checks are contracted) plus one pendant
// check per w. Three 8-cycles.
inline ParityCheckMatrix make_ts53_shape() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 3; ++i) {
        e.emplace_back(i, 0);      // u1 - chi_{1i}
        e.emplace_back(3 + i, 1);  // u2 - chi_{2i}
        e.emplace_back(i, 2 + i);      // w_i - chi_{1i}
        e.emplace_back(3 + i, 2 + i);  // w_i - chi_{2i}
        e.emplace_back(6 + i, 2 + i);  // w_i - pendant
    }
    return ParityCheckMatrix(9, 5, std::move(e));
}

// (4,2) trapping-set shape: contracted diamond (K_4 minus the edge a-d) with
// pendants on a and d. Two 6-cycles sharing the diagonal b-c, one 8-cycle.
inline ParityCheckMatrix make_ts42_shape() {
    std::vector<std::pair<int, int>> e = {
        {0, 0}, {0, 1},  // chi_ab
        {1, 0}, {1, 2},  // chi_ac
        {2, 1}, {2, 2},  // chi_bc (the diagonal)
        {3, 1}, {3, 3},  // chi_bd
        {4, 2}, {4, 3},  // chi_cd
        {5, 0},          // pendant on a
        {6, 3},          // pendant on d
    };
    return ParityCheckMatrix(7, 4, std::move(e));
}

// (4,4) trapping-set shape: a single 8-cycle with a pendant check per
// variable.
inline ParityCheckMatrix make_ts44_shape() {
    std::vector<std::pair<int, int>> e = {
        {0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 0},
        {4, 0}, {5, 1}, {6, 2}, {7, 3},
    };
    return ParityCheckMatrix(8, 4, std::move(e));
}

// [7,4] Hamming code, columns are the binary numbers 1..7. d_min = 3.
inline ParityCheckMatrix make_hamming_7_4() {
    std::vector<std::pair<int, int>> e;
    for (int col = 1; col <= 7; ++col) {
        for (int bit = 0; bit < 3; ++bit) {
            if (col & (1 << bit)) e.emplace_back(bit, col - 1);
        }
    }
    return ParityCheckMatrix(3, 7, std::move(e));
}

// Length-n repetition code: rows x_i + x_{i+1} = 0. d_min = n.
inline ParityCheckMatrix make_repetition(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) {
        e.emplace_back(i, i);
        e.emplace_back(i, i + 1);
    }
    return ParityCheckMatrix(n - 1, n, std::move(e));
}

// ---------------------------------------------------------------------------
// Seeded random instances (SplitMix64-based so every platform agrees)

inline int rand_below(SplitMix64& rng, int bound) {
    return static_cast<int>(rng.next() % static_cast<std::uint64_t>(bound));
}

// Random sparse parity-check matrix with column weights in
// [col_lo, col_hi]. May contain zero-weight rows.
inline ParityCheckMatrix random_pcm(int m, int n, int col_lo, int col_hi, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> entries;
    std::vector<int> rows(m);
    std::iota(rows.begin(), rows.end(), 0);
    for (int j = 0; j < n; ++j) {
        int w = std::min(m, col_lo + rand_below(rng, col_hi - col_lo + 1));
        for (int k = 0; k < w; ++k) {
            int pick = k + rand_below(rng, m - k);
            std::swap(rows[k], rows[pick]);
            entries.emplace_back(rows[k], j);
        }
    }
    return ParityCheckMatrix(m, n, std::move(entries));
}

// Random PCM that is guaranteed to contain at least one cycle (retries the
// seed until the graph is not a forest).
inline ParityCheckMatrix random_pcm_with_cycles(int m, int n, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        ParityCheckMatrix H = random_pcm(m, n, 2, 3, seed + attempt * 0x9E37ULL);
        if (cyclift::girth(TannerGraph(H)).has_value()) return H;
    }
}

inline PermutationIndexMatrix random_dmatrix(const ParityCheckMatrix& H, int N,
                                             std::uint64_t seed) {
    SplitMix64 rng(seed);
    PermutationIndexMatrix D(H, N);
    for (int i = 0; i < H.m(); ++i) {
        for (int j : H.row(i)) D.set(i, j, rand_below(rng, N));
    }
    return D;
}

// ---------------------------------------------------------------------------
// Independent oracles

// Dense N x N cyclic shift matrix I^(d): rows of the identity shifted right
// by d.
inline std::vector<std::vector<int>> shift_matrix(int d, int N) {
    std::vector<std::vector<int>> M(N, std::vector<int>(N, 0));
    for (int r = 0; r < N; ++r) M[r][(r + d) % N] = 1;
    return M;
}

inline std::vector<std::vector<int>> mat_mult(const std::vector<std::vector<int>>& A,
                                              const std::vector<std::vector<int>>& B) {
    const int N = static_cast<int>(A.size());
    std::vector<std::vector<int>> C(N, std::vector<int>(N, 0));
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k)
            if (A[i][k])
                for (int j = 0; j < N; ++j) C[i][j] += A[i][k] * B[k][j];
    return C;
}

// Reads the shift index off a permutation matrix, or -1 if it is not a
// cyclic shift.
inline int read_shift_index(const std::vector<std::vector<int>>& M) {
    const int N = static_cast<int>(M.size());
    int d = -1;
    for (int c = 0; c < N; ++c) {
        if (M[0][c] == 1) { d = c; break; }
    }
    if (d < 0) return -1;
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c)
            if (M[r][c] != (c == (r + d) % N ? 1 : 0)) return -1;
    return d;
}

// Walk a path multiplying explicit shift matrices: I^(d) on a
// variable-to-check hop, I^((N-d) mod N) on the way back. Returns the index
// of the resulting permutation.
inline int path_index_matrix_oracle(const TannerGraph& G, const PermutationIndexMatrix& D,
                                    const std::vector<int>& edge_ids, int start_node) {
    const int N = D.N();
    auto acc = shift_matrix(0, N);
    int node = start_node;
    for (int e : edge_ids) {
        int d = D.edge_index(G, e);
        int hop = G.is_var_node(node) ? d : (N - d) % N;
        acc = mat_mult(acc, shift_matrix(hop, N));
        node = G.other_endpoint(e, node);
    }
    return read_shift_index(acc);
}

// Order of d in Z_N by iterated addition.
inline int order_by_iteration(int d, int N) {
    int q = 1;
    int acc = ((d % N) + N) % N;
    while (acc != 0) {
        acc = (acc + d) % N;
        ++q;
    }
    return q;
}

}  // namespace testutil
