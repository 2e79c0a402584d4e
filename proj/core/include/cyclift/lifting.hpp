#pragma once

#include <memory>
#include <vector>

#include "cyclift/cycles.hpp"
#include "cyclift/parity_check.hpp"
#include "cyclift/perm_index.hpp"
#include "cyclift/tanner_graph.hpp"

namespace cyclift {

// A cyclic N-lifting of a base code. Block (i, j) of the lifted matrix is
// the d_ij-fold right cyclic shift of the N x N identity where h_ij = 1 and
// the all-zero block elsewhere; row/column weights of the base replicate N
// times. The lifted matrix and graph are materialized on first use.
class LiftedCode {
public:
    LiftedCode(ParityCheckMatrix base, PermutationIndexMatrix D);

    const ParityCheckMatrix& base() const { return base_; }
    const PermutationIndexMatrix& D() const { return D_; }
    int N() const { return D_.N(); }

    int lifted_m() const { return base_.m() * N(); }
    int lifted_n() const { return base_.n() * N(); }

    // Lvalue-only: the references point into this object's caches.
    const ParityCheckMatrix& parity_check() const&;
    const TannerGraph& graph() const&;
    const ParityCheckMatrix& parity_check() const&& = delete;
    const TannerGraph& graph() const&& = delete;

    // Lifted ids: variable copy s of base variable j, check copy r of base check i.
    int lifted_var(int j, int s) const { return j * N() + s; }
    int lifted_check(int i, int r) const { return i * N() + r; }

private:
    ParityCheckMatrix base_;
    PermutationIndexMatrix D_;
    mutable std::shared_ptr<const ParityCheckMatrix> lifted_;
    mutable std::shared_ptr<const TannerGraph> lifted_graph_;
};

// Throws validation_error when D's support differs from H's.
LiftedCode lift(const ParityCheckMatrix& H, const PermutationIndexMatrix& D);

// Component A_d of the block-circulant form: (i, j) entry 1 iff d_ij = d.
// Sum over d of A_d recovers H.
ParityCheckMatrix block_component(const ParityCheckMatrix& H, const PermutationIndexMatrix& D,
                                  int d);

// Alternate parity-check matrix of the lifted code: block row r, block
// column s holds A_((r - s) mod N). A row/column permutation of the lifted
// matrix, so ranks agree.
ParityCheckMatrix block_circulant_form(const ParityCheckMatrix& H,
                                       const PermutationIndexMatrix& D);

// Traversal report for the inverse image of a base cycle in the lifted
// graph, checked against the arithmetic order k = N/gcd(d, N): the inverse
// image must split into N/k cycles of length k*len.
struct Theorem1Report {
    int permutation_index = 0;        // alternating-sum index of the cycle
    int order = 1;                    // k = N / gcd(index, N)
    int cycle_count = 0;              // traversed cycles in the inverse image
    std::vector<int> cycle_lengths;   // one entry per traversed cycle
    bool consistent = false;          // traversal agrees with k and N/k
};

Theorem1Report verify_theorem1(const TannerGraph& base_graph, const LiftedCode& lifted,
                               const Cycle& c);

}  // namespace cyclift
