#include "cyclift/gf2.hpp"

#include <bit>
#include <string>

#include "cyclift/errors.hpp"

namespace cyclift {

Gf2Matrix::Gf2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((static_cast<std::size_t>(cols) + 63) / 64),
      data_(static_cast<std::size_t>(rows) * words_, 0) {}

Gf2Matrix::Gf2Matrix(const ParityCheckMatrix& H) : Gf2Matrix(H.m(), H.n()) {
    for (int i = 0; i < H.m(); ++i)
        for (int j : H.row(i)) set(i, j, true);
}

namespace {

// In-place row echelon; returns rank and records the pivot column of each
// eliminated row into pivots when non-null.
int eliminate(std::vector<std::uint64_t>& data, int rows, std::size_t words, int cols,
              std::vector<int>* pivots) {
    int rank = 0;
    auto row_ptr = [&](int r) { return data.data() + static_cast<std::size_t>(r) * words; };
    for (int c = 0; c < cols && rank < rows; ++c) {
        const std::size_t word = static_cast<std::size_t>(c) >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (row_ptr(r)[word] & bit) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (std::size_t w = 0; w < words; ++w) std::swap(row_ptr(pivot)[w], row_ptr(rank)[w]);
        }
        const std::uint64_t* src = row_ptr(rank);
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            std::uint64_t* dst = row_ptr(r);
            if (dst[word] & bit) {
                for (std::size_t w = 0; w < words; ++w) dst[w] ^= src[w];
            }
        }
        if (pivots) pivots->push_back(c);
        ++rank;
    }
    return rank;
}

}  // namespace

int Gf2Matrix::rank() const {
    auto work = data_;
    return eliminate(work, rows_, words_, cols_, nullptr);
}

std::vector<std::vector<std::uint64_t>> Gf2Matrix::nullspace_basis() const {
    auto work = data_;
    std::vector<int> pivots;
    int rank = eliminate(work, rows_, words_, cols_, &pivots);

    std::vector<char> is_pivot(cols_, 0);
    for (int c : pivots) is_pivot[c] = 1;

    std::vector<std::vector<std::uint64_t>> basis;
    auto row_ptr = [&](int r) { return work.data() + static_cast<std::size_t>(r) * words_; };
    for (int free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<std::uint64_t> vec(words_, 0);
        vec[free_col >> 6] |= std::uint64_t{1} << (free_col & 63);
        // Pivot rows are in echelon order; row k has pivot pivots[k].
        for (int k = 0; k < rank; ++k) {
            if (row_ptr(k)[free_col >> 6] & (std::uint64_t{1} << (free_col & 63))) {
                vec[pivots[k] >> 6] |= std::uint64_t{1} << (pivots[k] & 63);
            }
        }
        basis.push_back(std::move(vec));
    }
    return basis;
}

int gf2_rank(const ParityCheckMatrix& H) { return Gf2Matrix(H).rank(); }

Rational make_rational(long long num, long long den) {
    if (den == 0) throw validation_error("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    return Rational{num / g, den / g};
}

Rational code_rate(const ParityCheckMatrix& H) {
    return make_rational(H.n() - gf2_rank(H), H.n());
}

std::optional<int> min_distance_bruteforce(const ParityCheckMatrix& H, int max_dimension) {
    Gf2Matrix M(H);
    auto basis = M.nullspace_basis();
    const int dim = static_cast<int>(basis.size());
    if (dim == 0) return std::nullopt;
    if (dim > max_dimension) {
        throw validation_error("code dimension " + std::to_string(dim) +
                               " exceeds brute-force limit " + std::to_string(max_dimension));
    }

    const std::size_t words = M.words_per_row();
    std::vector<std::uint64_t> current(words, 0);
    int best = H.n() + 1;
    // Gray-code walk over all nonzero basis combinations.
    const std::uint64_t total = std::uint64_t{1} << dim;
    for (std::uint64_t g = 1; g < total; ++g) {
        int flip = std::countr_zero(g);
        const auto& b = basis[flip];
        int weight = 0;
        for (std::size_t w = 0; w < words; ++w) {
            current[w] ^= b[w];
            weight += std::popcount(current[w]);
        }
        best = std::min(best, weight);
        if (best == 1) break;
    }
    return best;
}

}  // namespace cyclift
