#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "cyclift/parity_check.hpp"

namespace cyclift {

// Dense GF(2) matrix with 64-bit packed rows. Big enough for the lifted
// matrices this toolkit produces (a few thousand columns).
class Gf2Matrix {
public:
    Gf2Matrix(int rows, int cols);
    explicit Gf2Matrix(const ParityCheckMatrix& H);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const {
        return (data_[static_cast<std::size_t>(r) * words_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(int r, int c, bool value) {
        std::uint64_t& w = data_[static_cast<std::size_t>(r) * words_ + (c >> 6)];
        std::uint64_t bit = std::uint64_t{1} << (c & 63);
        w = value ? (w | bit) : (w & ~bit);
    }
    void flip(int r, int c) {
        data_[static_cast<std::size_t>(r) * words_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
    }

    int rank() const;

    // Basis of the right nullspace {x : Mx = 0}, one packed row per basis
    // vector, each of length cols().
    std::vector<std::vector<std::uint64_t>> nullspace_basis() const;

    std::size_t words_per_row() const { return words_; }

private:
    int rows_;
    int cols_;
    std::size_t words_;
    std::vector<std::uint64_t> data_;
};

int gf2_rank(const ParityCheckMatrix& H);

// Exact rational in lowest terms.
struct Rational {
    long long num = 0;
    long long den = 1;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

Rational make_rational(long long num, long long den);

// Code rate r = (n - rank(H)) / n.
Rational code_rate(const ParityCheckMatrix& H);

// Minimum Hamming weight over the nonzero codewords of ker(H), by
// enumerating the nullspace. nullopt when the code is {0}. Throws
// validation_error when the code dimension exceeds max_dimension.
std::optional<int> min_distance_bruteforce(const ParityCheckMatrix& H, int max_dimension = 28);

}  // namespace cyclift
