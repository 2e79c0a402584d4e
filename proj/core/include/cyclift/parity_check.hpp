#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cyclift {

// Sparse binary m x n parity-check matrix H. Row i lists the columns j with
// h_ij = 1 and column j lists the rows; both views are kept sorted and
// consistent. Immutable after construction.
class ParityCheckMatrix {
public:
    // entries are (row, column) positions of the ones. Duplicates and
    // out-of-range indices are rejected.
    ParityCheckMatrix(int m, int n, std::vector<std::pair<int, int>> entries);

    int m() const { return m_; }
    int n() const { return n_; }
    std::size_t entry_count() const { return entry_count_; }

    std::span<const int> row(int i) const { return rows_[i]; }
    std::span<const int> col(int j) const { return cols_[j]; }
    int row_weight(int i) const { return static_cast<int>(rows_[i].size()); }
    int col_weight(int j) const { return static_cast<int>(cols_[j].size()); }
    int max_row_weight() const;
    int max_col_weight() const;

    bool has_entry(int i, int j) const;

    // All ones in row-major order.
    std::vector<std::pair<int, int>> entries() const;

    bool operator==(const ParityCheckMatrix& other) const;

private:
    int m_;
    int n_;
    std::size_t entry_count_;
    std::vector<std::vector<int>> rows_;  // per row: sorted column indices
    std::vector<std::vector<int>> cols_;  // per column: sorted row indices
};

}  // namespace cyclift
