#include "cyclift/parity_check.hpp"

#include <algorithm>
#include <string>

#include "cyclift/errors.hpp"

namespace cyclift {

ParityCheckMatrix::ParityCheckMatrix(int m, int n, std::vector<std::pair<int, int>> entries)
    : m_(m), n_(n), entry_count_(entries.size()), rows_(m > 0 ? m : 0), cols_(n > 0 ? n : 0) {
    if (m < 1 || n < 1) {
        throw validation_error("parity-check matrix needs m >= 1 and n >= 1, got " +
                               std::to_string(m) + "x" + std::to_string(n));
    }
    for (auto [i, j] : entries) {
        if (i < 0 || i >= m || j < 0 || j >= n) {
            throw validation_error("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                   ") out of range for " + std::to_string(m) + "x" +
                                   std::to_string(n) + " matrix");
        }
        rows_[i].push_back(j);
        cols_[j].push_back(i);
    }
    for (auto& r : rows_) std::sort(r.begin(), r.end());
    for (auto& c : cols_) std::sort(c.begin(), c.end());
    for (int i = 0; i < m_; ++i) {
        if (std::adjacent_find(rows_[i].begin(), rows_[i].end()) != rows_[i].end()) {
            throw validation_error("duplicate entry in row " + std::to_string(i));
        }
    }
}

int ParityCheckMatrix::max_row_weight() const {
    int w = 0;
    for (const auto& r : rows_) w = std::max(w, static_cast<int>(r.size()));
    return w;
}

int ParityCheckMatrix::max_col_weight() const {
    int w = 0;
    for (const auto& c : cols_) w = std::max(w, static_cast<int>(c.size()));
    return w;
}

bool ParityCheckMatrix::has_entry(int i, int j) const {
    if (i < 0 || i >= m_ || j < 0 || j >= n_) return false;
    return std::binary_search(rows_[i].begin(), rows_[i].end(), j);
}

std::vector<std::pair<int, int>> ParityCheckMatrix::entries() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(entry_count_);
    for (int i = 0; i < m_; ++i)
        for (int j : rows_[i]) out.emplace_back(i, j);
    return out;
}

bool ParityCheckMatrix::operator==(const ParityCheckMatrix& other) const {
    return m_ == other.m_ && n_ == other.n_ && rows_ == other.rows_;
}

}  // namespace cyclift
