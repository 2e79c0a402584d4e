#include "cyclift/perm_index.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cyclift/errors.hpp"

namespace cyclift {

PermutationIndexMatrix::PermutationIndexMatrix(const ParityCheckMatrix& H, int N)
    : N_(N), m_(H.m()), n_(H.n()), support_(H.m()), values_(H.m()) {
    if (N < 1) throw validation_error("lifting degree N must be >= 1");
    for (int i = 0; i < m_; ++i) {
        support_[i].assign(H.row(i).begin(), H.row(i).end());
        values_[i].assign(support_[i].size(), 0);
    }
}

std::optional<int> PermutationIndexMatrix::get(int i, int j) const {
    if (i < 0 || i >= m_ || j < 0 || j >= n_) {
        throw validation_error("index (" + std::to_string(i) + "," + std::to_string(j) +
                               ") out of range");
    }
    const auto& row = support_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j);
    if (it == row.end() || *it != j) return std::nullopt;
    return values_[i][static_cast<std::size_t>(it - row.begin())];
}

int PermutationIndexMatrix::at(int i, int j) const {
    auto v = get(i, j);
    if (!v) {
        throw validation_error("entry (" + std::to_string(i) + "," + std::to_string(j) +
                               ") is off the support (infinity)");
    }
    return *v;
}

void PermutationIndexMatrix::set(int i, int j, int d) {
    if (d < 0 || d >= N_) {
        throw validation_error("permutation index " + std::to_string(d) + " outside [0, " +
                               std::to_string(N_ - 1) + "]");
    }
    auto& row = support_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j);
    if (it == row.end() || *it != j) {
        throw validation_error("cannot assign index off the support at (" + std::to_string(i) +
                               "," + std::to_string(j) + ")");
    }
    values_[i][static_cast<std::size_t>(it - row.begin())] = d;
}

bool PermutationIndexMatrix::support_matches(const ParityCheckMatrix& H) const {
    if (H.m() != m_ || H.n() != n_) return false;
    for (int i = 0; i < m_; ++i) {
        auto row = H.row(i);
        if (!std::equal(row.begin(), row.end(), support_[i].begin(), support_[i].end())) {
            return false;
        }
    }
    return true;
}

std::size_t PermutationIndexMatrix::support_size() const {
    std::size_t total = 0;
    for (const auto& row : support_) total += row.size();
    return total;
}

PermutationIndexMatrix parse_dmatrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;

    auto next_line = [&]() {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return true;
        }
        return false;
    };

    if (!next_line()) throw parse_error("empty input, expected 'm n N' header", 1);
    std::istringstream header(line);
    int m = 0, n = 0, N = 0;
    if (!(header >> m >> n >> N) || m < 1 || n < 1 || N < 1) {
        throw parse_error("malformed header, expected 'm n N'", line_no);
    }

    PermutationIndexMatrix D;
    D.N_ = N;
    D.m_ = m;
    D.n_ = n;
    D.support_.resize(m);
    D.values_.resize(m);

    for (int i = 0; i < m; ++i) {
        if (!next_line()) throw parse_error("missing row " + std::to_string(i + 1), line_no + 1);
        std::istringstream row(line);
        std::string tok;
        for (int j = 0; j < n; ++j) {
            if (!(row >> tok)) {
                throw parse_error("row has fewer than " + std::to_string(n) + " entries", line_no);
            }
            if (tok == "-") continue;
            int d = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), d);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) {
                throw parse_error("expected an index or '-', got '" + tok + "'", line_no);
            }
            if (d < 0 || d >= N) {
                throw parse_error("index " + std::to_string(d) + " outside [0, " +
                                      std::to_string(N - 1) + "]",
                                  line_no);
            }
            D.support_[i].push_back(j);
            D.values_[i].push_back(d);
        }
        std::string extra;
        if (row >> extra) {
            throw parse_error("row has more than " + std::to_string(n) + " entries", line_no);
        }
    }
    return D;
}

std::string emit_dmatrix(const PermutationIndexMatrix& D) {
    std::ostringstream out;
    out << D.m() << ' ' << D.n() << ' ' << D.N() << '\n';
    for (int i = 0; i < D.m(); ++i) {
        for (int j = 0; j < D.n(); ++j) {
            if (j) out << ' ';
            auto v = D.get(i, j);
            if (v) out << *v;
            else out << '-';
        }
        out << '\n';
    }
    return out.str();
}

PermutationIndexMatrix read_dmatrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dmatrix(buf.str());
}

void write_dmatrix_file(const std::string& path, const PermutationIndexMatrix& D) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open '" + path + "' for writing");
    out << emit_dmatrix(D);
}

int path_permutation_index(const TannerGraph& G, const PermutationIndexMatrix& D,
                           std::span<const int> edge_ids, int start_node) {
    const int N = D.N();
    int node = start_node;
    long long sum = 0;
    for (int e : edge_ids) {
        if (!G.edge_touches(e, node)) {
            throw validation_error("path is not alternating: edge " + std::to_string(e) +
                                   " does not touch node " + std::to_string(node));
        }
        int d = D.edge_index(G, e);
        sum += G.is_var_node(node) ? d : -d;
        node = G.other_endpoint(e, node);
    }
    return static_cast<int>(((sum % N) + N) % N);
}

int cycle_permutation_index(const TannerGraph& G, const PermutationIndexMatrix& D, const Cycle& c) {
    auto nodes = cycle_nodes(G, c);
    return path_permutation_index(G, D, c.edge_ids, nodes[0]);
}

int cycle_order(const TannerGraph& G, const PermutationIndexMatrix& D, const Cycle& c) {
    return shift_order(cycle_permutation_index(G, D, c), D.N());
}

}  // namespace cyclift
