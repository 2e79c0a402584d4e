#include "cyclift/alist.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "cyclift/errors.hpp"

namespace cyclift {

namespace {

struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;

    bool next(std::string_view& line) {
        if (pos >= text.size()) return false;
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = end + 1;
        ++line_no;
        return true;
    }
};

std::vector<long> parse_ints(std::string_view line, int line_no) {
    std::vector<long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        long value = 0;
        auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t')) {
            throw parse_error("expected an integer, got '" + std::string(line.substr(i)) + "'",
                              line_no);
        }
        out.push_back(value);
        i = static_cast<std::size_t>(ptr - line.data());
    }
    return out;
}

// Neighbor lines may be 0-padded up to the max degree; entries after the
// first 0 must all be 0.
std::vector<int> parse_neighbor_line(std::string_view line, int line_no, int degree, int max_degree,
                                     int index_limit, const char* what) {
    auto values = parse_ints(line, line_no);
    if (static_cast<int>(values.size()) < degree || static_cast<int>(values.size()) > max_degree) {
        throw parse_error(std::string(what) + " list has " + std::to_string(values.size()) +
                              " entries, expected " + std::to_string(degree) + " (padded up to " +
                              std::to_string(max_degree) + ")",
                          line_no);
    }
    std::vector<int> neighbors;
    neighbors.reserve(degree);
    for (std::size_t k = 0; k < values.size(); ++k) {
        long v = values[k];
        if (v == 0) {
            if (static_cast<int>(k) < degree) {
                throw parse_error(std::string(what) + " list padded with 0 before the declared " +
                                      std::to_string(degree) + " entries were read",
                                  line_no);
            }
            continue;
        }
        if (static_cast<int>(k) >= degree) {
            throw parse_error(std::string(what) + " padding must be 0, got " + std::to_string(v),
                              line_no);
        }
        if (v < 1 || v > index_limit) {
            throw parse_error(std::string(what) + " index " + std::to_string(v) +
                                  " out of range [1, " + std::to_string(index_limit) + "]",
                              line_no);
        }
        neighbors.push_back(static_cast<int>(v) - 1);
    }
    return neighbors;
}

}  // namespace

ParityCheckMatrix parse_alist(std::string_view text) {
    LineReader reader{text};
    std::string_view line;

    if (!reader.next(line)) throw parse_error("empty input, expected 'n m' header", 1);
    auto header = parse_ints(line, reader.line_no);
    if (header.size() != 2 || header[0] < 1 || header[1] < 1) {
        throw parse_error("malformed header, expected 'n m' with n, m >= 1", reader.line_no);
    }
    const int n = static_cast<int>(header[0]);
    const int m = static_cast<int>(header[1]);

    if (!reader.next(line)) throw parse_error("missing 'max_col_deg max_row_deg' line", reader.line_no + 1);
    auto max_degs = parse_ints(line, reader.line_no);
    if (max_degs.size() != 2 || max_degs[0] < 0 || max_degs[1] < 0) {
        throw parse_error("malformed max-degree line", reader.line_no);
    }
    const int max_col_deg = static_cast<int>(max_degs[0]);
    const int max_row_deg = static_cast<int>(max_degs[1]);

    auto read_degrees = [&](int count, int max_deg, const char* what) {
        if (!reader.next(line)) throw parse_error(std::string("missing ") + what + " degree line", reader.line_no + 1);
        auto values = parse_ints(line, reader.line_no);
        if (static_cast<int>(values.size()) != count) {
            throw parse_error(std::string(what) + " degree line has " + std::to_string(values.size()) +
                                  " entries, expected " + std::to_string(count),
                              reader.line_no);
        }
        std::vector<int> degs(count);
        for (int k = 0; k < count; ++k) {
            if (values[k] < 0 || values[k] > max_deg) {
                throw parse_error(std::string(what) + " degree " + std::to_string(values[k]) +
                                      " outside [0, " + std::to_string(max_deg) + "]",
                                  reader.line_no);
            }
            degs[k] = static_cast<int>(values[k]);
        }
        return degs;
    };

    auto col_degs = read_degrees(n, max_col_deg, "column");
    auto row_degs = read_degrees(m, max_row_deg, "row");

    // Column neighbor lists define the matrix; row lists are validated against them.
    std::vector<std::vector<int>> col_neighbors(n);
    std::vector<std::pair<int, int>> entries;
    for (int j = 0; j < n; ++j) {
        if (!reader.next(line)) throw parse_error("missing neighbor list for column " + std::to_string(j + 1), reader.line_no + 1);
        col_neighbors[j] = parse_neighbor_line(line, reader.line_no, col_degs[j], std::max(max_col_deg, col_degs[j]), m, "column");
        auto sorted = col_neighbors[j];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw parse_error("duplicate neighbor in column " + std::to_string(j + 1) +
                                  " (parallel edges are not supported)",
                              reader.line_no);
        }
        for (int i : col_neighbors[j]) entries.emplace_back(i, j);
    }

    std::vector<std::vector<int>> row_from_cols(m);
    for (auto [i, j] : entries) row_from_cols[i].push_back(j);

    for (int i = 0; i < m; ++i) {
        if (!reader.next(line)) throw parse_error("missing neighbor list for row " + std::to_string(i + 1), reader.line_no + 1);
        auto neighbors = parse_neighbor_line(line, reader.line_no, row_degs[i], std::max(max_row_deg, row_degs[i]), n, "row");
        std::sort(neighbors.begin(), neighbors.end());
        std::sort(row_from_cols[i].begin(), row_from_cols[i].end());
        if (neighbors != row_from_cols[i]) {
            throw parse_error("row list for row " + std::to_string(i + 1) +
                                  " is inconsistent with the column lists",
                              reader.line_no);
        }
    }

    try {
        return ParityCheckMatrix(m, n, std::move(entries));
    } catch (const validation_error& e) {
        throw parse_error(e.what(), reader.line_no);
    }
}

std::string emit_alist(const ParityCheckMatrix& H) {
    std::ostringstream out;
    out << H.n() << ' ' << H.m() << '\n';
    out << H.max_col_weight() << ' ' << H.max_row_weight() << '\n';
    for (int j = 0; j < H.n(); ++j) out << H.col_weight(j) << (j + 1 < H.n() ? ' ' : '\n');
    for (int i = 0; i < H.m(); ++i) out << H.row_weight(i) << (i + 1 < H.m() ? ' ' : '\n');
    for (int j = 0; j < H.n(); ++j) {
        auto col = H.col(j);
        for (std::size_t k = 0; k < col.size(); ++k) out << col[k] + 1 << (k + 1 < col.size() ? " " : "");
        out << '\n';
    }
    for (int i = 0; i < H.m(); ++i) {
        auto row = H.row(i);
        for (std::size_t k = 0; k < row.size(); ++k) out << row[k] + 1 << (k + 1 < row.size() ? " " : "");
        out << '\n';
    }
    return out.str();
}

ParityCheckMatrix read_alist_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_alist(buf.str());
}

void write_alist_file(const std::string& path, const ParityCheckMatrix& H) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open '" + path + "' for writing");
    out << emit_alist(H);
}

}  // namespace cyclift
