#include "cyclift/trapping.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cyclift/errors.hpp"

namespace cyclift {

TrappingSet make_trapping_set(const TannerGraph& G, std::vector<int> vars, int max_cycle_len,
                              std::optional<int> critical_number) {
    std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
        throw validation_error("trapping set lists a variable twice");
    }
    TrappingSet t;
    t.vars = std::move(vars);
    t.subgraph = induced_subgraph(G, t.vars);
    t.b = t.subgraph.odd_check_count();
    t.critical_number = critical_number;

    // Enumerate in the subgraph, report with base-graph edge ids.
    for (const Cycle& c : enumerate_cycles(t.subgraph.graph, max_cycle_len)) {
        std::vector<int> mapped;
        mapped.reserve(c.edge_ids.size());
        for (int e : c.edge_ids) mapped.push_back(t.subgraph.edge_map[e]);
        t.cycles.push_back(canonical_cycle(std::move(mapped)));
    }
    std::sort(t.cycles.begin(), t.cycles.end());
    return t;
}

std::vector<Cycle> edge_cycles(const TrappingSet& t, int edge_id) {
    bool known = std::find(t.subgraph.edge_map.begin(), t.subgraph.edge_map.end(), edge_id) !=
                 t.subgraph.edge_map.end();
    if (!known) {
        throw validation_error("edge " + std::to_string(edge_id) +
                               " is not in the trapping set's induced subgraph");
    }
    std::vector<Cycle> out;
    for (const Cycle& c : t.cycles) {
        if (c.contains_edge(edge_id)) out.push_back(c);
    }
    return out;
}

namespace {

// Unknown critical numbers order after every known one.
long long order_key(const std::optional<int>& cn) {
    return cn ? *cn : (1LL << 40);
}

bool catalog_less(const TrappingSet& x, const TrappingSet& y) {
    if (order_key(x.critical_number) != order_key(y.critical_number)) {
        return order_key(x.critical_number) < order_key(y.critical_number);
    }
    if (x.a() != y.a()) return x.a() < y.a();
    if (x.b != y.b) return x.b < y.b;
    return x.vars < y.vars;
}

}  // namespace

void TrappingSetCatalog::insert(TrappingSet t) {
    for (const auto& existing : sets_) {
        if (existing.vars == t.vars) {
            throw validation_error("duplicate trapping set in catalog");
        }
    }
    auto pos = std::upper_bound(sets_.begin(), sets_.end(), t, catalog_less);
    sets_.insert(pos, std::move(t));
}

TrappingSetCatalog load_catalog(std::string_view text, const TannerGraph& G, int max_cycle_len) {
    TrappingSetCatalog catalog;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        int a = 0, b = 0;
        std::string cn_tok, vars_tok;
        if (!(fields >> a)) continue;  // blank line
        if (!(fields >> b >> cn_tok >> vars_tok)) {
            throw parse_error("expected 'a b critical_number v1,...,va'", line_no);
        }

        std::optional<int> critical;
        if (cn_tok != "-") {
            int cn = 0;
            auto [p, ec] = std::from_chars(cn_tok.data(), cn_tok.data() + cn_tok.size(), cn);
            if (ec != std::errc() || p != cn_tok.data() + cn_tok.size() || cn < 1) {
                throw parse_error("bad critical number '" + cn_tok + "'", line_no);
            }
            critical = cn;
        }

        std::vector<int> vars;
        std::size_t pos = 0;
        while (pos <= vars_tok.size()) {
            auto comma = vars_tok.find(',', pos);
            if (comma == std::string::npos) comma = vars_tok.size();
            int v = 0;
            auto [p, ec] = std::from_chars(vars_tok.data() + pos, vars_tok.data() + comma, v);
            if (ec != std::errc() || p != vars_tok.data() + comma) {
                throw parse_error("bad variable list '" + vars_tok + "'", line_no);
            }
            if (v < 0 || v >= G.n_vars()) {
                throw parse_error("unknown variable node " + std::to_string(v), line_no);
            }
            vars.push_back(v);
            pos = comma + 1;
        }
        if (static_cast<int>(vars.size()) != a) {
            throw parse_error("declared a=" + std::to_string(a) + " but " +
                                  std::to_string(vars.size()) + " variables listed",
                              line_no);
        }

        TrappingSet t;
        try {
            t = make_trapping_set(G, std::move(vars), max_cycle_len, critical);
        } catch (const validation_error& e) {
            throw parse_error(e.what(), line_no);
        }
        if (t.b != b) {
            throw parse_error("declared b=" + std::to_string(b) + " but induced subgraph has " +
                                  std::to_string(t.b) + " odd-degree checks",
                              line_no);
        }
        try {
            catalog.insert(std::move(t));
        } catch (const validation_error& e) {
            throw parse_error(e.what(), line_no);
        }
    }
    return catalog;
}

std::string emit_catalog(const TrappingSetCatalog& catalog) {
    std::ostringstream out;
    for (const TrappingSet& t : catalog.sets()) {
        out << t.a() << ' ' << t.b << ' ';
        if (t.critical_number) out << *t.critical_number;
        else out << '-';
        out << ' ';
        for (std::size_t k = 0; k < t.vars.size(); ++k) {
            if (k) out << ',';
            out << t.vars[k];
        }
        out << '\n';
    }
    return out.str();
}

TrappingSetCatalog read_catalog_file(const std::string& path, const TannerGraph& G,
                                     int max_cycle_len) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_catalog(buf.str(), G, max_cycle_len);
}

void write_catalog_file(const std::string& path, const TrappingSetCatalog& catalog) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot open '" + path + "' for writing");
    out << emit_catalog(catalog);
}

int default_catalog_cycle_len(const TannerGraph& G) {
    auto g = girth(G);
    return g ? *g + 4 : 8;
}

}  // namespace cyclift
