#include "cyclift/tanner_graph.hpp"

#include <string>

#include "cyclift/errors.hpp"

namespace cyclift {

TannerGraph::TannerGraph(const ParityCheckMatrix& H)
    : n_vars_(H.n()), n_checks_(H.m()), var_adj_(H.n()), check_adj_(H.m()) {
    edges_.reserve(H.entry_count());
    for (int j = 0; j < H.n(); ++j) {
        for (int i : H.col(j)) {
            int e = static_cast<int>(edges_.size());
            edges_.push_back({j, i});
            var_adj_[j].push_back(e);
            check_adj_[i].push_back(e);
        }
    }
}

TannerGraph::TannerGraph(int n_vars, int n_checks, std::vector<Edge> edges)
    : n_vars_(n_vars), n_checks_(n_checks), edges_(std::move(edges)),
      var_adj_(n_vars), check_adj_(n_checks) {
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        const Edge& ed = edges_[e];
        if (ed.var < 0 || ed.var >= n_vars_ || ed.check < 0 || ed.check >= n_checks_) {
            throw validation_error("edge (" + std::to_string(ed.var) + "," +
                                   std::to_string(ed.check) + ") out of range");
        }
        var_adj_[ed.var].push_back(e);
        check_adj_[ed.check].push_back(e);
    }
}

int TannerGraph::find_edge(int var, int check) const {
    for (int e : var_adj_[var]) {
        if (edges_[e].check == check) return e;
    }
    return -1;
}

ParityCheckMatrix TannerGraph::to_parity_check() const {
    std::vector<std::pair<int, int>> entries;
    entries.reserve(edges_.size());
    for (const Edge& e : edges_) entries.emplace_back(e.check, e.var);
    return ParityCheckMatrix(n_checks_, n_vars_, std::move(entries));
}

TannerGraph build_tanner_graph(const ParityCheckMatrix& H) { return TannerGraph(H); }

}  // namespace cyclift
