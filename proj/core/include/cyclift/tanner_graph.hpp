#pragma once

#include <span>
#include <vector>

#include "cyclift/parity_check.hpp"

namespace cyclift {

// Bipartite Tanner graph. Node ids share one integer space: variable node
// b_j has id j, check node c_i has id n_vars + i. Edge ids are assigned in
// column-major order of H (variables ascending, checks within a variable
// ascending) and are stable for the lifetime of the graph.
class TannerGraph {
public:
    struct Edge {
        int var;    // variable node index in [0, n_vars)
        int check;  // check node index in [0, n_checks)
    };

    TannerGraph() = default;
    explicit TannerGraph(const ParityCheckMatrix& H);

    // Builds a graph directly from an edge list (used for induced subgraphs,
    // which may be empty). Edges keep the given order for id assignment.
    TannerGraph(int n_vars, int n_checks, std::vector<Edge> edges);

    int n_vars() const { return n_vars_; }
    int n_checks() const { return n_checks_; }
    int n_edges() const { return static_cast<int>(edges_.size()); }
    int n_nodes() const { return n_vars_ + n_checks_; }

    const Edge& edge(int e) const { return edges_[e]; }
    std::span<const int> var_edges(int v) const { return var_adj_[v]; }
    std::span<const int> check_edges(int c) const { return check_adj_[c]; }
    int var_degree(int v) const { return static_cast<int>(var_adj_[v].size()); }
    int check_degree(int c) const { return static_cast<int>(check_adj_[c].size()); }

    // Unified node ids.
    int var_node(int v) const { return v; }
    int check_node(int c) const { return n_vars_ + c; }
    bool is_var_node(int node) const { return node < n_vars_; }
    std::span<const int> node_edges(int node) const {
        return is_var_node(node) ? var_edges(node) : check_edges(node - n_vars_);
    }
    int other_endpoint(int e, int node) const {
        const Edge& ed = edges_[e];
        return node == ed.var ? check_node(ed.check) : ed.var;
    }
    bool edge_touches(int e, int node) const {
        const Edge& ed = edges_[e];
        return node == ed.var || node == check_node(ed.check);
    }

    // Edge id for {b_j, c_i}, or -1 if absent.
    int find_edge(int var, int check) const;

    ParityCheckMatrix to_parity_check() const;

private:
    int n_vars_ = 0;
    int n_checks_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> var_adj_;
    std::vector<std::vector<int>> check_adj_;
};

TannerGraph build_tanner_graph(const ParityCheckMatrix& H);

}  // namespace cyclift
