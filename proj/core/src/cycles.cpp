#include "cyclift/cycles.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "cyclift/errors.hpp"

namespace cyclift {

bool Cycle::contains_edge(int e) const {
    return std::find(edge_ids.begin(), edge_ids.end(), e) != edge_ids.end();
}

Cycle canonical_cycle(std::vector<int> edge_ids) {
    if (edge_ids.size() < 4) throw validation_error("cycle shorter than 4 edges");
    auto min_it = std::min_element(edge_ids.begin(), edge_ids.end());
    std::rotate(edge_ids.begin(), min_it, edge_ids.end());

    // Reverse traversal from the same minimal edge: [e0, ek, ..., e1].
    std::vector<int> reversed(edge_ids.size());
    reversed[0] = edge_ids[0];
    for (std::size_t i = 1; i < edge_ids.size(); ++i) {
        reversed[i] = edge_ids[edge_ids.size() - i];
    }
    return Cycle{std::min(edge_ids, reversed)};
}

std::vector<int> cycle_nodes(const TannerGraph& G, const Cycle& c) {
    const auto& e = c.edge_ids;
    const int len = c.length();
    std::vector<int> nodes(len);
    // Start node: endpoint shared by the last and first edges.
    const auto& first = G.edge(e[0]);
    int start = G.edge_touches(e[len - 1], first.var) ? first.var : G.check_node(first.check);
    int node = start;
    for (int i = 0; i < len; ++i) {
        if (!G.edge_touches(e[i], node)) {
            throw validation_error("cycle edges are not consecutive");
        }
        nodes[i] = node;
        node = G.other_endpoint(e[i], node);
    }
    if (node != start) throw validation_error("edge sequence does not close into a cycle");
    return nodes;
}

namespace {

// DFS rooted at the minimal edge of each cycle. Starting from the variable
// endpoint of edge e0 and only descending into edges with id > e0 produces
// every simple cycle through e0 exactly once (one of its two orientations).
struct CycleDfs {
    const TannerGraph& G;
    int max_len;
    const EnumerateOptions& opts;
    std::vector<Cycle>& out;

    std::vector<char> on_path;
    std::vector<int> path_edges;
    int root_edge = 0;
    int root_node = 0;

    void run() {
        on_path.assign(G.n_nodes(), 0);
        for (int e0 = 0; e0 < G.n_edges(); ++e0) {
            root_edge = e0;
            root_node = G.edge(e0).var;
            int next = G.check_node(G.edge(e0).check);
            path_edges.assign(1, e0);
            on_path[root_node] = 1;
            on_path[next] = 1;
            extend(next);
            on_path[root_node] = 0;
            on_path[next] = 0;
        }
    }

    void extend(int node) {
        const int depth = static_cast<int>(path_edges.size());
        for (int e : G.node_edges(node)) {
            if (e <= root_edge) continue;  // root edge is the cycle minimum
            int nb = G.other_endpoint(e, node);
            if (nb == root_node) {
                if (depth + 1 >= 4) {
                    path_edges.push_back(e);
                    emit();
                    path_edges.pop_back();
                }
                continue;
            }
            if (depth + 2 > max_len || on_path[nb]) continue;
            on_path[nb] = 1;
            path_edges.push_back(e);
            extend(nb);
            path_edges.pop_back();
            on_path[nb] = 0;
        }
    }

    void emit() {
        if (opts.through_node) {
            int want = *opts.through_node;
            bool hit = false;
            for (int e : path_edges) {
                if (G.edge_touches(e, want)) { hit = true; break; }
            }
            if (!hit) return;
        }
        if (opts.through_edge &&
            std::find(path_edges.begin(), path_edges.end(), *opts.through_edge) == path_edges.end()) {
            return;
        }
        if (opts.cap && out.size() >= *opts.cap) {
            throw budget_error("cycle enumeration exceeded cap of " + std::to_string(*opts.cap));
        }
        out.push_back(canonical_cycle(path_edges));
    }
};

}  // namespace

std::vector<Cycle> enumerate_cycles(const TannerGraph& G, int max_len, const EnumerateOptions& opts) {
    if (max_len < 4 || max_len % 2 != 0) {
        throw validation_error("max_len must be even and >= 4, got " + std::to_string(max_len));
    }
    std::vector<Cycle> out;
    CycleDfs dfs{G, max_len, opts, out};
    dfs.run();
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<int> girth(const TannerGraph& G) {
    // Min over all BFS roots of dist(u) + dist(w) + 1 for non-tree edges
    // {u, w}. Exact for the global minimum.
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(G.n_nodes());
    std::vector<int> via_edge(G.n_nodes());
    std::vector<int> queue;
    for (int root = 0; root < G.n_nodes(); ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        queue.push_back(root);
        dist[root] = 0;
        via_edge[root] = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            if (2 * dist[u] >= best) break;
            for (int e : G.node_edges(u)) {
                if (e == via_edge[u]) continue;
                int w = G.other_endpoint(e, u);
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    via_edge[w] = e;
                    queue.push_back(w);
                } else {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

InducedSubgraph induced_subgraph(const TannerGraph& G, const std::vector<int>& vars) {
    std::vector<char> in_set(G.n_vars(), 0);
    for (int v : vars) {
        if (v < 0 || v >= G.n_vars()) {
            throw validation_error("unknown variable node " + std::to_string(v));
        }
        in_set[v] = 1;
    }

    InducedSubgraph sub;
    std::vector<int> var_index(G.n_vars(), -1);
    std::vector<int> check_index(G.n_checks(), -1);
    for (int v = 0; v < G.n_vars(); ++v) {
        if (!in_set[v]) continue;
        var_index[v] = static_cast<int>(sub.var_map.size());
        sub.var_map.push_back(v);
    }

    std::vector<TannerGraph::Edge> edges;
    for (int v : sub.var_map) {
        for (int e : G.var_edges(v)) {
            int c = G.edge(e).check;
            if (check_index[c] < 0) {
                check_index[c] = static_cast<int>(sub.check_map.size());
                sub.check_map.push_back(c);
            }
            edges.push_back({var_index[v], check_index[c]});
            sub.edge_map.push_back(e);
        }
    }
    sub.graph = TannerGraph(static_cast<int>(sub.var_map.size()),
                            static_cast<int>(sub.check_map.size()), std::move(edges));
    for (int ci = 0; ci < sub.graph.n_checks(); ++ci) {
        if (sub.graph.check_degree(ci) % 2 == 1) sub.odd_checks.push_back(sub.check_map[ci]);
    }
    std::sort(sub.odd_checks.begin(), sub.odd_checks.end());
    return sub;
}

}  // namespace cyclift
