#include "graphgeom/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "graphgeom/errors.hpp"
#include "graphgeom/prng.hpp"

namespace graphgeom {

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

Graph build_graph(int num_nodes, const std::vector<Edge>& raw_edges) {
    if (num_nodes < 0) throw InputError("build_graph: negative node count");

    std::vector<Edge> edges;
    edges.reserve(raw_edges.size());
    for (const auto& [a, b] : raw_edges) {
        if (a < 0 || a >= num_nodes || b < 0 || b >= num_nodes) {
            throw InputError("build_graph: endpoint (" + std::to_string(a) + "," +
                             std::to_string(b) + ") out of range for " +
                             std::to_string(num_nodes) + " nodes");
        }
        if (a == b) continue;  // de-loop
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.num_nodes_ = num_nodes;
    g.edges_ = std::move(edges);
    g.adjacency_.assign(num_nodes, {});
    for (const auto& [u, v] : g.edges_) {
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

std::vector<int> degrees(const Graph& g) {
    std::vector<int> d(g.num_nodes());
    for (int v = 0; v < g.num_nodes(); ++v) d[v] = g.degree(v);
    return d;
}

int symmetric_difference_count(const Graph& g1, const Graph& g2) {
    if (g1.num_nodes() != g2.num_nodes()) {
        throw InputError("symmetric_difference_count: node counts differ (" +
                         std::to_string(g1.num_nodes()) + " vs " +
                         std::to_string(g2.num_nodes()) + ")");
    }
    // Both edge lists are sorted; count the merge mismatches.
    const auto& a = g1.edges();
    const auto& b = g2.edges();
    std::size_t i = 0, j = 0;
    int count = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++count;
            ++i;
        } else {
            ++count;
            ++j;
        }
    }
    count += static_cast<int>((a.size() - i) + (b.size() - j));
    return count;
}

const std::vector<int>& require_labels(const LabeledGraph& lg) {
    if (!lg.labels.has_value()) throw InputError("labels required but absent");
    const auto& labels = *lg.labels;
    if (static_cast<int>(labels.size()) != lg.graph.num_nodes()) {
        throw InputError("labels length " + std::to_string(labels.size()) +
                         " does not match node count " +
                         std::to_string(lg.graph.num_nodes()));
    }
    int max_id = -1;
    for (int y : labels) {
        if (y < 0) throw InputError("negative class id in labels");
        max_id = std::max(max_id, y);
    }
    // ids must be contiguous from 0
    std::vector<bool> present(max_id + 1, false);
    for (int y : labels) present[y] = true;
    for (int c = 0; c <= max_id; ++c) {
        if (!present[c]) {
            throw InputError("class ids are not contiguous: class " + std::to_string(c) +
                             " is empty");
        }
    }
    return labels;
}

int num_classes(const std::vector<int>& labels) {
    int c = 0;
    for (int y : labels) c = std::max(c, y + 1);
    return c;
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build_graph(n, e);
}

Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    if (n >= 3) e.emplace_back(0, n - 1);
    return build_graph(n, e);
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return build_graph(n, e);
}

Graph star_graph(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return build_graph(leaves + 1, e);
}

Graph complete_bipartite_graph(int left, int right) {
    std::vector<Edge> e;
    for (int i = 0; i < left; ++i)
        for (int j = 0; j < right; ++j) e.emplace_back(i, left + j);
    return build_graph(left + right, e);
}

Graph petersen_graph() {
    // Outer C_5, inner 5-star polygon, spokes.
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
        e.emplace_back(i, 5 + i);
    }
    return build_graph(10, e);
}

Graph prism_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
        e.emplace_back(n + i, n + (i + 1) % n);
        e.emplace_back(i, n + i);
    }
    return build_graph(2 * n, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> e = a.edges();
    const int shift = a.num_nodes();
    for (const auto& [u, v] : b.edges()) e.emplace_back(u + shift, v + shift);
    return build_graph(a.num_nodes() + b.num_nodes(), e);
}

Graph relabeled_copy(const Graph& g, std::uint64_t seed) {
    const int n = g.num_nodes();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    SplitMix64 rng(seed);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
        std::swap(perm[i], perm[j]);
    }
    std::vector<Edge> e;
    e.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
    return build_graph(n, e);
}

}  // namespace graphgeom
