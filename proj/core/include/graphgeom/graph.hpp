#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace graphgeom {

/// Undirected edge stored with first < second.
using Edge = std::pair<int, int>;

/// Canonical undirected simple graph. Edges are sorted pairs (u < v) held in
/// lexicographic order, no duplicates, no self-loops. Instances are immutable
/// after construction and safe to share across threads.
class Graph {
public:
    Graph() = default;

    int num_nodes() const { return num_nodes_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    bool has_edge(int u, int v) const;

    bool operator==(const Graph& other) const {
        return num_nodes_ == other.num_nodes_ && edges_ == other.edges_;
    }

private:
    friend Graph build_graph(int num_nodes, const std::vector<Edge>& raw_edges);

    int num_nodes_ = 0;
    std::vector<Edge> edges_;                  // canonical order
    std::vector<std::vector<int>> adjacency_;  // sorted neighbor lists
};

/// Graph plus optional per-node class labels (ids in 0..C-1) and feature rows.
struct LabeledGraph {
    Graph graph;
    std::optional<std::vector<int>> labels;
    std::optional<Eigen::MatrixXd> features;
};

/// Canonicalize raw input: self-loops dropped, pairs sorted, duplicates
/// coalesced. Throws InputError when an endpoint is out of range.
Graph build_graph(int num_nodes, const std::vector<Edge>& raw_edges);

/// Per-node degrees; the sum equals twice the edge count.
std::vector<int> degrees(const Graph& g);

/// Number of undirected edges present in exactly one of the two graphs.
/// Throws InputError on node-count mismatch.
int symmetric_difference_count(const Graph& g1, const Graph& g2);

/// Labels of lg, validated: present, length n, ids in [0, C) with C = max+1.
/// Throws InputError otherwise.
const std::vector<int>& require_labels(const LabeledGraph& lg);

/// Number of classes implied by the labels (max id + 1); 0 without labels.
int num_classes(const std::vector<int>& labels);

// Small named graphs used by fixtures and the WL pair library.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite_graph(int left, int right);
Graph petersen_graph();
Graph prism_graph(int n);  // C_n x K_2

/// Disjoint union; b's node ids are shifted by a.num_nodes().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Copy of g with node ids permuted by a seeded random permutation.
Graph relabeled_copy(const Graph& g, std::uint64_t seed);

}  // namespace graphgeom
