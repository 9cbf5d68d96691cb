#pragma once

#include <vector>

#include <Eigen/Core>

#include "graphgeom/graph.hpp"

namespace graphgeom {

/// One real score per undirected edge, aligned index-for-index with
/// Graph::edges(). Carries Forman curvatures, common-neighbor counts, or any
/// generic edge score.
struct EdgeScoreMap {
    std::vector<double> scores;
};

/// Degree-based Forman curvature: F(u,v) = 4 - deg(u) - deg(v), raw degrees.
EdgeScoreMap forman_curvature(const Graph& g);

/// Local Curvature Profile: per node, (min, max, mean, population std, median)
/// of the scores on incident edges. Isolated nodes get an all-zero row.
Eigen::MatrixXd local_curvature_profile(const Graph& g, const EdgeScoreMap& f);

}  // namespace graphgeom
