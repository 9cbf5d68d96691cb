#pragma once

#include <vector>

#include <Eigen/Core>

#include "graphgeom/curvature.hpp"
#include "graphgeom/graph.hpp"

namespace graphgeom {

/// Row-stochastic transition matrix over nodes. Row support is contained in
/// the node's neighborhood; isolated (or zero-normalizer fallback) rows are
/// absorbing at the diagonal. Kernels here use the loop-free edge weights
/// w_ij = 1/sqrt(d_i d_j) on raw degrees; the spectral module's self-loop
/// convention is deliberately separate and the two are never mixed.
struct TransitionKernel {
    Eigen::MatrixXd matrix;
    std::vector<int> fallback_rows;  // rows whose weighted normalizer vanished
};

enum class WeightingPreset { Exponential, Sigmoid, ShiftedLinear };

/// Turns edge curvature into nonnegative scores s_ij. beta is the slope for
/// the exp/sigmoid presets and the additive shift for shifted-linear; it may
/// be negative to reverse the weighting direction. With normalize_scores the
/// curvature is z-scored across edges first.
struct WeightingConfig {
    WeightingPreset preset = WeightingPreset::Exponential;
    double beta = 1.0;
    bool normalize_scores = true;
};

/// Baseline kernel p_ij = w_ij / sum_k w_ik.
TransitionKernel gcn_kernel(const Graph& g);

/// Per-edge scores s_ij produced by the weighting config.
std::vector<double> edge_weight_scores(const Graph& g, const EdgeScoreMap& f,
                                       const WeightingConfig& cfg);

/// Score-reweighted kernel q_ij = w_ij s_ij / sum_k w_ik s_ik. Rows whose
/// normalizer vanishes fall back to the baseline row and are flagged.
TransitionKernel curvature_kernel(const Graph& g, const EdgeScoreMap& f,
                                  const WeightingConfig& cfg);

/// Average probability mass sent across class boundaries:
/// (1/n) sum_{i,j} k_ij 1{y_i != y_j}.
double cross_class_mixing(const TransitionKernel& kernel, const std::vector<int>& labels);

/// Per-node Cov(S, D) where J ~ baseline row p_i., S = s_iJ, D = 1{y_i != y_J}.
/// Nodes without neighbors report 0.
std::vector<double> node_covariance_report(const Graph& g, const std::vector<int>& labels,
                                           const EdgeScoreMap& f, const WeightingConfig& cfg);

/// One-vs-all ridge regression on the train rows, argmax prediction on the
/// complement; returns the held-out accuracy. Deterministic. Throws InputError
/// when some class has no training node.
double ridge_readout(const Eigen::MatrixXd& features, const std::vector<int>& labels,
                     double reg, const std::vector<bool>& train_mask);

}  // namespace graphgeom
