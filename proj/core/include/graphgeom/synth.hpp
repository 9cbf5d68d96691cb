#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "graphgeom/graph.hpp"

namespace graphgeom {

/// Seeded block-model generator. Node ids are laid out class-by-class; each
/// candidate pair (u, v) with u < v is included independently with
/// probability table(y_u, y_v). The class-pair table generalizes the usual
/// homophilous block model and covers heterophilous regimes with the same
/// mechanism. All randomness flows through SplitMix64(seed), so identical
/// specs give identical graphs.
struct GeneratorSpec {
    int nodes_per_class = 100;
    int num_classes = 2;
    Eigen::MatrixXd edge_probability;  // C x C, symmetric, entries in [0, 1]
    int feature_dim = 0;               // 0 = no features
    double snr = 1.0;
    std::uint64_t seed = 0;
};

LabeledGraph generate(const GeneratorSpec& spec);

/// Gaussian features: row v = snr * mu_{y_v} + unit noise, with class means on
/// fixed orthogonal coordinate directions (cycled when dim < C). Deterministic
/// per seed.
Eigen::MatrixXd gaussian_features(const std::vector<int>& labels, int dim, double snr,
                                  std::uint64_t seed);

// Class-pair table presets.
Eigen::MatrixXd uniform_table(int num_classes, double p);
Eigen::MatrixXd sbm_table(int num_classes, double p_in, double p_out);
/// Deterministic class map: classes paired (0,1), (2,3), ...; requires even C.
/// Edges only between matched classes, so a neighbor's label determines the
/// node's label.
Eigen::MatrixXd matching_table(int num_classes, double p);
/// Deterministic class map for any C: pairs as in matching_table; with odd C,
/// class 0 maps to itself (a homophilous block). Label informativeness is 1
/// either way.
Eigen::MatrixXd involution_table(int num_classes, double p);
/// Class y connects to classes y+1 and y-1 (mod C).
Eigen::MatrixXd cyclic_table(int num_classes, double p);

/// Seeded Erdos-Renyi graph (every pair independently with probability p).
Graph erdos_renyi(int num_nodes, double p, std::uint64_t seed);

}  // namespace graphgeom
