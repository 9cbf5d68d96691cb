#include "graphgeom/stability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "graphgeom/errors.hpp"
#include "graphgeom/spectral.hpp"

namespace graphgeom {

namespace {

double spectral_norm(const Eigen::MatrixXd& m) {
    if (m.rows() == m.cols() && m.isApprox(m.transpose(), 1e-12)) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
        if (solver.info() != Eigen::Success) {
            throw NumericError("spectral_norm: symmetric eigensolver failed");
        }
        return solver.eigenvalues().cwiseAbs().maxCoeff();
    }
    // Rectangular or non-symmetric: largest singular value.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues().size() > 0 ? svd.singularValues()(0) : 0.0;
}

}  // namespace

double operator_norm_delta(const Graph& g1, const Graph& g2) {
    if (g1.num_nodes() != g2.num_nodes()) {
        throw InputError("operator_norm_delta: node counts differ");
    }
    if (g1.num_nodes() == 0) return 0.0;
    return spectral_norm(normalized_adjacency(g2) - normalized_adjacency(g1));
}

PerturbationResult perturbation_bound(const Graph& g1, const Graph& g2) {
    PerturbationResult r;
    r.edit_count = symmetric_difference_count(g1, g2);
    // The lemma's degree hypotheses bind both graphs, so take the union.
    int dmin = g1.num_nodes() + 1, dmax = 1;
    for (const Graph* g : {&g1, &g2}) {
        for (int v = 0; v < g->num_nodes(); ++v) {
            dmin = std::min(dmin, g->degree(v) + 1);
            dmax = std::max(dmax, g->degree(v) + 1);
        }
    }
    r.min_aug_degree = dmin;
    r.degree_ratio = static_cast<double>(dmax) / dmin;
    r.measured = operator_norm_delta(g1, g2);
    r.bound = (1.0 + std::sqrt(r.degree_ratio)) * r.edit_count / r.min_aug_degree;
    r.bound_satisfied = r.measured <= r.bound;
    return r;
}

EmbeddingStability embedding_stability_check(const Graph& g1, const Graph& g2,
                                             const std::vector<Eigen::MatrixXd>& layer_weights,
                                             const Eigen::MatrixXd& h0) {
    if (g1.num_nodes() != g2.num_nodes()) {
        throw InputError("embedding_stability_check: node counts differ");
    }
    if (h0.rows() != g1.num_nodes()) {
        throw InputError("embedding_stability_check: feature rows do not match node count");
    }

    const Eigen::MatrixXd a1 = normalized_adjacency(g1);
    const Eigen::MatrixXd a2 = normalized_adjacency(g2);
    Eigen::MatrixXd h_a = h0, h_b = h0;
    double weight_norms = 1.0;
    for (const Eigen::MatrixXd& w : layer_weights) {
        if (w.rows() != h_a.cols()) {
            throw InputError("embedding_stability_check: weight shape mismatch at layer");
        }
        h_a = a1 * h_a * w;
        h_b = a2 * h_b * w;
        weight_norms *= spectral_norm(w);
    }

    const PerturbationResult pert = perturbation_bound(g1, g2);
    EmbeddingStability out;
    out.measured = spectral_norm(h_b - h_a);
    out.bound = (1.0 + std::sqrt(pert.degree_ratio)) *
                (static_cast<double>(pert.edit_count) / pert.min_aug_degree) *
                weight_norms * spectral_norm(h0);
    return out;
}

}  // namespace graphgeom
