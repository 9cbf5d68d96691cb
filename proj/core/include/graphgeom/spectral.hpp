#pragma once

#include <Eigen/Core>

#include "graphgeom/graph.hpp"

namespace graphgeom {

/// Eigendecomposition of the normalized Laplacian L = I - A~ with
/// A~ = D^{-1/2}(A + I)D^{-1/2} (self-loop augmented). Eigenvalues ascend;
/// eigenvector columns are orthonormal and aligned with them. Sign convention:
/// in each column, the first entry with magnitude > 1e-9 is positive.
struct SpectralBasis {
    Eigen::VectorXd eigenvalues;
    Eigen::MatrixXd eigenvectors;
    int trivial_count = 0;      // eigenvalues below zero_tolerance
    double zero_tolerance = 0;  // 1e-9 relative to the largest eigenvalue
};

/// Laplacian positional encoding: the k lowest-eigenvalue eigenvectors above
/// the zero tolerance. When a degenerate eigenvalue cluster straddles the
/// requested cutoff, k is extended to the cluster boundary so that the
/// retained subspace (and hence pairwise row distances) is well defined;
/// cutoff_extended records that this happened.
struct LapPE {
    int k = 0;
    Eigen::MatrixXd coordinates;  // n x k
    int requested_k = 0;
    bool cutoff_extended = false;
};

/// Self-loop augmented normalized adjacency D^{-1/2}(A + I)D^{-1/2}.
/// Symmetric, spectral radius at most 1. Isolated nodes get an identity row.
Eigen::MatrixXd normalized_adjacency(const Graph& g);

/// Dense symmetric eigensolve of L = I - A~. Throws NumericError when the
/// solver fails to converge.
SpectralBasis spectral_decomposition(const Graph& g);

LapPE lappe(const SpectralBasis& basis, int k);
LapPE lappe(const Graph& g, int k);

/// Applies A~ to h0 a total of `steps` times (linearized, weight-free
/// propagation).
Eigen::MatrixXd propagate(const Graph& g, const Eigen::MatrixXd& h0, int steps);

/// Euclidean norm of y minus its projection onto the same k-dimensional
/// nontrivial eigenspace that lappe() would retain (including any cutoff
/// extension).
double projection_residual(const Eigen::VectorXd& y, const SpectralBasis& basis, int k);

/// Index range [start, start + count) of the eigenvectors retained for a
/// k-dimensional positional encoding, with cluster extension applied.
struct PESelection {
    int start = 0;
    int count = 0;
    bool extended = false;
};
PESelection select_pe_modes(const SpectralBasis& basis, int k);

}  // namespace graphgeom
