#include "graphgeom/spectral.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "graphgeom/errors.hpp"

namespace graphgeom {

namespace {

// Relative tolerance separating trivial (zero) eigenvalues from the rest.
constexpr double kZeroTolFactor = 1e-9;
// Eigenvalues closer than this (same relative scale) are treated as one
// degenerate cluster when choosing the positional-encoding cutoff.
constexpr double kClusterTolFactor = 1e-8;

}  // namespace

Eigen::MatrixXd normalized_adjacency(const Graph& g) {
    const int n = g.num_nodes();
    Eigen::VectorXd inv_sqrt_deg(n);
    for (int v = 0; v < n; ++v) {
        inv_sqrt_deg(v) = 1.0 / std::sqrt(static_cast<double>(g.degree(v) + 1));
    }
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int v = 0; v < n; ++v) a(v, v) = inv_sqrt_deg(v) * inv_sqrt_deg(v);
    for (const auto& [u, v] : g.edges()) {
        const double w = inv_sqrt_deg(u) * inv_sqrt_deg(v);
        a(u, v) = w;
        a(v, u) = w;
    }
    return a;
}

SpectralBasis spectral_decomposition(const Graph& g) {
    const int n = g.num_nodes();
    const Eigen::MatrixXd laplacian =
        Eigen::MatrixXd::Identity(n, n) - normalized_adjacency(g);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian);
    if (solver.info() != Eigen::Success) {
        throw NumericError("spectral_decomposition: eigensolver failed to converge on " +
                           std::to_string(n) + "-node graph");
    }

    SpectralBasis basis;
    basis.eigenvalues = solver.eigenvalues();
    basis.eigenvectors = solver.eigenvectors();

    // Fix the sign: first entry with magnitude > 1e-9 positive.
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            const double x = basis.eigenvectors(i, k);
            if (std::abs(x) > 1e-9) {
                if (x < 0.0) basis.eigenvectors.col(k) *= -1.0;
                break;
            }
        }
    }

    const double scale = (n > 0) ? std::max(basis.eigenvalues(n - 1), 1.0) : 1.0;
    basis.zero_tolerance = kZeroTolFactor * scale;
    basis.trivial_count = 0;
    while (basis.trivial_count < n &&
           basis.eigenvalues(basis.trivial_count) < basis.zero_tolerance) {
        ++basis.trivial_count;
    }
    return basis;
}

PESelection select_pe_modes(const SpectralBasis& basis, int k) {
    const int n = static_cast<int>(basis.eigenvalues.size());
    if (k <= 0) throw ConfigError("positional encoding dimension must be positive");
    const int available = n - basis.trivial_count;
    if (k > available) {
        throw ConfigError("insufficient spectrum: requested " + std::to_string(k) +
                          " positional dimensions but only " + std::to_string(available) +
                          " nontrivial modes exist");
    }
    PESelection sel;
    sel.start = basis.trivial_count;
    sel.count = k;
    const double scale = std::max(basis.eigenvalues(n - 1), 1.0);
    const double cluster_tol = kClusterTolFactor * scale;
    // Extend across a degenerate cluster straddling the cutoff; within a full
    // cluster the retained subspace is rotation-invariant, a partial one is not.
    while (sel.start + sel.count < n &&
           basis.eigenvalues(sel.start + sel.count) -
                   basis.eigenvalues(sel.start + sel.count - 1) <
               cluster_tol) {
        ++sel.count;
        sel.extended = true;
    }
    return sel;
}

LapPE lappe(const SpectralBasis& basis, int k) {
    const PESelection sel = select_pe_modes(basis, k);
    LapPE pe;
    pe.requested_k = k;
    pe.k = sel.count;
    pe.cutoff_extended = sel.extended;
    pe.coordinates = basis.eigenvectors.middleCols(sel.start, sel.count);
    return pe;
}

LapPE lappe(const Graph& g, int k) { return lappe(spectral_decomposition(g), k); }

Eigen::MatrixXd propagate(const Graph& g, const Eigen::MatrixXd& h0, int steps) {
    if (h0.rows() != g.num_nodes()) {
        throw InputError("propagate: feature rows (" + std::to_string(h0.rows()) +
                         ") do not match node count (" + std::to_string(g.num_nodes()) + ")");
    }
    if (steps < 0) throw InputError("propagate: negative step count");
    const Eigen::MatrixXd a = normalized_adjacency(g);
    Eigen::MatrixXd h = h0;
    for (int t = 0; t < steps; ++t) h = a * h;
    return h;
}

double projection_residual(const Eigen::VectorXd& y, const SpectralBasis& basis, int k) {
    if (y.size() != basis.eigenvectors.rows()) {
        throw InputError("projection_residual: vector length does not match basis");
    }
    const PESelection sel = select_pe_modes(basis, k);
    const auto span = basis.eigenvectors.middleCols(sel.start, sel.count);
    const Eigen::VectorXd residual = y - span * (span.transpose() * y);
    return residual.norm();
}

}  // namespace graphgeom
