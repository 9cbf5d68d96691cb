#pragma once

#include <vector>

#include "graphgeom/graph.hpp"

namespace graphgeom {

/// Homophily and informativeness summary of a labeled graph.
struct MetricReport {
    double edge_homophily = 0.0;
    double adjusted_homophily = 0.0;
    double label_informativeness = 0.0;
    std::vector<double> class_degree_mass;  // nonnegative, sums to 1
};

/// Fraction of edges whose endpoints share a label. Requires labels and at
/// least one edge.
double edge_homophily(const LabeledGraph& lg);

/// Degree mass per class: sum of member degrees over 2m. Isolated nodes
/// contribute zero mass.
std::vector<double> class_degree_mass(const LabeledGraph& lg);

/// Adjusted homophily: (h_edge - sum_k mass_k^2) / (1 - sum_k mass_k^2).
/// Equals 1 on perfectly homophilous graphs, is negative under systematic
/// heterophily. Throws InputError ("degenerate label distribution") when one
/// class carries all degree mass.
double adjusted_homophily(const LabeledGraph& lg);

/// Label informativeness: mutual information between the ordered endpoint
/// labels of a uniformly sampled edge (both orientations, weight 1/(2m) each),
/// normalized by the endpoint-label entropy. Natural-log entropies internally;
/// the ratio is base-invariant. In [0, 1].
double label_informativeness(const LabeledGraph& lg);

MetricReport metric_report(const LabeledGraph& lg);

/// Finite joint distribution over (X, E, Y) used by the conditional
/// edge-label information criterion. Row-major table p[x][e][y].
struct JointDistribution {
    int nx = 0;
    int ne = 0;
    int ny = 0;
    std::vector<double> p;

    double at(int x, int e, int y) const { return p[(x * ne + e) * ny + y]; }
    double& at(int x, int e, int y) { return p[(x * ne + e) * ny + y]; }

    /// Throws InputError on negative entries, size mismatch, or total mass
    /// away from 1 by more than 1e-12.
    void validate() const;
};

struct ConditionalInformation {
    double h_y_given_x = 0.0;   // H(Y | X)
    double h_y_given_xe = 0.0;  // H(Y | X, E)
    double mutual_information = 0.0;  // I(Y; E | X)
};

/// Exact finite-sum entropies in nats. The mutual information is computed by
/// its own direct sum, so the identity I = H(Y|X) - H(Y|X,E) is a real
/// floating-point check, not a tautology. Zero-probability terms contribute 0.
ConditionalInformation conditional_edge_label_information(const JointDistribution& jd);

}  // namespace graphgeom
