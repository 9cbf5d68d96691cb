#include "graphgeom/metrics.hpp"

#include <cmath>
#include <string>

#include "graphgeom/errors.hpp"

namespace graphgeom {

namespace {

constexpr double kDegenerateTol = 1e-12;

void require_edges(const LabeledGraph& lg, const char* op) {
    if (lg.graph.num_edges() == 0) {
        throw InputError(std::string(op) + ": graph has no edges");
    }
}

}  // namespace

double edge_homophily(const LabeledGraph& lg) {
    const auto& y = require_labels(lg);
    require_edges(lg, "edge_homophily");
    int same = 0;
    for (const auto& [u, v] : lg.graph.edges()) same += (y[u] == y[v]);
    return static_cast<double>(same) / lg.graph.num_edges();
}

std::vector<double> class_degree_mass(const LabeledGraph& lg) {
    const auto& y = require_labels(lg);
    require_edges(lg, "class_degree_mass");
    std::vector<double> mass(num_classes(y), 0.0);
    for (int v = 0; v < lg.graph.num_nodes(); ++v) mass[y[v]] += lg.graph.degree(v);
    const double total = 2.0 * lg.graph.num_edges();
    for (double& m : mass) m /= total;
    return mass;
}

double adjusted_homophily(const LabeledGraph& lg) {
    const double h_edge = edge_homophily(lg);
    double sq = 0.0;
    for (double m : class_degree_mass(lg)) sq += m * m;
    const double denom = 1.0 - sq;
    if (denom <= kDegenerateTol) {
        throw InputError("degenerate label distribution: one class carries all degree mass");
    }
    return (h_edge - sq) / denom;
}

double label_informativeness(const LabeledGraph& lg) {
    const auto& y = require_labels(lg);
    require_edges(lg, "label_informativeness");
    const int c = num_classes(y);
    const double w = 1.0 / (2.0 * lg.graph.num_edges());

    // Ordered-endpoint joint: both orientations of every edge, weight 1/(2m).
    // The row marginal then coincides with the degree-weighted class mass.
    std::vector<double> joint(static_cast<std::size_t>(c) * c, 0.0);
    for (const auto& [u, v] : lg.graph.edges()) {
        joint[y[u] * c + y[v]] += w;
        joint[y[v] * c + y[u]] += w;
    }
    std::vector<double> marginal(c, 0.0);
    for (int a = 0; a < c; ++a)
        for (int b = 0; b < c; ++b) marginal[a] += joint[a * c + b];

    double h = 0.0;
    for (int a = 0; a < c; ++a) {
        if (marginal[a] > 0.0) h -= marginal[a] * std::log(marginal[a]);
    }
    if (h <= kDegenerateTol) {
        throw InputError("degenerate label distribution: endpoint-label entropy is zero");
    }

    double mi = 0.0;
    for (int a = 0; a < c; ++a) {
        for (int b = 0; b < c; ++b) {
            const double pab = joint[a * c + b];
            if (pab > 0.0) mi += pab * std::log(pab / (marginal[a] * marginal[b]));
        }
    }
    return mi / h;
}

MetricReport metric_report(const LabeledGraph& lg) {
    MetricReport r;
    r.edge_homophily = edge_homophily(lg);
    r.adjusted_homophily = adjusted_homophily(lg);
    r.label_informativeness = label_informativeness(lg);
    r.class_degree_mass = class_degree_mass(lg);
    return r;
}

void JointDistribution::validate() const {
    if (nx <= 0 || ne <= 0 || ny <= 0) {
        throw InputError("JointDistribution: alphabet sizes must be positive");
    }
    if (p.size() != static_cast<std::size_t>(nx) * ne * ny) {
        throw InputError("JointDistribution: table size does not match alphabets");
    }
    double total = 0.0;
    for (double v : p) {
        if (v < 0.0) throw InputError("JointDistribution: negative entry");
        total += v;
    }
    if (std::abs(total - 1.0) > kDegenerateTol) {
        throw InputError("JointDistribution: entries sum to " + std::to_string(total) +
                         ", expected 1");
    }
}

ConditionalInformation conditional_edge_label_information(const JointDistribution& jd) {
    jd.validate();

    std::vector<double> p_x(jd.nx, 0.0);
    std::vector<double> p_xe(static_cast<std::size_t>(jd.nx) * jd.ne, 0.0);
    std::vector<double> p_xy(static_cast<std::size_t>(jd.nx) * jd.ny, 0.0);
    for (int x = 0; x < jd.nx; ++x) {
        for (int e = 0; e < jd.ne; ++e) {
            for (int y = 0; y < jd.ny; ++y) {
                const double v = jd.at(x, e, y);
                p_x[x] += v;
                p_xe[x * jd.ne + e] += v;
                p_xy[x * jd.ny + y] += v;
            }
        }
    }

    ConditionalInformation out;
    for (int x = 0; x < jd.nx; ++x) {
        for (int y = 0; y < jd.ny; ++y) {
            const double v = p_xy[x * jd.ny + y];
            if (v > 0.0) out.h_y_given_x -= v * std::log(v / p_x[x]);
        }
    }
    for (int x = 0; x < jd.nx; ++x) {
        for (int e = 0; e < jd.ne; ++e) {
            for (int y = 0; y < jd.ny; ++y) {
                const double v = jd.at(x, e, y);
                if (v > 0.0) out.h_y_given_xe -= v * std::log(v / p_xe[x * jd.ne + e]);
            }
        }
    }
    // Direct sum, independent of the two entropies above.
    for (int x = 0; x < jd.nx; ++x) {
        for (int e = 0; e < jd.ne; ++e) {
            for (int y = 0; y < jd.ny; ++y) {
                const double v = jd.at(x, e, y);
                if (v > 0.0) {
                    out.mutual_information +=
                        v * std::log(v * p_x[x] / (p_xe[x * jd.ne + e] * p_xy[x * jd.ny + y]));
                }
            }
        }
    }
    return out;
}

}  // namespace graphgeom
