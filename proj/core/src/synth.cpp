#include "graphgeom/synth.hpp"

#include <string>

#include "graphgeom/errors.hpp"
#include "graphgeom/prng.hpp"

namespace graphgeom {

namespace {

void check_spec(const GeneratorSpec& spec) {
    if (spec.nodes_per_class <= 0) throw InputError("generate: nodes_per_class must be positive");
    if (spec.num_classes <= 0) throw InputError("generate: num_classes must be positive");
    const auto& t = spec.edge_probability;
    if (t.rows() != spec.num_classes || t.cols() != spec.num_classes) {
        throw InputError("generate: probability table must be C x C");
    }
    for (int i = 0; i < t.rows(); ++i) {
        for (int j = 0; j < t.cols(); ++j) {
            if (t(i, j) < 0.0 || t(i, j) > 1.0) {
                throw InputError("generate: probabilities must lie in [0, 1]");
            }
            if (t(i, j) != t(j, i)) throw InputError("generate: probability table must be symmetric");
        }
    }
    if (spec.feature_dim < 0) throw InputError("generate: negative feature dimension");
    if (spec.snr < 0.0) throw InputError("generate: negative snr");
}

}  // namespace

LabeledGraph generate(const GeneratorSpec& spec) {
    check_spec(spec);
    const int n = spec.nodes_per_class * spec.num_classes;
    std::vector<int> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = v / spec.nodes_per_class;

    SplitMix64 rng(spec.seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double p = spec.edge_probability(labels[u], labels[v]);
            if (rng.next_double() < p) edges.emplace_back(u, v);
        }
    }

    LabeledGraph lg;
    lg.graph = build_graph(n, edges);
    lg.labels = std::move(labels);
    if (spec.feature_dim > 0) {
        lg.features = gaussian_features(*lg.labels, spec.feature_dim, spec.snr,
                                        derive_seed(spec.seed, 1));
    }
    return lg;
}

Eigen::MatrixXd gaussian_features(const std::vector<int>& labels, int dim, double snr,
                                  std::uint64_t seed) {
    if (dim < 1) throw InputError("gaussian_features: dimension must be at least 1");
    if (snr < 0.0) throw InputError("gaussian_features: negative snr");
    SplitMix64 rng(seed);
    const int n = static_cast<int>(labels.size());
    Eigen::MatrixXd x(n, dim);
    for (int v = 0; v < n; ++v) {
        for (int j = 0; j < dim; ++j) x(v, j) = rng.next_gaussian();
        x(v, labels[v] % dim) += snr;
    }
    return x;
}

Eigen::MatrixXd uniform_table(int num_classes, double p) {
    return Eigen::MatrixXd::Constant(num_classes, num_classes, p);
}

Eigen::MatrixXd sbm_table(int num_classes, double p_in, double p_out) {
    Eigen::MatrixXd t = Eigen::MatrixXd::Constant(num_classes, num_classes, p_out);
    t.diagonal().setConstant(p_in);
    return t;
}

Eigen::MatrixXd matching_table(int num_classes, double p) {
    if (num_classes % 2 != 0) {
        throw InputError("matching_table: deterministic class map needs an even class count");
    }
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(num_classes, num_classes);
    for (int c = 0; c < num_classes; c += 2) {
        t(c, c + 1) = p;
        t(c + 1, c) = p;
    }
    return t;
}

Eigen::MatrixXd involution_table(int num_classes, double p) {
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(num_classes, num_classes);
    const int first_paired = num_classes % 2;  // odd C: class 0 self-matched
    if (first_paired == 1) t(0, 0) = p;
    for (int c = first_paired; c + 1 < num_classes; c += 2) {
        t(c, c + 1) = p;
        t(c + 1, c) = p;
    }
    return t;
}

Eigen::MatrixXd cyclic_table(int num_classes, double p) {
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(num_classes, num_classes);
    for (int c = 0; c < num_classes; ++c) {
        const int next = (c + 1) % num_classes;
        if (next != c) {
            t(c, next) = p;
            t(next, c) = p;
        }
    }
    return t;
}

Graph erdos_renyi(int num_nodes, double p, std::uint64_t seed) {
    if (num_nodes < 0) throw InputError("erdos_renyi: negative node count");
    if (p < 0.0 || p > 1.0) throw InputError("erdos_renyi: probability out of range");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < num_nodes; ++u) {
        for (int v = u + 1; v < num_nodes; ++v) {
            if (rng.next_double() < p) edges.emplace_back(u, v);
        }
    }
    return build_graph(num_nodes, edges);
}

}  // namespace graphgeom
