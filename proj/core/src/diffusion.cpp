#include "graphgeom/diffusion.hpp"

#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "graphgeom/errors.hpp"

namespace graphgeom {

namespace {

double preset_value(const WeightingConfig& cfg, double x) {
    switch (cfg.preset) {
        case WeightingPreset::Exponential:
            return std::exp(cfg.beta * x);
        case WeightingPreset::Sigmoid:
            return 1.0 / (1.0 + std::exp(-cfg.beta * x));
        case WeightingPreset::ShiftedLinear:
            return std::max(0.0, x + cfg.beta);
    }
    return 0.0;
}

// Loop-free GCN edge weight on raw degrees.
double gcn_weight(const Graph& g, int u, int v) {
    return 1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
}

void check_labels(const Graph& g, const std::vector<int>& labels, const char* op) {
    if (static_cast<int>(labels.size()) != g.num_nodes()) {
        throw InputError(std::string(op) + ": labels length does not match node count");
    }
}

}  // namespace

TransitionKernel gcn_kernel(const Graph& g) {
    const int n = g.num_nodes();
    TransitionKernel k;
    k.matrix = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        if (g.neighbors(i).empty()) {
            k.matrix(i, i) = 1.0;  // absorbing
            continue;
        }
        double norm = 0.0;
        for (int j : g.neighbors(i)) norm += gcn_weight(g, i, j);
        for (int j : g.neighbors(i)) k.matrix(i, j) = gcn_weight(g, i, j) / norm;
    }
    return k;
}

std::vector<double> edge_weight_scores(const Graph& g, const EdgeScoreMap& f,
                                       const WeightingConfig& cfg) {
    if (f.scores.size() != g.edges().size()) {
        throw InputError("edge_weight_scores: score map not aligned with edges");
    }
    std::vector<double> x = f.scores;
    if (cfg.normalize_scores && !x.empty()) {
        double mean = 0.0;
        for (double v : x) mean += v;
        mean /= static_cast<double>(x.size());
        double var = 0.0;
        for (double v : x) var += (v - mean) * (v - mean);
        var /= static_cast<double>(x.size());
        const double sd = std::sqrt(var);
        for (double& v : x) v = (sd > 0.0) ? (v - mean) / sd : 0.0;
    }
    std::vector<double> s;
    s.reserve(x.size());
    for (double v : x) {
        const double sv = preset_value(cfg, v);
        if (sv < 0.0 || !std::isfinite(sv)) {
            throw NumericError("edge_weight_scores: weighting produced an invalid score");
        }
        s.push_back(sv);
    }
    return s;
}

TransitionKernel curvature_kernel(const Graph& g, const EdgeScoreMap& f,
                                  const WeightingConfig& cfg) {
    const int n = g.num_nodes();
    const std::vector<double> s = edge_weight_scores(g, f, cfg);

    // Score lookup per directed pair via the edge index.
    Eigen::MatrixXd score = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto& [u, v] = g.edges()[e];
        score(u, v) = s[e];
        score(v, u) = s[e];
    }

    const TransitionKernel baseline = gcn_kernel(g);
    TransitionKernel k;
    k.matrix = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        if (g.neighbors(i).empty()) {
            k.matrix(i, i) = 1.0;
            continue;
        }
        double norm = 0.0;
        for (int j : g.neighbors(i)) norm += gcn_weight(g, i, j) * score(i, j);
        if (norm <= 0.0) {
            // All scores on this row vanished; silently absorbing mass would
            // corrupt mixing comparisons, so fall back to the baseline row.
            k.matrix.row(i) = baseline.matrix.row(i);
            k.fallback_rows.push_back(i);
            continue;
        }
        for (int j : g.neighbors(i)) {
            k.matrix(i, j) = gcn_weight(g, i, j) * score(i, j) / norm;
        }
    }
    return k;
}

double cross_class_mixing(const TransitionKernel& kernel, const std::vector<int>& labels) {
    const auto n = kernel.matrix.rows();
    if (static_cast<Eigen::Index>(labels.size()) != n) {
        throw InputError("cross_class_mixing: labels length does not match kernel");
    }
    double total = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (labels[i] != labels[j]) total += kernel.matrix(i, j);
        }
    }
    return total / static_cast<double>(n);
}

std::vector<double> node_covariance_report(const Graph& g, const std::vector<int>& labels,
                                           const EdgeScoreMap& f, const WeightingConfig& cfg) {
    check_labels(g, labels, "node_covariance_report");
    const std::vector<double> s = edge_weight_scores(g, f, cfg);
    const TransitionKernel p = gcn_kernel(g);

    const int n = g.num_nodes();
    Eigen::MatrixXd score = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto& [u, v] = g.edges()[e];
        score(u, v) = s[e];
        score(v, u) = s[e];
    }

    std::vector<double> cov(n, 0.0);
    for (int i = 0; i < n; ++i) {
        if (g.neighbors(i).empty()) continue;
        double es = 0.0, ed = 0.0, esd = 0.0;
        for (int j : g.neighbors(i)) {
            const double pj = p.matrix(i, j);
            const double d = (labels[i] != labels[j]) ? 1.0 : 0.0;
            es += pj * score(i, j);
            ed += pj * d;
            esd += pj * score(i, j) * d;
        }
        cov[i] = esd - es * ed;
    }
    return cov;
}

double ridge_readout(const Eigen::MatrixXd& features, const std::vector<int>& labels,
                     double reg, const std::vector<bool>& train_mask) {
    const int n = static_cast<int>(features.rows());
    if (static_cast<int>(labels.size()) != n || static_cast<int>(train_mask.size()) != n) {
        throw InputError("ridge_readout: labels/mask length does not match features");
    }
    if (reg <= 0.0) throw InputError("ridge_readout: regularizer must be positive");
    const int c = num_classes(labels);

    std::vector<int> train_idx, test_idx;
    for (int i = 0; i < n; ++i) (train_mask[i] ? train_idx : test_idx).push_back(i);
    if (test_idx.empty()) throw InputError("ridge_readout: empty evaluation set");

    std::vector<int> per_class(c, 0);
    for (int i : train_idx) ++per_class[labels[i]];
    for (int k = 0; k < c; ++k) {
        if (per_class[k] == 0) {
            throw InputError("ridge_readout: class " + std::to_string(k) +
                             " has no training node");
        }
    }

    // Augment with a constant column for the intercept.
    const int d = static_cast<int>(features.cols());
    Eigen::MatrixXd x_train(train_idx.size(), d + 1);
    Eigen::MatrixXd targets(train_idx.size(), c);
    targets.setConstant(-1.0);
    for (std::size_t r = 0; r < train_idx.size(); ++r) {
        x_train.row(r).head(d) = features.row(train_idx[r]);
        x_train(r, d) = 1.0;
        targets(r, labels[train_idx[r]]) = 1.0;
    }

    const Eigen::MatrixXd gram =
        x_train.transpose() * x_train +
        reg * Eigen::MatrixXd::Identity(d + 1, d + 1);
    const Eigen::MatrixXd coef = gram.ldlt().solve(x_train.transpose() * targets);

    int correct = 0;
    for (int i : test_idx) {
        Eigen::RowVectorXd row(d + 1);
        row.head(d) = features.row(i);
        row(d) = 1.0;
        Eigen::RowVectorXd scores = row * coef;
        Eigen::Index best = 0;
        scores.maxCoeff(&best);
        if (static_cast<int>(best) == labels[i]) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(test_idx.size());
}

}  // namespace graphgeom
