#include "graphgeom/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "graphgeom/errors.hpp"

namespace graphgeom {

EdgeScoreMap forman_curvature(const Graph& g) {
    EdgeScoreMap f;
    f.scores.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) {
        f.scores.push_back(4.0 - g.degree(u) - g.degree(v));
    }
    return f;
}

Eigen::MatrixXd local_curvature_profile(const Graph& g, const EdgeScoreMap& f) {
    if (f.scores.size() != g.edges().size()) {
        throw InputError("local_curvature_profile: score map has " +
                         std::to_string(f.scores.size()) + " entries for " +
                         std::to_string(g.edges().size()) + " edges");
    }
    const int n = g.num_nodes();
    std::vector<std::vector<double>> incident(n);
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto& [u, v] = g.edges()[e];
        incident[u].push_back(f.scores[e]);
        incident[v].push_back(f.scores[e]);
    }

    Eigen::MatrixXd lcp = Eigen::MatrixXd::Zero(n, 5);
    for (int v = 0; v < n; ++v) {
        auto& vals = incident[v];
        if (vals.empty()) continue;  // isolated: zero row
        std::sort(vals.begin(), vals.end());
        const auto m = vals.size();
        double sum = 0.0;
        for (double x : vals) sum += x;
        const double mean = sum / static_cast<double>(m);
        double var = 0.0;
        for (double x : vals) var += (x - mean) * (x - mean);
        var /= static_cast<double>(m);  // population variance: complete incident multiset
        const double median =
            (m % 2 == 1) ? vals[m / 2] : 0.5 * (vals[m / 2 - 1] + vals[m / 2]);
        lcp(v, 0) = vals.front();
        lcp(v, 1) = vals.back();
        lcp(v, 2) = mean;
        lcp(v, 3) = std::sqrt(var);
        lcp(v, 4) = median;
    }
    return lcp;
}

}  // namespace graphgeom
