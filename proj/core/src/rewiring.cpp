#include "graphgeom/rewiring.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "graphgeom/curvature.hpp"
#include "graphgeom/errors.hpp"
#include "graphgeom/spectral.hpp"

namespace graphgeom {

namespace {

void check_config(const RewiringConfig& cfg) {
    if (!(cfg.prune_fraction > 0.0 && cfg.prune_fraction < 1.0)) {
        throw ConfigError("rewiring: prune fraction must lie in (0, 1)");
    }
    if (cfg.knn_k < 0) throw ConfigError("rewiring: knn_k must be nonnegative");
    if (cfg.max_steps <= 0) throw ConfigError("rewiring: max_steps must be positive");
}

std::vector<Edge> pruned_edges(const Graph& g, const EdgeScoreMap& f, double rho,
                               int* positive_count) {
    std::vector<std::pair<double, Edge>> positive;
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        if (f.scores[e] > 0.0) positive.emplace_back(f.scores[e], g.edges()[e]);
    }
    *positive_count = static_cast<int>(positive.size());
    if (positive.empty()) return {};
    // Score descending, edge lexicographic ascending on ties.
    std::sort(positive.begin(), positive.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    const int count = static_cast<int>(
        std::ceil(rho * static_cast<double>(positive.size())));
    std::vector<Edge> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(positive[i].second);
    std::sort(out.begin(), out.end());  // callers filter by binary search
    return out;
}

std::vector<Edge> knn_additions(const Graph& g, const Eigen::MatrixXd& coords, int k) {
    const int n = g.num_nodes();
    std::set<Edge> added;
    std::vector<std::pair<double, int>> candidates;
    for (int u = 0; u < n; ++u) {
        candidates.clear();
        for (int v = 0; v < n; ++v) {
            if (v == u || g.has_edge(u, v)) continue;
            const double dist2 = (coords.row(u) - coords.row(v)).squaredNorm();
            candidates.emplace_back(dist2, v);
        }
        const int take = std::min<int>(k, static_cast<int>(candidates.size()));
        // Distance ascending, node id ascending on ties.
        std::partial_sort(candidates.begin(), candidates.begin() + take, candidates.end());
        for (int i = 0; i < take; ++i) {
            const int v = candidates[i].second;
            added.insert({std::min(u, v), std::max(u, v)});
        }
    }
    return {added.begin(), added.end()};
}

}  // namespace

double positive_curvature_mass(const Graph& g) {
    const EdgeScoreMap f = forman_curvature(g);
    double mass = 0.0;
    for (double s : f.scores) {
        if (s > 0.0) mass += s;
    }
    return mass;
}

std::pair<Graph, RewireStepRecord> rewire_step(const Graph& g, const RewiringConfig& cfg) {
    check_config(cfg);
    RewireStepRecord rec;

    const EdgeScoreMap scores = forman_curvature(g);
    const std::vector<Edge> to_prune =
        pruned_edges(g, scores, cfg.prune_fraction, &rec.positive_edges);
    rec.pruned = static_cast<int>(to_prune.size());

    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        if (!std::binary_search(to_prune.begin(), to_prune.end(), e)) edges.push_back(e);
    }

    if (cfg.knn_k > 0) {
        // Positional encoding on the step-start graph by default; non-neighbor
        // candidates are also judged against the step-start edge set, so a
        // just-pruned edge may be re-added.
        const Graph pe_source = cfg.lappe_on_pruned
                                    ? build_graph(g.num_nodes(), edges)
                                    : g;
        const LapPE pe = lappe(pe_source, cfg.pe_dims);
        const std::vector<Edge> additions = knn_additions(g, pe.coordinates, cfg.knn_k);
        std::set<Edge> merged(edges.begin(), edges.end());
        for (const Edge& e : additions) {
            if (merged.insert(e).second) ++rec.added;
        }
        edges.assign(merged.begin(), merged.end());
    }

    Graph out = build_graph(g.num_nodes(), edges);
    rec.changed = !(out == g);
    rec.lyapunov = positive_curvature_mass(out);
    return {std::move(out), rec};
}

std::pair<Graph, RewiringReport> rewire_until_stable(const Graph& g,
                                                     const RewiringConfig& cfg) {
    check_config(cfg);
    RewiringReport report;
    report.initial_lyapunov = positive_curvature_mass(g);

    Graph current = g;
    double monitor = report.initial_lyapunov;
    for (int t = 0; t < cfg.max_steps; ++t) {
        auto [next, rec] = rewire_step(current, cfg);
        if (!rec.changed) {
            report.fixed_point_reached = true;
            break;
        }
        rec.monotone_decrease = rec.lyapunov < monitor;
        report.steps.push_back(rec);
        monitor = rec.lyapunov;
        current = std::move(next);
        if (!rec.monotone_decrease) {
            report.monitor_stop = true;
            break;
        }
        if (t == cfg.max_steps - 1) report.hit_max_steps = true;
    }

    if (report.fixed_point_reached) {
        auto [again, rec] = rewire_step(current, cfg);
        report.reapplication_stable = (again == current);
    }
    return {std::move(current), report};
}

}  // namespace graphgeom
