#include "graphgeom/wl.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "graphgeom/errors.hpp"
#include "graphgeom/spectral.hpp"

namespace graphgeom {

int ColorInterner::intern_signature(int own_color,
                                    const std::vector<std::pair<int, int>>& neighborhood) {
    auto [it, inserted] = signatures_.try_emplace({own_color, neighborhood},
                                                  static_cast<int>(signatures_.size()));
    return it->second;
}

int ColorInterner::intern_attr(double value) {
    auto [it, inserted] = attrs_.try_emplace(value, static_cast<int>(attrs_.size()));
    return it->second;
}

int ColorInterner::intern_init(const std::vector<long long>& key) {
    auto [it, inserted] = inits_.try_emplace(key, static_cast<int>(inits_.size()));
    return it->second;
}

namespace {

int distinct_count(const std::vector<int>& colors) {
    return static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
}

std::map<int, int> color_histogram(const std::vector<int>& colors) {
    std::map<int, int> h;
    for (int c : colors) ++h[c];
    return h;
}

// Attr ids aligned with each node's sorted neighbor list; empty without attrs.
std::vector<std::vector<int>> attr_per_neighbor(const Graph& g, const EdgeScoreMap* attrs,
                                                ColorInterner& interner) {
    if (!attrs) return {};
    if (attrs->scores.size() != g.edges().size()) {
        throw InputError("wl_refine: edge attributes not aligned with edges");
    }
    const int n = g.num_nodes();
    std::vector<std::vector<int>> out(n);
    for (int v = 0; v < n; ++v) out[v].resize(g.neighbors(v).size(), 0);
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto& [u, v] = g.edges()[e];
        const int id = interner.intern_attr(attrs->scores[e]);
        const auto& nu = g.neighbors(u);
        const auto& nv = g.neighbors(v);
        out[u][std::lower_bound(nu.begin(), nu.end(), v) - nu.begin()] = id;
        out[v][std::lower_bound(nv.begin(), nv.end(), u) - nv.begin()] = id;
    }
    return out;
}

// One refinement round: color(v) <- id of (color(v), sorted neighbor multiset).
std::vector<int> refine_round(const Graph& g, const std::vector<int>& colors,
                              const std::vector<std::vector<int>>& attr_of,
                              ColorInterner& interner) {
    std::vector<int> next(colors.size());
    std::vector<std::pair<int, int>> neighborhood;
    for (int v = 0; v < g.num_nodes(); ++v) {
        neighborhood.clear();
        const auto& nbrs = g.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            neighborhood.emplace_back(colors[nbrs[i]], attr_of.empty() ? 0 : attr_of[v][i]);
        }
        std::sort(neighborhood.begin(), neighborhood.end());
        next[v] = interner.intern_signature(colors[v], neighborhood);
    }
    return next;
}

std::vector<int> pe_init_colors(const Graph& g, int pe_dims, ColorInterner& interner,
                                bool* extended) {
    const LapPE pe = lappe(g, pe_dims);
    if (extended) *extended = *extended || pe.cutoff_extended;
    const int n = g.num_nodes();
    std::vector<int> init(n);
    std::vector<long long> key;
    for (int v = 0; v < n; ++v) {
        key.clear();
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            const double d2 = (pe.coordinates.row(v) - pe.coordinates.row(u)).squaredNorm();
            key.push_back(std::llround(d2 * 1e6));  // quantize at 1e-6
        }
        std::sort(key.begin(), key.end());
        init[v] = interner.intern_init(key);
    }
    return init;
}

}  // namespace

WLColoring wl_refine(const Graph& g, const std::vector<int>& init_colors,
                     const EdgeScoreMap* edge_attrs, ColorInterner& interner) {
    const int n = g.num_nodes();
    if (static_cast<int>(init_colors.size()) != n) {
        throw InputError("wl_refine: init colors length does not match node count");
    }
    const auto attr_of = attr_per_neighbor(g, edge_attrs, interner);

    WLColoring out;
    out.colors = init_colors;
    int classes = distinct_count(out.colors);
    for (int round = 0; round < n + 1; ++round) {
        std::vector<int> next = refine_round(g, out.colors, attr_of, interner);
        const int next_classes = distinct_count(next);
        out.colors = std::move(next);
        ++out.iterations;
        if (next_classes == classes) break;  // refinement only splits, so this is stability
        classes = next_classes;
    }
    out.histogram = color_histogram(out.colors);
    return out;
}

WLColoring wl_refine(const Graph& g, const std::vector<int>& init_colors,
                     const EdgeScoreMap* edge_attrs) {
    ColorInterner interner;
    return wl_refine(g, init_colors, edge_attrs, interner);
}

EdgeScoreMap common_neighbor_attribute(const Graph& g) {
    EdgeScoreMap out;
    out.scores.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) {
        const auto& nu = g.neighbors(u);
        const auto& nv = g.neighbors(v);
        std::vector<int> common;
        std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                              std::back_inserter(common));
        out.scores.push_back(static_cast<double>(common.size()));
    }
    return out;
}

DistinguishResult distinguish_detail(const Graph& g1, const Graph& g2, WLMode mode,
                                     int pe_dims) {
    DistinguishResult res;
    if (g1.num_nodes() != g2.num_nodes()) {
        res.distinguishable = true;
        res.at_iteration = 0;
        return res;
    }

    ColorInterner interner;
    std::vector<int> colors1(g1.num_nodes(), 0), colors2(g2.num_nodes(), 0);
    EdgeScoreMap f1, f2;
    const EdgeScoreMap* attrs1 = nullptr;
    const EdgeScoreMap* attrs2 = nullptr;
    switch (mode) {
        case WLMode::Plain:
            break;
        case WLMode::Curvature:
            f1 = forman_curvature(g1);
            f2 = forman_curvature(g2);
            attrs1 = &f1;
            attrs2 = &f2;
            break;
        case WLMode::CommonNeighbor:
            f1 = common_neighbor_attribute(g1);
            f2 = common_neighbor_attribute(g2);
            attrs1 = &f1;
            attrs2 = &f2;
            break;
        case WLMode::PositionalEncoding:
            colors1 = pe_init_colors(g1, pe_dims, interner, &res.pe_cutoff_extended);
            colors2 = pe_init_colors(g2, pe_dims, interner, &res.pe_cutoff_extended);
            break;
    }

    const auto attr_of1 = attr_per_neighbor(g1, attrs1, interner);
    const auto attr_of2 = attr_per_neighbor(g2, attrs2, interner);

    // Lockstep refinement under the shared dictionary. Once the histograms
    // differ they differ at every later round, so the first difference decides.
    const int n = g1.num_nodes();
    int classes1 = distinct_count(colors1);
    int classes2 = distinct_count(colors2);
    if (color_histogram(colors1) != color_histogram(colors2)) {
        res.distinguishable = true;
        res.at_iteration = 0;
        return res;
    }
    for (int round = 1; round <= n + 1; ++round) {
        colors1 = refine_round(g1, colors1, attr_of1, interner);
        colors2 = refine_round(g2, colors2, attr_of2, interner);
        if (color_histogram(colors1) != color_histogram(colors2)) {
            res.distinguishable = true;
            res.at_iteration = round;
            return res;
        }
        const int next1 = distinct_count(colors1);
        const int next2 = distinct_count(colors2);
        const bool stable = (next1 == classes1) && (next2 == classes2);
        classes1 = next1;
        classes2 = next2;
        if (stable) break;
    }
    return res;
}

bool distinguish(const Graph& g1, const Graph& g2, WLMode mode, int pe_dims) {
    return distinguish_detail(g1, g2, mode, pe_dims).distinguishable;
}

std::vector<GraphPair> wl_pair_library() {
    std::vector<GraphPair> pairs;
    pairs.push_back({"c6_vs_two_c3", cycle_graph(6),
                     disjoint_union(cycle_graph(3), cycle_graph(3)), true});
    pairs.push_back({"c8_vs_two_c4", cycle_graph(8),
                     disjoint_union(cycle_graph(4), cycle_graph(4)), false});
    pairs.push_back({"c8_vs_c3_c5", cycle_graph(8),
                     disjoint_union(cycle_graph(3), cycle_graph(5)), true});
    pairs.push_back({"petersen_vs_prism5", petersen_graph(), prism_graph(5), false});
    return pairs;
}

}  // namespace graphgeom
