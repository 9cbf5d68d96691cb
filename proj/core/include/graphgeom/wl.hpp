#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "graphgeom/curvature.hpp"
#include "graphgeom/graph.hpp"

namespace graphgeom {

/// Result of 1-WL color refinement.
struct WLColoring {
    std::vector<int> colors;      // stable per-node color ids
    int iterations = 0;           // refinement rounds until the partition stopped changing
    std::map<int, int> histogram; // color id -> count
};

/// Injective signature dictionary. Sharing one interner across the two graphs
/// of a comparison is what makes their histograms comparable; refinement ids
/// are meaningless across separate interners.
class ColorInterner {
public:
    int intern_signature(int own_color, const std::vector<std::pair<int, int>>& neighborhood);
    int intern_attr(double value);
    int intern_init(const std::vector<long long>& key);

private:
    std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> signatures_;
    std::map<double, int> attrs_;
    std::map<std::vector<long long>, int> inits_;
};

/// Iterates color(v) <- id of (color(v), sorted multiset of (neighbor color,
/// edge attribute)) until the partition stabilizes. Edge attributes are
/// optional; when present they must align with g.edges().
WLColoring wl_refine(const Graph& g, const std::vector<int>& init_colors,
                     const EdgeScoreMap* edge_attrs, ColorInterner& interner);
WLColoring wl_refine(const Graph& g, const std::vector<int>& init_colors,
                     const EdgeScoreMap* edge_attrs = nullptr);

/// Non-local edge attribute e(u,v) = |N(u) `intersect` N(v)|.
EdgeScoreMap common_neighbor_attribute(const Graph& g);

enum class WLMode { Plain, Curvature, CommonNeighbor, PositionalEncoding };

struct DistinguishResult {
    bool distinguishable = false;
    int at_iteration = -1;       // first refinement round with differing histograms; 0 = initial colors
    bool pe_cutoff_extended = false;
};

/// Runs shared-dictionary refinement on both graphs under the selected
/// attribute/initialization and reports whether the stable histograms differ.
/// PositionalEncoding mode seeds node colors from the sorted multiset of
/// squared positional-row distances to all other nodes, quantized at 1e-6
/// (sign- and rotation-invariant within fully retained eigenvalue clusters).
DistinguishResult distinguish_detail(const Graph& g1, const Graph& g2, WLMode mode,
                                     int pe_dims = 8);
bool distinguish(const Graph& g1, const Graph& g2, WLMode mode, int pe_dims = 8);

/// 1-WL-equivalent graph pairs bundled for expressivity checks.
struct GraphPair {
    std::string name;
    Graph a;
    Graph b;
    bool common_neighbor_separates = false;  // one side has a triangle, the other does not
};
std::vector<GraphPair> wl_pair_library();

}  // namespace graphgeom
