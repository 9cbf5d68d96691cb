#pragma once

#include <utility>
#include <vector>

#include "graphgeom/graph.hpp"

namespace graphgeom {

/// One rewiring step prunes the top ceil(rho * |E+|) positive-curvature edges
/// (score descending, lexicographic tie-break) and adds, per node, edges to
/// its knn_k nearest non-neighbors in positional-encoding space. Both the
/// pruning scores and the positional encoding are computed on the step-start
/// graph; lappe_on_pruned switches the encoding to the post-prune graph for
/// ablation.
struct RewiringConfig {
    double prune_fraction = 0.02;  // rho in (0, 1)
    int knn_k = 1;
    int pe_dims = 8;
    int max_steps = 200;
    enum class Mode { OneShot, Iterate };
    Mode mode = Mode::OneShot;
    bool lappe_on_pruned = false;
};

struct RewireStepRecord {
    int positive_edges = 0;  // |E_t^+| before pruning
    int pruned = 0;
    int added = 0;
    double lyapunov = 0.0;           // monitor value of the step result
    bool monotone_decrease = false;  // strictly below the previous value
    bool changed = false;            // edge set differs from the step start
};

/// Iteration trace. The monitor is the total positive-curvature mass; it is a
/// surrogate objective that is tracked and reported, never asserted as
/// guaranteed to decrease.
struct RewiringReport {
    std::vector<RewireStepRecord> steps;
    double initial_lyapunov = 0.0;
    bool fixed_point_reached = false;
    bool monitor_stop = false;  // stopped because the monitor failed to strictly decrease
    bool hit_max_steps = false;
    bool reapplication_stable = false;  // fixed point unchanged under one more application
};

/// Lyapunov monitor: sum of scores over positive-curvature edges.
double positive_curvature_mass(const Graph& g);

/// Single application of the rewiring operator. Throws ConfigError when
/// knn_k > 0 and pe_dims exceeds the available spectrum.
std::pair<Graph, RewireStepRecord> rewire_step(const Graph& g, const RewiringConfig& cfg);

/// Iterates rewire_step until the edge set is a fixed point, the monitor
/// fails to strictly decrease, or max_steps is reached. At a fixed point the
/// operator is re-applied once and reapplication_stable records whether the
/// graph stayed put.
std::pair<Graph, RewiringReport> rewire_until_stable(const Graph& g, const RewiringConfig& cfg);

}  // namespace graphgeom
