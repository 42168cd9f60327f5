#pragma once

#include <vector>

#include "sar/scenario.hpp"
#include "sar/types.hpp"

namespace sar {

// Searcher path as a vertex sequence; path[0] is the start vertex and
// consecutive vertices are grid-adjacent. A solution path has exactly
// budget edges.
using Path = std::vector<VertexId>;

// Per-step probability that the target is still undetected, P(D > t), and
// the truncated mean-time-to-detection objective (their sum).
struct ObjectiveTrace {
    std::vector<double> survival;  // survival[t-1] = P(D > t), t = 1..n
    double objective = 0.0;
};

// Throws InputError when the path does not start at the scenario start,
// breaks adjacency, or exceeds the budget.
void validate_path(const Scenario& scenario, const Path& path);

// Simulates the belief forward along the path: motion step, then glimpse
// at the vertex reached, recording the surviving mass after each step.
ObjectiveTrace path_objective(const Scenario& scenario, const Path& path);

// 1 - P(D > T) for a full-budget path.
double detection_probability(const Scenario& scenario, const Path& path);

// P(D = t) for t = 1..T: detection gain q(v_t) * apriori mass at v_t.
std::vector<double> detection_time_distribution(const Scenario& scenario, const Path& path);

// One incremental objective step: parent value plus the new survival term.
inline double objective_to_come(double parent_g, double survival_new) {
    return parent_g + survival_new;
}

}  // namespace sar
