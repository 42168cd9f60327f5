#pragma once

#include <cstdint>

#include "sar/heuristic.hpp"
#include "sar/objective.hpp"
#include "sar/scenario.hpp"

namespace sar {

struct PlannerStats {
    std::uint64_t expansions = 0;
    std::uint64_t pushes = 0;
    std::size_t peak_queue = 0;
    double wall_time_s = 0.0;
    double epsilon = 1.0;
};

struct Plan {
    Path path;
    double objective = 0.0;
    ObjectiveTrace trace;
    PlannerStats stats;
};

// Best-first search over (vertex, partial path, belief) states keyed by
// g + epsilon * h, where h is the admissible relaxed bound. A goal is any
// state whose path length equals the budget; the search stops when one is
// popped, and the returned objective is within the chosen factor of
// optimal. States that cannot beat the best goal seen are never queued.
//
// Throws InputError for epsilon < 1 and InfeasibleError when no
// full-budget walk exists.
Plan plan(const Scenario& scenario, double epsilon);
Plan plan(const Scenario& scenario, double epsilon, const DistanceField& distances);

}  // namespace sar
