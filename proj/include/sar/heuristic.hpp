#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sar/belief_cursor.hpp"
#include "sar/grid.hpp"
#include "sar/scenario.hpp"
#include "sar/types.hpp"

namespace sar {

// Unweighted shortest-path hop counts from source to every vertex;
// -1 marks unreachable (and blocked) cells. Throws InputError when the
// source is blocked or out of range.
std::vector<std::int32_t> bfs_distances(const Grid& grid, VertexId source);

// All-pairs hop counts, computed once per grid and shared read-only by
// every heuristic evaluation.
class DistanceField {
public:
    explicit DistanceField(const Grid& grid);

    std::int32_t distance(VertexId from, VertexId to) const {
        return dist_[static_cast<std::size_t>(from) * vertex_count_ + to];
    }
    std::span<const std::int32_t> row(VertexId from) const {
        return {dist_.data() + static_cast<std::size_t>(from) * vertex_count_,
                static_cast<std::size_t>(vertex_count_)};
    }

private:
    int vertex_count_;
    std::vector<std::int32_t> dist_;
};

// Admissible lower bound on the objective still to be accrued from a
// state. Solves the relaxed problem where at each future step the searcher
// may inspect any cell reachable within the elapsed slack, ignoring path
// continuity, greedily taking the cell with the largest detection gain
// q(v) * mass (ties broken toward the lowest vertex id). Zero exactly when
// the budget is spent.
double objective_to_go_bound(const Scenario& scenario, const DistanceField& distances,
                             VertexId vertex, const BeliefCursor& belief);

}  // namespace sar
