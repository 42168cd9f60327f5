#pragma once

#include <vector>

#include "sar/belief.hpp"
#include "sar/scenario.hpp"
#include "sar/types.hpp"

namespace sar {

// Walks a belief through time along a searcher path. Dense scenarios keep
// a cell-mass vector and push it through the transition rows; particle
// scenarios keep per-particle PNDs and let the stored trajectories carry
// the motion, so advance() is free and a glimpse touches only the
// particles in the searched cell.
class BeliefCursor {
public:
    explicit BeliefCursor(const Scenario& scenario);

    int time() const { return t_; }

    // Move the target model one step (to time() + 1) without searching.
    void advance();

    // Search cell v at the current time: scale its mass by 1 - q(v).
    void glimpse(VertexId v);

    void step(VertexId v) {
        advance();
        glimpse(v);
    }

    double cell_mass(VertexId v) const;
    double total_mass() const { return total_; }  // cells + outside
    double outside_mass() const;

    Belief snapshot() const;

    const Scenario& scenario() const { return *scenario_; }

private:
    const Scenario* scenario_;
    int t_ = 0;
    bool particle_ = false;
    double total_ = 0.0;

    // Dense route.
    std::vector<double> mass_;
    std::vector<double> scratch_;
    double outside_ = 0.0;

    // Particle route.
    std::vector<double> pnd_;
};

}  // namespace sar
