#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "sar/belief.hpp"
#include "sar/grid.hpp"
#include "sar/sensor.hpp"
#include "sar/types.hpp"

namespace sar {

// One row of a row-stochastic transition: where the mass sitting at a
// source cell goes in one time step. Cell entries plus to_outside sum to 1.
struct SparseRow {
    std::vector<std::pair<VertexId, double>> to_cells;
    double to_outside = 0.0;

    double sum() const;
};

// Transition for a single time step, one row per source vertex. Outside
// mass is absorbing unless an explicit outside_row routes it back.
struct TransitionStep {
    std::vector<SparseRow> rows;
    std::optional<SparseRow> outside_row;
};

// Monte Carlo trajectory ensemble. Each particle carries a probability
// that it has not been detected (PND); cell belief at a time step is the
// sum of PNDs of the particles the cell contains.
struct ParticleEnsemble {
    int count = 0;
    int horizon = 0;                  // trajectories span steps 0..horizon
    std::vector<VertexId> positions;  // count * (horizon + 1), kOutside once off-grid
    std::vector<double> pnd;

    VertexId position(int particle, int t) const {
        return positions[static_cast<std::size_t>(particle) * (horizon + 1) + t];
    }
    VertexId& position(int particle, int t) {
        return positions[static_cast<std::size_t>(particle) * (horizon + 1) + t];
    }

    // Throws InputError on shape mismatch, PND out of [0,1], or initial
    // PND sum away from 1.
    void validate() const;
};

// Stochastic target motion, queried as P(destination | source, t) for time
// steps t >= 1. Three interchangeable forms: stationary target, explicit
// (optionally time-indexed) transition rows, or a particle ensemble whose
// stored trajectories carry the motion.
class MotionModel {
public:
    enum class Kind { identity, transition, particles };

    static MotionModel identity();
    static MotionModel homogeneous(TransitionStep step);
    // steps[t-1] is applied at time t; defined for t in [1, steps.size()].
    static MotionModel time_indexed(std::vector<TransitionStep> steps);
    static MotionModel from_particles(std::shared_ptr<const ParticleEnsemble> ensemble);

    Kind kind() const { return kind_; }
    bool defined_at(int t) const;

    // Throws ConfigError when the model has no rows for time t.
    const TransitionStep& step_at(int t) const;

    const ParticleEnsemble& ensemble() const { return *particles_; }
    std::shared_ptr<const ParticleEnsemble> ensemble_ptr() const { return particles_; }

    int row_count() const;  // vertices covered by transition rows, -1 if n/a

private:
    MotionModel() = default;

    Kind kind_ = Kind::identity;
    bool homogeneous_ = true;
    std::vector<TransitionStep> steps_;
    std::shared_ptr<const ParticleEnsemble> particles_;
};

// A priori belief for time t: mass pushed through the motion model, total
// (cells + outside) preserved. Particle-backed models propagate through
// their stored trajectories instead; calling this with one is a
// configuration error.
Belief propagate(const Belief& belief, const MotionModel& motion, int t);

// Cell mass = sum of PNDs of particles in the cell at time t; outside =
// sum over particles already off-grid.
Belief particles_to_belief(const ParticleEnsemble& ensemble, const Grid& grid, int t);

// Scales the PND of every particle sitting in `cell` at time t by
// 1 - q(cell).
ParticleEnsemble particle_glimpse(const ParticleEnsemble& ensemble, const SensorModel& sensor,
                                  VertexId cell, int t);

namespace detail {
// Shared kernel for propagate() and the planner's incremental belief walk.
void propagate_step(const TransitionStep& step, const std::vector<double>& mass_in,
                    double outside_in, std::vector<double>& mass_out, double& outside_out);
}  // namespace detail

}  // namespace sar
