#pragma once

#include <memory>
#include <span>
#include <vector>

#include "sar/belief.hpp"
#include "sar/grid.hpp"
#include "sar/motion.hpp"
#include "sar/sensor.hpp"
#include "sar/types.hpp"

namespace sar {

// CSR buckets answering "which particles sit in this cell at this time
// step". Built once per scenario so glimpses and cell-mass queries touch
// only the particles involved.
class ParticleTimeIndex {
public:
    ParticleTimeIndex(const ParticleEnsemble& ensemble, const Grid& grid);

    std::span<const std::int32_t> particles_at(int t, VertexId cell) const;

private:
    int vertex_count_;
    int horizon_;
    std::vector<std::int32_t> offsets_;  // (horizon+1) rows of (V+1) offsets
    std::vector<std::int32_t> ids_;
};

// Immutable problem instance: grid, prior, target motion, sensor, start
// vertex and path budget. Everything the planner and the baselines consume.
class Scenario {
public:
    Scenario(Grid grid, Belief prior, MotionModel motion, SensorModel sensor, VertexId start,
             int budget);

    // Particle-backed scenario; the prior is the ensemble binned at t = 0.
    static Scenario from_particles(Grid grid, std::shared_ptr<const ParticleEnsemble> ensemble,
                                   SensorModel sensor, VertexId start, int budget);

    const Grid& grid() const { return grid_; }
    const Belief& prior() const { return prior_; }
    const MotionModel& motion() const { return motion_; }
    const SensorModel& sensor() const { return sensor_; }
    VertexId start() const { return start_; }
    int budget() const { return budget_; }

    // Null unless the motion model is particle-backed.
    const ParticleTimeIndex* particle_index() const { return particle_index_.get(); }

private:
    Grid grid_;
    Belief prior_;
    MotionModel motion_;
    SensorModel sensor_;
    VertexId start_;
    int budget_;
    std::shared_ptr<const ParticleTimeIndex> particle_index_;
};

}  // namespace sar
