#pragma once

#include <vector>

#include "sar/belief.hpp"
#include "sar/types.hpp"

namespace sar {

// Per-cell glimpse probability: the chance that one visit detects a target
// present in the cell. Glimpses are independent between visits and there
// are no false positives.
class SensorModel {
public:
    explicit SensorModel(std::vector<double> glimpse);

    static SensorModel uniform(int vertex_count, double q);

    double q(VertexId v) const { return glimpse_[static_cast<std::size_t>(v)]; }
    int vertex_count() const { return static_cast<int>(glimpse_.size()); }

private:
    std::vector<double> glimpse_;
};

// Belief after searching cell v: entry v scaled by 1 - q(v), everything
// else untouched.
Belief apply_glimpse(const Belief& belief, const SensorModel& sensor, VertexId v);

}  // namespace sar
