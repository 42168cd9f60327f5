#pragma once

#include <vector>

#include "sar/grid.hpp"
#include "sar/types.hpp"

namespace sar {

// Undetected-target probability mass per cell, plus an absorbing bucket for
// mass that has drifted off the mapped grid. The outside bucket cannot be
// searched but still counts toward the probability of non-detection.
struct Belief {
    std::vector<double> mass;
    double outside = 0.0;

    double total() const;
};

// Uniform mass over unblocked cells, outside = 0.
Belief uniform_belief(const Grid& grid);

// Throws InputError when an entry leaves [0,1] or total mass exceeds 1.
void validate_belief(const Belief& belief, int vertex_count);

}  // namespace sar
