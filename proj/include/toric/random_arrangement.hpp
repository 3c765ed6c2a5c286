#pragma once

// Seeded generators for smooth arrangements, used by the property sweeps.

#include "toric/arrangement.hpp"

#include <cstddef>
#include <random>

namespace toric {

struct RandomArrangementOptions {
    std::size_t min_dim = 1;
    std::size_t max_dim = 3;
    std::size_t max_d = 8;
    /// Lifts are p/q with |p| <= lift_range and q in {1, 2}.
    int lift_range = 6;
    bool require_nonempty_core = false;
};

/// Normals are drawn from the primitive vectors of {-1,0,1}^n and kept only
/// while every independent n-subset stays unimodular; lifts are redrawn until
/// the arrangement is simple. Always returns a smooth arrangement with d > n.
Arrangement random_smooth_arrangement(std::mt19937_64& rng, const RandomArrangementOptions& options = {});

}  // namespace toric
