#pragma once

// The worked arrangements used throughout the tests, the acceptance suite and
// the CLI examples.

#include "toric/arrangement.hpp"

namespace toric::fixtures {

/// Hirzebruch surface: u = (1,0), (0,1), (-1,-1), (0,-1), all lifts 1.
Arrangement hirzebruch();

/// Resolution of C^2/Z_3: n = 1, u = -1, 1, 1, lifts 1, -1/2, 0.
Arrangement a2_resolution();

/// Product with a trivial factor: u = (1,0), (1,0), (0,1), lifts 0, 1, 0.
Arrangement trivial_product();

/// Two compact chambers meeting at a vertex: u = (1,0), (0,1), (-1,-1), (0,-1),
/// lifts 1, 1, 1, 3.
Arrangement projective_plane_pair();

/// Diagonal circle action on H^3: iota = (1,1,1), lift (1,1,1).
TorusData diagonal_circle();

}  // namespace toric::fixtures
