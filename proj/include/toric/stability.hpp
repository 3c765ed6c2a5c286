#pragma once

// Semi-stability oracles for toric and toric hyperkahler quotients.
//
// The numerical route asks whether alpha lies in a cone spanned by +-A e_i over
// the nonvanishing coordinates; the geometric route asks whether the state set
// cut out of the arrangement is nonempty. Both return exact certificates.

#include "toric/arrangement.hpp"
#include "toric/feasibility.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

/// Vanishing status of (z_i, w_i).
///   Z:    z_i != 0, w_i == 0
///   W:    z_i == 0, w_i != 0
///   Zero: z_i == w_i == 0
///   Both: z_i != 0, w_i != 0
enum class Status { Z, W, Zero, Both };

using SupportPattern = std::vector<Status>;

/// Pattern strings use one character per coordinate: z, w, 0, *.
SupportPattern parse_pattern(std::string_view text);
std::string format_pattern(const SupportPattern& p);

/// Toric point with the given support: Z on the support, Zero elsewhere.
SupportPattern toric_pattern(std::size_t d, const std::vector<std::size_t>& support);

struct StabilityVerdict {
    bool semistable = false;
    /// The system whose feasibility was decided, and its certificate.
    Polyhedron system;
    Certificate certificate;
    /// Numerical route only, when semistable: a point x of the solution plane
    /// A x = alpha with x_i >= 0 where w_i = 0 and x_i <= 0 where z_i = 0.
    RatVector solution;

    bool verify() const { return certificate.feasible() == semistable && verify_certificate(system, certificate); }
};

StabilityVerdict toric_semistable_numeric(const TorusData& td, const std::vector<std::size_t>& support);

/// Closed-orbit test: alpha in the strictly positive cone over the support.
/// Throws std::invalid_argument when the support is not semistable.
bool toric_closed_orbit(const TorusData& td, const std::vector<std::size_t>& support);

StabilityVerdict hk_semistable_numeric(const TorusData& td, const SupportPattern& p);

/// Hyperkahler closed-orbit test (strict cone). Throws when p is unstable.
bool hk_closed_orbit(const TorusData& td, const SupportPattern& p);

/// Per coordinate: Z -> H_i^{>=0}, W -> H_i^{<=0}, Zero -> H_i, Both -> no constraint.
Polyhedron state_set(const Arrangement& arr, const SupportPattern& p);

StabilityVerdict hk_semistable_geometric(const Arrangement& arr, const SupportPattern& p);
StabilityVerdict toric_semistable_geometric(const Arrangement& arr, const std::vector<std::size_t>& support);

/// The generators eps(i) * A e_i over coordinates active in the eps chart:
/// eps(i) = +1 with status Z/Both, or eps(i) = -1 with status W/Both.
std::vector<RatVector> chart_generators(const TorusData& td, const SignVector& eps, const SupportPattern& p);

bool chart_semistable(const TorusData& td, const SignVector& eps, const SupportPattern& p);

/// Whether the pattern occurs on the zero level of the complex moment map:
/// some kernel vector of A supported on the Both coordinates is nonzero on all of them.
bool pattern_realizable(const TorusData& td, const SupportPattern& p);

/// Swaps Z and W where eps(i) = -1.
SupportPattern reorient_pattern(const SupportPattern& p, const SignVector& eps);

/// Replaces every Both by Z or W according to the sign of a numerical witness.
/// Requires p semistable; the result is semistable and has a subset of the
/// active chart generators of p for every sign vector.
SupportPattern reduce_both(const TorusData& td, const SupportPattern& p);

/// All patterns over the given alphabet in lexicographic order (first
/// coordinate most significant, alphabet order as given).
std::vector<SupportPattern> all_patterns(std::size_t d, const std::vector<Status>& alphabet);

}  // namespace toric
