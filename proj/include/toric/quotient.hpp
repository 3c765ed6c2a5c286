#pragma once

// Global structure of the toric hyperkahler quotient at level (alpha, 0):
// extended core, compact core, the cotangent-chart covering and the
// complement of a single chart.

#include "toric/arrangement.hpp"
#include "toric/stability.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace toric {

enum class ChamberClass { Empty, Bounded, Unbounded };

const char* to_string(ChamberClass c);

struct CoreComponent {
    SignVector eps;
    Polyhedron chamber;
    ChamberClass classification = ChamberClass::Empty;
    int dimension = -1;

    /// Member of the compact core: nonempty, bounded and full-dimensional.
    bool compact(std::size_t n) const {
        return classification == ChamberClass::Bounded && dimension == static_cast<int>(n);
    }
};

/// Exhaustive sweeps are refused above these sizes unless `force` is set.
struct SweepLimits {
    std::size_t max_core_d = 12;
    std::size_t max_complement_d = 9;
    bool force = false;
};

/// One component per sign vector, ordered by SignVector::from_bits index.
std::vector<CoreComponent> extended_core(const Arrangement& arr, const SweepLimits& limits = {});

/// Sign vectors with nonempty, bounded, full-dimensional chamber.
std::vector<CoreComponent> core(const Arrangement& arr, const SweepLimits& limits = {});

struct CoreEmptyCriterion {
    bool bounded_exists = false;
    std::vector<std::size_t> trivial_k;
    bool agree = false;
};

/// Both sides of "no bounded chamber iff some normal is independent of the
/// others", computed independently; `agree` reports whether they match.
CoreEmptyCriterion core_empty_criterion(const Arrangement& arr, const SweepLimits& limits = {});

struct CoverReport {
    bool covered = false;
    /// Semistable pattern -> first compact chart containing it.
    std::vector<std::pair<SupportPattern, SignVector>> witness;
    /// Semistable patterns rejected by every compact chart.
    std::vector<SupportPattern> counterexamples;
};

/// Sweeps the 3^d patterns over {Z, W, Zero}. Throws std::domain_error
/// ("covering theorem hypothesis violated") when the core is empty.
CoverReport verify_covering(const Arrangement& arr, const SweepLimits& limits = {});

/// Re-checks every witness and counterexample in a report.
bool verify_cover_report(const Arrangement& arr, const CoverReport& report, const SweepLimits& limits = {});

/// For every pattern over {Z, W, Zero} and every compact chart: a state set
/// meeting the chamber implies the chart contains the pattern.
bool adjacency_lemma_check(const Arrangement& arr, const SweepLimits& limits = {});

/// The chart of eps is nonempty iff its chamber is nonempty.
bool verify_density(const Arrangement& arr, const SignVector& eps);

struct ComplementReport {
    SignVector chart_eps;
    std::vector<SupportPattern> excluded_patterns;
    bool all_in_extended_core = true;
    /// Largest state-set dimension over excluded patterns; -1 if none. Not
    /// meaningful when `has_both_patterns` is set.
    int max_state_dim = -1;
    bool has_both_patterns = false;
    /// Nonempty extended-core component -> excluded Both-free patterns in it.
    std::map<SignVector, std::vector<SupportPattern>> component_breakdown;
};

/// Semistable, realizable patterns over {Z, W, Zero, Both} outside the chart
/// of eps. Requires a nonempty chamber for eps.
ComplementReport chart_complement(const Arrangement& arr, const SignVector& eps, const SweepLimits& limits = {});

}  // namespace toric
