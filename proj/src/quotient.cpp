#include "toric/quotient.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace toric {

namespace {

void require_smooth(const Arrangement& arr) {
    if (!is_smooth(arr)) throw std::invalid_argument("arrangement is not smooth");
}

void guard(std::size_t d, std::size_t limit, bool force, const char* what) {
    if (d > limit && !force)
        throw std::length_error(std::string(what) + ": d = " + std::to_string(d) + " exceeds the enumeration guard " +
                                std::to_string(limit) + " (use force to override)");
}

std::vector<SignVector> compact_charts(const Arrangement& arr, const SweepLimits& limits) {
    std::vector<SignVector> out;
    for (const auto& c : core(arr, limits)) out.push_back(c.eps);
    return out;
}

SupportPattern full_pattern(const SignVector& eps) {
    SupportPattern p(eps.size());
    for (std::size_t i = 0; i < eps.size(); ++i) p[i] = eps[i] > 0 ? Status::Z : Status::W;
    return p;
}

// Pattern lies in Z_eps: w vanishes where eps = +1, z vanishes where eps = -1.
bool in_component(const SupportPattern& p, const SignVector& eps) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == Status::Both) return false;
        if (eps[i] > 0 && p[i] == Status::W) return false;
        if (eps[i] < 0 && p[i] == Status::Z) return false;
    }
    return true;
}

const std::vector<Status> kNoBoth = {Status::Z, Status::W, Status::Zero};
const std::vector<Status> kAll = {Status::Z, Status::W, Status::Zero, Status::Both};

}  // namespace

const char* to_string(ChamberClass c) {
    switch (c) {
        case ChamberClass::Empty: return "empty";
        case ChamberClass::Bounded: return "bounded";
        case ChamberClass::Unbounded: return "unbounded";
    }
    return "?";
}

std::vector<CoreComponent> extended_core(const Arrangement& arr, const SweepLimits& limits) {
    require_smooth(arr);
    guard(arr.size(), limits.max_core_d, limits.force, "extended_core");
    std::vector<CoreComponent> out;
    const std::uint64_t count = std::uint64_t{1} << arr.size();
    out.reserve(count);
    for (std::uint64_t bits = 0; bits < count; ++bits) {
        CoreComponent c;
        c.eps = SignVector::from_bits(bits, arr.size());
        c.chamber = chamber(arr, c.eps);
        if (is_feasible(c.chamber).feasible()) {
            c.classification = is_bounded(c.chamber) ? ChamberClass::Bounded : ChamberClass::Unbounded;
            c.dimension = affine_dimension(c.chamber);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<CoreComponent> core(const Arrangement& arr, const SweepLimits& limits) {
    auto all = extended_core(arr, limits);
    std::vector<CoreComponent> out;
    for (auto& c : all)
        if (c.compact(arr.dim())) out.push_back(std::move(c));
    return out;
}

CoreEmptyCriterion core_empty_criterion(const Arrangement& arr, const SweepLimits& limits) {
    CoreEmptyCriterion r;
    r.bounded_exists = !core(arr, limits).empty();
    r.trivial_k = trivial_factors(arr);
    r.agree = !r.bounded_exists == !r.trivial_k.empty();
    return r;
}

CoverReport verify_covering(const Arrangement& arr, const SweepLimits& limits) {
    const auto charts = compact_charts(arr, limits);
    if (charts.empty()) throw std::domain_error("covering theorem hypothesis violated: core is empty");
    const TorusData td = torus_data(arr);
    CoverReport report;
    for (const auto& p : all_patterns(arr.size(), kNoBoth)) {
        if (!hk_semistable_numeric(td, p).semistable) continue;
        auto hit = std::find_if(charts.begin(), charts.end(),
                                [&](const SignVector& eps) { return chart_semistable(td, eps, p); });
        if (hit == charts.end())
            report.counterexamples.push_back(p);
        else
            report.witness.emplace_back(p, *hit);
    }
    report.covered = report.counterexamples.empty();
    return report;
}

bool verify_cover_report(const Arrangement& arr, const CoverReport& report, const SweepLimits& limits) {
    const auto charts = compact_charts(arr, limits);
    const TorusData td = torus_data(arr);
    for (const auto& [p, eps] : report.witness) {
        if (std::find(charts.begin(), charts.end(), eps) == charts.end()) return false;
        if (!hk_semistable_numeric(td, p).semistable || !chart_semistable(td, eps, p)) return false;
    }
    for (const auto& p : report.counterexamples) {
        if (!hk_semistable_numeric(td, p).semistable) return false;
        for (const auto& eps : charts)
            if (chart_semistable(td, eps, p)) return false;
    }
    return report.covered == report.counterexamples.empty();
}

bool adjacency_lemma_check(const Arrangement& arr, const SweepLimits& limits) {
    std::vector<CoreComponent> compact = core(arr, limits);
    const TorusData td = torus_data(arr);
    for (const auto& p : all_patterns(arr.size(), kNoBoth)) {
        const Polyhedron st = state_set(arr, p);
        if (!is_feasible(st).feasible()) continue;
        for (const auto& c : compact) {
            if (!is_feasible(st.intersect(c.chamber)).feasible()) continue;
            if (!chart_semistable(td, c.eps, p)) return false;
        }
    }
    return true;
}

bool verify_density(const Arrangement& arr, const SignVector& eps) {
    require_smooth(arr);
    const TorusData td = torus_data(arr);
    const bool chart_nonempty = chart_semistable(td, eps, full_pattern(eps));
    const bool chamber_nonempty = is_feasible(chamber(arr, eps)).feasible();
    return chart_nonempty == chamber_nonempty;
}

ComplementReport chart_complement(const Arrangement& arr, const SignVector& eps, const SweepLimits& limits) {
    require_smooth(arr);
    guard(arr.size(), limits.max_complement_d, limits.force, "chart_complement");
    if (!is_feasible(chamber(arr, eps)).feasible())
        throw std::invalid_argument("chart_complement: chamber " + eps.str() + " is empty");

    std::vector<SignVector> nonempty;
    for (const auto& c : extended_core(arr, {limits.max_core_d, limits.max_complement_d, true}))
        if (c.classification != ChamberClass::Empty) nonempty.push_back(c.eps);

    const TorusData td = torus_data(arr);
    ComplementReport r;
    r.chart_eps = eps;
    for (const auto& p : all_patterns(arr.size(), kAll)) {
        if (!pattern_realizable(td, p)) continue;
        if (!hk_semistable_numeric(td, p).semistable) continue;
        if (chart_semistable(td, eps, p)) continue;
        r.excluded_patterns.push_back(p);
        if (std::find(p.begin(), p.end(), Status::Both) != p.end()) {
            r.all_in_extended_core = false;
            r.has_both_patterns = true;
            continue;
        }
        r.max_state_dim = std::max(r.max_state_dim, affine_dimension(state_set(arr, p)));
        for (const auto& other : nonempty)
            if (in_component(p, other)) r.component_breakdown[other].push_back(p);
    }
    return r;
}

}  // namespace toric
