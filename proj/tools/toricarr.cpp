// toricarr: stability, core and covering checks for oriented hyperplane
// arrangements.
//
// Exit codes: 0 success, 1 verified-negative result, 2 input error.
// TORICARR_ENUM_GUARD (integer) overrides the largest d accepted by the
// exhaustive sweeps; --force disables the guard.

#include "toric/cli_io.hpp"
#include "toric/random_arrangement.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using toric::Json;

toric::Arrangement load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw toric::InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return toric::parse_arrangement(buf.str());
}

toric::SweepLimits limits_from_env(bool force) {
    toric::SweepLimits limits;
    limits.force = force;
    if (const char* env = std::getenv("TORICARR_ENUM_GUARD")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 0) throw toric::InputError("TORICARR_ENUM_GUARD must be a nonnegative integer");
        limits.max_core_d = static_cast<std::size_t>(v);
        limits.max_complement_d = static_cast<std::size_t>(v);
    }
    return limits;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// Random self-test: numeric and geometric oracles must agree on every
// pattern of seeded random smooth arrangements.
int selftest(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    toric::RandomArrangementOptions opts;
    opts.max_d = 6;
    Json out;
    int disagreements = 0;
    int checked = 0;
    for (int k = 0; k < count; ++k) {
        const auto arr = toric::random_smooth_arrangement(rng, opts);
        const auto td = toric::torus_data(arr);
        for (const auto& p : toric::all_patterns(arr.size(), {toric::Status::Z, toric::Status::W, toric::Status::Zero,
                                                             toric::Status::Both})) {
            ++checked;
            if (toric::hk_semistable_numeric(td, p).semistable != toric::hk_semistable_geometric(arr, p).semistable)
                ++disagreements;
        }
    }
    out["seed"] = seed;
    out["arrangements"] = count;
    out["patterns_checked"] = checked;
    out["disagreements"] = disagreements;
    emit(out);
    return disagreements == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stability, core and covering checks for oriented hyperplane arrangements"};
    app.require_subcommand(1);
    bool force = false;
    std::uint64_t seed = 1;
    app.add_flag("--force", force, "Lift the enumeration guards");
    app.add_option("--seed", seed, "Seed for randomized self-tests");

    std::string file, pattern, chart, output;
    int count = 20;
    auto* check = app.add_subcommand("check", "Regularity and simplicity");
    auto* core = app.add_subcommand("core", "Extended core and compact chambers");
    auto* stability = app.add_subcommand("stability", "Semi-stability of a support pattern");
    auto* cover = app.add_subcommand("cover", "Verify that compact charts cover the quotient");
    auto* density = app.add_subcommand("density", "Chart nonempty iff chamber nonempty, for every sign vector");
    auto* complement = app.add_subcommand("complement", "Patterns outside one chart");
    auto* render = app.add_subcommand("render", "SVG picture of a 1-D or 2-D arrangement");
    auto* report = app.add_subcommand("report", "Full JSON report");
    auto* self = app.add_subcommand("selftest", "Random oracle-agreement self-test");
    for (auto* sub : {check, core, stability, cover, density, complement, render, report})
        sub->add_option("FILE", file, "Arrangement JSON file")->required();
    stability->add_option("--pattern", pattern, "d characters over z, w, 0, *")->required();
    complement->add_option("--chart", chart, "d characters over +, -")->required();
    report->add_option("--chart", chart, "Also report the complement of this chart");
    render->add_option("-o,--output", output, "Output SVG path")->required();
    self->add_option("--count", count, "Number of random arrangements");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (self->parsed()) return selftest(seed, count);

        const auto arr = load(file);
        const auto limits = limits_from_env(force);

        if (check->parsed()) {
            const Json j = toric::check_json(arr);
            emit(j);
            return j["smooth"].get<bool>() ? 0 : 1;
        }
        if (render->parsed()) {
            const std::string svg = toric::render_svg(arr);
            std::ofstream out(output, std::ios::binary);
            if (!out) throw toric::InputError("cannot write '" + output + "'");
            out << svg;
            return 0;
        }
        if (stability->parsed()) {
            const Json j = toric::stability_json(arr, toric::parse_pattern_for(pattern, arr.size()));
            emit(j);
            return j["semistable"].get<bool>() && j["realizable"].get<bool>() ? 0 : 1;
        }
        if (report->parsed()) {
            std::optional<toric::SignVector> eps;
            if (!chart.empty()) eps = toric::parse_sign_vector(chart, arr.size());
            const Json j = toric::build_report(arr, limits, eps);
            emit(j);
            if (!toric::is_smooth(arr)) return 1;
            const Json& cov = j["covering"];
            return cov.is_object() && cov["covered"].is_boolean() && !cov["covered"].get<bool>() ? 1 : 0;
        }
        if (!toric::is_smooth(arr)) throw toric::InputError("arrangement is not smooth");
        if (core->parsed()) {
            emit(toric::core_json(arr, limits));
            return 0;
        }
        if (cover->parsed()) {
            const Json j = toric::cover_json(arr, limits);
            emit(j);
            return j["covered"].get<bool>() ? 0 : 1;
        }
        if (density->parsed()) {
            const Json j = toric::density_json(arr, limits);
            emit(j);
            for (const auto& [eps, ok] : j.items())
                if (!ok.get<bool>()) return 1;
            return 0;
        }
        if (complement->parsed()) {
            const auto eps = toric::parse_sign_vector(chart, arr.size());
            emit(toric::complement_json(toric::chart_complement(arr, eps, limits)));
            return 0;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
