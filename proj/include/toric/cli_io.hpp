#pragma once

// Arrangement files, JSON reports and SVG rendering.
//
// Arrangement file (UTF-8 JSON object):
//   "dim"     integer n >= 1
//   "normals" array of d arrays of n integers, each primitive
//   "lifts"   array of d strings "p" or "p/q" with q > 0
//   "name"    optional string
// No other keys are accepted. Rationals are always strings, never floats.

#include "toric/arrangement.hpp"
#include "toric/quotient.hpp"
#include "toric/stability.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace toric {

using Json = nlohmann::ordered_json;

/// Malformed or invalid user input; the CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Arrangement parse_arrangement(std::string_view text);
/// Canonical single-line form: name (if any), dim, normals, lifts.
std::string serialize_arrangement(const Arrangement& arr);

/// d characters over {+, -}.
SignVector parse_sign_vector(std::string_view text, std::size_t d);
/// d characters over {z, w, 0, *}.
SupportPattern parse_pattern_for(std::string_view text, std::size_t d);

Json rational_json(const Rational& q);
Json vector_json(const RatVector& v);

Json check_json(const Arrangement& arr);
Json torus_json(const TorusData& td);
Json core_json(const Arrangement& arr, const SweepLimits& limits);
Json stability_json(const Arrangement& arr, const SupportPattern& p);
Json cover_json(const Arrangement& arr, const SweepLimits& limits);
Json density_json(const Arrangement& arr, const SweepLimits& limits);
Json complement_json(const ComplementReport& report);

/// Keys in fixed order: smooth, torus, core, covering, density, complement.
/// Sections that need a smooth arrangement are null otherwise.
Json build_report(const Arrangement& arr, const SweepLimits& limits, const std::optional<SignVector>& chart = {});

/// Deterministic SVG for n = 1 (number line) or n = 2 (lines in the plane).
/// Throws std::invalid_argument("rendering supports n <= 2") otherwise.
std::string render_svg(const Arrangement& arr);

}  // namespace toric
