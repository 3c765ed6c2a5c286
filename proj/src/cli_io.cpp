#include "toric/cli_io.hpp"

#include <set>

namespace toric {

namespace {

Json index_list(const std::vector<std::size_t>& idx) {
    Json out = Json::array();
    for (auto i : idx) out.push_back(i + 1);
    return out;
}

}  // namespace

Arrangement parse_arrangement(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("arrangement file must be a JSON object");
    static const std::set<std::string> known = {"dim", "normals", "lifts", "name"};
    for (const auto& [key, value] : doc.items())
        if (!known.count(key)) throw InputError("unknown key '" + key + "'");
    for (const char* key : {"dim", "normals", "lifts"})
        if (!doc.contains(key)) throw InputError(std::string("missing key '") + key + "'");

    const Json& dim = doc["dim"];
    if (!dim.is_number_integer() || dim.get<long long>() < 1) throw InputError("'dim' must be a positive integer");
    const auto n = static_cast<std::size_t>(dim.get<long long>());

    const Json& normals = doc["normals"];
    if (!normals.is_array()) throw InputError("'normals' must be an array");
    std::vector<IntVector> us;
    for (std::size_t i = 0; i < normals.size(); ++i) {
        const Json& u = normals[i];
        const std::string where = "normal " + std::to_string(i + 1);
        if (!u.is_array() || u.size() != n) throw InputError(where + " must be an array of " + std::to_string(n) + " integers");
        IntVector v;
        for (const auto& x : u) {
            if (!x.is_number_integer()) throw InputError(where + " has a non-integer entry");
            if (x.is_number_unsigned())
                v.emplace_back(std::to_string(x.get<unsigned long long>()));
            else
                v.emplace_back(std::to_string(x.get<long long>()));
        }
        us.push_back(std::move(v));
    }

    const Json& lifts = doc["lifts"];
    if (!lifts.is_array()) throw InputError("'lifts' must be an array");
    if (lifts.size() != us.size()) throw InputError("'lifts' and 'normals' differ in length");
    RatVector ls;
    for (std::size_t i = 0; i < lifts.size(); ++i) {
        const std::string where = "bad lift " + std::to_string(i + 1);
        if (!lifts[i].is_string()) throw InputError(where + ": expected a string \"p\" or \"p/q\"");
        try {
            ls.push_back(parse_rational(lifts[i].get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw InputError(where + ": " + e.what());
        }
    }

    std::string name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw InputError("'name' must be a string");
        name = doc["name"].get<std::string>();
    }
    try {
        return Arrangement(n, std::move(us), std::move(ls), std::move(name));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

std::string serialize_arrangement(const Arrangement& arr) {
    Json doc;
    if (!arr.name().empty()) doc["name"] = arr.name();
    doc["dim"] = arr.dim();
    Json normals = Json::array();
    for (const auto& u : arr.normals()) {
        Json row = Json::array();
        for (const auto& x : u) row.push_back(x.get_si());
        normals.push_back(std::move(row));
    }
    doc["normals"] = std::move(normals);
    doc["lifts"] = vector_json(arr.lifts());
    return doc.dump() + "\n";
}

SignVector parse_sign_vector(std::string_view text, std::size_t d) {
    if (text.size() != d)
        throw InputError("sign vector has " + std::to_string(text.size()) + " characters, expected " + std::to_string(d));
    std::vector<int> s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '+')
            s.push_back(1);
        else if (text[i] == '-')
            s.push_back(-1);
        else
            throw InputError("unknown sign character '" + std::string(1, text[i]) + "' at position " + std::to_string(i + 1));
    }
    return SignVector(std::move(s));
}

SupportPattern parse_pattern_for(std::string_view text, std::size_t d) {
    SupportPattern p;
    try {
        p = parse_pattern(text);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (p.size() != d)
        throw InputError("pattern has " + std::to_string(p.size()) + " characters, expected " + std::to_string(d));
    return p;
}

Json rational_json(const Rational& q) { return format_rational(q); }

Json vector_json(const RatVector& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(format_rational(q));
    return out;
}

Json check_json(const Arrangement& arr) {
    Json out;
    out["regular"] = is_regular(arr);
    out["simple"] = is_simple(arr);
    out["smooth"] = out["regular"].get<bool>() && out["simple"].get<bool>();
    out["trivial_factors"] = index_list(trivial_factors(arr));
    return out;
}

Json torus_json(const TorusData& td) {
    Json out;
    out["m"] = td.m;
    out["alpha"] = vector_json(td.alpha);
    Json basis = Json::array();
    for (std::size_t c = 0; c < td.iota_basis.cols(); ++c) {
        Json col = Json::array();
        for (std::size_t r = 0; r < td.iota_basis.rows(); ++r) col.push_back(td.iota_basis(r, c).get_str());
        basis.push_back(std::move(col));
    }
    out["kernel_basis"] = std::move(basis);
    return out;
}

Json core_json(const Arrangement& arr, const SweepLimits& limits) {
    Json comps = Json::array();
    Json theta = Json::array();
    for (const auto& c : extended_core(arr, limits)) {
        Json j;
        j["eps"] = c.eps.str();
        j["classification"] = to_string(c.classification);
        if (c.classification == ChamberClass::Bounded && arr.dim() <= 4 && arr.size() <= 16) {
            Json vs = Json::array();
            for (const auto& v : enumerate_vertices(c.chamber)) vs.push_back(vector_json(v));
            j["vertices"] = std::move(vs);
        }
        j["dimension"] = c.dimension;
        j["compact"] = c.compact(arr.dim());
        if (c.compact(arr.dim())) theta.push_back(c.eps.str());
        comps.push_back(std::move(j));
    }
    Json out;
    out["components"] = std::move(comps);
    out["theta_cpt"] = theta;
    out["theta_cpt_count"] = theta.size();
    const auto crit = core_empty_criterion(arr, limits);
    Json cj;
    cj["bounded_exists"] = crit.bounded_exists;
    cj["trivial_k"] = index_list(crit.trivial_k);
    cj["agree"] = crit.agree;
    out["empty_core_criterion"] = std::move(cj);
    return out;
}

Json stability_json(const Arrangement& arr, const SupportPattern& p) {
    const TorusData td = torus_data(arr);
    const StabilityVerdict numeric = hk_semistable_numeric(td, p);
    const StabilityVerdict geometric = hk_semistable_geometric(arr, p);
    Json out;
    out["pattern"] = format_pattern(p);
    out["realizable"] = pattern_realizable(td, p);
    out["semistable"] = numeric.semistable;
    out["witness"] = numeric.semistable ? vector_json(numeric.solution) : Json(nullptr);
    out["state_point"] = geometric.semistable ? vector_json(geometric.certificate.witness) : Json(nullptr);
    out["farkas"] = numeric.semistable ? Json(nullptr) : vector_json(numeric.certificate.witness);
    out["closed_orbit"] = numeric.semistable ? Json(hk_closed_orbit(td, p)) : Json(nullptr);
    out["geometric_agrees"] = numeric.semistable == geometric.semistable;
    out["certificates_verified"] = numeric.verify() && geometric.verify();
    return out;
}

Json cover_json(const Arrangement& arr, const SweepLimits& limits) {
    const CoverReport r = verify_covering(arr, limits);
    Json out;
    out["covered"] = r.covered;
    out["witness_count"] = r.witness.size();
    Json ce = Json::array();
    for (const auto& p : r.counterexamples) ce.push_back(format_pattern(p));
    out["counterexamples"] = std::move(ce);
    Json w;
    for (const auto& [p, eps] : r.witness) w[format_pattern(p)] = eps.str();
    out["witness"] = std::move(w);
    return out;
}

Json density_json(const Arrangement& arr, const SweepLimits& limits) {
    if (arr.size() > limits.max_core_d && !limits.force)
        throw std::length_error("density: d exceeds the enumeration guard (use force to override)");
    Json out = Json::object();
    const std::uint64_t count = std::uint64_t{1} << arr.size();
    for (std::uint64_t bits = 0; bits < count; ++bits) {
        const SignVector eps = SignVector::from_bits(bits, arr.size());
        out[eps.str()] = verify_density(arr, eps);
    }
    return out;
}

Json complement_json(const ComplementReport& r) {
    Json out;
    out["chart"] = r.chart_eps.str();
    Json ex = Json::array();
    for (const auto& p : r.excluded_patterns) ex.push_back(format_pattern(p));
    out["excluded_patterns"] = std::move(ex);
    out["all_in_extended_core"] = r.all_in_extended_core;
    out["has_both_patterns"] = r.has_both_patterns;
    out["max_state_dim"] = r.has_both_patterns ? Json(nullptr) : Json(r.max_state_dim);
    Json br = Json::object();
    for (const auto& [eps, ps] : r.component_breakdown) {
        Json list = Json::array();
        for (const auto& p : ps) list.push_back(format_pattern(p));
        br[eps.str()] = std::move(list);
    }
    out["component_breakdown"] = std::move(br);
    return out;
}

Json build_report(const Arrangement& arr, const SweepLimits& limits, const std::optional<SignVector>& chart) {
    Json out;
    const bool regular = is_regular(arr);
    const bool simple = is_simple(arr);
    out["smooth"] = Json{{"regular", regular}, {"simple", simple}};
    out["torus"] = torus_json(torus_data(arr));
    if (!(regular && simple)) {
        out["core"] = nullptr;
        out["covering"] = nullptr;
        out["density"] = nullptr;
        if (chart) out["complement"] = nullptr;
        return out;
    }
    out["core"] = core_json(arr, limits);
    try {
        out["covering"] = cover_json(arr, limits);
    } catch (const std::domain_error& e) {
        out["covering"] = Json{{"covered", nullptr}, {"witness_count", 0}, {"counterexamples", Json::array()}, {"error", e.what()}};
    }
    out["density"] = density_json(arr, limits);
    if (chart) out["complement"] = complement_json(chart_complement(arr, *chart, limits));
    return out;
}

}  // namespace toric
