#include "toric/stability.hpp"

#include <stdexcept>

namespace toric {

namespace {

struct SignedGenerators {
    std::vector<RatVector> vectors;
    std::vector<std::size_t> index;
    std::vector<int> sign;

    void add(const TorusData& td, std::size_t i, int s) {
        RatVector g = td.generator(i);
        if (s < 0)
            for (auto& q : g) q = -q;
        vectors.push_back(std::move(g));
        index.push_back(i);
        sign.push_back(s);
    }
};

SignedGenerators pattern_generators(const TorusData& td, const SupportPattern& p) {
    if (p.size() != td.d()) throw std::invalid_argument("pattern length does not match d");
    SignedGenerators gens;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == Status::Z || p[i] == Status::Both) gens.add(td, i, 1);
        if (p[i] == Status::W || p[i] == Status::Both) gens.add(td, i, -1);
    }
    return gens;
}

StabilityVerdict numeric_verdict(const TorusData& td, const SignedGenerators& gens) {
    StabilityVerdict v;
    v.system = cone_system(gens.vectors, false, td.alpha);
    v.certificate = is_feasible(v.system);
    v.semistable = v.certificate.feasible();
    if (v.semistable) {
        v.solution.assign(td.d(), Rational(0));
        for (std::size_t k = 0; k < gens.index.size(); ++k)
            v.solution[gens.index[k]] += gens.sign[k] * v.certificate.witness[k];
    }
    return v;
}

}  // namespace

SupportPattern parse_pattern(std::string_view text) {
    SupportPattern p;
    p.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'z': p.push_back(Status::Z); break;
            case 'w': p.push_back(Status::W); break;
            case '0': p.push_back(Status::Zero); break;
            case '*': p.push_back(Status::Both); break;
            default:
                throw std::invalid_argument("unknown pattern character '" + std::string(1, text[i]) +
                                            "' at position " + std::to_string(i + 1));
        }
    }
    return p;
}

std::string format_pattern(const SupportPattern& p) {
    std::string out;
    for (Status s : p) {
        switch (s) {
            case Status::Z: out.push_back('z'); break;
            case Status::W: out.push_back('w'); break;
            case Status::Zero: out.push_back('0'); break;
            case Status::Both: out.push_back('*'); break;
        }
    }
    return out;
}

SupportPattern toric_pattern(std::size_t d, const std::vector<std::size_t>& support) {
    SupportPattern p(d, Status::Zero);
    for (auto i : support) {
        if (i >= d) throw std::out_of_range("support index out of range");
        p[i] = Status::Z;
    }
    return p;
}

StabilityVerdict toric_semistable_numeric(const TorusData& td, const std::vector<std::size_t>& support) {
    return hk_semistable_numeric(td, toric_pattern(td.d(), support));
}

bool toric_closed_orbit(const TorusData& td, const std::vector<std::size_t>& support) {
    return hk_closed_orbit(td, toric_pattern(td.d(), support));
}

StabilityVerdict hk_semistable_numeric(const TorusData& td, const SupportPattern& p) {
    return numeric_verdict(td, pattern_generators(td, p));
}

bool hk_closed_orbit(const TorusData& td, const SupportPattern& p) {
    const auto gens = pattern_generators(td, p);
    if (!numeric_verdict(td, gens).semistable) throw std::invalid_argument("closed-orbit test on an unstable point");
    return cone_member(gens.vectors, true, td.alpha).feasible();
}

Polyhedron state_set(const Arrangement& arr, const SupportPattern& p) {
    if (p.size() != arr.size()) throw std::invalid_argument("pattern length does not match d");
    Polyhedron st(arr.dim());
    for (std::size_t i = 0; i < p.size(); ++i) {
        const RatVector u = to_rational(arr.normal(i));
        switch (p[i]) {
            case Status::Z: st.add(u, Relation::GE, arr.lift(i)); break;
            case Status::W: st.add_le(u, arr.lift(i)); break;
            case Status::Zero: st.add(u, Relation::EQ, arr.lift(i)); break;
            case Status::Both: break;
        }
    }
    return st;
}

StabilityVerdict hk_semistable_geometric(const Arrangement& arr, const SupportPattern& p) {
    StabilityVerdict v;
    v.system = state_set(arr, p);
    v.certificate = is_feasible(v.system);
    v.semistable = v.certificate.feasible();
    return v;
}

StabilityVerdict toric_semistable_geometric(const Arrangement& arr, const std::vector<std::size_t>& support) {
    return hk_semistable_geometric(arr, toric_pattern(arr.size(), support));
}

std::vector<RatVector> chart_generators(const TorusData& td, const SignVector& eps, const SupportPattern& p) {
    if (p.size() != td.d() || eps.size() != td.d()) throw std::invalid_argument("chart: length mismatch");
    std::vector<RatVector> gens;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const bool active = p[i] == Status::Both || (eps[i] > 0 ? p[i] == Status::Z : p[i] == Status::W);
        if (!active) continue;
        RatVector g = td.generator(i);
        if (eps[i] < 0)
            for (auto& q : g) q = -q;
        gens.push_back(std::move(g));
    }
    return gens;
}

bool chart_semistable(const TorusData& td, const SignVector& eps, const SupportPattern& p) {
    return cone_member(chart_generators(td, eps, p), false, td.alpha).feasible();
}

bool pattern_realizable(const TorusData& td, const SupportPattern& p) {
    if (p.size() != td.d()) throw std::invalid_argument("pattern length does not match d");
    std::vector<std::size_t> both;
    std::vector<RatVector> rows;
    for (std::size_t r = 0; r < td.m; ++r) rows.push_back(td.A.row(r));
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == Status::Both) {
            both.push_back(i);
            continue;
        }
        RatVector e(td.d());
        e[i] = 1;
        rows.push_back(std::move(e));
    }
    if (both.empty()) return true;
    const RatMatrix v = null_space(RatMatrix::from_rows(td.d(), rows));
    for (auto i : both) {
        bool reached = false;
        for (std::size_t c = 0; c < v.cols() && !reached; ++c) reached = v(i, c) != 0;
        if (!reached) return false;
    }
    return true;
}

SupportPattern reorient_pattern(const SupportPattern& p, const SignVector& eps) {
    if (p.size() != eps.size()) throw std::invalid_argument("pattern length does not match sign vector");
    SupportPattern out = p;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (eps[i] > 0) continue;
        if (p[i] == Status::Z)
            out[i] = Status::W;
        else if (p[i] == Status::W)
            out[i] = Status::Z;
    }
    return out;
}

SupportPattern reduce_both(const TorusData& td, const SupportPattern& p) {
    const StabilityVerdict v = hk_semistable_numeric(td, p);
    if (!v.semistable) throw std::invalid_argument("reduce_both requires a semistable pattern");
    SupportPattern out = p;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] == Status::Both) out[i] = v.solution[i] >= 0 ? Status::Z : Status::W;
    return out;
}

std::vector<SupportPattern> all_patterns(std::size_t d, const std::vector<Status>& alphabet) {
    std::vector<SupportPattern> out;
    SupportPattern cur(d, alphabet.front());
    std::vector<std::size_t> digit(d, 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = d;
        while (i-- > 0) {
            if (++digit[i] < alphabet.size()) {
                cur[i] = alphabet[digit[i]];
                break;
            }
            digit[i] = 0;
            cur[i] = alphabet.front();
        }
        if (i == static_cast<std::size_t>(-1)) break;
    }
    return out;
}

}  // namespace toric
