#include "toric/feasibility.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace toric {

namespace {

Rational dot(const RatVector& a, const RatVector& x) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += a[i] * x[i];
    return s;
}

bool holds(Relation rel, const Rational& value) {
    switch (rel) {
        case Relation::GE: return value >= 0;
        case Relation::EQ: return value == 0;
        case Relation::GT: return value > 0;
    }
    return false;
}

// Working row of the elimination: coefficients over all original variables,
// plus the multipliers expressing it as a combination of the input rows.
struct Row {
    RatVector a;
    Relation rel;
    Rational b;
    RatVector mult;
};

bool is_constant(const Row& r) {
    return std::all_of(r.a.begin(), r.a.end(), [](const Rational& q) { return q == 0; });
}

// Positive rescaling so the first nonzero coefficient has magnitude one.
// Equalities are also sign-normalized.
void normalize(Row& r) {
    auto it = std::find_if(r.a.begin(), r.a.end(), [](const Rational& q) { return q != 0; });
    if (it == r.a.end()) return;
    Rational scale = 1 / abs(*it);
    if (r.rel == Relation::EQ && *it < 0) scale = -scale;
    if (scale == 1) return;
    for (auto& q : r.a) q *= scale;
    r.b *= scale;
    for (auto& q : r.mult) q *= scale;
}

Row combine(const Row& p, const Rational& fp, const Row& q, const Rational& fq) {
    Row out;
    out.a.resize(p.a.size());
    for (std::size_t i = 0; i < p.a.size(); ++i) out.a[i] = fp * p.a[i] + fq * q.a[i];
    out.b = fp * p.b + fq * q.b;
    out.mult.resize(p.mult.size());
    for (std::size_t i = 0; i < p.mult.size(); ++i) out.mult[i] = fp * p.mult[i] + fq * q.mult[i];
    if (p.rel == Relation::EQ && q.rel == Relation::EQ)
        out.rel = Relation::EQ;
    else if (p.rel == Relation::GT || q.rel == Relation::GT)
        out.rel = Relation::GT;
    else
        out.rel = Relation::GE;
    return out;
}

bool ancestors_within(const Row& r, const Row& s, const std::vector<Relation>* original) {
    if (!original) return true;
    for (std::size_t i = 0; i < r.mult.size(); ++i)
        if ((*original)[i] != Relation::EQ && r.mult[i] != 0 && s.mult[i] == 0) return false;
    return true;
}

// r implies s when both have the same normalized coefficients.
bool dominates(const Row& r, const Row& s) {
    return r.b < s.b || (r.b == s.b && (r.rel == Relation::GT || s.rel == Relation::GE));
}

// Pairwise dominance among parallel inequalities; duplicate equalities dropped.
// Under Chernikov's rule a row may only be replaced by one whose inequality
// ancestors are a subset of its own, otherwise the rule can later discard the
// survivor together with the information it carried.
std::vector<Row> prune(std::vector<Row> rows, const std::vector<Relation>* original) {
    std::vector<std::optional<Row>> out;
    std::map<RatVector, std::vector<std::size_t>> ineq;
    std::map<std::pair<RatVector, Rational>, bool> eqs;
    for (auto& r : rows) {
        normalize(r);
        if (r.rel == Relation::EQ) {
            if (eqs.emplace(std::make_pair(r.a, r.b), true).second) out.emplace_back(std::move(r));
            continue;
        }
        auto& group = ineq[r.a];
        bool redundant = false;
        for (auto k : group)
            if (out[k] && dominates(*out[k], r) && ancestors_within(*out[k], r, original)) {
                redundant = true;
                break;
            }
        if (redundant) continue;
        for (auto k : group)
            if (out[k] && dominates(r, *out[k]) && ancestors_within(r, *out[k], original)) out[k].reset();
        group.push_back(out.size());
        out.emplace_back(std::move(r));
    }
    std::vector<Row> kept;
    for (auto& r : out)
        if (r) kept.push_back(std::move(*r));
    return kept;
}

// Returns the violated constant row if any; drops satisfied constant rows.
std::optional<Row> split_constants(std::vector<Row>& rows) {
    std::vector<Row> kept;
    kept.reserve(rows.size());
    for (auto& r : rows) {
        if (!is_constant(r)) {
            kept.push_back(std::move(r));
            continue;
        }
        if (holds(r.rel, r.b)) continue;
        if (r.rel == Relation::EQ && r.b > 0) {
            r.b = -r.b;
            for (auto& q : r.mult) q = -q;
        }
        return r;
    }
    rows = std::move(kept);
    return std::nullopt;
}

std::size_t inequality_ancestors(const Row& r, const std::vector<Relation>& original) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < r.mult.size(); ++i)
        if (r.mult[i] != 0 && original[i] != Relation::EQ) ++count;
    return count;
}

// One elimination step on variable j. fm_steps counts pairing eliminations so
// far and enables Chernikov's rule when `original` is non-null.
std::vector<Row> eliminate_rows(const std::vector<Row>& rows, std::size_t j, std::size_t& fm_steps,
                                const std::vector<Relation>* original) {
    auto pivot = std::find_if(rows.begin(), rows.end(),
                              [j](const Row& r) { return r.rel == Relation::EQ && r.a[j] != 0; });
    std::vector<Row> out;
    if (pivot != rows.end()) {
        const Row& e = *pivot;
        for (const auto& r : rows) {
            if (&r == &e) continue;
            if (r.a[j] == 0) {
                out.push_back(r);
                continue;
            }
            Row s = combine(r, Rational(1), e, -r.a[j] / e.a[j]);
            s.rel = r.rel;
            s.a[j] = 0;
            out.push_back(std::move(s));
        }
        return prune(std::move(out), original);
    }

    ++fm_steps;
    std::vector<const Row*> pos, neg;
    for (const auto& r : rows) {
        if (r.a[j] > 0)
            pos.push_back(&r);
        else if (r.a[j] < 0)
            neg.push_back(&r);
        else
            out.push_back(r);
    }
    for (const Row* p : pos)
        for (const Row* n : neg) {
            Row s = combine(*p, -n->a[j], *n, p->a[j]);
            s.a[j] = 0;
            if (original && inequality_ancestors(s, *original) > fm_steps + 1) continue;
            out.push_back(std::move(s));
        }
    return prune(std::move(out), original);
}

std::vector<Row> initial_rows(const Polyhedron& p) {
    std::vector<Row> rows;
    const auto& cs = p.constraints();
    rows.reserve(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        Row r{cs[i].coefficients, cs[i].relation, cs[i].constant, RatVector(cs.size())};
        r.mult[i] = 1;
        rows.push_back(std::move(r));
    }
    return rows;
}

struct Interval {
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    std::optional<Rational> fixed;

    bool admits(const Rational& v) const {
        if (fixed) return v == *fixed;
        if (lo && (v < *lo || (lo_strict && v == *lo))) return false;
        if (hi && (v > *hi || (hi_strict && v == *hi))) return false;
        return true;
    }

    Rational pick() const {
        if (fixed) return *fixed;
        if (admits(Rational(0))) return 0;
        if (lo && hi) return *lo == *hi ? *lo : Rational((*lo + *hi) / 2);
        if (lo) return lo_strict ? Rational(*lo + 1) : *lo;
        return hi_strict ? Rational(*hi - 1) : *hi;
    }
};

Interval interval_for(const std::vector<Row>& rows, std::size_t j, const RatVector& x) {
    Interval iv;
    for (const auto& r : rows) {
        const Rational& c = r.a[j];
        if (c == 0) continue;
        Rational rest = r.b;
        for (std::size_t i = j + 1; i < r.a.size(); ++i)
            if (r.a[i] != 0) rest += r.a[i] * x[i];
        const Rational bound = -rest / c;
        const bool strict = r.rel == Relation::GT;
        if (r.rel == Relation::EQ) {
            iv.fixed = bound;
        } else if (c > 0) {
            if (!iv.lo || bound > *iv.lo || (bound == *iv.lo && strict)) {
                iv.lo = bound;
                iv.lo_strict = strict;
            }
        } else {
            if (!iv.hi || bound < *iv.hi || (bound == *iv.hi && strict)) {
                iv.hi = bound;
                iv.hi_strict = strict;
            }
        }
    }
    return iv;
}

Certificate infeasible(const Row& contradiction) {
    return Certificate{Certificate::Verdict::Infeasible, contradiction.mult};
}

}  // namespace

bool Constraint::satisfied_by(const RatVector& x) const {
    return holds(relation, dot(coefficients, x) + constant);
}

Polyhedron::Polyhedron(std::size_t ambient_dim, std::vector<Constraint> constraints) : ambient_dim_(ambient_dim) {
    for (auto& c : constraints) add(std::move(c));
}

Polyhedron& Polyhedron::add(Constraint c) {
    if (c.coefficients.size() != ambient_dim_)
        throw std::invalid_argument("constraint length does not match ambient dimension");
    constraints_.push_back(std::move(c));
    return *this;
}

Polyhedron& Polyhedron::add_le(const RatVector& coefficients, const Rational& constant) {
    RatVector neg(coefficients.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -coefficients[i];
    return add(std::move(neg), Relation::GE, -constant);
}

Polyhedron Polyhedron::intersect(const Polyhedron& other) const {
    if (other.ambient_dim_ != ambient_dim_) throw std::invalid_argument("intersect: dimension mismatch");
    Polyhedron out = *this;
    for (const auto& c : other.constraints_) out.add(c);
    return out;
}

bool Polyhedron::contains(const RatVector& x) const {
    if (x.size() != ambient_dim_) return false;
    return std::all_of(constraints_.begin(), constraints_.end(), [&](const Constraint& c) { return c.satisfied_by(x); });
}

bool verify_certificate(const Polyhedron& p, const Certificate& cert) {
    if (cert.feasible()) return p.contains(cert.witness);
    const auto& cs = p.constraints();
    if (cert.witness.size() != cs.size()) return false;
    RatVector combo(p.ambient_dim());
    Rational constant = 0;
    bool strict = false;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        const Rational& y = cert.witness[i];
        if (y == 0) continue;
        if (cs[i].relation != Relation::EQ && y < 0) return false;
        if (cs[i].relation == Relation::GT) strict = true;
        for (std::size_t k = 0; k < combo.size(); ++k) combo[k] += y * cs[i].coefficients[k];
        constant += y * cs[i].constant;
    }
    if (std::any_of(combo.begin(), combo.end(), [](const Rational& q) { return q != 0; })) return false;
    return constant < 0 || (constant == 0 && strict);
}

Certificate is_feasible(const Polyhedron& p) {
    std::vector<Relation> original;
    for (const auto& c : p.constraints()) original.push_back(c.relation);

    std::vector<Row> rows = initial_rows(p);
    if (auto bad = split_constants(rows)) return infeasible(*bad);
    rows = prune(std::move(rows), &original);

    std::vector<std::vector<Row>> stages;
    stages.reserve(p.ambient_dim());
    std::size_t fm_steps = 0;
    for (std::size_t j = 0; j < p.ambient_dim(); ++j) {
        stages.push_back(rows);
        rows = eliminate_rows(rows, j, fm_steps, &original);
        if (auto bad = split_constants(rows)) return infeasible(*bad);
    }

    RatVector x(p.ambient_dim());
    for (std::size_t j = p.ambient_dim(); j-- > 0;) x[j] = interval_for(stages[j], j, x).pick();
    return Certificate{Certificate::Verdict::Feasible, std::move(x)};
}

Polyhedron eliminate(const Polyhedron& p, std::size_t variable_index) {
    if (variable_index >= p.ambient_dim()) throw std::out_of_range("eliminate: variable index out of range");
    std::size_t fm_steps = 0;
    std::vector<Row> rows = eliminate_rows(initial_rows(p), variable_index, fm_steps, nullptr);
    Polyhedron out(p.ambient_dim() - 1);
    for (const auto& r : rows) {
        if (is_constant(r) && holds(r.rel, r.b)) continue;
        RatVector a;
        a.reserve(out.ambient_dim());
        for (std::size_t i = 0; i < r.a.size(); ++i)
            if (i != variable_index) a.push_back(r.a[i]);
        out.add(std::move(a), r.rel, r.b);
    }
    return out;
}

int affine_dimension(const Polyhedron& p) {
    if (!is_feasible(p).feasible()) return -1;
    std::vector<RatVector> implicit;
    for (const auto& c : p.constraints()) {
        if (c.relation == Relation::EQ) {
            implicit.push_back(c.coefficients);
        } else if (c.relation == Relation::GE) {
            Polyhedron probe = p;
            probe.add(c.coefficients, Relation::GT, c.constant);
            if (!is_feasible(probe).feasible()) implicit.push_back(c.coefficients);
        }
    }
    if (implicit.empty()) return static_cast<int>(p.ambient_dim());
    const auto r = rank(RatMatrix::from_rows(p.ambient_dim(), implicit));
    return static_cast<int>(p.ambient_dim() - r);
}

bool is_bounded(const Polyhedron& p) {
    if (!is_feasible(p).feasible()) return true;
    Polyhedron cone(p.ambient_dim());
    for (const auto& c : p.constraints())
        cone.add(c.coefficients, c.relation == Relation::EQ ? Relation::EQ : Relation::GE, Rational(0));
    for (std::size_t j = 0; j < p.ambient_dim(); ++j) {
        for (int sign : {1, -1}) {
            RatVector e(p.ambient_dim());
            e[j] = sign;
            Polyhedron probe = cone;
            probe.add(std::move(e), Relation::GE, Rational(-1));
            if (is_feasible(probe).feasible()) return false;
        }
    }
    return true;
}

Polyhedron cone_system(const std::vector<RatVector>& generators, bool strict, const RatVector& target) {
    const std::size_t k = generators.size();
    Polyhedron sys(k);
    for (const auto& g : generators)
        if (g.size() != target.size()) throw std::invalid_argument("cone generator dimension mismatch");
    for (std::size_t r = 0; r < target.size(); ++r) {
        RatVector row(k);
        for (std::size_t i = 0; i < k; ++i) row[i] = generators[i][r];
        sys.add(std::move(row), Relation::EQ, -target[r]);
    }
    for (std::size_t i = 0; i < k; ++i) {
        RatVector e(k);
        e[i] = 1;
        sys.add(std::move(e), strict ? Relation::GT : Relation::GE, Rational(0));
    }
    return sys;
}

Certificate cone_member(const std::vector<RatVector>& generators, bool strict, const RatVector& target) {
    return is_feasible(cone_system(generators, strict, target));
}

std::vector<RatVector> enumerate_vertices(const Polyhedron& p) {
    const std::size_t n = p.ambient_dim();
    const auto& cs = p.constraints();
    if (n > 4 || cs.size() > 16) throw std::length_error("enumerate_vertices: beyond the test-scale guard");
    std::vector<RatVector> out;
    if (n == 0) {
        if (p.contains({})) out.emplace_back();
        return out;
    }
    if (cs.size() < n) return out;
    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;
    while (true) {
        RatMatrix m(n, n);
        RatVector rhs(n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) m(r, c) = cs[pick[r]].coefficients[c];
            rhs[r] = -cs[pick[r]].constant;
        }
        RatVector x;
        bool unique = false;
        if (solve(m, rhs, x, &unique) && unique && p.contains(x)) out.push_back(std::move(x));

        std::size_t i = n;
        while (i-- > 0 && pick[i] == cs.size() - n + i) {}
        if (i == static_cast<std::size_t>(-1)) break;
        ++pick[i];
        for (std::size_t k = i + 1; k < n; ++k) pick[k] = pick[k - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace toric
