#pragma once

// Exact polyhedral feasibility by Fourier-Motzkin elimination with
// strict inequalities and Farkas-style infeasibility certificates.

#include "toric/exact_linalg.hpp"

#include <cstddef>
#include <vector>

namespace toric {

enum class Relation { GE, EQ, GT };

/// <coefficients, x> + constant {>=, =, >} 0
struct Constraint {
    RatVector coefficients;
    Relation relation = Relation::GE;
    Rational constant;

    bool satisfied_by(const RatVector& x) const;
    friend bool operator==(const Constraint&, const Constraint&) = default;
};

class Polyhedron {
public:
    explicit Polyhedron(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}
    Polyhedron(std::size_t ambient_dim, std::vector<Constraint> constraints);

    std::size_t ambient_dim() const { return ambient_dim_; }
    const std::vector<Constraint>& constraints() const { return constraints_; }

    Polyhedron& add(Constraint c);
    Polyhedron& add(RatVector coefficients, Relation relation, Rational constant) {
        return add(Constraint{std::move(coefficients), relation, std::move(constant)});
    }
    /// <coefficients, x> + constant <= 0, stored as a negated GE row.
    Polyhedron& add_le(const RatVector& coefficients, const Rational& constant);

    /// Conjunction of both constraint lists (same ambient dimension).
    Polyhedron intersect(const Polyhedron& other) const;

    bool contains(const RatVector& x) const;

private:
    std::size_t ambient_dim_;
    std::vector<Constraint> constraints_;
};

/// A feasible certificate carries a point of the polyhedron. An infeasible one
/// carries one multiplier per constraint (nonnegative except on EQ rows) whose
/// combination cancels every variable and leaves c >= 0 with c < 0, or 0 > 0.
struct Certificate {
    enum class Verdict { Feasible, Infeasible };
    Verdict verdict = Verdict::Infeasible;
    RatVector witness;

    bool feasible() const { return verdict == Verdict::Feasible; }
};

/// Re-checks a certificate against the system it was issued for, exactly.
bool verify_certificate(const Polyhedron& p, const Certificate& cert);

/// Decides nonemptiness. Variables are eliminated in ascending index order.
Certificate is_feasible(const Polyhedron& p);

/// Projects out one coordinate. The result lives in ambient_dim - 1.
/// Tautological constant rows are dropped; contradictory ones are kept.
Polyhedron eliminate(const Polyhedron& p, std::size_t variable_index);

/// -1 for the empty set, otherwise the dimension of the affine hull.
int affine_dimension(const Polyhedron& p);

/// True iff the recession cone is {0}. Empty polyhedra count as bounded.
bool is_bounded(const Polyhedron& p);

/// The system target = sum c_i g_i, c_i >= 0 (or > 0 when strict), over the
/// coefficient vector c. cone_member's certificate refers to this system.
Polyhedron cone_system(const std::vector<RatVector>& generators, bool strict, const RatVector& target);

/// Membership of target in the (strictly) positive cone of the generators.
/// A feasible witness is the coefficient vector.
Certificate cone_member(const std::vector<RatVector>& generators, bool strict, const RatVector& target);

/// Brute-force basic feasible points. Guarded to ambient_dim <= 4 and at most
/// 16 constraints; throws std::length_error beyond that. Output is sorted.
std::vector<RatVector> enumerate_vertices(const Polyhedron& p);

}  // namespace toric
