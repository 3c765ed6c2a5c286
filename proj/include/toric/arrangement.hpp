#pragma once

// Oriented rational hyperplane arrangements and the torus data they encode.
//
// Hyperplane i is H_i = { x : <u_i, x> + lambda_i = 0 } with primitive integer
// normal u_i. The kernel of the normal map t -> n is the lattice m of the
// subtorus; A has the images of e_i^* in m^* as its columns and alpha = A*lambda.

#include "toric/exact_linalg.hpp"
#include "toric/feasibility.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace toric {

class Arrangement {
public:
    /// Throws std::invalid_argument with "normal i not primitive" (1-based) or
    /// "normals do not span" when the invariants fail.
    Arrangement(std::size_t dim, std::vector<IntVector> normals, RatVector lifts, std::string name = {});

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return normals_.size(); }
    const IntVector& normal(std::size_t i) const { return normals_[i]; }
    const Rational& lift(std::size_t i) const { return lifts_[i]; }
    const std::vector<IntVector>& normals() const { return normals_; }
    const RatVector& lifts() const { return lifts_; }
    const std::string& name() const { return name_; }

    /// The n x d matrix whose columns are the normals.
    IntMatrix normal_matrix() const;

    /// <u_i, x> + lambda_i
    Rational evaluate(std::size_t i, const RatVector& x) const;

    friend bool operator==(const Arrangement& a, const Arrangement& b) {
        return a.dim_ == b.dim_ && a.normals_ == b.normals_ && a.lifts_ == b.lifts_;
    }

private:
    std::size_t dim_;
    std::vector<IntVector> normals_;
    RatVector lifts_;
    std::string name_;
};

class SignVector {
public:
    SignVector() = default;
    /// Entries must be +1 or -1.
    explicit SignVector(std::vector<int> signs);

    static SignVector all_positive(std::size_t d) { return SignVector(std::vector<int>(d, 1)); }
    /// Bit i of `bits` set means sign -1 at position i.
    static SignVector from_bits(std::uint64_t bits, std::size_t d);

    std::size_t size() const { return signs_.size(); }
    int operator[](std::size_t i) const { return signs_[i]; }
    const std::vector<int>& signs() const { return signs_; }

    /// Componentwise product.
    SignVector compose(const SignVector& other) const;
    /// "+-+" style.
    std::string str() const;

    friend bool operator==(const SignVector&, const SignVector&) = default;
    friend auto operator<=>(const SignVector&, const SignVector&) = default;

private:
    std::vector<int> signs_;
};

struct TorusData {
    std::size_t m = 0;
    IntMatrix iota_basis;  // d x m, columns span ker(pi)
    RatMatrix A;           // m x d, transpose of iota_basis
    RatVector alpha;       // A * lifts
    RatVector lifts;       // d entries; the particular solution of A x = alpha

    std::size_t d() const { return lifts.size(); }
    /// Column i of A, the image of e_i^* in m^*.
    RatVector generator(std::size_t i) const { return A.column(i); }
};

/// Torus data with the kernel basis pinned to the row HNF convention.
TorusData torus_data(const Arrangement& arr);

/// Torus data for an explicitly chosen kernel basis (d x (d-n)); the basis must
/// lie in ker(pi), have full column rank and be saturated.
TorusData torus_data(const Arrangement& arr, const IntMatrix& kernel_basis);

/// Torus data given directly by the subtorus embedding and a lift.
TorusData make_torus_data(const IntMatrix& iota_basis, const RatVector& lifts);

Arrangement reorient(const Arrangement& arr, const SignVector& eps);

bool is_regular(const Arrangement& arr);
bool is_simple(const Arrangement& arr);
bool is_smooth(const Arrangement& arr);

/// { x : eps(i) * (<u_i, x> + lambda_i) >= 0 for all i }
Polyhedron chamber(const Arrangement& arr, const SignVector& eps);

struct SolutionSpace {
    TorusData torus;
    RatVector particular;                   // = lifts
    RatMatrix homogeneous_basis;            // d x n, basis of ker A
    std::vector<std::size_t> projection_coords;
};

SolutionSpace solution_space(const TorusData& td);

/// Rebuilds an arrangement by cutting the solution plane with the coordinate
/// hyperplanes and projecting onto the first coordinate subset that is a
/// bijection, with the lift as origin.
Arrangement arrangement_from_quotient(const TorusData& td);

/// Indices k whose normal is not in the span of the remaining normals.
std::vector<std::size_t> trivial_factors(const Arrangement& arr);

}  // namespace toric
