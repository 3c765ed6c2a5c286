#pragma once

// Shared helpers and independent brute-force oracles for the test suites.
// Nothing here calls the elimination engine unless noted.

#include "toric/arrangement.hpp"
#include "toric/exact_linalg.hpp"
#include "toric/feasibility.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace toric::testing {

inline Rational q(const char* s) { return parse_rational(s); }

/// Canonical p/q; gmpxx leaves two-argument construction unreduced.
inline Rational frac(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline RatVector rv(std::initializer_list<const char*> xs) {
    RatVector out;
    for (const char* x : xs) out.push_back(parse_rational(x));
    return out;
}

inline IntVector iv(std::initializer_list<long> xs) {
    IntVector out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

inline IntMatrix im(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<IntVector> rs;
    std::size_t cols = 0;
    for (const auto& r : rows) {
        rs.push_back(iv(r));
        cols = r.size();
    }
    return IntMatrix::from_rows(cols, rs);
}

inline RatVector ge(std::initializer_list<const char*> xs) { return rv(xs); }

/// Calls fn on every subset of {0..n-1} given as a bitmask.
template <class Fn>
void for_each_mask(std::size_t n, Fn&& fn) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) fn(mask);
}

/// Is v an integer combination of the rows of m? Solved over Q; the lattice
/// membership is exact when the rows of m are independent.
inline bool in_row_lattice(const IntMatrix& m, const IntVector& v) {
    RatVector x;
    if (!solve(to_rational(m.transpose()), to_rational(v), x)) return false;
    for (const auto& c : x)
        if (c.get_den() != 1) return false;
    return true;
}

/// Closed polyhedra (GE/EQ rows only): nonempty iff some minimal face, an
/// affine subspace cut out by at most n tight rows, has a point in P. Each
/// candidate is the particular solution of the tight rows.
inline bool brute_force_feasible(const Polyhedron& p) {
    const std::size_t n = p.ambient_dim();
    const auto& cs = p.constraints();
    bool found = false;
    for_each_mask(cs.size(), [&](std::uint64_t mask) {
        if (found || static_cast<std::size_t>(__builtin_popcountll(mask)) > n) return;
        std::vector<RatVector> rows;
        RatVector rhs;
        for (std::size_t i = 0; i < cs.size(); ++i)
            if (mask >> i & 1) {
                rows.push_back(cs[i].coefficients);
                rhs.push_back(-cs[i].constant);
            }
        RatVector x;
        if (rows.empty()) {
            x.assign(n, Rational(0));
        } else if (!solve(RatMatrix::from_rows(n, rows), rhs, x)) {
            return;
        }
        if (p.contains(x)) found = true;
    });
    return found;
}

/// Simplicity by enumerating every subset of hyperplanes (any size), with
/// nonemptiness decided by Gaussian elimination.
inline bool brute_force_simple(const Arrangement& arr) {
    bool ok = true;
    for_each_mask(arr.size(), [&](std::uint64_t mask) {
        if (!ok || __builtin_popcountll(mask) < 2) return;
        std::vector<RatVector> rows;
        RatVector rhs;
        for (std::size_t i = 0; i < arr.size(); ++i)
            if (mask >> i & 1) {
                rows.push_back(to_rational(arr.normal(i)));
                rhs.push_back(-arr.lift(i));
            }
        RatMatrix m = RatMatrix::from_rows(arr.dim(), rows);
        RatVector x;
        if (solve(m, rhs, x) && rank(m) != rows.size()) ok = false;
    });
    return ok;
}

/// Regularity via cofactor expansion over every n-subset.
inline Integer cofactor_det(const std::vector<IntVector>& rows) {
    const std::size_t n = rows.size();
    if (n == 1) return rows[0][0];
    Integer total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<IntVector> minor;
        for (std::size_t r = 1; r < n; ++r) {
            IntVector row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(rows[r][k]);
            minor.push_back(row);
        }
        const Integer term = rows[0][c] * cofactor_det(minor);
        total += (c % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

inline bool brute_force_regular(const Arrangement& arr) {
    bool ok = true;
    for_each_mask(arr.size(), [&](std::uint64_t mask) {
        if (!ok || static_cast<std::size_t>(__builtin_popcountll(mask)) != arr.dim()) return;
        std::vector<IntVector> rows;
        for (std::size_t i = 0; i < arr.size(); ++i)
            if (mask >> i & 1) rows.push_back(arr.normal(i));
        const Integer dt = cofactor_det(rows);
        if (dt != 0 && abs(dt) != 1) ok = false;
    });
    return ok;
}

}  // namespace toric::testing
