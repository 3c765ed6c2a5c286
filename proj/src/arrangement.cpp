#include "toric/arrangement.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

namespace {

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order;
// stops early when fn returns false.
template <class Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return true;
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        if (!fn(static_cast<const std::vector<std::size_t>&>(pick))) return false;
        std::size_t i = k;
        while (i-- > 0 && pick[i] == n - k + i) {}
        if (i == static_cast<std::size_t>(-1)) return true;
        ++pick[i];
        for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

RatMatrix normal_rows(const Arrangement& arr, const std::vector<std::size_t>& subset) {
    RatMatrix m(subset.size(), arr.dim());
    for (std::size_t r = 0; r < subset.size(); ++r)
        for (std::size_t c = 0; c < arr.dim(); ++c) m(r, c) = arr.normal(subset[r])[c];
    return m;
}

RatMatrix select_rows(const RatMatrix& m, const std::vector<std::size_t>& rows) {
    RatMatrix out(rows.size(), m.cols());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(rows[r], c);
    return out;
}

std::vector<std::size_t> first_bijective_coords(const RatMatrix& basis) {
    const std::size_t n = basis.cols();
    std::vector<std::size_t> found;
    for_each_subset(basis.rows(), n, [&](const std::vector<std::size_t>& s) {
        if (det(select_rows(basis, s)) != 0) {
            found = s;
            return false;
        }
        return true;
    });
    if (found.size() != n) throw std::invalid_argument("degenerate projection: no coordinate subset is bijective");
    return found;
}

RatMatrix inverse(const RatMatrix& m) {
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    rref(aug);
    RatMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
    return out;
}

}  // namespace

Arrangement::Arrangement(std::size_t dim, std::vector<IntVector> normals, RatVector lifts, std::string name)
    : dim_(dim), normals_(std::move(normals)), lifts_(std::move(lifts)), name_(std::move(name)) {
    if (normals_.size() != lifts_.size()) throw std::invalid_argument("normals and lifts differ in length");
    for (std::size_t i = 0; i < normals_.size(); ++i) {
        if (normals_[i].size() != dim_)
            throw std::invalid_argument("normal " + std::to_string(i + 1) + " has wrong length");
        const bool zero = std::all_of(normals_[i].begin(), normals_[i].end(), [](const Integer& x) { return x == 0; });
        if (zero || !is_primitive(normals_[i]))
            throw std::invalid_argument("normal " + std::to_string(i + 1) + " not primitive");
    }
    for (auto& q : lifts_) q.canonicalize();
    if (normals_.size() < dim_ || rank(normal_matrix()) != dim_) throw std::invalid_argument("normals do not span");
}

IntMatrix Arrangement::normal_matrix() const { return IntMatrix::from_columns(dim_, normals_); }

Rational Arrangement::evaluate(std::size_t i, const RatVector& x) const {
    Rational s = lifts_[i];
    for (std::size_t k = 0; k < dim_; ++k) s += normals_[i][k] * x[k];
    return s;
}

SignVector::SignVector(std::vector<int> signs) : signs_(std::move(signs)) {
    for (int s : signs_)
        if (s != 1 && s != -1) throw std::invalid_argument("sign vector entries must be +1 or -1");
}

SignVector SignVector::from_bits(std::uint64_t bits, std::size_t d) {
    std::vector<int> s(d);
    for (std::size_t i = 0; i < d; ++i) s[i] = (bits >> i) & 1U ? -1 : 1;
    return SignVector(std::move(s));
}

SignVector SignVector::compose(const SignVector& other) const {
    if (other.size() != size()) throw std::invalid_argument("sign vector length mismatch");
    std::vector<int> s(size());
    for (std::size_t i = 0; i < size(); ++i) s[i] = signs_[i] * other.signs_[i];
    return SignVector(std::move(s));
}

std::string SignVector::str() const {
    std::string out;
    for (int s : signs_) out.push_back(s > 0 ? '+' : '-');
    return out;
}

TorusData make_torus_data(const IntMatrix& iota_basis, const RatVector& lifts) {
    if (iota_basis.rows() != lifts.size()) throw std::invalid_argument("torus data: basis rows must equal d");
    if (rank(iota_basis) != iota_basis.cols()) throw std::invalid_argument("torus data: basis columns are dependent");
    if (!is_saturated(iota_basis)) throw std::invalid_argument("torus data: basis is not saturated");
    TorusData td;
    td.m = iota_basis.cols();
    td.iota_basis = iota_basis;
    td.A = to_rational(iota_basis.transpose());
    td.lifts = lifts;
    td.alpha = td.A * lifts;
    return td;
}

TorusData torus_data(const Arrangement& arr) { return make_torus_data(kernel_lattice(arr.normal_matrix()), arr.lifts()); }

TorusData torus_data(const Arrangement& arr, const IntMatrix& kernel_basis) {
    if (kernel_basis.rows() != arr.size() || kernel_basis.cols() != arr.size() - arr.dim())
        throw std::invalid_argument("torus data: kernel basis must be d x (d - n)");
    if (!(arr.normal_matrix() * kernel_basis).is_zero())
        throw std::invalid_argument("torus data: basis is not in the kernel of the normal map");
    return make_torus_data(kernel_basis, arr.lifts());
}

Arrangement reorient(const Arrangement& arr, const SignVector& eps) {
    if (eps.size() != arr.size()) throw std::invalid_argument("sign vector length mismatch");
    std::vector<IntVector> normals = arr.normals();
    RatVector lifts = arr.lifts();
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (eps[i] > 0) continue;
        for (auto& x : normals[i]) x = -x;
        lifts[i] = -lifts[i];
    }
    return Arrangement(arr.dim(), std::move(normals), std::move(lifts), arr.name());
}

bool is_regular(const Arrangement& arr) {
    return for_each_subset(arr.size(), arr.dim(), [&](const std::vector<std::size_t>& s) {
        const Rational dt = det(normal_rows(arr, s));
        return dt == 0 || abs(dt) == 1;
    });
}

bool is_simple(const Arrangement& arr) {
    // A nonempty intersection of k hyperplanes must have codimension k; for
    // k = n + 1 that is impossible, so any nonempty (n+1)-fold meet fails.
    const std::size_t max_k = std::min(arr.size(), arr.dim() + 1);
    for (std::size_t k = 2; k <= max_k; ++k) {
        const bool ok = for_each_subset(arr.size(), k, [&](const std::vector<std::size_t>& s) {
            RatMatrix m = normal_rows(arr, s);
            RatVector rhs(s.size()), y;
            for (std::size_t r = 0; r < s.size(); ++r) rhs[r] = -arr.lift(s[r]);
            if (!solve(m, rhs, y)) return true;
            return rank(m) == s.size();
        });
        if (!ok) return false;
    }
    return true;
}

bool is_smooth(const Arrangement& arr) { return is_regular(arr) && is_simple(arr); }

Polyhedron chamber(const Arrangement& arr, const SignVector& eps) {
    if (eps.size() != arr.size()) throw std::invalid_argument("sign vector length mismatch");
    Polyhedron p(arr.dim());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        RatVector a(arr.dim());
        for (std::size_t k = 0; k < arr.dim(); ++k) a[k] = eps[i] * arr.normal(i)[k];
        p.add(std::move(a), Relation::GE, eps[i] * arr.lift(i));
    }
    return p;
}

SolutionSpace solution_space(const TorusData& td) {
    SolutionSpace s;
    s.torus = td;
    s.particular = td.lifts;
    s.homogeneous_basis = to_rational(kernel_lattice(td.iota_basis.transpose()));
    s.projection_coords = first_bijective_coords(s.homogeneous_basis);
    return s;
}

Arrangement arrangement_from_quotient(const TorusData& td) {
    if (td.d() <= td.m) throw std::invalid_argument("arrangement_from_quotient requires d > m");
    const SolutionSpace s = solution_space(td);
    const std::size_t n = s.homogeneous_basis.cols();
    // y = x_S - lambda_S parametrizes the plane; x = lambda + K K_S^{-1} y.
    const RatMatrix coords = s.homogeneous_basis * inverse(select_rows(s.homogeneous_basis, s.projection_coords));

    std::vector<IntVector> normals;
    RatVector lifts;
    for (std::size_t i = 0; i < td.d(); ++i) {
        Integer den = 1;
        for (std::size_t k = 0; k < n; ++k) den = lcm(den, coords(i, k).get_den());
        IntVector u(n);
        Integer g = 0;
        for (std::size_t k = 0; k < n; ++k) {
            u[k] = Rational(coords(i, k) * den).get_num();
            g = gcd(g, u[k]);
        }
        if (g == 0) throw std::invalid_argument("degenerate projection: coordinate " + std::to_string(i + 1) + " is constant");
        for (auto& x : u) x /= g;
        normals.push_back(std::move(u));
        lifts.push_back(td.lifts[i] * den / g);
    }
    return Arrangement(n, std::move(normals), std::move(lifts));
}

std::vector<std::size_t> trivial_factors(const Arrangement& arr) {
    std::vector<std::size_t> out;
    const std::size_t full = arr.dim();
    for (std::size_t k = 0; k < arr.size(); ++k) {
        std::vector<IntVector> others;
        for (std::size_t i = 0; i < arr.size(); ++i)
            if (i != k) others.push_back(arr.normal(i));
        const std::size_t r = others.empty() ? 0 : rank(IntMatrix::from_columns(arr.dim(), others));
        if (r < full) out.push_back(k);
    }
    return out;
}

}  // namespace toric
