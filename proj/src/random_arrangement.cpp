#include "toric/random_arrangement.hpp"

#include <algorithm>

#include "toric/quotient.hpp"

namespace toric {

namespace {

std::vector<IntVector> primitive_pool(std::size_t n) {
    std::vector<IntVector> pool;
    IntVector v(n, Integer(-1));
    while (true) {
        if (std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; })) pool.push_back(v);
        std::size_t i = 0;
        while (i < n && v[i] == 1) v[i++] = -1;
        if (i == n) break;
        v[i] += 1;
    }
    return pool;
}

// Every n-subset that contains the last vector has determinant 0 or +-1.
bool stays_regular(const std::vector<IntVector>& vs, std::size_t n) {
    if (vs.size() < n) return true;
    const std::size_t last = vs.size() - 1;
    std::vector<std::size_t> pick(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) pick[i] = i;
    while (true) {
        RatMatrix m(n, n);
        for (std::size_t r = 0; r + 1 < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = vs[pick[r]][c];
        for (std::size_t c = 0; c < n; ++c) m(n - 1, c) = vs[last][c];
        const Rational dt = det(m);
        if (dt != 0 && abs(dt) != 1) return false;
        if (n == 1) return true;
        std::size_t i = n - 1;
        while (i-- > 0 && pick[i] == last - (n - 1) + i) {}
        if (i == static_cast<std::size_t>(-1)) return true;
        ++pick[i];
        for (std::size_t k = i + 1; k + 1 < n; ++k) pick[k] = pick[k - 1] + 1;
    }
}

}  // namespace

Arrangement random_smooth_arrangement(std::mt19937_64& rng, const RandomArrangementOptions& options) {
    std::uniform_int_distribution<std::size_t> dim_dist(options.min_dim, options.max_dim);
    std::uniform_int_distribution<int> num_dist(-options.lift_range, options.lift_range);
    std::uniform_int_distribution<int> den_dist(1, 2);
    while (true) {
        const std::size_t n = dim_dist(rng);
        if (options.max_d <= n) continue;
        const std::size_t d = std::uniform_int_distribution<std::size_t>(n + 1, options.max_d)(rng);
        const auto pool = primitive_pool(n);
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);

        std::vector<IntVector> normals;
        while (normals.size() < d) {
            normals.push_back(pool[pick(rng)]);
            if (!stays_regular(normals, n)) normals.pop_back();
        }
        if (rank(IntMatrix::from_columns(n, normals)) != n) continue;

        for (int attempt = 0; attempt < 50; ++attempt) {
            RatVector lifts(d);
            for (auto& q : lifts) {
                q = Rational(num_dist(rng), den_dist(rng));
                q.canonicalize();
            }
            Arrangement arr(n, normals, std::move(lifts));
            if (!is_simple(arr)) continue;
            if (options.require_nonempty_core && core(arr).empty()) break;
            return arr;
        }
    }
}

}  // namespace toric
