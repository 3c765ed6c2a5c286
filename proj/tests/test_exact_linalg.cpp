#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace toric;
using namespace toric::testing;

namespace {

// HNF shape: pivots strictly move right, are positive, entries above a pivot
// lie in [0, pivot), zero rows come last.
bool hnf_shape(const IntMatrix& h) {
    std::size_t last_col = 0;
    bool seen_zero_row = false;
    bool first = true;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        std::size_t c = 0;
        while (c < h.cols() && h(r, c) == 0) ++c;
        if (c == h.cols()) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row) return false;
        if (!first && c <= last_col) return false;
        if (h(r, c) <= 0) return false;
        for (std::size_t above = 0; above < r; ++above)
            if (h(above, c) < 0 || h(above, c) >= h(r, c)) return false;
        last_col = c;
        first = false;
    }
    return true;
}

IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range) {
    std::uniform_int_distribution<int> dist(-range, range);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
    return m;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("-1/2") == Rational(-1, 2));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(parse_rational("+3") == 3);
    CHECK(format_rational(Rational(-1, 2)) == "-1/2");
    CHECK(format_rational(parse_rational("6/3")) == "2");
    for (const char* bad : {"", "1/0", "1/-2", "a", "1.5", "-", "1/", "/2", "1/2/3"})
        CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("hermite normal form") {
    SUBCASE("identity") {
        auto [h, u] = hermite_normal_form(IntMatrix::identity(2));
        CHECK(h == IntMatrix::identity(2));
        CHECK(u == IntMatrix::identity(2));
    }
    SUBCASE("2x2 example") {
        const IntMatrix m = im({{2, 4}, {1, 3}});
        auto [h, u] = hermite_normal_form(m);
        CHECK(u * m == h);
        CHECK(abs(det(to_rational(u))) == 1);
        CHECK(hnf_shape(h));
        // Fully reduced form; [[1,3],[0,2]] spans the same lattice.
        CHECK(h == im({{1, 1}, {0, 2}}));
        const IntMatrix other = im({{1, 3}, {0, 2}});
        for (std::size_t r = 0; r < 2; ++r) {
            CHECK(in_row_lattice(h, other.row(r)));
            CHECK(in_row_lattice(other, h.row(r)));
        }
    }
    SUBCASE("zero row") {
        auto [h, u] = hermite_normal_form(IntMatrix(1, 3));
        CHECK(h.is_zero());
        CHECK(u == IntMatrix::identity(1));
    }
    SUBCASE("random matrices: H = U M, unimodular U, shape, idempotent") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
            const IntMatrix m = random_int_matrix(rng, rows, cols, 6);
            auto [h, u] = hermite_normal_form(m);
            REQUIRE(u * m == h);
            REQUIRE(abs(det(to_rational(u))) == 1);
            REQUIRE(hnf_shape(h));
            CHECK(hermite_normal_form(h).H == h);
            CHECK(hermite_normal_form(m).H == h);
        }
    }
}

TEST_CASE("kernel lattice") {
    SUBCASE("single row [-1, 1, 1]") {
        const IntMatrix m = im({{-1, 1, 1}});
        const IntMatrix k = kernel_lattice(m);
        REQUIRE(k.rows() == 3);
        REQUIRE(k.cols() == 2);
        CHECK((m * k).is_zero());
        CHECK(is_saturated(k));
        CHECK(in_row_lattice(k.transpose(), iv({1, 1, 0})));
        CHECK(in_row_lattice(k.transpose(), iv({1, 0, 1})));
        // Pinned convention: row HNF of the kernel lattice.
        CHECK(k.transpose() == im({{1, 0, 1}, {0, 1, -1}}));
    }
    SUBCASE("identity has trivial kernel") {
        CHECK(kernel_lattice(IntMatrix::identity(3)).cols() == 0);
    }
    SUBCASE("hirzebruch normals") {
        const IntMatrix m = im({{1, 0, -1, 0}, {0, 1, -1, -1}});
        const IntMatrix k = kernel_lattice(m);
        CHECK(k.cols() == 2);
        CHECK((m * k).is_zero());
        CHECK(in_row_lattice(k.transpose(), iv({1, 1, 1, 0})));
        CHECK(in_row_lattice(k.transpose(), iv({0, 1, 0, 1})));
        // The two vectors above also span the whole saturated kernel.
        const IntMatrix given = im({{1, 1, 1, 0}, {0, 1, 0, 1}});
        for (std::size_t c = 0; c < 2; ++c) CHECK(in_row_lattice(given, k.column(c)));
    }
    SUBCASE("random: kernel property, rank and saturation") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 5;
            const IntMatrix m = random_int_matrix(rng, rows, cols, 4);
            const IntMatrix k = kernel_lattice(m);
            REQUIRE(k.rows() == cols);
            CHECK(k.cols() == cols - rank(m));
            CHECK((m * k).is_zero());
            if (k.cols() > 0) {
                CHECK(rank(k) == k.cols());
                CHECK(is_saturated(k));
                // Saturation directly: any kernel vector divided by its content
                // is still in the lattice.
                IntVector v(cols);
                for (std::size_t c = 0; c < k.cols(); ++c)
                    for (std::size_t r = 0; r < cols; ++r) v[r] += (c + 2) * k(r, c);
                Integer g = 0;
                for (const auto& x : v) g = gcd(g, x);
                if (g != 0) {
                    for (auto& x : v) x /= g;
                    CHECK(in_row_lattice(k.transpose(), v));
                }
            }
            CHECK(kernel_lattice(m) == k);
        }
    }
}

TEST_CASE("saturation detects index > 1") {
    CHECK_FALSE(is_saturated(im({{2}, {0}})));
    CHECK(is_saturated(im({{2}, {1}})));
    CHECK_FALSE(is_saturated(im({{1, 1}, {1, -1}})));
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(iv({1, 0})));
    CHECK_FALSE(is_primitive(iv({2, 4})));
    CHECK(is_primitive(iv({-1, -1})));
    CHECK_THROWS_AS(is_primitive(iv({0, 0})), std::invalid_argument);
}

TEST_CASE("rank and determinant") {
    CHECK(det(to_rational(IntMatrix::identity(2))) == 1);
    CHECK(det(to_rational(im({{-1, -1}, {0, -1}}))) == 1);
    CHECK(rank(im({{-1, 1, 1}})) == 1);
    CHECK(det(to_rational(im({{1, 2}, {2, 4}}))) == 0);
    CHECK_THROWS_AS(det(to_rational(im({{1, 2, 3}}))), std::invalid_argument);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 4;
        const IntMatrix m = random_int_matrix(rng, n, n, 5);
        std::vector<IntVector> rows;
        for (std::size_t r = 0; r < n; ++r) rows.push_back(m.row(r));
        CHECK(det(to_rational(m)) == Rational(cofactor_det(rows)));
    }
}
