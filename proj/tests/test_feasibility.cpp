#include "support.hpp"
#include "toric/fixtures.hpp"

#include <doctest.h>

#include <optional>
#include <random>

using namespace toric;
using namespace toric::testing;

namespace {

Polyhedron interval(const char* lo, const char* hi) {
    Polyhedron p(1);
    p.add(rv({"1"}), Relation::GE, -q(lo));
    p.add(rv({"-1"}), Relation::GE, q(hi));
    return p;
}

Polyhedron random_polyhedron(std::mt19937_64& rng, std::size_t n, std::size_t rows, bool allow_strict) {
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> rel(0, allow_strict ? 5 : 4);
    Polyhedron p(n);
    for (std::size_t r = 0; r < rows; ++r) {
        RatVector a(n);
        for (auto& x : a) x = coef(rng);
        const int k = rel(rng);
        const Relation relation = k == 5 ? Relation::GT : (k == 4 ? Relation::EQ : Relation::GE);
        p.add(std::move(a), relation, Rational(coef(rng)));
    }
    return p;
}

// A point x (length n-1 after removing coordinate i) extends to P iff the
// interval of admissible values for the removed coordinate is nonempty.
bool extends(const Polyhedron& p, std::size_t i, const RatVector& x) {
    std::vector<Constraint> slice;
    for (const auto& c : p.constraints()) {
        Rational rest = c.constant;
        for (std::size_t k = 0, j = 0; k < p.ambient_dim(); ++k) {
            if (k == i) continue;
            rest += c.coefficients[k] * x[j++];
        }
        slice.push_back(Constraint{{c.coefficients[i]}, c.relation, rest});
    }
    // 1-D interval analysis.
    bool has_lo = false, has_hi = false, lo_open = false, hi_open = false;
    Rational lo, hi;
    std::optional<Rational> fixed;
    for (const auto& c : slice) {
        const Rational& a = c.coefficients[0];
        if (a == 0) {
            if (c.relation == Relation::GE && c.constant < 0) return false;
            if (c.relation == Relation::GT && c.constant <= 0) return false;
            if (c.relation == Relation::EQ && c.constant != 0) return false;
            continue;
        }
        const Rational root = -c.constant / a;
        const bool open = c.relation == Relation::GT;
        if (c.relation == Relation::EQ) {
            if (fixed && *fixed != root) return false;
            fixed = root;
        } else if (a > 0) {
            if (!has_lo || root > lo || (root == lo && open)) {
                lo = root;
                lo_open = open;
            }
            has_lo = true;
        } else {
            if (!has_hi || root < hi || (root == hi && open)) {
                hi = root;
                hi_open = open;
            }
            has_hi = true;
        }
    }
    if (fixed) {
        if (has_lo && (*fixed < lo || (*fixed == lo && lo_open))) return false;
        if (has_hi && (*fixed > hi || (*fixed == hi && hi_open))) return false;
        return true;
    }
    if (has_lo && has_hi) return lo < hi || (lo == hi && !lo_open && !hi_open);
    return true;
}

Polyhedron hirzebruch_trapezoid() { return chamber(fixtures::hirzebruch(), SignVector::all_positive(4)); }

}  // namespace

TEST_CASE("is_feasible: small systems") {
    SUBCASE("unit interval") {
        const Polyhedron p = interval("0", "1");
        const Certificate c = is_feasible(p);
        CHECK(c.feasible());
        CHECK(p.contains(c.witness));
        CHECK(verify_certificate(p, c));
    }
    SUBCASE("x >= 1 and -x >= 0") {
        Polyhedron p(1);
        p.add(rv({"1"}), Relation::GE, -1);
        p.add(rv({"-1"}), Relation::GE, 0);
        const Certificate c = is_feasible(p);
        CHECK_FALSE(c.feasible());
        REQUIRE(c.witness.size() == 2);
        // Multipliers are unique up to scale: (1, 1).
        CHECK(c.witness[0] == c.witness[1]);
        CHECK(c.witness[0] > 0);
        CHECK(verify_certificate(p, c));
    }
    SUBCASE("strict: x > 0 and -x >= 0") {
        Polyhedron p(1);
        p.add(rv({"1"}), Relation::GT, 0);
        p.add(rv({"-1"}), Relation::GE, 0);
        const Certificate c = is_feasible(p);
        CHECK_FALSE(c.feasible());
        CHECK(verify_certificate(p, c));
    }
    SUBCASE("strict: x > 0 and -x + 1 > 0 picks an interior point") {
        Polyhedron p(1);
        p.add(rv({"1"}), Relation::GT, 0);
        p.add(rv({"-1"}), Relation::GT, 1);
        const Certificate c = is_feasible(p);
        REQUIRE(c.feasible());
        CHECK(c.witness[0] > 0);
        CHECK(c.witness[0] < 1);
    }
    SUBCASE("0 > 0 is infeasible, 0 >= 0 is not") {
        Polyhedron strict(2);
        strict.add(rv({"0", "0"}), Relation::GT, 0);
        CHECK_FALSE(is_feasible(strict).feasible());
        CHECK(verify_certificate(strict, is_feasible(strict)));
        Polyhedron weak(2);
        weak.add(rv({"0", "0"}), Relation::GE, 0);
        CHECK(is_feasible(weak).feasible());
    }
    SUBCASE("equalities with negative multipliers") {
        Polyhedron p(2);
        p.add(rv({"1", "1"}), Relation::EQ, -1);
        p.add(rv({"1", "1"}), Relation::EQ, -2);
        const Certificate c = is_feasible(p);
        CHECK_FALSE(c.feasible());
        CHECK(verify_certificate(p, c));
    }
    SUBCASE("no constraints") {
        const Certificate c = is_feasible(Polyhedron(3));
        CHECK(c.feasible());
        CHECK(c.witness.size() == 3);
    }
    SUBCASE("tampered certificates are rejected") {
        Polyhedron p(1);
        p.add(rv({"1"}), Relation::GE, -1);
        p.add(rv({"-1"}), Relation::GE, 0);
        Certificate bad{Certificate::Verdict::Infeasible, rv({"1", "2"})};
        CHECK_FALSE(verify_certificate(p, bad));
        Certificate neg{Certificate::Verdict::Infeasible, rv({"-1", "-1"})};
        CHECK_FALSE(verify_certificate(p, neg));
        Certificate pt{Certificate::Verdict::Feasible, rv({"0"})};
        CHECK_FALSE(verify_certificate(p, pt));
    }
}

TEST_CASE("eliminate") {
    SUBCASE("x2 from {x1 + x2 >= 0, -x2 >= 0}") {
        Polyhedron p(2);
        p.add(rv({"1", "1"}), Relation::GE, 0);
        p.add(rv({"0", "-1"}), Relation::GE, 0);
        const Polyhedron r = eliminate(p, 1);
        CHECK(r.ambient_dim() == 1);
        for (int num = -20; num <= 20; ++num) {
            const RatVector x{frac(num, 7)};
            CHECK(r.contains(x) == (num >= 0));
            CHECK(r.contains(x) == extends(p, 1, x));
        }
    }
    SUBCASE("empty list") {
        const Polyhedron r = eliminate(Polyhedron(3), 0);
        CHECK(r.ambient_dim() == 2);
        CHECK(r.constraints().empty());
    }
    SUBCASE("x from {x = 0, x >= 1}") {
        Polyhedron p(1);
        p.add(rv({"1"}), Relation::EQ, 0);
        p.add(rv({"1"}), Relation::GE, -1);
        const Polyhedron r = eliminate(p, 0);
        CHECK(r.ambient_dim() == 0);
        REQUIRE_FALSE(r.constraints().empty());
        CHECK_FALSE(r.contains({}));
    }
    SUBCASE("strictness propagates") {
        Polyhedron p(2);
        p.add(rv({"1", "1"}), Relation::GT, 0);
        p.add(rv({"0", "-1"}), Relation::GE, 0);
        const Polyhedron r = eliminate(p, 1);
        CHECK_FALSE(r.contains(rv({"0"})));
        CHECK(r.contains(rv({"1/100"})));
    }
    SUBCASE("random projections agree with interval analysis") {
        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<int> pt(-8, 8);
        for (int trial = 0; trial < 150; ++trial) {
            const std::size_t n = 2 + rng() % 2;
            const Polyhedron p = random_polyhedron(rng, n, 2 + rng() % 5, true);
            const std::size_t i = rng() % n;
            const Polyhedron r = eliminate(p, i);
            for (int s = 0; s < 20; ++s) {
                RatVector x(n - 1);
                for (auto& v : x) v = frac(pt(rng), 2);
                CHECK(r.contains(x) == extends(p, i, x));
            }
        }
    }
}

TEST_CASE("affine_dimension") {
    CHECK(affine_dimension(Polyhedron(2)) == 2);
    Polyhedron line(2);
    line.add(rv({"1", "0"}), Relation::EQ, 0);
    CHECK(affine_dimension(line) == 1);
    CHECK(affine_dimension(hirzebruch_trapezoid()) == 2);
    // Implicit equality: x >= 0 and -x >= 0.
    Polyhedron implicit(2);
    implicit.add(rv({"1", "0"}), Relation::GE, 0);
    implicit.add(rv({"-1", "0"}), Relation::GE, 0);
    implicit.add(rv({"0", "1"}), Relation::GE, 0);
    CHECK(affine_dimension(implicit) == 1);
    Polyhedron empty(1);
    empty.add(rv({"1"}), Relation::GE, -1);
    empty.add(rv({"-1"}), Relation::GE, 0);
    CHECK(affine_dimension(empty) == -1);
    Polyhedron point(2);
    point.add(rv({"1", "0"}), Relation::EQ, -1);
    point.add(rv({"0", "1"}), Relation::EQ, 2);
    CHECK(affine_dimension(point) == 0);
}

TEST_CASE("is_bounded") {
    CHECK(is_bounded(hirzebruch_trapezoid()));
    Polyhedron ray(1);
    ray.add(rv({"1"}), Relation::GE, 0);
    CHECK_FALSE(is_bounded(ray));
    CHECK(is_bounded(interval("1/2", "1")));
    CHECK(is_bounded(interval("1", "0")));  // empty
    CHECK_FALSE(is_bounded(Polyhedron(1)));
    // A strip is unbounded along its direction.
    Polyhedron strip(2);
    strip.add(rv({"1", "0"}), Relation::GE, 0);
    strip.add(rv({"-1", "0"}), Relation::GE, 1);
    CHECK_FALSE(is_bounded(strip));
}

TEST_CASE("cone_member") {
    const std::vector<RatVector> e = {rv({"1", "0"}), rv({"0", "1"})};
    const Certificate a = cone_member(e, false, rv({"3", "2"}));
    REQUIRE(a.feasible());
    CHECK(a.witness == rv({"3", "2"}));
    CHECK(verify_certificate(cone_system(e, false, rv({"3", "2"})), a));

    const std::vector<RatVector> g = {rv({"1", "1"}), rv({"0", "1"})};
    const Certificate b = cone_member(g, false, rv({"3", "2"}));
    CHECK_FALSE(b.feasible());
    CHECK(verify_certificate(cone_system(g, false, rv({"3", "2"})), b));

    const Certificate z = cone_member(g, false, rv({"0", "0"}));
    REQUIRE(z.feasible());
    CHECK(z.witness == rv({"0", "0"}));
    CHECK_FALSE(cone_member(g, true, rv({"0", "0"})).feasible());

    // Strict membership on the boundary of a 1-D cone.
    CHECK_FALSE(cone_member({rv({"1"})}, true, rv({"0"})).feasible());
    CHECK(cone_member({rv({"1"})}, true, rv({"2"})).feasible());
    // No generators: only the origin.
    CHECK(cone_member({}, false, rv({"0"})).feasible());
    CHECK_FALSE(cone_member({}, false, rv({"1"})).feasible());
}

TEST_CASE("enumerate_vertices") {
    CHECK(enumerate_vertices(hirzebruch_trapezoid()) ==
          std::vector<RatVector>{rv({"-1", "-1"}), rv({"-1", "1"}), rv({"0", "1"}), rv({"2", "-1"})});
    CHECK(enumerate_vertices(interval("0", "1")) == std::vector<RatVector>{rv({"0"}), rv({"1"})});
    CHECK(enumerate_vertices(interval("1", "0")).empty());
    CHECK_THROWS_AS(enumerate_vertices(Polyhedron(5)), std::length_error);
    Polyhedron many(1);
    for (int i = 0; i < 17; ++i) many.add(rv({"1"}), Relation::GE, Rational(i));
    CHECK_THROWS_AS(enumerate_vertices(many), std::length_error);
}

TEST_CASE("random polyhedra: certificates and brute-force agreement") {
    std::mt19937_64 rng(99);
    int infeasible = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 3;
        const Polyhedron p = random_polyhedron(rng, n, 1 + rng() % 7, false);
        const Certificate c = is_feasible(p);
        REQUIRE(verify_certificate(p, c));
        CHECK(c.feasible() == brute_force_feasible(p));
        if (!c.feasible()) ++infeasible;
        if (c.feasible() && is_bounded(p)) {
            // Bounded and nonempty: vertices exist and every vertex lies in P.
            const auto vs = enumerate_vertices(p);
            CHECK_FALSE(vs.empty());
            for (const auto& v : vs) CHECK(p.contains(v));
        }
    }
    CHECK(infeasible > 20);

    for (int trial = 0; trial < 300; ++trial) {
        const Polyhedron p = random_polyhedron(rng, 1 + rng() % 3, 1 + rng() % 6, true);
        const Certificate c = is_feasible(p);
        CHECK(verify_certificate(p, c));
    }
}
