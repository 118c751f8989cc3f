#include "tritile/generators.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace tritile;

namespace {

QuadNum rq(long long n, long long d = 1) { return QuadNum(Rational(n, d)); }
Point rp(long long x, long long y) { return {rq(x), rq(y)}; }

Triangle generic() { return {rp(0, 0), rp(7, 1), rp(2, 5)}; }

std::vector<std::vector<Point>> canonical_tiles(const Tiling& t) {
    std::vector<std::vector<Point>> out;
    for (const Triangle& tr : t.tiles) {
        std::vector<Point> v{tr.v0, tr.v1, tr.v2};
        std::sort(v.begin(), v.end());
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool all_congruent(const Tiling& t) {
    Shape s = shape_of(t.tiles[0]);
    for (const Triangle& tr : t.tiles)
        if (shape_of(tr) != s) return false;
    return true;
}

bool starts_at_origin_on_x_axis(const Tiling& t) {
    if (t.reference.v0 != rp(0, 0)) return false;
    for (const Point& p : {t.reference.v1, t.reference.v2})
        if (p.y.is_zero() && p.x.sign() > 0) return true;
    return false;
}

}  // namespace

TEST_CASE("tile counts per family") {
    for (int n = 1; n <= 8; ++n) CHECK(quadratic(generic(), n).n() == n * n);
    CHECK(biquadratic(1, 2).n() == 5);
    CHECK(biquadratic(2, 3).n() == 13);
    CHECK(biquadratic(5, 7).n() == 74);
    for (int k = 0; k <= 4; ++k) CHECK(hexagonal(k).n() == 3 * (k + 1) * (k + 1));
    CHECK(equilateral_six(Rational(2)).n() == 6);
    CHECK(right_306090_three(Rational(1)).n() == 3);
    CHECK(pythagorean(3, 4, 5).n() == 50);
    CHECK(pythagorean(6, 8, 10).n() == 200);
    CHECK(pythagorean(5, 12, 13).n() == 338);
}

TEST_CASE("quadratic(_, 1) is the triangle itself") {
    Tiling t = quadratic(generic(), 1);
    REQUIRE(t.n() == 1);
    CHECK(canonical_tiles(t)[0] ==
          canonical_tiles(Tiling{generic(), {generic()}})[0]);
}

TEST_CASE("generator domain errors") {
    CHECK_THROWS_AS(quadratic(generic(), 0), std::domain_error);
    CHECK_THROWS_AS(biquadratic(0, 2), std::domain_error);
    CHECK_THROWS_AS(hexagonal(-1), std::domain_error);
    CHECK_THROWS_AS(equilateral_six(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(pythagorean(3, 4, 6), std::domain_error);
    CHECK_THROWS_AS(bisect_isosceles(generic()), std::domain_error);
}

TEST_CASE("generator outputs verify") {
    CHECK(verify(quadratic(generic(), 4)).all_ok());
    CHECK(verify(biquadratic(1, 2)).all_ok());
    CHECK(verify(biquadratic(5, 7)).all_ok());
    CHECK(verify(hexagonal(0)).all_ok());
    CHECK(verify(hexagonal(3)).all_ok());
    CHECK(verify(equilateral_six(Rational(3, 2))).all_ok());
    CHECK(verify(right_306090_three(Rational(2))).all_ok());
    CHECK(verify(bisect_isosceles({rp(0, 0), rp(4, 0), rp(2, 5)})).all_ok());
    CHECK(verify(pythagorean(3, 4, 5)).all_ok());
}

TEST_CASE("all tiles in a generator output share one shape") {
    CHECK(all_congruent(quadratic(generic(), 5)));
    CHECK(all_congruent(biquadratic(2, 3)));
    CHECK(all_congruent(hexagonal(2)));
    CHECK(all_congruent(equilateral_six(Rational(2))));
    CHECK(all_congruent(right_306090_three(Rational(1))));
    CHECK(all_congruent(pythagorean(3, 4, 5)));
    for (const std::string& name : catalog_names()) CHECK(all_congruent(catalog(name)));
}

TEST_CASE("canonical placement: first vertex at the origin, one side on the x axis") {
    CHECK(starts_at_origin_on_x_axis(biquadratic(3, 4)));
    CHECK(starts_at_origin_on_x_axis(hexagonal(1)));
    CHECK(starts_at_origin_on_x_axis(equilateral_six(Rational(2))));
    CHECK(starts_at_origin_on_x_axis(right_306090_three(Rational(1))));
    CHECK(starts_at_origin_on_x_axis(pythagorean(3, 4, 5)));
}

TEST_CASE("bisect_isosceles splits into mirror-congruent halves") {
    Tiling t = bisect_isosceles({rp(0, 0), rp(2, 0), rp(1, 5)});
    REQUIRE(t.n() == 2);
    CHECK(congruent(t.tiles[0], t.tiles[1]));
    CHECK(verify(t).all_ok());

    // Equilateral side 2 splits into two tiles with squared sides (1, 3, 4).
    Tiling eq = bisect_isosceles(
        {rp(0, 0), rp(2, 0), Point{rq(1), QuadNum(Rational(0), Rational(1), 3)}});
    Shape s = shape_of(eq.tiles[0]);
    CHECK(s.sq[0] == rq(1));
    CHECK(s.sq[1] == rq(3));
    CHECK(s.sq[2] == rq(4));
}

TEST_CASE("hexagonal corner wedges are two base angles each") {
    for (int k : {0, 1, 2}) {
        VertexCensus c = vertex_census(hexagonal(k));
        CHECK(c.corner_usage == std::array<long long, 3>{6, 0, 0});
    }
}

TEST_CASE("compose") {
    SUBCASE("with a 1-tiling is the identity") {
        Tiling base = biquadratic(1, 2);
        Tiling one = quadratic(base.tiles[0], 1);
        CHECK(canonical_tiles(compose(base, one)) == canonical_tiles(base));
    }
    SUBCASE("refines quadratic tilings lattice-exactly") {
        Tiling base = quadratic(generic(), 2);
        Tiling sub = quadratic(base.tiles[0], 3);
        Tiling c = compose(base, sub);
        CHECK(c.n() == 36);
        CHECK(canonical_tiles(c) == canonical_tiles(quadratic(generic(), 6)));
    }
    SUBCASE("builds the composite 12-tiling of a 30-60-90 triangle") {
        Tiling three = right_306090_three(Rational(1));
        Tiling twelve = compose(quadratic(three.reference, 2), three);
        CHECK(twelve.n() == 12);
        CHECK(verify(twelve).all_ok());
        CHECK(eigen_check(twelve));
    }
    SUBCASE("25-tiling from two biquadratic 5-tilings") {
        Tiling bb = compose(biquadratic(1, 2), biquadratic(1, 2));
        CHECK(bb.n() == 25);
        CHECK(verify(bb).all_ok());
    }
    SUBCASE("shape mismatch is an error") {
        CHECK_THROWS_AS(compose(biquadratic(1, 2), biquadratic(1, 3)), std::domain_error);
    }
}

TEST_CASE("rect_flip") {
    Tiling q = quadratic({rp(0, 0), rp(6, 0), rp(6, 9)}, 3);
    auto pairs = flippable_pairs(q);
    REQUIRE(pairs.size() == 3);

    SUBCASE("flip verifies, keeps N, keeps the tile shape") {
        Tiling f = rect_flip(q, pairs[0].first, pairs[0].second);
        CHECK(f.n() == q.n());
        CHECK(congruent(f.tiles[0], q.tiles[0]));
        CHECK(verify(f).all_ok());
    }
    SUBCASE("flip is an involution") {
        Tiling f = rect_flip(q, pairs[1].first, pairs[1].second);
        Tiling ff = rect_flip(f, pairs[1].first, pairs[1].second);
        CHECK(canonical_tiles(ff) == canonical_tiles(q));
    }
    SUBCASE("interior flip leaves the d-matrix unchanged") {
        // In the 4-subdivision the rectangle between lattice columns 0-1 and
        // rows 1-2 touches no reference side.
        Tiling q4 = quadratic({rp(0, 0), rp(8, 0), rp(8, 12)}, 4);
        DMatrix before = compute_dmatrix(q4);
        bool flipped_interior = false;
        for (auto [i, j] : flippable_pairs(q4)) {
            Tiling f = rect_flip(q4, i, j);
            if (compute_dmatrix(f) == before) flipped_interior = true;
        }
        CHECK(flipped_interior);
    }
    SUBCASE("pairs sharing only a leg are rejected") {
        // Tiles 0 and 1 of a biquadratic share the altitude leg, not a
        // hypotenuse; no rectangle.
        Tiling b = biquadratic(1, 1);
        CHECK_THROWS_AS(rect_flip(b, 0, 1), std::domain_error);
    }
    SUBCASE("non-adjacent pairs are rejected") {
        CHECK_THROWS_AS(rect_flip(q, 0, 4), std::domain_error);
    }
}

TEST_CASE("catalog") {
    CHECK(catalog("five_b").n() == 5);
    CHECK(catalog("nine_nonstandard").n() == 9);
    CHECK(catalog("twelve_b").n() == 12);
    CHECK(catalog("thirteen").n() == 13);
    CHECK(catalog("nonquadratic_3a2b").n() == 25);
    for (const std::string& name : catalog_names()) CHECK(verify(catalog(name)).all_ok());
    CHECK_THROWS_AS(catalog("no_such_entry"), std::out_of_range);
}

TEST_CASE("five_b shares tile and reference shape with biquadratic(1,2)") {
    Tiling a = catalog("five_b");
    Tiling b = biquadratic(1, 2);
    CHECK(congruent(a.tiles[0], b.tiles[0]));
    CHECK(congruent(a.reference, b.reference));
    // Same boundary structure but a different interior layout.
    CHECK(compute_dmatrix(a) == compute_dmatrix(b));
    CHECK(canonical_tiles(a) != canonical_tiles(b));
}
