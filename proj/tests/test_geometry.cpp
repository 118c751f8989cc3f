#include "tritile/geometry.hpp"

#include <doctest.h>

#include <random>

using namespace tritile;

namespace {

std::mt19937 rng(777);

QuadNum rq(long long n, long long d = 1) { return QuadNum(Rational(n, d)); }

Point rp(long long x, long long y) { return {rq(x), rq(y)}; }

Point random_point(int span = 20) {
    std::uniform_int_distribution<int> v(-span, span);
    std::uniform_int_distribution<int> d(1, 6);
    return {rq(v(rng), d(rng)), rq(v(rng), d(rng))};
}

Triangle random_triangle() {
    while (true) {
        Triangle t{random_point(), random_point(), random_point()};
        if (!degenerate(t)) return t;
    }
}

}  // namespace

TEST_CASE("orientation basics") {
    CHECK(orientation(rp(0, 0), rp(1, 0), rp(0, 1)) == 1);
    CHECK(orientation(rp(0, 0), rp(1, 0), rp(2, 0)) == 0);
    // (0,0), (sqrt3, 1), (2*sqrt3, 0) turns clockwise
    Point a{rq(0), rq(0)};
    Point b{QuadNum(Rational(0), Rational(1), 3), rq(1)};
    Point c{QuadNum(Rational(0), Rational(2), 3), rq(0)};
    CHECK(orientation(a, b, c) == -1);
}

TEST_CASE("orientation is antisymmetric") {
    for (int i = 0; i < 100; ++i) {
        Point p = random_point(), q = random_point(), r = random_point();
        int o = orientation(p, q, r);
        CHECK(orientation(q, p, r) == -o);
        CHECK(orientation(p, r, q) == -o);
        CHECK(orientation(r, q, p) == -o);
    }
}

TEST_CASE("locate") {
    Triangle t{rp(0, 0), rp(4, 0), rp(0, 4)};
    CHECK(locate({rq(4, 3), rq(4, 3)}, t) == Location::interior);  // centroid
    CHECK(locate(rp(2, 0), t) == Location::edge_interior);
    CHECK(locate(rp(2, 2), t) == Location::edge_interior);  // hypotenuse midpoint
    CHECK(locate(rp(0, 0), t) == Location::vertex);
    CHECK(locate(rp(5, 0), t) == Location::outside);   // collinear with an edge
    CHECK(locate(rp(3, 3), t) == Location::outside);
    CHECK(locate(rp(-1, 2), t) == Location::outside);
}

TEST_CASE("interiors_overlap cases") {
    Triangle t{rp(0, 0), rp(1, 0), rp(0, 1)};
    Triangle moved{rp(3, 0), rp(4, 0), rp(3, 1)};
    CHECK_FALSE(interiors_overlap(t, moved));
    CHECK(interiors_overlap(t, t));
    // Sharing exactly one full edge
    Triangle other_side{rp(0, 0), rp(1, 0), rp(1, -1)};
    CHECK_FALSE(interiors_overlap(t, other_side));
    // Sharing a vertex only
    Triangle corner{rp(1, 0), rp(2, 0), rp(2, 1)};
    CHECK_FALSE(interiors_overlap(t, corner));
    // Strict containment
    Triangle big{rp(-10, -10), rp(20, -10), rp(0, 20)};
    CHECK(interiors_overlap(t, big));
    // Proper edge crossing without contained vertices
    Triangle cross{rp(-1, -1), rp(2, 2), rp(-1, 2)};
    CHECK(interiors_overlap(t, cross));
    // Collinear edge overlap with both triangles on the same side
    Triangle same_side{rp(1, 0), rp(0, 0), rp(1, 1)};
    CHECK(interiors_overlap(t, same_side));
}

TEST_CASE("interiors_overlap is symmetric; separated pairs are disjoint") {
    for (int i = 0; i < 60; ++i) {
        Triangle a = random_triangle(), b = random_triangle();
        CHECK(interiors_overlap(a, b) == interiors_overlap(b, a));
        // Shift b far to the right of everything: certainly disjoint.
        QuadNum shift = rq(1000);
        Triangle c{{b.v0.x + shift, b.v0.y}, {b.v1.x + shift, b.v1.y}, {b.v2.x + shift, b.v2.y}};
        CHECK_FALSE(interiors_overlap(a, c));
    }
}

TEST_CASE("congruence includes mirror images") {
    Triangle legs12{rp(0, 0), rp(1, 0), rp(1, 2)};
    Triangle mirrored{rp(0, 0), rp(-1, 0), rp(-1, 2)};
    Triangle swapped{rp(5, 5), rp(5, 7), rp(6, 7)};
    Triangle legs13{rp(0, 0), rp(1, 0), rp(1, 3)};
    CHECK(congruent(legs12, mirrored));
    CHECK(congruent(legs12, swapped));
    CHECK_FALSE(congruent(legs12, legs13));
}

TEST_CASE("congruence is an equivalence relation on random triangles") {
    std::vector<Triangle> ts;
    for (int i = 0; i < 12; ++i) ts.push_back(random_triangle());
    for (const auto& a : ts) CHECK(congruent(a, a));
    for (const auto& a : ts)
        for (const auto& b : ts) CHECK(congruent(a, b) == congruent(b, a));
    for (const auto& a : ts)
        for (const auto& b : ts)
            for (const auto& c : ts)
                if (congruent(a, b) && congruent(b, c)) CHECK(congruent(a, c));
}

TEST_CASE("area2") {
    CHECK(area2({rp(0, 0), rp(1, 0), rp(0, 1)}) == rq(1));
    // legs (m^2, mn) with m=1, n=2
    CHECK(area2({rp(0, 0), rp(1, 0), rp(1, 2)}) == rq(2));
    CHECK(area2({rp(0, 0), rp(1, 1), rp(2, 2)}) == rq(0));
}

TEST_CASE("area2 invariances") {
    for (int i = 0; i < 60; ++i) {
        Triangle t = random_triangle();
        QuadNum a = area2(t);
        CHECK(area2({t.v1, t.v2, t.v0}) == a);
        CHECK(area2({t.v2, t.v1, t.v0}) == a);
        Point shift = random_point();
        CHECK(area2({t.v0 + shift, t.v1 + shift, t.v2 + shift}) == a);
    }
}

TEST_CASE("shape_of sorts squared sides") {
    Shape s = shape_of({rp(0, 0), rp(1, 0), rp(1, 2)});
    CHECK(s.sq[0] == rq(1));
    CHECK(s.sq[1] == rq(4));
    CHECK(s.sq[2] == rq(5));
    CHECK(similar_shapes(s, shape_of({rp(0, 0), rp(3, 0), rp(3, 6)})));
    CHECK_FALSE(similar_shapes(s, shape_of({rp(0, 0), rp(1, 0), rp(1, 3)})));
}
