#include "tritile/geometry.hpp"

#include <algorithm>

namespace tritile {

int orientation(const Point& p, const Point& q, const Point& r) {
    QuadNum cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return cross.sign();
}

QuadNum squared_distance(const Point& a, const Point& b) {
    QuadNum dx = a.x - b.x;
    QuadNum dy = a.y - b.y;
    return dx * dx + dy * dy;
}

Location locate(const Point& p, const Triangle& t) {
    int o0 = orientation(t.v0, t.v1, p);
    int o1 = orientation(t.v1, t.v2, p);
    int o2 = orientation(t.v2, t.v0, p);
    if ((o0 > 0 && (o1 < 0 || o2 < 0)) || (o0 < 0 && (o1 > 0 || o2 > 0)) ||
        (o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0))
        return Location::outside;
    int zeros = (o0 == 0) + (o1 == 0) + (o2 == 0);
    if (zeros == 0) return Location::interior;
    if (zeros >= 2) return Location::vertex;
    return Location::edge_interior;
}

bool on_segment_interior(const Point& p, const Point& a, const Point& b) {
    if (orientation(a, b, p) != 0) return false;
    if (p == a || p == b) return false;
    // Collinear: p is interior iff it lies between a and b on either axis.
    if (a.x != b.x) return (a.x < p.x) != (b.x < p.x);
    return (a.y < p.y) != (b.y < p.y);
}

namespace {

// True when line (a,b) separates the interiors: all vertices of `other`
// lie on the closed side opposite to `inner_ref`.
bool separates(const Point& a, const Point& b, const Point& inner_ref, const Triangle& other) {
    int inner = orientation(a, b, inner_ref);
    for (int i = 0; i < 3; ++i) {
        if (orientation(a, b, other.vertex(i)) == inner) return false;
    }
    return true;
}

}  // namespace

bool interiors_overlap(const Triangle& t1, const Triangle& t2) {
    // Separating-axis test over the six edge lines; exact for convex shapes.
    if (separates(t1.v0, t1.v1, t1.v2, t2)) return false;
    if (separates(t1.v1, t1.v2, t1.v0, t2)) return false;
    if (separates(t1.v2, t1.v0, t1.v1, t2)) return false;
    if (separates(t2.v0, t2.v1, t2.v2, t1)) return false;
    if (separates(t2.v1, t2.v2, t2.v0, t1)) return false;
    if (separates(t2.v2, t2.v0, t2.v1, t1)) return false;
    return true;
}

Shape shape_of(const Triangle& t) {
    Shape s{{squared_distance(t.v1, t.v2), squared_distance(t.v0, t.v2),
             squared_distance(t.v0, t.v1)}};
    std::sort(s.sq.begin(), s.sq.end());
    return s;
}

bool congruent(const Triangle& t1, const Triangle& t2) {
    return shape_of(t1) == shape_of(t2);
}

bool similar_shapes(const Shape& s1, const Shape& s2) {
    // Proportionality without division: s1[i] * s2[0] == s2[i] * s1[0].
    return s1.sq[1] * s2.sq[0] == s2.sq[1] * s1.sq[0] &&
           s1.sq[2] * s2.sq[0] == s2.sq[2] * s1.sq[0];
}

QuadNum area2(const Triangle& t) {
    QuadNum cross = (t.v1.x - t.v0.x) * (t.v2.y - t.v0.y) -
                    (t.v1.y - t.v0.y) * (t.v2.x - t.v0.x);
    return cross.sign() < 0 ? -cross : cross;
}

bool degenerate(const Triangle& t) {
    return orientation(t.v0, t.v1, t.v2) == 0;
}

}  // namespace tritile
