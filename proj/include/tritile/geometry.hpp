#pragma once

#include "tritile/exact.hpp"

#include <array>

namespace tritile {

struct Point {
    QuadNum x;
    QuadNum y;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }

    friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(const QuadNum& s, const Point& p) { return {s * p.x, s * p.y}; }
};

struct Triangle {
    Point v0, v1, v2;

    const Point& vertex(int i) const { return i == 0 ? v0 : (i == 1 ? v1 : v2); }
};

/// Congruence class of a triangle: the sorted squared side lengths.
struct Shape {
    std::array<QuadNum, 3> sq;  // a^2 <= b^2 <= c^2

    friend bool operator==(const Shape& a, const Shape& b) { return a.sq == b.sq; }
    friend bool operator!=(const Shape& a, const Shape& b) { return !(a == b); }
};

enum class Location { outside, vertex, edge_interior, interior };

/// Sign of the cross product (q-p) x (r-p): +1 left turn, -1 right, 0 collinear.
int orientation(const Point& p, const Point& q, const Point& r);

QuadNum squared_distance(const Point& a, const Point& b);

/// Exact classification of p against the closed triangle t.
Location locate(const Point& p, const Triangle& t);

/// True iff p lies strictly between a and b on segment ab (a, b, p collinear assumed not).
bool on_segment_interior(const Point& p, const Point& a, const Point& b);

/// True iff the open interiors intersect.  Shared edges and vertices do not count.
bool interiors_overlap(const Triangle& t1, const Triangle& t2);

Shape shape_of(const Triangle& t);
bool congruent(const Triangle& t1, const Triangle& t2);

/// True iff the shapes are related by a uniform scaling.
bool similar_shapes(const Shape& s1, const Shape& s2);

/// Twice the (unsigned) area, exact.
QuadNum area2(const Triangle& t);

bool degenerate(const Triangle& t);

}  // namespace tritile
