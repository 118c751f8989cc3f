#pragma once

#include "tritile/geometry.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace tritile {

/// Signals an internal contradiction found while analysing a tiling that was
/// expected to be verified (e.g. a boundary edge matching no tile side).
struct inconsistency_error : std::runtime_error {
    explicit inconsistency_error(const std::string& what) : std::runtime_error(what) {}
};

struct Tiling {
    Triangle reference;
    std::vector<Triangle> tiles;

    int n() const { return static_cast<int>(tiles.size()); }
};

/// 3x3 nonnegative counts: row i = number of tile a/b/c edges lying on
/// reference side i, sides sorted X <= Y <= Z.
struct DMatrix {
    std::array<std::array<long long, 3>, 3> rows{};

    friend bool operator==(const DMatrix& a, const DMatrix& b) { return a.rows == b.rows; }
    friend bool operator!=(const DMatrix& a, const DMatrix& b) { return !(a == b); }
};

struct VertexCensus {
    long long boundary = 0;         // N_b, excludes the three corners
    long long nonstrict = 0;        // N_n
    long long strict_interior = 0;  // N_s
    std::array<long long, 3> corner_usage{};  // (P, Q, R): alpha/beta/gamma wedges at corners

    bool euler_holds(long long n) const {
        return n - 1 == boundary + nonstrict + 2 * strict_interior;
    }
};

struct Relation {
    enum class Kind { edge, angle };
    Kind kind;
    std::array<long long, 3> coefficients{};  // p, q, r over (a, b, c) or (alpha, beta, gamma)
    long long pi_multiple = 0;                // angle relations: right-hand side k of k*pi

    friend bool operator==(const Relation& x, const Relation& y) {
        return x.kind == y.kind && x.coefficients == y.coefficients &&
               x.pi_multiple == y.pi_multiple;
    }
    friend bool operator<(const Relation& x, const Relation& y) {
        if (x.kind != y.kind) return x.kind < y.kind;
        if (x.coefficients != y.coefficients) return x.coefficients < y.coefficients;
        return x.pi_multiple < y.pi_multiple;
    }

    std::string str() const;
};

struct MaximalSegment {
    Point from;
    Point to;
    // Squared lengths of the tile edges abutting each side of the segment.
    std::vector<QuadNum> left;   // positive side of the oriented line
    std::vector<QuadNum> right;  // negative side

    bool interior() const { return !left.empty() && !right.empty(); }
};

struct Report {
    bool congruent_ok = false;
    bool disjoint_ok = false;
    bool contained_ok = false;
    bool area_ok = false;
    bool vertex_ok = false;
    bool euler_ok = false;
    VertexCensus census;
    DMatrix dmatrix;
    bool dmatrix_valid = false;
    std::vector<Relation> relations;
    std::vector<std::string> failures;

    bool all_ok() const {
        return congruent_ok && disjoint_ok && contained_ok && area_ok && vertex_ok && euler_ok;
    }
};

/// Runs the full verification battery and assembles the analysis report.
/// The six booleans are independent; census/dmatrix/relations are filled when
/// the checks they rely on pass.
Report verify(const Tiling& t);

DMatrix compute_dmatrix(const Tiling& t);
VertexCensus vertex_census(const Tiling& t);
std::vector<MaximalSegment> maximal_segments(const Tiling& t);
std::vector<Relation> relations(const Tiling& t);

/// Checks DMatrix * (a,b,c)^T = (X,Y,Z)^T exactly; requires the tile to be
/// similar to the reference (throws std::domain_error otherwise).
bool eigen_check(const Tiling& t);

/// Reference sides sorted by squared length (ties by lexicographically
/// smallest endpoint); each side given as its two endpoints.
std::array<std::pair<Point, Point>, 3> sorted_reference_sides(const Triangle& reference);

/// Index 0/1/2 = alpha/beta/gamma of the tile corner at vertex `corner`,
/// classified by the squared length of the opposite side; for isosceles tiles
/// equal angles collapse onto the earlier index (middle suppressed).
int corner_angle_class(const Triangle& tile, int corner, const Shape& shape);

}  // namespace tritile
