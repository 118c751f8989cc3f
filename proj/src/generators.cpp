#include "tritile/generators.hpp"

#include <algorithm>
#include <array>

namespace tritile {

namespace {

QuadNum rq(long long num, long long den = 1) { return QuadNum(Rational(num, den)); }

// coeff * sqrt(3)
QuadNum s3(const Rational& coeff) { return QuadNum(Rational(0), coeff, 3); }
QuadNum s3(long long num, long long den = 1) { return s3(Rational(num, den)); }

Point lattice(const Triangle& abc, int n, int i, int j) {
    QuadNum fi = rq(i, n);
    QuadNum fj = rq(j, n);
    return {abc.v0.x + fi * (abc.v1.x - abc.v0.x) + fj * (abc.v2.x - abc.v0.x),
            abc.v0.y + fi * (abc.v1.y - abc.v0.y) + fj * (abc.v2.y - abc.v0.y)};
}

struct AffineMap {
    QuadNum m00, m01, m10, m11, tx, ty;

    Point operator()(const Point& p) const {
        return {m00 * p.x + m01 * p.y + tx, m10 * p.x + m11 * p.y + ty};
    }
};

AffineMap solve_map(const std::array<Point, 3>& src, const std::array<Point, 3>& dst) {
    Point u = src[1] - src[0], v = src[2] - src[0];
    Point uu = dst[1] - dst[0], vv = dst[2] - dst[0];
    QuadNum det = u.x * v.y - v.x * u.y;
    AffineMap m;
    m.m00 = (uu.x * v.y - vv.x * u.y) / det;
    m.m01 = (vv.x * u.x - uu.x * v.x) / det;
    m.m10 = (uu.y * v.y - vv.y * u.y) / det;
    m.m11 = (vv.y * u.x - uu.y * v.x) / det;
    m.tx = dst[0].x - (m.m00 * src[0].x + m.m01 * src[0].y);
    m.ty = dst[0].y - (m.m10 * src[0].x + m.m11 * src[0].y);
    return m;
}

}  // namespace

Tiling quadratic(const Triangle& abc, int n) {
    if (n < 1) throw std::domain_error("quadratic subdivision needs n >= 1");
    if (degenerate(abc)) throw std::domain_error("degenerate reference triangle");
    Tiling t;
    t.reference = abc;
    for (int i = 0; i + 0 <= n - 1; ++i) {
        for (int j = 0; i + j <= n - 1; ++j) {
            t.tiles.push_back({lattice(abc, n, i, j), lattice(abc, n, i + 1, j),
                               lattice(abc, n, i, j + 1)});
            if (i + j <= n - 2) {
                t.tiles.push_back({lattice(abc, n, i + 1, j), lattice(abc, n, i + 1, j + 1),
                                   lattice(abc, n, i, j + 1)});
            }
        }
    }
    return t;
}

Tiling biquadratic(int m, int n) {
    if (m < 1 || n < 1) throw std::domain_error("biquadratic needs m, n >= 1");
    Point a{rq(0), rq(0)};
    Point b{rq(m * m), rq(m * n)};
    Point c{rq(m * m + n * n), rq(0)};
    Point d{rq(m * m), rq(0)};
    Tiling t;
    t.reference = {a, b, c};
    Tiling left = quadratic({a, b, d}, m);
    Tiling right = quadratic({d, b, c}, n);
    t.tiles = std::move(left.tiles);
    t.tiles.insert(t.tiles.end(), right.tiles.begin(), right.tiles.end());
    return t;
}

Tiling hexagonal(int k) {
    if (k < 0) throw std::domain_error("hexagonal needs k >= 0");
    const long long s = k + 1;
    Tiling t;
    t.reference = {{rq(0), rq(0)}, {s3(s), rq(0)}, {s3(s, 2), rq(3 * s, 2)}};
    // k+1 tiles along each side, bases on the side, apexes one step inward.
    for (long long i = 0; i <= k; ++i) {
        t.tiles.push_back({{s3(i), rq(0)}, {s3(i + 1), rq(0)}, {s3(2 * i + 1, 2), rq(1, 2)}});
        t.tiles.push_back({{s3(i, 2), rq(3 * i, 2)},
                           {s3(i + 1, 2), rq(3 * (i + 1), 2)},
                           {s3(i + 1, 2), rq(3 * i + 1, 2)}});
        t.tiles.push_back({{s3(Rational(s) - Rational(i, 2)), rq(3 * i, 2)},
                           {s3(Rational(s) - Rational(i + 1, 2)), rq(3 * (i + 1), 2)},
                           {s3(Rational(s) - Rational(i + 1, 2)), rq(3 * i + 1, 2)}});
    }
    // Hexagons in bowling-pin rows: row j has k+1-j of them.
    for (long long j = 1; j <= k; ++j) {
        for (long long i = 1; i <= s - j; ++i) {
            Rational cx = Rational(i) + Rational(j - 1, 2);
            Rational cy = Rational(1) + Rational(3 * (j - 1), 2);
            Point centre{s3(cx), QuadNum(cy)};
            Point p1{s3(cx - Rational(1, 2)), QuadNum(cy - Rational(1, 2))};
            Point p2{s3(cx + Rational(1, 2)), QuadNum(cy - Rational(1, 2))};
            Point p3{s3(cx), QuadNum(cy + Rational(1))};
            Point v12{s3(cx), QuadNum(cy - Rational(1))};
            Point v23{s3(cx + Rational(1, 2)), QuadNum(cy + Rational(1, 2))};
            Point v31{s3(cx - Rational(1, 2)), QuadNum(cy + Rational(1, 2))};
            t.tiles.push_back({p1, p2, centre});
            t.tiles.push_back({p2, p3, centre});
            t.tiles.push_back({p3, p1, centre});
            t.tiles.push_back({p1, p2, v12});
            t.tiles.push_back({p2, p3, v23});
            t.tiles.push_back({p3, p1, v31});
        }
    }
    return t;
}

Tiling equilateral_six(const Rational& side) {
    if (side.sign() <= 0) throw std::domain_error("side must be positive");
    Rational s = side;
    Point a{rq(0), rq(0)};
    Point b{QuadNum(s), rq(0)};
    Point c{QuadNum(s / 2), s3(s / 2)};
    Point mab{QuadNum(s / 2), rq(0)};
    Point mbc{QuadNum(s * Rational(3, 4)), s3(s / 4)};
    Point mca{QuadNum(s / 4), s3(s / 4)};
    Point g{QuadNum(s / 2), s3(s / 6)};
    Tiling t;
    t.reference = {a, b, c};
    t.tiles = {{a, mab, g}, {mab, b, g}, {b, mbc, g}, {mbc, c, g}, {c, mca, g}, {mca, a, g}};
    return t;
}

Tiling right_306090_three(const Rational& scale) {
    if (scale.sign() <= 0) throw std::domain_error("scale must be positive");
    Rational s = scale;
    Point a{rq(0), rq(0)};
    Point b{QuadNum(s * 2), rq(0)};
    Point c{QuadNum(s / 2), s3(s / 2)};
    Point d{QuadNum(s), s3(s / 3)};  // on BC: splits the hypotenuse-side layout
    Point f{QuadNum(s), rq(0)};
    Tiling t;
    t.reference = {a, b, c};
    t.tiles = {{a, f, d}, {f, b, d}, {a, d, c}};
    return t;
}

Tiling bisect_isosceles(const Triangle& abc) {
    if (degenerate(abc)) throw std::domain_error("degenerate triangle");
    int apex = -1;
    for (int i = 0; i < 3 && apex < 0; ++i) {
        const Point& p = abc.vertex(i);
        const Point& u = abc.vertex((i + 1) % 3);
        const Point& v = abc.vertex((i + 2) % 3);
        if (squared_distance(p, u) == squared_distance(p, v)) apex = i;
    }
    if (apex < 0) throw std::domain_error("triangle is not isosceles");
    const Point& p = abc.vertex(apex);
    const Point& u = abc.vertex((apex + 1) % 3);
    const Point& v = abc.vertex((apex + 2) % 3);
    QuadNum half(Rational(1, 2));
    Point mid{half * (u.x + v.x), half * (u.y + v.y)};
    Tiling t;
    t.reference = abc;
    t.tiles = {{p, u, mid}, {p, mid, v}};
    return t;
}

Tiling pythagorean(int p, int q, int r) {
    if (p < 1 || q < 1 || r < 1 || p * p + q * q != r * r)
        throw std::domain_error("(p, q, r) is not a Pythagorean triple");
    Point a{rq(0), rq(0)};
    Point b{rq(2ll * p * r), rq(0)};
    Point top{rq(1ll * p * r), rq(1ll * q * r)};
    Point m{rq(1ll * p * r), rq(0)};
    // Foot of the altitude from m onto the hypotenuse (b, top).
    Point f{rq(2ll * p * r) - rq(1ll * p * p * p, r), rq(1ll * p * p * q, r)};
    Tiling t;
    t.reference = {a, b, top};
    for (const Tiling& part :
         {quadratic({a, m, top}, r), quadratic({top, m, f}, q), quadratic({m, b, f}, p)}) {
        t.tiles.insert(t.tiles.end(), part.tiles.begin(), part.tiles.end());
    }
    return t;
}

Tiling compose(const Tiling& base, const Tiling& sub) {
    if (base.tiles.empty() || sub.tiles.empty()) throw std::domain_error("empty tiling");
    Shape tile_shape = shape_of(base.tiles[0]);
    Shape sub_shape = shape_of(sub.reference);
    if (!similar_shapes(tile_shape, sub_shape))
        throw std::domain_error("sub reference is not similar to the base tile shape");
    const std::array<Point, 3> src{sub.reference.v0, sub.reference.v1, sub.reference.v2};
    static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                    {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    Tiling out;
    out.reference = base.reference;
    for (const Triangle& target : base.tiles) {
        // Pick a vertex correspondence that matches side lengths, preferring
        // an orientation-preserving one.
        bool have = false, have_direct = false;
        AffineMap best{};
        for (const auto& perm : perms) {
            std::array<Point, 3> dst{target.vertex(perm[0]), target.vertex(perm[1]),
                                     target.vertex(perm[2])};
            QuadNum k01 = squared_distance(dst[0], dst[1]);
            QuadNum s01 = squared_distance(src[0], src[1]);
            bool ok = squared_distance(dst[0], dst[2]) * s01 ==
                          squared_distance(src[0], src[2]) * k01 &&
                      squared_distance(dst[1], dst[2]) * s01 ==
                          squared_distance(src[1], src[2]) * k01;
            if (!ok) continue;
            bool direct = orientation(src[0], src[1], src[2]) ==
                          orientation(dst[0], dst[1], dst[2]);
            if (!have || (direct && !have_direct)) {
                best = solve_map(src, dst);
                have = true;
                have_direct = direct;
                if (direct) break;
            }
        }
        if (!have) throw std::domain_error("no side-respecting vertex correspondence");
        for (const Triangle& piece : sub.tiles) {
            out.tiles.push_back({best(piece.v0), best(piece.v1), best(piece.v2)});
        }
    }
    return out;
}

Tiling rect_flip(const Tiling& t, int i, int j) {
    if (i < 0 || j < 0 || i >= t.n() || j >= t.n() || i == j)
        throw std::domain_error("invalid tile indices");
    const Triangle& ti = t.tiles[i];
    const Triangle& tj = t.tiles[j];
    std::vector<Point> shared;
    bool used_j[3] = {false, false, false};
    int only_i = -1, only_j = -1;
    for (int a = 0; a < 3; ++a) {
        bool found = false;
        for (int b = 0; b < 3; ++b) {
            if (!used_j[b] && ti.vertex(a) == tj.vertex(b)) {
                shared.push_back(ti.vertex(a));
                used_j[b] = true;
                found = true;
                break;
            }
        }
        if (!found) only_i = a;
    }
    for (int b = 0; b < 3; ++b)
        if (!used_j[b]) only_j = b;
    if (shared.size() != 2 || only_i < 0 || only_j < 0)
        throw std::domain_error("tiles do not share exactly one edge");
    const Point& u = shared[0];
    const Point& v = shared[1];
    const Point& p = ti.vertex(only_i);
    const Point& q = tj.vertex(only_j);
    // Equal bisecting diagonals characterize a rectangle.
    bool same_mid = u.x + v.x == p.x + q.x && u.y + v.y == p.y + q.y;
    if (!same_mid || squared_distance(u, v) != squared_distance(p, q))
        throw std::domain_error("tile pair does not form a rectangle on its shared edge");
    Tiling out = t;
    out.tiles[i] = {p, q, u};
    out.tiles[j] = {p, q, v};
    return out;
}

std::vector<std::pair<int, int>> flippable_pairs(const Tiling& t) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < t.n(); ++i) {
        for (int j = i + 1; j < t.n(); ++j) {
            try {
                rect_flip(t, i, j);
                out.emplace_back(i, j);
            } catch (const std::domain_error&) {
            }
        }
    }
    return out;
}

namespace {

Triangle tri(long long x0, long long y0, long long x1, long long y1, long long x2,
             long long y2) {
    return {{rq(x0), rq(y0)}, {rq(x1), rq(y1)}, {rq(x2), rq(y2)}};
}

// Fig. 4, right-hand 5-tiling: the biquadratic layout with the central
// rectangle cut by the other diagonal.
Tiling catalog_five_b() {
    Tiling t;
    t.reference = tri(0, 0, 5, 0, 4, 2);
    t.tiles = {tri(0, 0, 2, 0, 2, 1), tri(2, 1, 2, 0, 4, 0), tri(2, 1, 4, 0, 4, 1),
               tri(2, 1, 4, 1, 4, 2), tri(4, 2, 4, 0, 5, 0)};
    return t;
}

// Fig. 9: a 9-tiling of the (3,6,3*sqrt5) right triangle that is not a
// subdivision of the quadratic one.
Tiling catalog_nine_nonstandard() {
    Tiling t;
    t.reference = tri(0, 0, 6, 0, 6, 3);
    t.tiles = {tri(0, 0, 2, 0, 2, 1), tri(2, 0, 4, 1, 2, 1), tri(2, 0, 4, 0, 4, 1),
               tri(2, 1, 4, 1, 4, 2), tri(4, 0, 5, 0, 5, 2), tri(4, 0, 5, 2, 4, 2),
               tri(5, 0, 6, 0, 6, 2), tri(5, 0, 6, 2, 5, 2), tri(4, 2, 6, 2, 6, 3)};
    return t;
}

// Fig. 11, right: the prime 12-tiling of a 30-60-90 triangle.
Tiling catalog_twelve_b() {
    auto pt = [](long long x, long long ysqrt3) { return Point{rq(x), s3(ysqrt3)}; };
    Tiling t;
    t.reference = {pt(0, 0), pt(12, 0), pt(12, 4)};
    auto add = [&](long long x0, long long y0, long long x1, long long y1, long long x2,
                   long long y2) { t.tiles.push_back({pt(x0, y0), pt(x1, y1), pt(x2, y2)}); };
    add(4, 0, 7, 1, 8, 0);
    add(10, 2, 10, 0, 8, 0);
    add(10, 2, 7, 1, 8, 0);
    add(0, 0, 4, 0, 3, 1);
    add(6, 2, 4, 0, 3, 1);
    add(6, 2, 4, 0, 7, 1);
    add(6, 2, 7, 1, 10, 2);
    add(6, 2, 10, 2, 9, 3);
    add(12, 4, 10, 2, 9, 3);
    add(10, 0, 12, 0, 10, 2);
    add(12, 2, 12, 0, 10, 2);
    add(10, 2, 12, 2, 12, 4);
    return t;
}

// Fig. 13 idea with a right tile of legs 2 and 3: a quadratic 25-tiling of
// the (10,15) right triangle whose 6x6 square block is retiled with the
// rectangles turned the other way, forcing the edge relation 3a = 2b.
Tiling catalog_nonquadratic_3a2b() {
    Tiling t;
    t.reference = tri(0, 0, 10, 0, 10, 15);
    auto portrait = [&](long long x, long long y) {
        t.tiles.push_back(tri(x, y, x + 2, y, x + 2, y + 3));
        t.tiles.push_back(tri(x, y, x + 2, y + 3, x, y + 3));
    };
    auto landscape = [&](long long x, long long y) {
        t.tiles.push_back(tri(x, y, x + 3, y, x + 3, y + 2));
        t.tiles.push_back(tri(x, y, x + 3, y + 2, x, y + 2));
    };
    for (long long i = 0; i < 5; ++i) {
        t.tiles.push_back(tri(2 * i, 3 * i, 2 * i + 2, 3 * i, 2 * i + 2, 3 * i + 3));
        for (long long j = 0; j < i; ++j) {
            if (i >= 2 && j <= 1) continue;  // the flipped block
            portrait(2 * i, 3 * j);
        }
    }
    for (long long x : {4, 7})
        for (long long y : {0, 2, 4}) landscape(x, y);
    return t;
}

}  // namespace

Tiling catalog(const std::string& name) {
    if (name == "five_b") return catalog_five_b();
    if (name == "nine_nonstandard") return catalog_nine_nonstandard();
    if (name == "twelve_b") return catalog_twelve_b();
    if (name == "thirteen") return biquadratic(3, 2);
    if (name == "nonquadratic_3a2b") return catalog_nonquadratic_3a2b();
    throw std::out_of_range("unknown catalog entry: " + name);
}

std::vector<std::string> catalog_names() {
    return {"five_b", "nine_nonstandard", "nonquadratic_3a2b", "thirteen", "twelve_b"};
}

}  // namespace tritile
