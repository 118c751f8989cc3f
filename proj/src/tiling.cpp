#include "tritile/tiling.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace tritile {

namespace {

// Squared length classified against the tile shape.  Checks a^2 first and
// c^2 before b^2, so for an isosceles tile the shared value never lands in
// the middle slot (the paper's "ignore b" convention).
int classify_sq(const QuadNum& sq, const Shape& shape) {
    if (sq == shape.sq[0]) return 0;
    if (sq == shape.sq[2]) return 2;
    if (sq == shape.sq[1]) return 1;
    return -1;
}

struct VertexRecord {
    std::vector<std::pair<int, int>> corners;  // (tile index, corner index)
};

std::map<Point, VertexRecord> vertex_table(const Tiling& t) {
    std::map<Point, VertexRecord> table;
    for (int i = 0; i < t.n(); ++i) {
        for (int c = 0; c < 3; ++c) {
            table[t.tiles[i].vertex(c)].corners.emplace_back(i, c);
        }
    }
    return table;
}

bool on_some_tile_edge(const Point& v, const Tiling& t, Point* e0 = nullptr, Point* e1 = nullptr) {
    for (const Triangle& tile : t.tiles) {
        for (int e = 0; e < 3; ++e) {
            const Point& a = tile.vertex(e);
            const Point& b = tile.vertex((e + 1) % 3);
            if (on_segment_interior(v, a, b)) {
                if (e0) *e0 = a;
                if (e1) *e1 = b;
                return true;
            }
        }
    }
    return false;
}

struct Ray {
    QuadNum x, y;
};

int ray_half(const Ray& r) {
    int sy = r.y.sign();
    if (sy > 0) return 0;
    if (sy < 0) return 1;
    return r.x.sign() > 0 ? 0 : 1;
}

QuadNum ray_cross(const Ray& a, const Ray& b) { return a.x * b.y - a.y * b.x; }
QuadNum ray_dot(const Ray& a, const Ray& b) { return a.x * b.x + a.y * b.y; }

bool same_ray(const Ray& a, const Ray& b) {
    return ray_cross(a, b).is_zero() && ray_dot(a, b).sign() > 0;
}

bool antipodal(const Ray& a, const Ray& b) {
    return ray_cross(a, b).is_zero() && ray_dot(a, b).sign() < 0;
}

struct RayLess {
    bool operator()(const Ray& a, const Ray& b) const {
        int ha = ray_half(a), hb = ray_half(b);
        if (ha != hb) return ha < hb;
        return ray_cross(a, b).sign() > 0;
    }
};

// Angular cover of the incident tile corners at one vertex.
struct CoverResult {
    bool valid = false;          // no overlapping wedges, gaps contiguous
    bool full = false;           // covers the whole turn
    Ray cov_start, cov_end;      // when not full: covered arc runs CCW start->end
};

CoverResult wedge_cover(const Point& v, const std::vector<std::pair<int, int>>& corners,
                        const Tiling& t) {
    CoverResult res;
    std::vector<std::pair<Ray, Ray>> wedges;
    std::map<Ray, int, RayLess> ray_index;
    for (auto [ti, ci] : corners) {
        const Triangle& tile = t.tiles[ti];
        const Point& p = tile.vertex((ci + 1) % 3);
        const Point& q = tile.vertex((ci + 2) % 3);
        Ray d1{p.x - v.x, p.y - v.y};
        Ray d2{q.x - v.x, q.y - v.y};
        if (orientation(v, p, q) < 0) std::swap(d1, d2);
        wedges.emplace_back(d1, d2);
        ray_index.emplace(d1, 0);
        ray_index.emplace(d2, 0);
    }
    std::vector<Ray> rays;
    for (auto& [r, idx] : ray_index) {
        idx = static_cast<int>(rays.size());
        rays.push_back(r);
    }
    const int m = static_cast<int>(rays.size());
    std::vector<int> count(m, 0);
    for (auto& [s, e] : wedges) {
        int si = ray_index.find(s)->second;
        int ei = ray_index.find(e)->second;
        for (int g = si; g != ei; g = (g + 1) % m) {
            if (++count[g] > 1) return res;  // overlap
        }
    }
    int zero_runs = 0;
    for (int g = 0; g < m; ++g) {
        if (count[g] == 0 && count[(g + 1) % m] != 0) ++zero_runs;
    }
    if (zero_runs == 0) {
        res.valid = res.full = true;
        return res;
    }
    if (zero_runs != 1) return res;
    // Locate the single uncovered run [g1..g2]; the covered arc is the rest.
    int g2 = -1;
    for (int g = 0; g < m; ++g) {
        if (count[g] == 0 && count[(g + 1) % m] != 0) g2 = g;
    }
    int g1 = g2;
    while (count[(g1 + m - 1) % m] == 0) g1 = (g1 + m - 1) % m;
    res.valid = true;
    res.cov_start = rays[(g2 + 1) % m];
    res.cov_end = rays[g1];
    return res;
}

std::array<Point, 2> reference_side_through(const Point& v, const Triangle& ref) {
    for (int e = 0; e < 3; ++e) {
        const Point& a = ref.vertex(e);
        const Point& b = ref.vertex((e + 1) % 3);
        if (orientation(a, b, v) == 0) return {a, b};
    }
    throw inconsistency_error("boundary vertex lies on no reference side");
}

long long gcd_ll(long long a, long long b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

std::array<std::pair<Point, Point>, 3> sorted_reference_sides(const Triangle& reference) {
    std::array<std::pair<Point, Point>, 3> sides{
        std::pair<Point, Point>{reference.v0, reference.v1},
        std::pair<Point, Point>{reference.v1, reference.v2},
        std::pair<Point, Point>{reference.v2, reference.v0}};
    for (auto& s : sides) {
        if (s.second < s.first) std::swap(s.first, s.second);
    }
    std::sort(sides.begin(), sides.end(), [](const auto& s1, const auto& s2) {
        QuadNum l1 = squared_distance(s1.first, s1.second);
        QuadNum l2 = squared_distance(s2.first, s2.second);
        if (l1 != l2) return l1 < l2;
        if (s1.first != s2.first) return s1.first < s2.first;
        return s1.second < s2.second;
    });
    return sides;
}

int corner_angle_class(const Triangle& tile, int corner, const Shape& shape) {
    QuadNum opp = squared_distance(tile.vertex((corner + 1) % 3), tile.vertex((corner + 2) % 3));
    int cls = classify_sq(opp, shape);
    if (cls < 0) throw inconsistency_error("tile corner matches no side of the tile shape");
    return cls;
}

VertexCensus vertex_census(const Tiling& t) {
    VertexCensus census;
    if (t.tiles.empty()) return census;
    Shape shape = shape_of(t.tiles[0]);
    for (const auto& [v, rec] : vertex_table(t)) {
        Location loc = locate(v, t.reference);
        if (loc == Location::vertex) {
            for (auto [ti, ci] : rec.corners)
                ++census.corner_usage[corner_angle_class(t.tiles[ti], ci, shape)];
        } else if (loc == Location::edge_interior) {
            ++census.boundary;
        } else if (loc == Location::interior) {
            if (on_some_tile_edge(v, t))
                ++census.nonstrict;
            else
                ++census.strict_interior;
        }
    }
    return census;
}

DMatrix compute_dmatrix(const Tiling& t) {
    if (t.tiles.empty()) throw std::domain_error("empty tiling");
    Shape shape = shape_of(t.tiles[0]);
    auto sides = sorted_reference_sides(t.reference);
    DMatrix d;
    for (int row = 0; row < 3; ++row) {
        const Point& p = sides[row].first;
        const Point& q = sides[row].second;
        for (const Triangle& tile : t.tiles) {
            for (int e = 0; e < 3; ++e) {
                const Point& u = tile.vertex(e);
                const Point& w = tile.vertex((e + 1) % 3);
                if (orientation(p, q, u) != 0 || orientation(p, q, w) != 0) continue;
                int cls = classify_sq(squared_distance(u, w), shape);
                if (cls < 0)
                    throw inconsistency_error(
                        "boundary edge matches no tile side length");
                ++d.rows[row][cls];
            }
        }
        if (d.rows[row][0] + d.rows[row][1] + d.rows[row][2] == 0)
            throw inconsistency_error("reference side carries no tile edges");
    }
    return d;
}

std::vector<MaximalSegment> maximal_segments(const Tiling& t) {
    struct EdgeRec {
        QuadNum t0, t1;
        Point p0, p1;
        QuadNum sqlen;
        int side;
    };
    std::map<std::array<QuadNum, 3>, std::vector<EdgeRec>> lines;
    for (const Triangle& tile : t.tiles) {
        for (int e = 0; e < 3; ++e) {
            Point u = tile.vertex(e);
            Point w = tile.vertex((e + 1) % 3);
            const Point& opp = tile.vertex((e + 2) % 3);
            QuadNum a = w.y - u.y;
            QuadNum b = u.x - w.x;
            QuadNum c = QuadNum(0) - (a * u.x + b * u.y);
            QuadNum lead = a.is_zero() ? b : a;
            a /= lead;
            b /= lead;
            c /= lead;
            int side = (a * opp.x + b * opp.y + c).sign();
            QuadNum t0 = QuadNum(0) - b * u.x + a * u.y;
            QuadNum t1 = QuadNum(0) - b * w.x + a * w.y;
            if (t1 < t0) {
                std::swap(t0, t1);
                std::swap(u, w);
            }
            lines[{a, b, c}].push_back(
                {t0, t1, u, w, squared_distance(u, w), side});
        }
    }
    std::vector<MaximalSegment> out;
    for (auto& [key, edges] : lines) {
        std::sort(edges.begin(), edges.end(),
                  [](const EdgeRec& x, const EdgeRec& y) { return x.t0 < y.t0; });
        size_t i = 0;
        while (i < edges.size()) {
            MaximalSegment seg;
            seg.from = edges[i].p0;
            seg.to = edges[i].p1;
            QuadNum hi = edges[i].t1;
            size_t j = i;
            while (j < edges.size() && edges[j].t0 <= hi) {
                if (edges[j].t1 > hi) {
                    hi = edges[j].t1;
                    seg.to = edges[j].p1;
                }
                (edges[j].side > 0 ? seg.left : seg.right).push_back(edges[j].sqlen);
                ++j;
            }
            std::sort(seg.left.begin(), seg.left.end());
            std::sort(seg.right.begin(), seg.right.end());
            out.push_back(std::move(seg));
            i = j;
        }
    }
    return out;
}

std::string Relation::str() const {
    const char* names_edge[3] = {"a", "b", "c"};
    const char* names_angle[3] = {"alpha", "beta", "gamma"};
    std::string s;
    for (int i = 0; i < 3; ++i) {
        long long c = coefficients[i];
        if (c == 0) continue;
        if (!s.empty()) s += c > 0 ? "+" : "-";
        else if (c < 0) s += "-";
        long long m = std::llabs(c);
        if (m != 1) s += std::to_string(m);
        s += kind == Kind::edge ? names_edge[i] : names_angle[i];
    }
    if (kind == Kind::edge) {
        s += "=0";
    } else {
        s += "=";
        if (pi_multiple == 0)
            s += "0";
        else if (pi_multiple == 1)
            s += "pi";
        else
            s += std::to_string(pi_multiple) + "pi";
    }
    return s;
}

std::vector<Relation> relations(const Tiling& t) {
    std::set<Relation> found;
    if (t.tiles.empty()) return {};
    Shape shape = shape_of(t.tiles[0]);

    for (const MaximalSegment& seg : maximal_segments(t)) {
        if (!seg.interior()) continue;
        std::array<long long, 3> diff{};
        for (const QuadNum& sq : seg.left) ++diff[classify_sq(sq, shape)];
        for (const QuadNum& sq : seg.right) --diff[classify_sq(sq, shape)];
        if (diff == std::array<long long, 3>{}) continue;
        long long g = gcd_ll(gcd_ll(diff[0], diff[1]), diff[2]);
        for (auto& v : diff) v /= g;
        for (auto& v : diff) {
            if (v == 0) continue;
            if (v < 0)
                for (auto& w : diff) w = -w;
            break;
        }
        found.insert(Relation{Relation::Kind::edge, diff, 0});
    }

    bool eq_ab = shape.sq[0] == shape.sq[1];
    bool eq_bc = shape.sq[1] == shape.sq[2];
    for (const auto& [v, rec] : vertex_table(t)) {
        Location loc = locate(v, t.reference);
        if (loc == Location::vertex || loc == Location::outside) continue;
        long long k;
        if (loc == Location::edge_interior) {
            k = 1;  // boundary vertex
        } else {
            k = on_some_tile_edge(v, t) ? 1 : 2;
        }
        std::array<long long, 3> counts{};
        for (auto [ti, ci] : rec.corners)
            ++counts[corner_angle_class(t.tiles[ti], ci, shape)];
        // Quotient out the identity alpha+beta+gamma = pi, and for isosceles
        // tiles also the identification of the two equal angles.
        std::array<long long, 3> rel{};
        long long rhs;
        if (eq_ab && eq_bc) {
            continue;  // equilateral: every count is a multiple of the identity
        } else if (eq_ab) {
            // alpha = beta; identity reads 2*alpha + gamma = pi.
            rel = {counts[0] + counts[1] - 2 * counts[2], 0, 0};
            rhs = k - counts[2];
        } else if (eq_bc) {
            // beta = gamma (classified as gamma); identity: alpha + 2*gamma = pi.
            rel = {0, 0, counts[1] + counts[2] - 2 * counts[0]};
            rhs = k - counts[0];
        } else {
            rel = {counts[0] - counts[2], counts[1] - counts[2], 0};
            rhs = k - counts[2];
        }
        if (rel == std::array<long long, 3>{} && rhs == 0) continue;
        for (auto& w : rel) {
            if (w == 0) continue;
            if (w < 0) {
                for (auto& x : rel) x = -x;
                rhs = -rhs;
            }
            break;
        }
        if (rel == std::array<long long, 3>{}) continue;  // 0 = k*pi cannot arise
        long long g = gcd_ll(gcd_ll(gcd_ll(rel[0], rel[1]), rel[2]), rhs);
        if (g > 1) {
            for (auto& w : rel) w /= g;
            rhs /= g;
        }
        found.insert(Relation{Relation::Kind::angle, rel, rhs});
    }
    return {found.begin(), found.end()};
}

Report verify(const Tiling& t) {
    Report rep;
    if (t.tiles.empty()) {
        rep.failures.push_back("tiling has no tiles");
        return rep;
    }
    if (degenerate(t.reference)) {
        rep.failures.push_back("reference triangle is degenerate");
        return rep;
    }
    for (int i = 0; i < t.n(); ++i) {
        if (degenerate(t.tiles[i])) {
            rep.failures.push_back("tile " + std::to_string(i) + " is degenerate");
            return rep;
        }
    }

    Shape shape = shape_of(t.tiles[0]);
    rep.congruent_ok = true;
    for (int i = 1; i < t.n(); ++i) {
        if (shape_of(t.tiles[i]) != shape) {
            rep.congruent_ok = false;
            rep.failures.push_back("tile " + std::to_string(i) +
                                   " is not congruent to tile 0");
            break;
        }
    }

    rep.contained_ok = true;
    for (int i = 0; i < t.n() && rep.contained_ok; ++i) {
        for (int c = 0; c < 3; ++c) {
            if (locate(t.tiles[i].vertex(c), t.reference) == Location::outside) {
                rep.contained_ok = false;
                rep.failures.push_back("tile " + std::to_string(i) +
                                       " has a vertex outside the reference");
                break;
            }
        }
    }

    rep.disjoint_ok = true;
    for (int i = 0; i < t.n() && rep.disjoint_ok; ++i) {
        for (int j = i + 1; j < t.n(); ++j) {
            if (interiors_overlap(t.tiles[i], t.tiles[j])) {
                rep.disjoint_ok = false;
                rep.failures.push_back("tiles " + std::to_string(i) + " and " +
                                       std::to_string(j) + " have overlapping interiors");
                break;
            }
        }
    }

    QuadNum total(0);
    for (const Triangle& tile : t.tiles) total += area2(tile);
    rep.area_ok = total == area2(t.reference);
    if (!rep.area_ok)
        rep.failures.push_back("tile areas sum to " + total.str() + ", reference has " +
                               area2(t.reference).str());

    // Vertex analysis: wedge cover at every tile vertex, plus the census.
    rep.vertex_ok = true;
    for (const auto& [v, rec] : vertex_table(t)) {
        Location loc = locate(v, t.reference);
        CoverResult cover = wedge_cover(v, rec.corners, t);
        std::string at = "(" + v.x.str() + "," + v.y.str() + ")";
        if (!cover.valid) {
            rep.vertex_ok = false;
            rep.failures.push_back("corner wedges at " + at + " overlap or leave several gaps");
            continue;
        }
        if (loc == Location::vertex) {
            if (cover.full) {
                rep.vertex_ok = false;
                rep.failures.push_back("full turn covered at reference corner " + at);
                continue;
            }
            // Directions along the two reference sides leaving this corner.
            std::vector<Ray> dirs;
            for (int c = 0; c < 3; ++c) {
                const Point& w = t.reference.vertex(c);
                if (w == v) continue;
                dirs.push_back(Ray{w.x - v.x, w.y - v.y});
            }
            bool match = (same_ray(cover.cov_start, dirs[0]) && same_ray(cover.cov_end, dirs[1])) ||
                         (same_ray(cover.cov_start, dirs[1]) && same_ray(cover.cov_end, dirs[0]));
            if (!match) {
                rep.vertex_ok = false;
                rep.failures.push_back("wedges at corner " + at +
                                       " do not fill the reference angle");
            }
        } else if (loc == Location::edge_interior) {
            auto side = reference_side_through(v, t.reference);
            Ray along{side[1].x - side[0].x, side[1].y - side[0].y};
            if (cover.full || !antipodal(cover.cov_start, cover.cov_end) ||
                !ray_cross(cover.cov_start, along).is_zero()) {
                rep.vertex_ok = false;
                rep.failures.push_back("boundary vertex " + at +
                                       " is not a clean half-turn along the side");
            }
        } else if (loc == Location::interior) {
            Point e0, e1;
            bool onedge = on_some_tile_edge(v, t, &e0, &e1);
            if (cover.full) {
                if (onedge) {
                    rep.vertex_ok = false;
                    rep.failures.push_back("vertex " + at +
                                           " covers a full turn but lies inside a tile edge");
                }
            } else {
                Ray along{e1.x - e0.x, e1.y - e0.y};
                if (!onedge || !antipodal(cover.cov_start, cover.cov_end) ||
                    !ray_cross(cover.cov_start, along).is_zero()) {
                    rep.vertex_ok = false;
                    rep.failures.push_back("interior vertex " + at +
                                           " has a gap not closed by any tile edge");
                }
            }
        } else {
            rep.vertex_ok = false;
            rep.failures.push_back("tile vertex " + at + " lies outside the reference");
        }
    }

    rep.census = vertex_census(t);
    rep.euler_ok = rep.census.euler_holds(t.n());
    if (!rep.euler_ok)
        rep.failures.push_back("vertex counts violate N-1 = N_b + N_n + 2*N_s");

    if (rep.congruent_ok && rep.disjoint_ok && rep.contained_ok && rep.area_ok &&
        rep.vertex_ok) {
        try {
            rep.dmatrix = compute_dmatrix(t);
            rep.dmatrix_valid = true;
        } catch (const inconsistency_error& e) {
            rep.failures.push_back(std::string("d-matrix: ") + e.what());
        }
        rep.relations = relations(t);
    }
    return rep;
}

bool eigen_check(const Tiling& t) {
    if (t.tiles.empty()) throw std::domain_error("empty tiling");
    Shape st = shape_of(t.tiles[0]);
    Shape sr = shape_of(t.reference);
    if (!similar_shapes(st, sr))
        throw std::domain_error("eigen_check requires the tile to be similar to the reference");
    DMatrix d = compute_dmatrix(t);

    long long coord_rad = 0;
    for (const Triangle& tile : t.tiles) {
        for (int c = 0; c < 3; ++c) {
            if (tile.vertex(c).x.radicand() != 0) coord_rad = tile.vertex(c).x.radicand();
            if (tile.vertex(c).y.radicand() != 0) coord_rad = tile.vertex(c).y.radicand();
        }
    }
    long long n_rad = normalize_sqrt(Rational(t.n())).radicand();

    auto root_of = [&](const QuadNum& prod) -> QuadNum {
        for (long long rad : {n_rad, coord_rad, prod.radicand()}) {
            if (auto r = sqrt_in_field(prod, rad)) return *r;
        }
        throw field_error("side-length product has no square root in the working field");
    };

    for (int i = 0; i < 3; ++i) {
        QuadNum lhs(0);
        for (int j = 0; j < 3; ++j) {
            long long dij = d.rows[i][j];
            lhs += QuadNum(dij * dij) * st.sq[j];
            for (int k = j + 1; k < 3; ++k) {
                long long dik = d.rows[i][k];
                if (dij == 0 || dik == 0) continue;
                lhs += QuadNum(2 * dij * dik) * root_of(st.sq[j] * st.sq[k]);
            }
        }
        if (lhs != sr.sq[i]) return false;
    }
    return true;
}

}  // namespace tritile
