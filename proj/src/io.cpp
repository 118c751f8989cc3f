#include "tritile/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <set>

namespace tritile {

using nlohmann::json;

namespace {

long long tiling_radicand(const Tiling& t) {
    long long d = 0;
    auto scan = [&](const Point& p) {
        if (p.x.radicand() != 0) d = p.x.radicand();
        if (p.y.radicand() != 0) d = p.y.radicand();
    };
    scan(t.reference.v0);
    scan(t.reference.v1);
    scan(t.reference.v2);
    for (const Triangle& tile : t.tiles) {
        scan(tile.v0);
        scan(tile.v1);
        scan(tile.v2);
    }
    return d;
}

json point_json(const Point& p) { return json::array({p.x.str(), p.y.str()}); }

Point point_from(const json& j, long long radicand) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("coordinate must be a [x, y] pair");
    Point p{parse_quadnum(j[0].get<std::string>()), parse_quadnum(j[1].get<std::string>())};
    for (const QuadNum* q : {&p.x, &p.y}) {
        if (q->radicand() != 0 && q->radicand() != radicand)
            throw field_error("coordinate radicand " + std::to_string(q->radicand()) +
                              " does not match declared radicand " +
                              std::to_string(radicand));
    }
    return p;
}

json triangle_json(const Triangle& t) {
    return json::array({point_json(t.v0), point_json(t.v1), point_json(t.v2)});
}

Triangle triangle_from(const json& j, long long radicand) {
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("triangle must be a list of three points");
    return {point_from(j[0], radicand), point_from(j[1], radicand),
            point_from(j[2], radicand)};
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string tiling_to_json(const Tiling& t) {
    json j;
    j["radicand"] = tiling_radicand(t);
    j["reference"] = triangle_json(t.reference);
    json tiles = json::array();
    for (const Triangle& tile : t.tiles) tiles.push_back(triangle_json(tile));
    j["tiles"] = std::move(tiles);
    return j.dump();
}

Tiling tiling_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.is_object() || !j.contains("radicand") || !j.contains("reference") ||
        !j.contains("tiles"))
        throw std::invalid_argument("tiling file needs radicand, reference and tiles");
    long long radicand = j["radicand"].get<long long>();
    Tiling t;
    t.reference = triangle_from(j["reference"], radicand);
    for (const json& tile : j["tiles"]) t.tiles.push_back(triangle_from(tile, radicand));
    if (t.tiles.empty()) throw std::invalid_argument("tiling has no tiles");
    return t;
}

namespace {

json census_json(const VertexCensus& c) {
    return json{{"boundary", c.boundary},
                {"nonstrict", c.nonstrict},
                {"strict_interior", c.strict_interior},
                {"corner_usage", c.corner_usage}};
}

json relations_json(const std::vector<Relation>& rels) {
    json arr = json::array();
    for (const Relation& r : rels) {
        json item{{"kind", r.kind == Relation::Kind::edge ? "edge" : "angle"},
                  {"coefficients", r.coefficients},
                  {"text", r.str()}};
        if (r.kind == Relation::Kind::angle) item["pi_multiple"] = r.pi_multiple;
        arr.push_back(std::move(item));
    }
    return arr;
}

}  // namespace

std::string report_to_json(const Report& r) {
    json j{{"congruent_ok", r.congruent_ok}, {"disjoint_ok", r.disjoint_ok},
           {"contained_ok", r.contained_ok}, {"area_ok", r.area_ok},
           {"vertex_ok", r.vertex_ok},       {"euler_ok", r.euler_ok},
           {"census", census_json(r.census)}, {"relations", relations_json(r.relations)},
           {"failures", r.failures}};
    if (r.dmatrix_valid) j["dmatrix"] = r.dmatrix.rows;
    return j.dump(2);
}

std::string report_to_text(const Report& r) {
    auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
    std::string s;
    s += std::string("congruent: ") + flag(r.congruent_ok) + "\n";
    s += std::string("disjoint:  ") + flag(r.disjoint_ok) + "\n";
    s += std::string("contained: ") + flag(r.contained_ok) + "\n";
    s += std::string("area:      ") + flag(r.area_ok) + "\n";
    s += std::string("vertices:  ") + flag(r.vertex_ok) + "\n";
    s += std::string("euler:     ") + flag(r.euler_ok) + "\n";
    s += "census: boundary=" + std::to_string(r.census.boundary) +
         " nonstrict=" + std::to_string(r.census.nonstrict) +
         " strict=" + std::to_string(r.census.strict_interior) + " corners=(" +
         std::to_string(r.census.corner_usage[0]) + "," +
         std::to_string(r.census.corner_usage[1]) + "," +
         std::to_string(r.census.corner_usage[2]) + ")\n";
    if (r.dmatrix_valid) {
        s += "d-matrix:";
        for (const auto& row : r.dmatrix.rows) {
            s += " [" + std::to_string(row[0]) + " " + std::to_string(row[1]) + " " +
                 std::to_string(row[2]) + "]";
        }
        s += "\n";
    }
    if (!r.relations.empty()) {
        s += "relations:";
        for (const Relation& rel : r.relations) s += " " + rel.str();
        s += "\n";
    }
    for (const std::string& f : r.failures) s += "failure: " + f + "\n";
    return s;
}

std::string verdict_to_json(const Verdict& v) {
    json j{{"status", v.status_str()}, {"citation", v.citation}, {"notes", v.notes}};
    j["witness"] = v.witness ? json(v.witness->str()) : json(nullptr);
    return j.dump(2);
}

std::string render_svg(const Tiling& t, bool vertex_markers) {
    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    bool first = true;
    auto feed = [&](const Point& p) {
        double x = p.x.to_double(), y = p.y.to_double();
        if (first) {
            minx = maxx = x;
            miny = maxy = y;
            first = false;
        } else {
            minx = std::min(minx, x);
            maxx = std::max(maxx, x);
            miny = std::min(miny, y);
            maxy = std::max(maxy, y);
        }
    };
    for (int c = 0; c < 3; ++c) feed(t.reference.vertex(c));
    for (const Triangle& tile : t.tiles)
        for (int c = 0; c < 3; ++c) feed(tile.vertex(c));

    const double width = 800.0;
    double span_x = maxx - minx, span_y = maxy - miny;
    if (span_x <= 0) span_x = 1;
    double scale = width / span_x;
    double height = span_y * scale;
    if (height <= 0) height = 1;

    auto px = [&](const Point& p) {
        return fmt17((p.x.to_double() - minx) * scale) + "," +
               fmt17((maxy - p.y.to_double()) * scale);
    };

    static const char* fills[] = {"#c6dbef", "#fdd0a2", "#c7e9c0", "#fcbba1",
                                  "#dadaeb", "#fee391"};
    std::string s;
    s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         fmt17(width) + "\" height=\"" + fmt17(height) + "\" viewBox=\"0 0 " +
         fmt17(width) + " " + fmt17(height) + "\">\n";
    int i = 0;
    for (const Triangle& tile : t.tiles) {
        s += "  <polygon points=\"" + px(tile.v0) + " " + px(tile.v1) + " " + px(tile.v2) +
             "\" fill=\"" + fills[i++ % 6] + "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    }
    s += "  <polygon points=\"" + px(t.reference.v0) + " " + px(t.reference.v1) + " " +
         px(t.reference.v2) +
         "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    if (vertex_markers) {
        std::set<std::string> seen;
        for (const Triangle& tile : t.tiles) {
            for (int c = 0; c < 3; ++c) {
                std::string at = px(tile.vertex(c));
                if (!seen.insert(at).second) continue;
                auto comma = at.find(',');
                s += "  <circle cx=\"" + at.substr(0, comma) + "\" cy=\"" +
                     at.substr(comma + 1) + "\" r=\"3\" fill=\"#000000\"/>\n";
            }
        }
    }
    s += "</svg>\n";
    return s;
}

}  // namespace tritile
