#include "tritile/io.hpp"

#include "tritile/generators.hpp"

#include <doctest.h>

using namespace tritile;

namespace {

bool tilings_equal(const Tiling& a, const Tiling& b) {
    if (a.n() != b.n()) return false;
    auto pt_eq = [](const Point& p, const Point& q) { return p == q; };
    for (int c = 0; c < 3; ++c)
        if (!pt_eq(a.reference.vertex(c), b.reference.vertex(c))) return false;
    for (int i = 0; i < a.n(); ++i)
        for (int c = 0; c < 3; ++c)
            if (!pt_eq(a.tiles[i].vertex(c), b.tiles[i].vertex(c))) return false;
    return true;
}

}  // namespace

TEST_CASE("tiling json round-trip is exact and byte-stable") {
    for (const Tiling& t : {biquadratic(2, 3), hexagonal(1), catalog("twelve_b"),
                            right_306090_three(Rational(1, 3))}) {
        std::string once = tiling_to_json(t);
        Tiling back = tiling_from_json(once);
        CHECK(tilings_equal(t, back));
        CHECK(tiling_to_json(back) == once);
    }
}

TEST_CASE("tiling json carries the radicand") {
    std::string j = tiling_to_json(hexagonal(0));
    CHECK(j.find("\"radicand\":3") != std::string::npos);
    std::string j2 = tiling_to_json(biquadratic(1, 2));
    CHECK(j2.find("\"radicand\":0") != std::string::npos);
}

TEST_CASE("tiling json rejects malformed input") {
    CHECK_THROWS(tiling_from_json("{}"));
    CHECK_THROWS(tiling_from_json("not json"));
    CHECK_THROWS(tiling_from_json(
        R"({"radicand":0,"reference":[["0","0"],["1","0"]],"tiles":[]})"));
    // Coordinate in a different field than declared.
    CHECK_THROWS_AS(
        tiling_from_json(
            R"js({"radicand":3,
                  "reference":[["0","0"],["1","0"],["0","0+1*sqrt(5)"]],
                  "tiles":[[["0","0"],["1","0"],["0","0+1*sqrt(5)"]]]})js"),
        field_error);
}

TEST_CASE("report serialization mentions every check") {
    Report r = verify(biquadratic(1, 2));
    std::string text = report_to_text(r);
    for (const char* key : {"congruent", "disjoint", "contained", "area", "vertices",
                            "euler", "census", "d-matrix", "relations"})
        CHECK(text.find(key) != std::string::npos);
    std::string j = report_to_json(r);
    for (const char* key : {"congruent_ok", "dmatrix", "census", "relations", "failures"})
        CHECK(j.find(key) != std::string::npos);
}

TEST_CASE("verdict serialization") {
    Verdict v = classify_similar(TileDescriptor::right_tan(1, 2), 5);
    std::string j = verdict_to_json(v);
    CHECK(j.find("admissible") != std::string::npos);
    CHECK(j.find("biquadratic") != std::string::npos);
    CHECK(j.find("Theorem 5(i)") != std::string::npos);
}

TEST_CASE("svg output") {
    Tiling t = hexagonal(1);
    std::string svg = render_svg(t);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(svg.find("xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
    size_t count = 0;
    for (size_t pos = svg.find("<polygon"); pos != std::string::npos;
         pos = svg.find("<polygon", pos + 1))
        ++count;
    CHECK(count == static_cast<size_t>(t.n()) + 1);
    CHECK(svg.find("width=\"800\"") != std::string::npos);
}
