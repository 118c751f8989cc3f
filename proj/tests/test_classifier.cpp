#include "tritile/classifier.hpp"

#include "tritile/generators.hpp"

#include <doctest.h>

#include <set>

using namespace tritile;

namespace {

QuadNum rq(long long n, long long d = 1) { return QuadNum(Rational(n, d)); }
Point rp(long long x, long long y) { return {rq(x), rq(y)}; }

bool brute_sum_two_squares(unsigned long long n) {
    for (unsigned long long e = 0; e * e <= n; ++e) {
        unsigned long long rest = n - e * e;
        unsigned long long f = 0;
        while (f * f < rest) ++f;
        if (f * f == rest) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("square predicates") {
    CHECK(is_square(0));
    CHECK(is_square(49));
    CHECK_FALSE(is_square(48));
    CHECK(is_k_times_square(3, 27));
    CHECK(is_k_times_square(6, 54));
    CHECK_FALSE(is_k_times_square(3, 30));
}

TEST_CASE("sums of two squares") {
    CHECK(is_sum_two_squares(1989));
    CHECK_FALSE(is_sum_two_squares(3));
    CHECK(is_sum_two_squares(9));  // 0^2 + 3^2
    for (unsigned long long n = 0; n <= 5000; ++n)
        CHECK(is_sum_two_squares(n) == brute_sum_two_squares(n));

    // The set is closed under multiplication.
    for (unsigned long long n = 1; n <= 120; ++n)
        for (unsigned long long m = 1; m <= 120; ++m)
            if (is_sum_two_squares(n) && is_sum_two_squares(m))
                CHECK(is_sum_two_squares(n * m));

    auto d74 = two_square_decompositions(74);
    REQUIRE(d74.size() == 1);
    CHECK(d74[0] == std::pair<unsigned long long, unsigned long long>{5, 7});
    auto d25 = two_square_decompositions(25);
    REQUIRE(d25.size() == 2);
    CHECK(d25[0] == std::pair<unsigned long long, unsigned long long>{0, 5});
    CHECK(d25[1] == std::pair<unsigned long long, unsigned long long>{3, 4});
    for (auto [e, f] : two_square_decompositions(1989)) CHECK(e * e + f * f == 1989);
}

TEST_CASE("totient and its preimage") {
    CHECK(totient(1) == 1);
    CHECK(totient(12) == 4);
    CHECK(totient(30) == 8);
    CHECK(totient_preimage(4) == std::vector<unsigned long long>{5, 8, 10, 12});
    CHECK(totient_preimage(8) == std::vector<unsigned long long>{15, 16, 20, 24, 30});
    // Cross-check the preimages against a direct scan over the search bound.
    for (unsigned long long d : {1ull, 2ull, 4ull, 6ull, 8ull, 10ull, 12ull}) {
        std::set<unsigned long long> direct;
        for (unsigned long long n = 1; n <= d * d + d; ++n)
            if (totient(n) == d) direct.insert(n);
        auto got = totient_preimage(d);
        CHECK(std::set<unsigned long long>(got.begin(), got.end()) == direct);
        CHECK(std::is_sorted(got.begin(), got.end()));
    }
}

TEST_CASE("x^2 + y^2 = 3 z^2 has no small solutions") {
    for (unsigned long long x = 1; x <= 60; ++x)
        for (unsigned long long y = 1; y <= 60; ++y)
            for (unsigned long long z = 1; z <= 60; ++z)
                CHECK(x * x + y * y != 3 * z * z);
}

TEST_CASE("classify_similar") {
    TileDescriptor t12 = TileDescriptor::right_tan(1, 2);

    SUBCASE("rational tangent: squares and matching sums of squares") {
        Verdict v5 = classify_similar(t12, 5);
        CHECK(v5.status == Verdict::Status::admissible);
        REQUIRE(v5.witness.has_value());
        CHECK(v5.witness->family() == "biquadratic");
        CHECK(v5.citation == "Theorem 5(i)");

        CHECK(classify_similar(t12, 9).status == Verdict::Status::admissible);
        CHECK(classify_similar(t12, 20).status == Verdict::Status::admissible);  // 4*5
        CHECK(classify_similar(t12, 7).status == Verdict::Status::inadmissible);
        CHECK(classify_similar(t12, 10).status == Verdict::Status::inadmissible);

        std::set<unsigned long long> expect;
        for (unsigned long long m = 1; m * m <= 100; ++m) expect.insert(m * m);
        for (unsigned long long k = 1; 5 * k * k <= 100; ++k) expect.insert(5 * k * k);
        for (unsigned long long n = 1; n <= 100; ++n) {
            bool adm = classify_similar(t12, n).status == Verdict::Status::admissible;
            CHECK(adm == (expect.count(n) > 0));
        }
    }
    SUBCASE("non-reduced tangent ratios collapse to the reduced pair") {
        Verdict v = classify_similar(TileDescriptor::right_tan(2, 4), 5);
        CHECK(v.status == Verdict::Status::admissible);
    }
    SUBCASE("30-60-90: squares and three times squares") {
        TileDescriptor t{TileDescriptor::Kind::right_306090};
        CHECK(classify_similar(t, 12).status == Verdict::Status::admissible);
        CHECK(classify_similar(t, 12).witness->family() == "triple-square");
        CHECK(classify_similar(t, 16).status == Verdict::Status::admissible);
        CHECK(classify_similar(t, 6).status == Verdict::Status::inadmissible);
    }
    SUBCASE("irrational tangent right tiles: squares only") {
        TileDescriptor t{TileDescriptor::Kind::right_other};
        CHECK(classify_similar(t, 9).status == Verdict::Status::admissible);
        CHECK(classify_similar(t, 3).status == Verdict::Status::inadmissible);
        CHECK(classify_similar(t, 3).citation == "Theorem 5(iii)");
    }
    SUBCASE("oblique tiles: squares only, per the final theorem") {
        TileDescriptor t{TileDescriptor::Kind::oblique_other};
        for (unsigned long long n = 1; n <= 100; ++n) {
            bool adm = classify_similar(t, n).status == Verdict::Status::admissible;
            CHECK(adm == is_square(n));
        }
        CHECK(classify_similar(t, 7).citation == "Theorem 8");
    }
}

TEST_CASE("admissibility is closed under multiplication by squares") {
    std::vector<TileDescriptor> tiles{
        TileDescriptor::right_tan(1, 2), TileDescriptor::right_tan(3, 4),
        {TileDescriptor::Kind::right_306090},
        {TileDescriptor::Kind::right_other},
        {TileDescriptor::Kind::oblique_other}};
    for (const TileDescriptor& tile : tiles) {
        for (unsigned long long n = 1; n <= 50; ++n) {
            if (classify_similar(tile, n).status != Verdict::Status::admissible) continue;
            for (unsigned long long m = 2; m <= 5; ++m) {
                CHECK(classify_similar(tile, n * m * m).status ==
                      Verdict::Status::admissible);
            }
        }
    }
}

TEST_CASE("classify_equilateral") {
    CHECK(classify_equilateral({TileDescriptor::Kind::isosceles_30_30_120}, 27).status ==
          Verdict::Status::admissible);
    CHECK(classify_equilateral({TileDescriptor::Kind::isosceles_30_30_120}, 27)
              .witness->str() == "hexagonal(2)");
    CHECK(classify_equilateral({TileDescriptor::Kind::isosceles_30_30_120}, 18).status ==
          Verdict::Status::inadmissible);

    CHECK(classify_equilateral({TileDescriptor::Kind::right_306090}, 24).status ==
          Verdict::Status::admissible);  // 6 * 2^2
    CHECK(classify_equilateral({TileDescriptor::Kind::right_306090}, 8).status ==
          Verdict::Status::admissible);  // 2 * 2^2
    CHECK(classify_equilateral({TileDescriptor::Kind::right_306090}, 12).status ==
          Verdict::Status::inadmissible);

    CHECK(classify_equilateral({TileDescriptor::Kind::equilateral}, 16).status ==
          Verdict::Status::admissible);
    CHECK(classify_equilateral({TileDescriptor::Kind::equilateral}, 12).status ==
          Verdict::Status::inadmissible);

    // A right tile with alpha != pi/6 never tiles an equilateral triangle.
    for (unsigned long long n : {4ull, 8ull, 9ull, 50ull}) {
        CHECK(classify_equilateral({TileDescriptor::Kind::right_isosceles, 1, 1}, n).status ==
              Verdict::Status::inadmissible);
        CHECK(classify_equilateral(TileDescriptor::right_tan(1, 2), n).status ==
              Verdict::Status::inadmissible);
        CHECK(classify_equilateral({TileDescriptor::Kind::right_other}, n).status ==
              Verdict::Status::inadmissible);
    }

    CHECK(classify_equilateral({TileDescriptor::Kind::oblique_other}, 9).status ==
          Verdict::Status::outside_covered_cases);
}

TEST_CASE("classify_isosceles") {
    SUBCASE("Pythagorean witness for (3,4) halves at N = 50") {
        Verdict v = classify_isosceles(TileDescriptor::right_tan(3, 4), 50, true);
        CHECK(v.status == Verdict::Status::admissible);
        REQUIRE(v.witness.has_value());
        CHECK(v.witness->str() == "pythagorean(3,4,5)");
    }
    SUBCASE("right isosceles halves admit odd squares via the quadratic tiling") {
        Verdict v16 = classify_isosceles({TileDescriptor::Kind::right_isosceles, 1, 1}, 16, true);
        CHECK(v16.status == Verdict::Status::admissible);
        CHECK(v16.citation == "Theorem 7(ii)");
        CHECK(classify_isosceles({TileDescriptor::Kind::right_isosceles, 1, 1}, 9, true)
                  .status == Verdict::Status::admissible);
        CHECK(classify_isosceles({TileDescriptor::Kind::right_isosceles, 1, 1}, 8, true)
                  .status == Verdict::Status::admissible);  // N/2 = 4
        CHECK(classify_isosceles({TileDescriptor::Kind::right_isosceles, 1, 1}, 6, true)
                  .status == Verdict::Status::inadmissible);
    }
    SUBCASE("N/2 a matching sum of two squares is admissible without a witness") {
        Verdict v = classify_isosceles(TileDescriptor::right_tan(1, 2), 10, true);
        CHECK(v.status == Verdict::Status::admissible);
        CHECK_FALSE(v.witness.has_value());
        CHECK(v.citation == "Theorem 3(v)");
        CHECK(v.notes.size() == 2);
    }
    SUBCASE("N/2 a non-matching sum of two squares records both readings") {
        Verdict v = classify_isosceles(TileDescriptor::right_tan(3, 4), 100, true);
        CHECK(v.status == Verdict::Status::inadmissible);
        CHECK(v.citation == "Theorem 7");
        CHECK_FALSE(v.notes.empty());
    }
    SUBCASE("30-60-90 halves: N/2 or N/6 squares") {
        CHECK(classify_isosceles({TileDescriptor::Kind::right_306090}, 18, true).status ==
              Verdict::Status::admissible);  // N/2 = 9
        Verdict v54 = classify_isosceles({TileDescriptor::Kind::right_306090}, 54, true);
        CHECK(v54.status == Verdict::Status::admissible);  // N/6 = 9
        CHECK(v54.citation == "Theorem 7(iv)");
        CHECK(classify_isosceles({TileDescriptor::Kind::right_306090}, 10, true).status ==
              Verdict::Status::inadmissible);
    }
    SUBCASE("right tiles that are neither similar nor halves are ruled out") {
        Verdict v = classify_isosceles(TileDescriptor::right_tan(1, 2), 25, false);
        CHECK(v.status == Verdict::Status::inadmissible);
        CHECK(v.citation == "Theorem 4");
    }
    SUBCASE("non-right tiles of isosceles targets are out of scope") {
        CHECK(classify_isosceles({TileDescriptor::Kind::oblique_other}, 25, false).status ==
              Verdict::Status::outside_covered_cases);
    }
}

TEST_CASE("describe recovers symbolic descriptors from concrete tilings") {
    Triangle generic{rp(0, 0), rp(7, 1), rp(2, 5)};
    auto [t1, g1] = describe(quadratic(generic, 3));
    CHECK(t1.kind == TileDescriptor::Kind::oblique_other);
    CHECK(g1.kind == TargetDescriptor::Kind::similar_to_tile);

    auto [t2, g2] = describe(biquadratic(2, 3));
    CHECK(t2.kind == TileDescriptor::Kind::right_rational_tan);
    CHECK(t2.e == 2);
    CHECK(t2.f == 3);
    CHECK(g2.kind == TargetDescriptor::Kind::similar_to_tile);

    auto [t3, g3] = describe(hexagonal(2));
    CHECK(t3.kind == TileDescriptor::Kind::isosceles_30_30_120);
    CHECK(g3.kind == TargetDescriptor::Kind::equilateral);

    auto [t4, g4] = describe(equilateral_six(Rational(2)));
    CHECK(t4.kind == TileDescriptor::Kind::right_306090);
    CHECK(g4.kind == TargetDescriptor::Kind::equilateral);

    auto [t5, g5] = describe(pythagorean(3, 4, 5));
    CHECK(t5.kind == TileDescriptor::Kind::right_rational_tan);
    CHECK(g5.kind == TargetDescriptor::Kind::isosceles_with_tile_as_half);

    auto [t6, g6] = describe(right_306090_three(Rational(1)));
    CHECK(t6.kind == TileDescriptor::Kind::right_306090);
    CHECK(g6.kind == TargetDescriptor::Kind::similar_to_tile);

    auto [t7, g7] = describe(bisect_isosceles({rp(0, 0), rp(4, 0), rp(2, 3)}));
    CHECK(t7.kind == TileDescriptor::Kind::right_rational_tan);
    CHECK(g7.kind == TargetDescriptor::Kind::isosceles_with_tile_as_half);
}

TEST_CASE("generator outputs classify as admissible with realizable witnesses") {
    std::vector<Tiling> pool;
    Triangle generic{rp(0, 0), rp(7, 1), rp(2, 5)};
    pool.push_back(quadratic(generic, 4));
    pool.push_back(biquadratic(1, 2));
    pool.push_back(biquadratic(2, 3));
    pool.push_back(hexagonal(1));
    pool.push_back(equilateral_six(Rational(2)));
    pool.push_back(right_306090_three(Rational(1)));
    pool.push_back(bisect_isosceles({rp(0, 0), rp(4, 0), rp(2, 3)}));
    pool.push_back(pythagorean(3, 4, 5));
    for (const Tiling& t : pool) {
        auto [tile, target] = describe(t);
        Verdict v = classify(tile, target, static_cast<unsigned long long>(t.n()));
        CHECK(v.status == Verdict::Status::admissible);
        if (v.witness) {
            Tiling w = realize_witness(*v.witness);
            CHECK(w.n() == t.n());
            CHECK(verify(w).all_ok());
        }
    }
}
