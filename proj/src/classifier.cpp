#include "tritile/classifier.hpp"

#include "tritile/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tritile {

namespace {

unsigned long long isqrt_ull(unsigned long long n) {
    if (n == 0) return 0;
    auto r = static_cast<unsigned long long>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

bool is_square(unsigned long long n) {
    unsigned long long r = isqrt_ull(n);
    return r * r == n;
}

bool is_k_times_square(unsigned long long k, unsigned long long n) {
    if (k == 0) throw std::domain_error("k must be positive");
    return n % k == 0 && is_square(n / k);
}

bool is_sum_two_squares(unsigned long long n) {
    if (n == 0) return true;
    for (unsigned long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (p % 4 == 3 && e % 2 == 1) return false;
    }
    if (n > 1 && n % 4 == 3) return false;
    return true;
}

std::vector<std::pair<unsigned long long, unsigned long long>> two_square_decompositions(
    unsigned long long n) {
    std::vector<std::pair<unsigned long long, unsigned long long>> out;
    for (unsigned long long e = 0; 2 * e * e <= n; ++e) {
        unsigned long long rest = n - e * e;
        unsigned long long f = isqrt_ull(rest);
        if (f * f == rest && e <= f) out.emplace_back(e, f);
    }
    return out;
}

unsigned long long totient(unsigned long long n) {
    if (n == 0) throw std::domain_error("totient needs n >= 1");
    unsigned long long result = n;
    for (unsigned long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<unsigned long long> totient_preimage(unsigned long long d) {
    if (d == 0) throw std::domain_error("totient_preimage needs d >= 1");
    std::vector<unsigned long long> out;
    for (unsigned long long n = 1; n <= d * d + d; ++n) {
        if (totient(n) == d) out.push_back(n);
    }
    return out;
}

TileDescriptor TileDescriptor::right_tan(long long e, long long f) {
    if (e < 1 || f < 1) throw std::domain_error("legs must be positive");
    long long g = std::gcd(e, f);
    e /= g;
    f /= g;
    if (e > f) std::swap(e, f);
    if (e == f) return {Kind::right_isosceles, 1, 1};
    return {Kind::right_rational_tan, e, f};
}

std::string TileDescriptor::str() const {
    switch (kind) {
        case Kind::right_rational_tan:
            return "right-tan " + std::to_string(e) + "/" + std::to_string(f);
        case Kind::right_306090: return "right-306090";
        case Kind::right_isosceles: return "right-isosceles";
        case Kind::right_other: return "right-other";
        case Kind::isosceles_30_30_120: return "isosceles-30-30-120";
        case Kind::equilateral: return "equilateral";
        case Kind::oblique_other: return "oblique-other";
    }
    return "?";
}

std::string TargetDescriptor::str() const {
    switch (kind) {
        case Kind::similar_to_tile: return "similar";
        case Kind::equilateral: return "equilateral";
        case Kind::isosceles_with_tile_as_half: return "isosceles-half";
        case Kind::isosceles_other: return "isosceles-other";
        case Kind::other: return "other";
    }
    return "?";
}

std::string Witness::family() const {
    switch (kind) {
        case Kind::quadratic: return "quadratic";
        case Kind::biquadratic: return "biquadratic";
        case Kind::hexagonal: return "hexagonal";
        case Kind::triple_square: return "triple-square";
        case Kind::double_quadratic: return "bisect+quadratic";
        case Kind::double_triple_square: return "bisect+triple-square";
        case Kind::pythagorean: return "pythagorean";
    }
    return "?";
}

std::string Witness::str() const {
    switch (kind) {
        case Kind::quadratic: return "quadratic(n=" + std::to_string(a) + ")";
        case Kind::biquadratic:
            return "biquadratic(" + std::to_string(a) + "," + std::to_string(b) + ")";
        case Kind::hexagonal: return "hexagonal(" + std::to_string(a) + ")";
        case Kind::triple_square: return "triple-square(m=" + std::to_string(a) + ")";
        case Kind::double_quadratic: return "bisect+quadratic(m=" + std::to_string(c) + ")";
        case Kind::double_triple_square:
            return "bisect+triple-square(m=" + std::to_string(a) + ")";
        case Kind::pythagorean:
            return "pythagorean(" + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(c) + ")";
    }
    return "?";
}

namespace {

QuadNum rq(long long num, long long den = 1) { return QuadNum(Rational(num, den)); }
QuadNum s3q(long long num, long long den = 1) {
    return QuadNum(Rational(0), Rational(num, den), 3);
}

Triangle generic_scalene() {
    return {{rq(0), rq(0)}, {rq(7), rq(1)}, {rq(2), rq(5)}};
}

Triangle ref_306090() {
    return {{rq(0), rq(0)}, {rq(2), rq(0)}, {rq(1, 2), s3q(1, 2)}};
}

Triangle ref_equilateral() {
    return {{rq(0), rq(0)}, {rq(2), rq(0)}, {rq(1), s3q(1)}};
}

}  // namespace

Tiling realize_witness(const Witness& w) {
    switch (w.kind) {
        case Witness::Kind::quadratic:
            return quadratic(generic_scalene(), static_cast<int>(w.a));
        case Witness::Kind::biquadratic:
            return biquadratic(static_cast<int>(w.a), static_cast<int>(w.b));
        case Witness::Kind::hexagonal:
            return hexagonal(static_cast<int>(w.a));
        case Witness::Kind::triple_square:
            return compose(quadratic(ref_306090(), static_cast<int>(w.a)),
                           right_306090_three(Rational(1)));
        case Witness::Kind::double_quadratic: {
            Triangle iso;
            if (w.a > 0) {
                iso = {{rq(0), rq(0)}, {rq(2 * w.a), rq(0)}, {rq(w.a), rq(w.b)}};
            } else {
                iso = ref_equilateral();
            }
            Tiling two = bisect_isosceles(iso);
            Tiling sub = quadratic(two.tiles[0], static_cast<int>(w.c));
            return compose(two, sub);
        }
        case Witness::Kind::double_triple_square: {
            Triangle iso = w.b != 0
                               ? ref_equilateral()
                               : Triangle{{rq(0), rq(0)}, {s3q(2), rq(0)}, {s3q(1), rq(1)}};
            Tiling two = bisect_isosceles(iso);
            Tiling sub = compose(quadratic(two.tiles[0], static_cast<int>(w.a)),
                                 right_306090_three(Rational(1)));
            return compose(two, sub);
        }
        case Witness::Kind::pythagorean:
            return pythagorean(static_cast<int>(w.a), static_cast<int>(w.b),
                               static_cast<int>(w.c));
    }
    throw std::domain_error("unknown witness kind");
}

std::string Verdict::status_str() const {
    switch (status) {
        case Status::admissible: return "admissible";
        case Status::inadmissible: return "inadmissible";
        case Status::outside_covered_cases: return "outside_covered_cases";
    }
    return "?";
}

namespace {

Verdict admissible(Witness w, std::string citation) {
    Verdict v;
    v.status = Verdict::Status::admissible;
    v.witness = std::move(w);
    v.citation = std::move(citation);
    return v;
}

Verdict admissible_no_witness(std::string citation, std::string note) {
    Verdict v;
    v.status = Verdict::Status::admissible;
    v.citation = std::move(citation);
    v.notes.push_back(std::move(note));
    return v;
}

Verdict inadmissible(std::string citation) {
    Verdict v;
    v.status = Verdict::Status::inadmissible;
    v.citation = std::move(citation);
    return v;
}

Verdict outside(std::string note) {
    Verdict v;
    v.status = Verdict::Status::outside_covered_cases;
    v.notes.push_back(std::move(note));
    return v;
}

}  // namespace

Verdict classify_similar(const TileDescriptor& tile, unsigned long long n) {
    if (n == 0) throw std::domain_error("N must be positive");
    unsigned long long root = isqrt_ull(n);
    switch (tile.kind) {
        case TileDescriptor::Kind::right_isosceles:
        case TileDescriptor::Kind::right_rational_tan: {
            long long e = tile.kind == TileDescriptor::Kind::right_isosceles ? 1 : tile.e;
            long long f = tile.kind == TileDescriptor::Kind::right_isosceles ? 1 : tile.f;
            if (is_square(n))
                return admissible({Witness::Kind::quadratic, (long long)root}, "Theorem 5(i)");
            unsigned long long s = (unsigned long long)(e * e + f * f);
            if (n % s == 0 && is_square(n / s)) {
                long long k = (long long)isqrt_ull(n / s);
                return admissible({Witness::Kind::biquadratic, k * e, k * f}, "Theorem 5(i)");
            }
            return inadmissible("Theorem 5(i)");
        }
        case TileDescriptor::Kind::right_306090:
            if (is_square(n))
                return admissible({Witness::Kind::quadratic, (long long)root}, "Theorem 5(ii)");
            if (is_k_times_square(3, n))
                return admissible({Witness::Kind::triple_square, (long long)isqrt_ull(n / 3)},
                                  "Theorem 5(ii)");
            return inadmissible("Theorem 5(ii)");
        case TileDescriptor::Kind::right_other:
            if (is_square(n))
                return admissible({Witness::Kind::quadratic, (long long)root}, "Theorem 5(iii)");
            return inadmissible("Theorem 5(iii)");
        case TileDescriptor::Kind::equilateral:
            if (is_square(n))
                return admissible({Witness::Kind::quadratic, (long long)root}, "Theorem 6");
            return inadmissible("Theorem 6");
        case TileDescriptor::Kind::isosceles_30_30_120:
            if (is_square(n))
                return admissible({Witness::Kind::quadratic, (long long)root}, "Theorem 7(i)");
            return inadmissible("Theorem 7(i)");
        case TileDescriptor::Kind::oblique_other:
            if (is_square(n))
                return admissible({Witness::Kind::quadratic, (long long)root}, "Theorem 8");
            return inadmissible("Theorem 8");
    }
    throw std::domain_error("unknown tile kind");
}

Verdict classify_equilateral(const TileDescriptor& tile, unsigned long long n) {
    if (n == 0) throw std::domain_error("N must be positive");
    switch (tile.kind) {
        case TileDescriptor::Kind::isosceles_30_30_120:
            if (is_k_times_square(3, n))
                return admissible(
                    {Witness::Kind::hexagonal, (long long)isqrt_ull(n / 3) - 1},
                    "Theorem 6");
            return inadmissible("Theorem 6");
        case TileDescriptor::Kind::right_306090:
            if (is_k_times_square(6, n))
                return admissible(
                    {Witness::Kind::double_triple_square, (long long)isqrt_ull(n / 6), 1},
                    "Theorem 6");
            if (is_k_times_square(2, n))
                return admissible(
                    {Witness::Kind::double_quadratic, 0, 0, (long long)isqrt_ull(n / 2)},
                    "Theorem 6");
            return inadmissible("Theorem 6");
        case TileDescriptor::Kind::equilateral:
            if (is_square(n))
                return admissible({Witness::Kind::quadratic, (long long)isqrt_ull(n)},
                                  "Theorem 6");
            return inadmissible("Theorem 6");
        case TileDescriptor::Kind::right_rational_tan:
        case TileDescriptor::Kind::right_isosceles:
        case TileDescriptor::Kind::right_other:
            return inadmissible("Theorem 6");
        case TileDescriptor::Kind::oblique_other:
            return outside("non-right, non-30-30-120 tiles of an equilateral triangle are "
                           "treated in the companion papers");
    }
    throw std::domain_error("unknown tile kind");
}

Verdict classify_isosceles(const TileDescriptor& tile, unsigned long long n,
                           bool tile_as_half) {
    if (n == 0) throw std::domain_error("N must be positive");
    if (!tile_as_half) {
        bool right = tile.kind == TileDescriptor::Kind::right_rational_tan ||
                     tile.kind == TileDescriptor::Kind::right_306090 ||
                     tile.kind == TileDescriptor::Kind::right_isosceles ||
                     tile.kind == TileDescriptor::Kind::right_other;
        if (right) return inadmissible("Theorem 4");
        return outside("non-right tiles of an isosceles triangle are treated in the "
                       "companion papers");
    }
    switch (tile.kind) {
        case TileDescriptor::Kind::right_isosceles:
            // Half of a right isosceles triangle is similar to the whole.
            if (is_square(n))
                return admissible({Witness::Kind::quadratic, (long long)isqrt_ull(n)},
                                  "Theorem 7(ii)");
            if (n % 2 == 0 && is_square(n / 2))
                return admissible(
                    {Witness::Kind::double_quadratic, 1, 1, (long long)isqrt_ull(n / 2)},
                    "Theorem 7(iii)");
            return inadmissible("Theorem 7");
        case TileDescriptor::Kind::right_rational_tan: {
            unsigned long long s =
                (unsigned long long)(tile.e * tile.e + tile.f * tile.f);
            // Pythagorean layout when the hypotenuse is rational too.
            if (n % 2 == 0 && is_square(s) && (n / 2) % s == 0 && is_square(n / 2 / s)) {
                long long k = (long long)isqrt_ull(n / 2 / s);
                long long r0 = (long long)isqrt_ull(s);
                return admissible({Witness::Kind::pythagorean, k * tile.e, k * tile.f, k * r0},
                                  "Theorem 7(iii)");
            }
            if (n % 2 == 0 && is_square(n / 2))
                return admissible({Witness::Kind::double_quadratic, tile.e, tile.f,
                                   (long long)isqrt_ull(n / 2)},
                                  "Theorem 7(iii)");
            if (n % 2 == 0 && (n / 2) % s == 0 && is_square(n / 2 / s)) {
                Verdict v = admissible_no_witness(
                    "Theorem 3(v)",
                    "N/2 = " + std::to_string(n / 2) +
                        " is a sum of two squares matching the tile legs; the doubled "
                        "biquadratic tiling exists but no constructive witness is "
                        "implemented");
                v.notes.push_back("Theorem 7's if-and-only-if list omits this case");
                return v;
            }
            if (n % 2 == 0 && is_sum_two_squares(n / 2)) {
                Verdict v = inadmissible("Theorem 7");
                v.notes.push_back(
                    "N/2 is a sum of two squares not proportional to the tile legs; "
                    "Theorem 3(v)'s necessary condition holds but Theorem 7 excludes it");
                return v;
            }
            return inadmissible("Theorem 7");
        }
        case TileDescriptor::Kind::right_306090:
            if (n % 2 == 0 && is_square(n / 2))
                return admissible(
                    {Witness::Kind::double_quadratic, 0, 0, (long long)isqrt_ull(n / 2)},
                    "Theorem 7(iii)");
            if (n % 6 == 0 && is_square(n / 6))
                return admissible(
                    {Witness::Kind::double_triple_square, (long long)isqrt_ull(n / 6), 0},
                    "Theorem 7(iv)");
            return inadmissible("Theorem 7");
        case TileDescriptor::Kind::right_other:
            if (n % 2 == 0 && is_square(n / 2)) {
                return admissible_no_witness(
                    "Theorem 7(iii)",
                    "bisect the isosceles triangle and tile each half quadratically; no "
                    "exact coordinates exist for this symbolic tile class");
            }
            return inadmissible("Theorem 7");
        default:
            throw std::domain_error(
                "half of an isosceles triangle is a right triangle; got " + tile.str());
    }
}

Verdict classify(const TileDescriptor& tile, const TargetDescriptor& target,
                 unsigned long long n) {
    switch (target.kind) {
        case TargetDescriptor::Kind::similar_to_tile: return classify_similar(tile, n);
        case TargetDescriptor::Kind::equilateral: return classify_equilateral(tile, n);
        case TargetDescriptor::Kind::isosceles_with_tile_as_half:
            return classify_isosceles(tile, n, true);
        case TargetDescriptor::Kind::isosceles_other:
            return classify_isosceles(tile, n, false);
        case TargetDescriptor::Kind::other:
            return outside("scalene non-similar targets are treated in the companion papers");
    }
    throw std::domain_error("unknown target kind");
}

std::pair<TileDescriptor, TargetDescriptor> describe(const Tiling& t) {
    if (t.tiles.empty()) throw std::domain_error("empty tiling");
    Shape st = shape_of(t.tiles[0]);
    Shape sr = shape_of(t.reference);

    TileDescriptor tile;
    bool right = st.sq[0] + st.sq[1] == st.sq[2];
    bool eq01 = st.sq[0] == st.sq[1];
    bool eq12 = st.sq[1] == st.sq[2];
    QuadNum three(3), four(4);
    if (eq01 && eq12) {
        tile.kind = TileDescriptor::Kind::equilateral;
    } else if (right && eq01) {
        tile.kind = TileDescriptor::Kind::right_isosceles;
        tile.e = tile.f = 1;
    } else if (right && st.sq[1] == three * st.sq[0] && st.sq[2] == four * st.sq[0]) {
        tile.kind = TileDescriptor::Kind::right_306090;
    } else if (eq01 && st.sq[2] == three * st.sq[0]) {
        tile.kind = TileDescriptor::Kind::isosceles_30_30_120;
    } else if (right) {
        QuadNum ratio = st.sq[0] / st.sq[1];
        if (ratio.is_rational()) {
            if (auto r = rational_sqrt(ratio.rat())) {
                tile = TileDescriptor::right_tan(static_cast<long long>(r->num()),
                                                 static_cast<long long>(r->den()));
            } else {
                tile.kind = TileDescriptor::Kind::right_other;
            }
        } else {
            tile.kind = TileDescriptor::Kind::right_other;
        }
    } else {
        tile.kind = TileDescriptor::Kind::oblique_other;
    }

    TargetDescriptor target;
    if (similar_shapes(st, sr)) {
        target.kind = TargetDescriptor::Kind::similar_to_tile;
    } else if (sr.sq[0] == sr.sq[1] && sr.sq[1] == sr.sq[2]) {
        target.kind = TargetDescriptor::Kind::equilateral;
    } else if (sr.sq[0] == sr.sq[1] || sr.sq[1] == sr.sq[2]) {
        QuadNum eq2 = sr.sq[0] == sr.sq[1] ? sr.sq[0] : sr.sq[2];
        QuadNum base2 = sr.sq[0] == sr.sq[1] ? sr.sq[2] : sr.sq[0];
        QuadNum quarter(Rational(1, 4));
        Shape half{{quarter * base2, eq2 - quarter * base2, eq2}};
        std::sort(half.sq.begin(), half.sq.end());
        target.kind = similar_shapes(half, st)
                          ? TargetDescriptor::Kind::isosceles_with_tile_as_half
                          : TargetDescriptor::Kind::isosceles_other;
    } else {
        target.kind = TargetDescriptor::Kind::other;
    }
    return {tile, target};
}

}  // namespace tritile
