#pragma once

#include "tritile/tiling.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tritile {

// ---- integer utilities ----

bool is_square(unsigned long long n);
bool is_k_times_square(unsigned long long k, unsigned long long n);

/// True iff every prime congruent to 3 mod 4 divides n to an even power.
bool is_sum_two_squares(unsigned long long n);

/// All pairs e <= f with e^2 + f^2 = n (e may be zero).
std::vector<std::pair<unsigned long long, unsigned long long>> two_square_decompositions(
    unsigned long long n);

unsigned long long totient(unsigned long long n);

/// Sorted list of all n with totient(n) = d; search bounded by d^2 + d.
std::vector<unsigned long long> totient_preimage(unsigned long long d);

// ---- symbolic descriptors ----

struct TileDescriptor {
    enum class Kind {
        right_rational_tan,   // right triangle, tan(alpha) = e/f with gcd(e,f)=1, e <= f
        right_306090,         // right triangle with alpha = pi/6
        right_isosceles,      // alpha = beta = pi/4
        right_other,          // right, irrational tangent, not pi/6
        isosceles_30_30_120,  // base angles pi/6, apex 2*pi/3
        equilateral,
        oblique_other,
    };
    Kind kind = Kind::oblique_other;
    long long e = 0, f = 0;  // only for right_rational_tan

    static TileDescriptor right_tan(long long e, long long f);
    std::string str() const;
};

struct TargetDescriptor {
    enum class Kind {
        similar_to_tile,
        equilateral,
        isosceles_with_tile_as_half,
        isosceles_other,
        other,
    };
    Kind kind = Kind::other;

    std::string str() const;
};

/// A generator recipe that reconstructs a tiling with the promised N.
struct Witness {
    enum class Kind {
        quadratic,            // quadratic(_, a); N = a^2
        biquadratic,          // biquadratic(a, b); N = a^2 + b^2
        hexagonal,            // hexagonal(a); N = 3(a+1)^2
        triple_square,        // 3a^2-tiling of a 30-60-90 triangle
        double_quadratic,     // bisect isosceles (legs a,b per half), quadratic c each half
        double_triple_square, // bisect (equilateral if b, else 30-30-120), 3a^2 each half
        pythagorean,          // pythagorean(a, b, c); N = 2c^2
    };
    Kind kind;
    long long a = 0, b = 0, c = 0;

    std::string family() const;
    std::string str() const;
};

Tiling realize_witness(const Witness& w);

struct Verdict {
    enum class Status { admissible, inadmissible, outside_covered_cases };
    Status status = Status::outside_covered_cases;
    std::optional<Witness> witness;
    std::string citation;
    std::vector<std::string> notes;

    std::string status_str() const;
};

// ---- decision procedures ----

Verdict classify_similar(const TileDescriptor& tile, unsigned long long n);
Verdict classify_equilateral(const TileDescriptor& tile, unsigned long long n);
Verdict classify_isosceles(const TileDescriptor& tile, unsigned long long n, bool tile_as_half);

/// Dispatches on the target descriptor.
Verdict classify(const TileDescriptor& tile, const TargetDescriptor& target,
                 unsigned long long n);

/// Symbolic descriptors of a concrete tiling's tile and reference.
std::pair<TileDescriptor, TargetDescriptor> describe(const Tiling& t);

}  // namespace tritile
