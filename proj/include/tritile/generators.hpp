#pragma once

#include "tritile/tiling.hpp"

#include <string>
#include <vector>

namespace tritile {

/// Quadratic n^2-tiling: n-1 lines parallel to each side.  The tile is
/// similar to abc with ratio 1/n.
Tiling quadratic(const Triangle& abc, int n);

/// Right triangle split by the altitude from the right angle into two
/// similar triangles, quadratically tiled with m^2 and n^2 tiles.
/// N = m^2 + n^2, tile legs (m, n), all coordinates rational.
Tiling biquadratic(int m, int n);

/// 3(k+1)^2-tiling of an equilateral triangle by the isosceles tile with
/// sides (1, 1, sqrt(3)): 1+2+...+k hexagons of six tiles stacked
/// bowling-pin style plus k+1 tiles along each side.  Coordinates in Q(sqrt 3).
Tiling hexagonal(int k);

/// Six congruent 30-60-90 tiles meeting at the centroid of an equilateral
/// triangle of the given side.
Tiling equilateral_six(const Rational& side);

/// 3-tiling of a 30-60-90 triangle (sides scale*(1, sqrt 3, 2)) by tiles
/// similar to it with ratio 1/sqrt(3).
Tiling right_306090_three(const Rational& scale);

/// 2-tiling of an isosceles triangle by its apex altitude.
Tiling bisect_isosceles(const Triangle& abc);

/// 2r^2-tiling of an isosceles triangle for a Pythagorean triple
/// p^2 + q^2 = r^2: one half quadratically r^2-tiled, the other half split
/// by its altitude into p^2- and q^2-tiled pieces; tile legs (p, q).
Tiling pythagorean(int p, int q, int r);

/// Replaces each tile of `base` by the similarity image of `sub`; requires
/// sub's reference to be similar (up to reflection) to base's tile shape.
Tiling compose(const Tiling& base, const Tiling& sub);

/// Replaces tiles i and j, which must form a rectangle split by their common
/// hypotenuse, with the two triangles cut by the other diagonal.
Tiling rect_flip(const Tiling& t, int i, int j);

/// Tile index pairs on which rect_flip is legal.
std::vector<std::pair<int, int>> flippable_pairs(const Tiling& t);

/// Exact-coordinate exemplars digitized from the published figures.
Tiling catalog(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace tritile
