#pragma once

// Friedl-Tillmann polytopes of relators in F(a, b)'.
//
// The relator is traced on Z^2 (a = +x, b = +y), the convex hull P of the
// loop is taken, and the polytope is the Minkowski difference P minus the unit
// square [0,1]^2. All arithmetic is exact on 64-bit integers.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "orjsj/word.hpp"

namespace orjsj {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend LatticePoint operator+(LatticePoint p, LatticePoint q) { return {p.x + q.x, p.y + q.y}; }
  friend LatticePoint operator-(LatticePoint p, LatticePoint q) { return {p.x - q.x, p.y - q.y}; }
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

enum class PolytopeClass { Point, Segment, TwoDimensional };

// Convex lattice polygon. Vertices are in strictly convex position, listed
// counterclockwise from the lexicographically least one; a segment lists its
// lesser endpoint first.
class LatticePolytope {
 public:
  LatticePolytope() = default;

  std::span<const LatticePoint> vertices() const { return vertices_; }
  int dim() const;
  bool contains(LatticePoint p) const;

  LatticePolytope translated(LatticePoint offset) const;
  LatticePolytope dilated(std::int64_t factor) const;
  // Translates so that both coordinate minima are 0.
  LatticePolytope normalized() const;

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;

 private:
  friend LatticePolytope convex_hull(std::span<const LatticePoint> points);
  explicit LatticePolytope(std::vector<LatticePoint> v) : vertices_(std::move(v)) {}

  std::vector<LatticePoint> vertices_;
};

LatticePolytope unit_square();

// |w| + 1 points starting at the origin.
std::vector<LatticePoint> trace_loop(const Word& w);

// Throws EmptyInput on no points.
LatticePolytope convex_hull(std::span<const LatticePoint> points);

// Minkowski difference p minus [0,1]^2. Throws NotASummand if the result
// plus the square does not give back p.
LatticePolytope erode_unit_square(const LatticePolytope& p);

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

// hull(trace(S)) minus the square for the root S of w, dilated by the root
// exponent, before normalization.
LatticePolytope ft_polytope_raw(const Word& w);

// Normalized polytope. Throws EmptyWord / NotInDerivedSubgroup.
LatticePolytope ft_polytope(const Word& w);

PolytopeClass classify(const LatticePolytope& p);

// "point", "segment" or "2d".
std::string class_name(PolytopeClass c);

// Four-panel SVG: the loop, its hull, the eroding squares, the polytope.
// Throws NotInDerivedSubgroup.
std::string render_svg(const Word& w);

}  // namespace orjsj
