#include "orjsj/polytope.hpp"

#include <algorithm>
#include <limits>

#include "orjsj/errors.hpp"

namespace orjsj {

namespace {

constexpr LatticePoint kCorners[4] = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};

std::int64_t cross(LatticePoint o, LatticePoint p, LatticePoint q) {
  return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
}

// Andrew's monotone chain over points sorted by (x, y).
std::vector<LatticePoint> monotone_chain(const std::vector<LatticePoint>& pts) {
  if (pts.size() <= 1) return pts;
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const auto& p = pts[i];
    while (k >= lower && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

int LatticePolytope::dim() const {
  if (vertices_.size() <= 1) return 0;
  return vertices_.size() == 2 ? 1 : 2;
}

bool LatticePolytope::contains(LatticePoint p) const {
  const auto& v = vertices_;
  if (v.empty()) return false;
  if (v.size() == 1) return p == v[0];
  if (v.size() == 2) {
    if (cross(v[0], v[1], p) != 0) return false;
    return std::min(v[0].x, v[1].x) <= p.x && p.x <= std::max(v[0].x, v[1].x) &&
           std::min(v[0].y, v[1].y) <= p.y && p.y <= std::max(v[0].y, v[1].y);
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (cross(v[i], v[(i + 1) % v.size()], p) < 0) return false;
  }
  return true;
}

LatticePolytope LatticePolytope::translated(LatticePoint offset) const {
  std::vector<LatticePoint> v;
  v.reserve(vertices_.size());
  for (const auto& p : vertices_) v.push_back(p + offset);
  return LatticePolytope(std::move(v));
}

LatticePolytope LatticePolytope::dilated(std::int64_t factor) const {
  if (factor <= 0) throw std::invalid_argument("dilation factor must be positive");
  std::vector<LatticePoint> v;
  v.reserve(vertices_.size());
  for (const auto& p : vertices_) v.push_back({p.x * factor, p.y * factor});
  return LatticePolytope(std::move(v));
}

LatticePolytope LatticePolytope::normalized() const {
  if (vertices_.empty()) return *this;
  std::int64_t mx = std::numeric_limits<std::int64_t>::max(), my = mx;
  for (const auto& p : vertices_) {
    mx = std::min(mx, p.x);
    my = std::min(my, p.y);
  }
  return translated({-mx, -my});
}

LatticePolytope unit_square() {
  const LatticePoint pts[4] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  return convex_hull(pts);
}

std::vector<LatticePoint> trace_loop(const Word& w) {
  std::vector<LatticePoint> pts;
  pts.reserve(w.size() + 1);
  LatticePoint cur{0, 0};
  pts.push_back(cur);
  for (Letter x : w) {
    (generator(x) == 0 ? cur.x : cur.y) += sign(x);
    pts.push_back(cur);
  }
  return pts;
}

LatticePolytope convex_hull(std::span<const LatticePoint> points) {
  if (points.empty()) throw EmptyInput();
  std::int64_t lo = points[0].x, hi = points[0].x;
  for (const auto& p : points) {
    lo = std::min(lo, p.x);
    hi = std::max(hi, p.x);
  }
  std::vector<LatticePoint> sorted;
  const auto width = static_cast<std::uint64_t>(hi - lo);
  if (width <= 2 * points.size() + 16) {
    // Column extremes are already in (x, y) order: linear time for traces.
    struct Column {
      std::int64_t min = std::numeric_limits<std::int64_t>::max();
      std::int64_t max = std::numeric_limits<std::int64_t>::min();
    };
    std::vector<Column> cols(width + 1);
    for (const auto& p : points) {
      auto& c = cols[static_cast<std::size_t>(p.x - lo)];
      c.min = std::min(c.min, p.y);
      c.max = std::max(c.max, p.y);
    }
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (cols[i].min > cols[i].max) continue;
      const std::int64_t x = lo + static_cast<std::int64_t>(i);
      sorted.push_back({x, cols[i].min});
      if (cols[i].max != cols[i].min) sorted.push_back({x, cols[i].max});
    }
  } else {
    sorted.assign(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  }
  return LatticePolytope(monotone_chain(sorted));
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  std::vector<LatticePoint> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& u : p.vertices()) {
    for (const auto& v : q.vertices()) sums.push_back(u + v);
  }
  return convex_hull(sums);
}

LatticePolytope erode_unit_square(const LatticePolytope& p) {
  // Every vertex of the difference is a vertex of p minus a square corner, and
  // x + [0,1]^2 lies in p iff all four corners do.
  std::vector<LatticePoint> inside;
  for (const auto& v : p.vertices()) {
    for (const auto& q : kCorners) {
      const LatticePoint x = v - q;
      bool ok = true;
      for (const auto& c : kCorners) ok = ok && p.contains(x + c);
      if (ok) inside.push_back(x);
    }
  }
  if (inside.empty()) throw NotASummand("no lattice point x with x + [0,1]^2 inside the hull");
  LatticePolytope result = convex_hull(inside);
  if (minkowski_sum(result, unit_square()) != p) {
    throw NotASummand("difference plus the square does not reproduce the hull");
  }
  return result;
}

LatticePolytope ft_polytope_raw(const Word& w) {
  if (w.empty()) throw EmptyWord();
  if (!exponent_sums(w).in_derived_subgroup()) throw NotInDerivedSubgroup(w.str());
  const Root r = max_root(w);
  // Trace the cyclically reduced root: conjugator spurs are not part of the loop.
  const auto trace = trace_loop(cyclic_reduce(r.root).reduced);
  return erode_unit_square(convex_hull(trace)).dilated(r.exponent);
}

LatticePolytope ft_polytope(const Word& w) { return ft_polytope_raw(w).normalized(); }

PolytopeClass classify(const LatticePolytope& p) {
  switch (p.dim()) {
    case 0: return PolytopeClass::Point;
    case 1: return PolytopeClass::Segment;
    default: return PolytopeClass::TwoDimensional;
  }
}

std::string class_name(PolytopeClass c) {
  switch (c) {
    case PolytopeClass::Point: return "point";
    case PolytopeClass::Segment: return "segment";
    case PolytopeClass::TwoDimensional: return "2d";
  }
  return "?";
}

}  // namespace orjsj
