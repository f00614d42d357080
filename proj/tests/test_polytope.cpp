#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "orjsj/errors.hpp"
#include "orjsj/oracle.hpp"
#include "orjsj/polytope.hpp"
#include "orjsj/whitehead.hpp"

using namespace orjsj;
using P = LatticePoint;

namespace {

Word W(const char* s) { return Word::from_letters(s); }

std::vector<P> verts(const LatticePolytope& p) { return {p.vertices().begin(), p.vertices().end()}; }

LatticePolytope hull(std::vector<P> pts) { return convex_hull(pts); }

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

std::size_t ft_markers(const std::string& svg) {
  const auto start = svg.find("<g id=\"ft-polytope\">");
  REQUIRE(start != std::string::npos);
  return count(svg.substr(start), "class=\"vertex\"");
}

}  // namespace

TEST_CASE("trace_loop") {
  CHECK(trace_loop(W("aabbABAB")) ==
        std::vector<P>{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}, {1, 2}, {1, 1}, {0, 1}, {0, 0}});
  CHECK(trace_loop(W("abAB")) == std::vector<P>{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});
  const auto open = trace_loop(W("ab"));
  CHECK(open == std::vector<P>{{0, 0}, {1, 0}, {1, 1}});
  CHECK(open.front() != open.back());
  CHECK(trace_loop(Word()) == std::vector<P>{{0, 0}});
}

TEST_CASE("convex_hull") {
  CHECK(verts(convex_hull(trace_loop(W("aabbABAB")))) ==
        std::vector<P>{{0, 0}, {2, 0}, {2, 2}, {1, 2}, {0, 1}});
  const auto pt = hull({{0, 0}});
  CHECK(pt.dim() == 0);
  const auto seg = hull({{0, 0}, {1, 0}, {2, 0}});
  CHECK(seg.dim() == 1);
  CHECK(verts(seg) == std::vector<P>{{0, 0}, {2, 0}});
  CHECK(hull({{1, 1}, {1, 1}, {1, 1}}).dim() == 0);
  CHECK_THROWS_AS(hull({}), EmptyInput);
}

TEST_CASE("convex_hull against a brute-force extreme-point test") {
  std::mt19937_64 rng(8);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<P> pts(1 + rng() % 25);
    for (auto& p : pts) p = {static_cast<std::int64_t>(rng() % 9), static_cast<std::int64_t>(rng() % 9)};
    const auto h = convex_hull(pts);
    // Every input point lies in the hull; every vertex is an input point.
    for (const auto& p : pts) CHECK(h.contains(p));
    for (const auto& v : h.vertices()) CHECK(std::find(pts.begin(), pts.end(), v) != pts.end());
    // Strict convexity and counterclockwise order.
    const auto vs = verts(h);
    if (vs.size() >= 3) {
      for (std::size_t i = 0; i < vs.size(); ++i) {
        const P a = vs[i], b = vs[(i + 1) % vs.size()], c = vs[(i + 2) % vs.size()];
        CHECK((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x) > 0);
      }
    }
  }
}

TEST_CASE("erode_unit_square") {
  CHECK(verts(erode_unit_square(hull({{0, 0}, {2, 0}, {2, 2}, {1, 2}, {0, 1}}))) ==
        std::vector<P>{{0, 0}, {1, 0}, {1, 1}});
  CHECK(verts(erode_unit_square(unit_square())) == std::vector<P>{{0, 0}});
  CHECK(verts(erode_unit_square(hull({{-2, -1}, {0, -1}, {0, 0}, {-2, 0}}))) ==
        std::vector<P>{{-2, -1}, {-1, -1}});
  CHECK(verts(convex_hull(trace_loop(W("AABaab")))) ==
        std::vector<P>{{-2, -1}, {0, -1}, {0, 0}, {-2, 0}});
  CHECK_THROWS_AS(erode_unit_square(hull({{0, 0}, {2, 0}, {0, 2}})), NotASummand);
  CHECK_THROWS_AS(erode_unit_square(hull({{0, 0}, {3, 0}})), NotASummand);
}

TEST_CASE("minkowski_sum") {
  CHECK(verts(minkowski_sum(hull({{0, 0}, {1, 0}, {1, 1}}), unit_square())) ==
        std::vector<P>{{0, 0}, {2, 0}, {2, 2}, {1, 2}, {0, 1}});
  const auto tri = hull({{0, 0}, {3, 1}, {1, 2}});
  CHECK(minkowski_sum(hull({{5, -2}}), tri) == tri.translated({5, -2}));
  CHECK(minkowski_sum(hull({{0, 0}, {1, 0}}), hull({{0, 0}, {0, 1}})) == unit_square());
}

TEST_CASE("ft_polytope") {
  CHECK(verts(ft_polytope(W("aabbABAB"))) == std::vector<P>{{0, 0}, {1, 0}, {1, 1}});
  for (long long n : {1, 2, 3}) {
    CHECK(verts(ft_polytope(power(W("aabbABAB"), n))) == std::vector<P>{{0, 0}, {n, 0}, {n, n}});
  }
  CHECK(verts(ft_polytope(W("AABaab"))) == std::vector<P>{{0, 0}, {1, 0}});
  CHECK(verts(ft_polytope(W("abAB"))) == std::vector<P>{{0, 0}});
  CHECK_THROWS_AS(ft_polytope(W("ab")), NotInDerivedSubgroup);
  CHECK_THROWS_AS(ft_polytope(Word()), EmptyWord);
}

TEST_CASE("classify") {
  CHECK(classify(ft_polytope(W("abAB"))) == PolytopeClass::Point);
  CHECK(classify(ft_polytope(W("AABaab"))) == PolytopeClass::Segment);
  CHECK(classify(ft_polytope(W("aabbABAB"))) == PolytopeClass::TwoDimensional);
  CHECK(class_name(PolytopeClass::TwoDimensional) == "2d");
}

TEST_CASE("render_svg") {
  const auto svg = render_svg(W("aabbABAB"));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count(svg, "<g id=\"") >= 4);
  CHECK(ft_markers(svg) == 3);
  CHECK(ft_markers(render_svg(W("abAB"))) == 1);
  CHECK(ft_markers(render_svg(W("AABaab"))) == 2);
  CHECK(render_svg(W("aabbABAB")) == svg);
  CHECK_THROWS_AS(render_svg(W("aab")), NotInDerivedSubgroup);
}

TEST_CASE("polytope properties on derived words") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 600; ++i) {
    const std::size_t len = 4 + 2 * (rng() % 14);
    const Word w = oracle::random_derived_word(rng(), len);
    const auto raw = ft_polytope_raw(w);
    const auto p = ft_polytope(w);

    if (max_root(w).exponent == 1) {
      CHECK(minkowski_sum(raw, unit_square()) == convex_hull(trace_loop(w)));
    }

    const Word u = oracle::random_word(rng(), rng() % 6);
    CHECK(ft_polytope(concat(concat(u, w), invert(u))) == p);

    for (long long n : {2, 3}) CHECK(ft_polytope_raw(power(w, n)) == raw.dilated(n));

    CHECK((classify(p) == PolytopeClass::Point) == commutator_power(w).has_value());

    // Normalized: minima are zero and the list starts at the least vertex.
    std::int64_t mx = INT64_MAX, my = INT64_MAX;
    for (const auto& v : p.vertices()) mx = std::min(mx, v.x), my = std::min(my, v.y);
    CHECK(mx == 0);
    CHECK(my == 0);
    CHECK(std::min_element(p.vertices().begin(), p.vertices().end()) == p.vertices().begin());
  }
}
