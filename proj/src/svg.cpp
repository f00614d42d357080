#include <algorithm>
#include <sstream>

#include "orjsj/errors.hpp"
#include "orjsj/polytope.hpp"

namespace orjsj {

namespace {

constexpr int kPanel = 240;
constexpr int kMargin = 30;

// Maps lattice coordinates of one panel to SVG user space (y axis up).
class Frame {
 public:
  Frame(int panel_index, std::int64_t min_x, std::int64_t min_y, std::int64_t max_x,
        std::int64_t max_y)
      : left_(panel_index * kPanel), min_x_(min_x - 1), min_y_(min_y - 1) {
    const auto span = std::max<std::int64_t>({max_x - min_x + 2, max_y - min_y + 2, 1});
    scale_ = static_cast<double>(kPanel - 2 * kMargin) / static_cast<double>(span);
    max_x_ = min_x_ + span;
    max_y_ = min_y_ + span;
  }

  double x(double v) const { return left_ + kMargin + (v - min_x_) * scale_; }
  double y(double v) const { return kPanel - kMargin - (v - min_y_) * scale_; }
  double scale() const { return scale_; }

  void grid(std::ostream& os) const {
    os << "    <g class=\"grid\" stroke=\"#bbbbbb\" stroke-width=\"0.5\" stroke-dasharray=\"2,2\">\n";
    for (auto i = min_x_; i <= max_x_; ++i) {
      os << "      <line x1=\"" << x(i) << "\" y1=\"" << y(min_y_) << "\" x2=\"" << x(i)
         << "\" y2=\"" << y(max_y_) << "\"/>\n";
    }
    for (auto j = min_y_; j <= max_y_; ++j) {
      os << "      <line x1=\"" << x(min_x_) << "\" y1=\"" << y(j) << "\" x2=\"" << x(max_x_)
         << "\" y2=\"" << y(j) << "\"/>\n";
    }
    os << "    </g>\n";
    os << "    <g class=\"axes\" stroke=\"#000000\" stroke-width=\"1\">\n"
       << "      <line x1=\"" << x(min_x_) << "\" y1=\"" << y(0) << "\" x2=\"" << x(max_x_)
       << "\" y2=\"" << y(0) << "\"/>\n"
       << "      <line x1=\"" << x(0) << "\" y1=\"" << y(min_y_) << "\" x2=\"" << x(0)
       << "\" y2=\"" << y(max_y_) << "\"/>\n"
       << "    </g>\n";
  }

  void polygon(std::ostream& os, std::span<const LatticePoint> v, const char* fill,
               const char* stroke) const {
    if (v.size() == 1) return;
    os << "    <polygon fill=\"" << fill << "\" fill-opacity=\"0.5\" stroke=\"" << stroke
       << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < v.size(); ++i) {
      os << (i ? " " : "") << x(static_cast<double>(v[i].x)) << ","
         << y(static_cast<double>(v[i].y));
    }
    os << "\"/>\n";
  }

  void markers(std::ostream& os, std::span<const LatticePoint> v, const char* stroke) const {
    for (const auto& p : v) {
      os << "    <circle class=\"vertex\" cx=\"" << x(static_cast<double>(p.x)) << "\" cy=\""
         << y(static_cast<double>(p.y)) << "\" r=\"4\" fill=\"#ffffff\" stroke=\"" << stroke
         << "\"/>\n";
    }
  }

 private:
  int left_;
  std::int64_t min_x_, min_y_, max_x_ = 0, max_y_ = 0;
  double scale_ = 1;
};

struct Box {
  std::int64_t min_x, min_y, max_x, max_y;
};

Box bounds(std::span<const LatticePoint> pts) {
  Box b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (const auto& p : pts) {
    b.min_x = std::min(b.min_x, p.x);
    b.min_y = std::min(b.min_y, p.y);
    b.max_x = std::max(b.max_x, p.x);
    b.max_y = std::max(b.max_y, p.y);
  }
  return b;
}

}  // namespace

std::string render_svg(const Word& w) {
  if (w.empty()) throw EmptyWord();
  if (!exponent_sums(w).in_derived_subgroup()) throw NotInDerivedSubgroup(w.str());

  const auto trace = trace_loop(w);
  const LatticePolytope hull = convex_hull(trace);
  const LatticePolytope corners = erode_unit_square(hull);
  const LatticePolytope ft = ft_polytope(w);
  const Box box = bounds(trace);

  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 4 * kPanel << "\" height=\""
     << kPanel << "\" viewBox=\"0 0 " << 4 * kPanel << " " << kPanel << "\">\n"
     << "  <title>" << w.str() << "</title>\n";

  {
    Frame f(0, box.min_x, box.min_y, box.max_x, box.max_y);
    os << "  <g id=\"loop\">\n";
    f.grid(os);
    os << "    <polyline fill=\"none\" stroke=\"#1f4fd8\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < trace.size(); ++i) {
      os << (i ? " " : "") << f.x(static_cast<double>(trace[i].x)) << ","
         << f.y(static_cast<double>(trace[i].y));
    }
    os << "\"/>\n  </g>\n";
  }
  {
    Frame f(1, box.min_x, box.min_y, box.max_x, box.max_y);
    os << "  <g id=\"hull\">\n";
    f.grid(os);
    f.polygon(os, hull.vertices(), "#c8f0c8", "#2e7d32");
    f.markers(os, hull.vertices(), "#2e7d32");
    os << "  </g>\n";
  }
  {
    Frame f(2, box.min_x, box.min_y, box.max_x, box.max_y);
    os << "  <g id=\"squares\">\n";
    f.grid(os);
    f.polygon(os, hull.vertices(), "none", "#2e7d32");
    for (const auto& p : corners.vertices()) {
      os << "    <rect x=\"" << f.x(static_cast<double>(p.x) + 0.05) << "\" y=\""
         << f.y(static_cast<double>(p.y) + 0.95) << "\" width=\"" << 0.9 * f.scale()
         << "\" height=\"" << 0.9 * f.scale() << "\" fill=\"none\" stroke=\"#d32f2f\"/>\n";
    }
    f.markers(os, corners.vertices(), "#d32f2f");
    os << "  </g>\n";
  }
  {
    const Box fb = bounds(ft.vertices());
    Frame f(3, fb.min_x, fb.min_y, std::max(fb.max_x, std::int64_t{1}),
            std::max(fb.max_y, std::int64_t{1}));
    os << "  <g id=\"ft-polytope\">\n";
    f.grid(os);
    if (ft.vertices().size() == 2) {
      const auto& v = ft.vertices();
      os << "    <line x1=\"" << f.x(static_cast<double>(v[0].x)) << "\" y1=\""
         << f.y(static_cast<double>(v[0].y)) << "\" x2=\"" << f.x(static_cast<double>(v[1].x))
         << "\" y2=\"" << f.y(static_cast<double>(v[1].y))
         << "\" stroke=\"#d32f2f\" stroke-width=\"2\"/>\n";
    } else {
      f.polygon(os, ft.vertices(), "#f8c8c8", "#d32f2f");
    }
    f.markers(os, ft.vertices(), "#d32f2f");
    os << "  </g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace orjsj
