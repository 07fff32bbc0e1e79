#include "a2b/figure.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <map>

namespace a2b {

namespace {

struct P2 {
  double x, y;
};

using Polygon = std::vector<P2>;

// simple-root coordinates (a1, a2) -> sum-zero (v1, v2, v3) -> plane, with
// e_k drawn as unit vectors at 90 + 120k degrees so the roots sit at 60 degrees
P2 to_plane(double a1, double a2) {
  const double v1 = (2 * a1 + a2) / 3, v2 = v1 - a1, v3 = v2 - a2;
  const double s = std::sqrt(3.0) / 2;
  return {s * (v3 - v2), v1 - 0.5 * (v2 + v3)};
}

double root_value(std::size_t root, const P2& a) {
  switch (root) {
    case 0: return a.x;
    case 1: return a.y;
    default: return -a.x - a.y;
  }
}

// Sutherland-Hodgman clip of a polygon in (a1, a2) coordinates by one root bound.
Polygon clip(const Polygon& poly, const RootBound& b) {
  const double bound = b.bound.get_d();
  auto inside = [&](const P2& p) {
    const double v = root_value(b.root, p);
    return b.at_least ? v >= bound - 1e-12 : v <= bound + 1e-12;
  };
  auto cross_at = [&](const P2& p, const P2& q) {
    const double vp = root_value(b.root, p), vq = root_value(b.root, q);
    const double t = (bound - vp) / (vq - vp);
    return P2{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
  };
  Polygon out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const P2& cur = poly[i];
    const P2& prev = poly[(i + poly.size() - 1) % poly.size()];
    if (inside(cur)) {
      if (!inside(prev)) out.push_back(cross_at(prev, cur));
      out.push_back(cur);
    } else if (inside(prev)) {
      out.push_back(cross_at(prev, cur));
    }
  }
  return out;
}

const char* colour(FlatId id) {
  switch (id) {
    case FlatId::A12: return "#e41a1c";
    case FlatId::A23: return "#377eb8";
    case FlatId::A31: return "#4daf4a";
    case FlatId::Ap: return "#984ea3";
    case FlatId::AD: return "#ff7f00";
  }
  return "#999999";
}

class Canvas {
 public:
  Canvas(P2 lo, P2 hi) : lo_(lo), hi_(hi) {
    const double w = hi.x - lo.x, h = hi.y - lo.y;
    scale_ = std::min((kSize - 2 * kPad) / std::max(w, 1e-9), (kSize - 2 * kPad) / std::max(h, 1e-9));
  }
  // plane point -> pixel
  P2 px(const P2& p) const { return {kPad + (p.x - lo_.x) * scale_, kSize - kPad - (p.y - lo_.y) * scale_}; }
  P2 px_src(double a1, double a2) const { return px(to_plane(a1, a2)); }

  static constexpr double kSize = 640;
  static constexpr double kPad = 40;

 private:
  P2 lo_, hi_;
  double scale_ = 1;
};

std::string points_attr(const Canvas& cv, const Polygon& poly) {
  std::string s;
  for (const auto& p : poly) {
    const P2 q = cv.px_src(p.x, p.y);
    s += fmt::format("{:.2f},{:.2f} ", q.x, q.y);
  }
  if (!s.empty()) s.pop_back();
  return s;
}

double extent(const Polygon& poly) {
  double m = 0;
  for (const auto& p : poly)
    for (const auto& q : poly) m = std::max(m, std::hypot(p.x - q.x, p.y - q.y));
  return m;
}

}  // namespace

std::string flat_figure_svg(const TripleAnalysis& a, FlatId id, const GridSpec& grid) {
  std::vector<FlatVector> box = a.grid(id, grid);
  double lo1 = 1e300, hi1 = -1e300, lo2 = 1e300, hi2 = -1e300;
  for (const auto& c : box) {
    auto r = c.simple_root_coords();
    lo1 = std::min(lo1, r[0].get_d());
    hi1 = std::max(hi1, r[0].get_d());
    lo2 = std::min(lo2, r[1].get_d());
    hi2 = std::max(hi2, r[1].get_d());
  }
  const Polygon window{{lo1, lo2}, {hi1, lo2}, {hi1, hi2}, {lo1, hi2}};
  P2 plo{1e300, 1e300}, phi{-1e300, -1e300};
  for (const auto& w : window) {
    const P2 p = to_plane(w.x, w.y);
    plo = {std::min(plo.x, p.x), std::min(plo.y, p.y)};
    phi = {std::max(phi.x, p.x), std::max(phi.y, p.y)};
  }
  const Canvas cv(plo, phi);

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n",
      Canvas::kSize, Canvas::kSize + 60);
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += fmt::format("<text x=\"{}\" y=\"20\" font-size=\"15\">{}: Z = ({}, {}, {}), {}</text>\n", Canvas::kPad,
                     to_string(id), a.z()[0].str(), a.z()[1].str(), a.z()[2].str(), ray_class(a.z()));
  svg += fmt::format("<polygon points=\"{}\" fill=\"none\" stroke=\"#bbbbbb\"/>\n", points_attr(cv, window));

  // root frame through the window centre
  const P2 mid{(lo1 + hi1) / 2, (lo2 + hi2) / 2};
  const double reach = std::max(hi1 - lo1, hi2 - lo2);
  const std::array<std::array<double, 2>, 3> root_vectors{{{2, -1}, {-1, 2}, {-1, -1}}};
  for (std::size_t r = 0; r < 3; ++r) {
    const double k = reach / 6;
    const P2 from = cv.px_src(mid.x - k * root_vectors[r][0], mid.y - k * root_vectors[r][1]);
    const P2 to = cv.px_src(mid.x + k * root_vectors[r][0], mid.y + k * root_vectors[r][1]);
    svg += fmt::format(
        "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"#cccccc\" stroke-dasharray=\"4 3\"/>\n",
        from.x, from.y, to.x, to.y);
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" fill=\"#999999\">alpha{}</text>\n", to.x + 3, to.y - 3, r + 1);
  }

  // cells
  for (const auto& cell : a.sector_descriptions(id)) {
    if (cell.empty) continue;
    Polygon poly = window;
    for (const auto& b : cell.bounds) {
      poly = clip(poly, b);
      if (poly.empty()) break;
    }
    if (poly.empty()) continue;
    const bool thin = extent(poly) < 1e-9 || [&] {
      double area = 0;
      for (std::size_t i = 0; i < poly.size(); ++i) {
        const P2& p = poly[i];
        const P2& q = poly[(i + 1) % poly.size()];
        area += p.x * q.y - q.x * p.y;
      }
      return std::abs(area) < 1e-9;
    }();
    const char* col = colour(cell.other);
    if (thin) {
      svg += fmt::format("<polygon points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"4\"/>\n",
                         points_attr(cv, poly), col);
    } else {
      svg += fmt::format("<polygon points=\"{}\" fill=\"{}\" fill-opacity=\"0.25\" stroke=\"{}\"/>\n",
                         points_attr(cv, poly), col, col);
    }
    P2 centre{0, 0};
    for (const auto& p : poly) centre = {centre.x + p.x / poly.size(), centre.y + p.y / poly.size()};
    const P2 c = cv.px_src(centre.x, centre.y);
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\" fill=\"{}\">{}</text>\n", c.x, c.y,
                       col, to_string(cell.other));
  }

  // special points, coincident ones sharing one label
  std::map<std::pair<std::string, std::string>, std::string> labels;
  for (const auto& [name, c] : a.special_on(id)) {
    auto r = c.simple_root_coords();
    auto& l = labels[{r[0].get_str(), r[1].get_str()}];
    l += (l.empty() ? "" : "=") + name;
  }
  for (const auto& [key, name] : labels) {
    const P2 p = cv.px_src(Rational(key.first).get_d(), Rational(key.second).get_d());
    svg += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"4\" fill=\"black\"/>\n", p.x, p.y);
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n", p.x + 6, p.y - 6, name);
  }

  // legend
  double lx = Canvas::kPad;
  const double ly = Canvas::kSize + 30;
  for (FlatId other : kAllFlats) {
    if (other == id) continue;
    svg += fmt::format("<rect x=\"{:.0f}\" y=\"{:.0f}\" width=\"12\" height=\"12\" fill=\"{}\" fill-opacity=\"0.5\"/>\n",
                       lx, ly - 10, colour(other));
    svg += fmt::format("<text x=\"{:.0f}\" y=\"{:.0f}\">{} &#8745; {}</text>\n", lx + 16, ly, to_string(id),
                       to_string(other));
    lx += 130;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace a2b
