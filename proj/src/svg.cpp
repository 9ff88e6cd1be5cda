#include "thomp/svg.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "thomp/coloring.hpp"
#include "thomp/fp.hpp"
#include "thomp/links.hpp"

namespace thomp {

namespace {

struct Point {
  double x, y;
};

constexpr double kLeafStep  = 36.0;
constexpr double kLevelStep = 28.0;
constexpr double kMargin    = 40.0;

struct Layout {
  std::size_t leaves;
  double width, height, mid;
  std::vector<Point> vertex;  // per vertex of B

  double leaf_x(std::size_t i) const { return kMargin + kLeafStep * static_cast<double>(i); }
  double gap_x(std::size_t g) const { return leaf_x(g) + kLeafStep / 2; }
};

Layout make_layout(PlanarMap const& m) {
  Layout L;
  L.leaves          = m.carets_per_tree + 1;
  std::size_t depth = 0;
  for (auto const& v : m.vertex_origin) {
    depth = std::max(depth, v.depth);
  }
  double tree_h = kLevelStep * static_cast<double>(depth + 2);
  L.mid         = kMargin + tree_h;
  L.width       = 2 * kMargin + kLeafStep * static_cast<double>(L.leaves - 1);
  L.height      = 2 * (kMargin + tree_h);
  for (auto const& v : m.vertex_origin) {
    double x   = (L.leaf_x(v.first_leaf) + L.leaf_x(v.last_leaf)) / 2;
    double off = tree_h - kLevelStep * static_cast<double>(v.depth);
    L.vertex.push_back({x, v.bottom ? L.mid + off : L.mid - off});
  }
  return L;
}

// Polyline of the edge leaving dart d, from its vertex to the twin's.
std::vector<Point> edge_path(PlanarMap const& m, Layout const& L, std::size_t d) {
  std::size_t v = d / 4, s = d % 4;
  std::size_t w = m.twin(d) / 4;
  auto const& o = m.vertex_origin[v];
  Point a = L.vertex[v], b = L.vertex[w];
  if (m.vertex_origin[w].bottom == o.bottom) {
    return {a, b};
  }
  if (s == 0) {
    double left = kMargin / 3;
    double top  = L.vertex[o.bottom ? w : v].y - kLevelStep;
    double bot  = L.vertex[o.bottom ? v : w].y + kLevelStep;
    if (o.bottom) {
      return {a, {a.x, bot}, {left, bot}, {left, top}, {b.x, top}, b};
    }
    return {a, {a.x, top}, {left, top}, {left, bot}, {b.x, bot}, b};
  }
  if (s == 2) {
    return {a, {L.gap_x(o.wedge_gap), L.mid}, b};
  }
  bool left_child = o.bottom ? s == 3 : s == 1;
  std::size_t leaf = left_child ? o.first_leaf : o.last_leaf;
  return {a, {L.leaf_x(leaf), L.mid}, b};
}

Point toward(Point a, Point b, double r) {
  double dx = b.x - a.x, dy = b.y - a.y;
  double len = std::hypot(dx, dy);
  if (len <= r) {
    return a;
  }
  return {a.x + dx * r / len, a.y + dy * r / len};
}

void polyline(std::ostringstream& out, std::vector<Point> const& pts, double dx,
              char const* style) {
  out << "<polyline fill=\"none\" " << style << " points=\"";
  for (auto const& p : pts) {
    out << p.x + dx << "," << p.y << " ";
  }
  out << "\"/>\n";
}

}  // namespace

std::string render_svg(TreeDiagram const& d, std::optional<std::uint64_t> p,
                       bool allow_nonreduced) {
  JonesOptions opt;
  opt.allow_nonreduced = allow_nonreduced;
  auto m               = jones_graph(d, opt);
  auto l               = link_diagram(m);
  auto L               = make_layout(m);
  double const panel   = L.width + kMargin;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<!-- thomp svg v1 -->\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 3 * panel << "\" height=\""
      << L.height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";

  // Panel 1: trees on the leaf line.
  out << "<g id=\"strip\">\n";
  out << "<line x1=\"" << kMargin / 2 << "\" y1=\"" << L.mid << "\" x2=\"" << L.width - kMargin / 2
      << "\" y2=\"" << L.mid << "\" stroke=\"#bbb\"/>\n";
  for (std::size_t dart = 0; dart < m.dart_count(); ++dart) {
    std::size_t v = dart / 4, s = dart % 4;
    auto const& o = m.vertex_origin[v];
    if (s == 0 || s == 2) {
      continue;
    }
    auto path = edge_path(m, L, dart);
    if (m.vertex_origin[m.twin(dart) / 4].bottom != o.bottom) {
      path.resize(2);
    }
    polyline(out, path, 0, "stroke=\"black\" stroke-width=\"1.5\"");
  }
  if (p) {
    auto leaves = leaf_words(d.domain());
    for (std::size_t i = 0; i <= leaves.size(); ++i) {
      auto color = i < leaves.size() ? rho_mod(leaves[i], *p) : 1 % *p;
      double x   = i == 0 ? L.leaf_x(0) - kLeafStep / 2 : L.gap_x(i - 1);
      out << "<text x=\"" << x - 3 << "\" y=\"" << L.mid - 4 << "\" fill=\"#c00\">" << color
          << "</text>\n";
    }
  }
  out << "</g>\n";

  // Panel 2: the plane graph.
  out << "<g id=\"graph\">\n";
  for (std::size_t dart = 0; dart < m.dart_count(); ++dart) {
    if (dart < m.twin(dart)) {
      polyline(out, edge_path(m, L, dart), panel, "stroke=\"#246\" stroke-width=\"1.5\"");
    }
  }
  for (auto const& pt : L.vertex) {
    out << "<circle cx=\"" << pt.x + panel << "\" cy=\"" << pt.y << "\" r=\"3\"/>\n";
  }
  out << "</g>\n";

  // Panel 3: crossings, under-strands cut short at their crossing.
  constexpr double kGap = 7.0;
  out << "<g id=\"link\">\n";
  for (std::size_t dart = 0; dart < m.dart_count(); ++dart) {
    if (dart > m.twin(dart)) {
      continue;
    }
    auto path = edge_path(m, L, dart);
    if (l.is_under(dart)) {
      path.front() = toward(path.front(), path[1], kGap);
    }
    if (l.is_under(m.twin(dart))) {
      path.back() = toward(path.back(), path[path.size() - 2], kGap);
    }
    polyline(out, path, 2 * panel, "stroke=\"black\" stroke-width=\"2\"");
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace thomp
