#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <sstream>

#include "cli.hpp"

namespace pseudoseg::cli {

namespace {

using Path = std::vector<Point>;

constexpr const char* kFaceFill[] = {"#fde2b8", "#cfe8fc", "#d9f2d0", "#f6d3e8", "#e6ddf7", "#fff3b0"};
constexpr const char* kCurveStroke[] = {"#1f4e9c", "#b8401a", "#227a3b", "#7b3294", "#a07400", "#1a7f86", "#9c1f4e", "#555555"};
constexpr double kRadius = 100;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

Point lerp(Point a, Point b, double t) { return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t}; }

double signed_area(const Path& p) {
  double s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& a = p[i];
    const auto& b = p[(i + 1) % p.size()];
    s += a.x * b.y - a.y * b.x;
  }
  return s / 2;
}

// Sections cut out of the input polylines at the meetings' arclengths.
std::vector<Path> geometric_edges(const CombinatorialFamily& f, const PlaneGraph& g, const Drawing& d) {
  std::vector<Path> edges(static_cast<std::size_t>(g.edge_count()));
  for (const auto& c : f.curves) {
    const auto& pts = d.curves[static_cast<std::size_t>(c.id)].points;
    std::vector<double> len{0};
    for (std::size_t i = 1; i < pts.size(); ++i) len.push_back(len.back() + std::hypot(pts[i].x - pts[i - 1].x, pts[i].y - pts[i - 1].y));
    auto at = [&](double s) {
      const auto k = static_cast<std::size_t>(std::max<std::ptrdiff_t>(
          1, std::min<std::ptrdiff_t>(std::upper_bound(len.begin(), len.end(), s) - len.begin(),
                                      static_cast<std::ptrdiff_t>(pts.size()) - 1)));
      const double span = len[k] - len[k - 1];
      return lerp(pts[k - 1], pts[k], span > 0 ? (s - len[k - 1]) / span : 0);
    };
    std::vector<double> cuts{0};
    for (const auto& e : c.events) {
      const auto& m = d.meetings[static_cast<std::size_t>(e.meeting)];
      cuts.push_back(m.a == c.id ? m.arc_a : m.arc_b);
    }
    cuts.push_back(len.back());
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
      Path p{at(cuts[s])};
      for (std::size_t k = 0; k < pts.size(); ++k) {
        if (len[k] > cuts[s] && len[k] < cuts[s + 1]) p.push_back(pts[k]);
      }
      p.push_back(at(cuts[s + 1]));
      edges[static_cast<std::size_t>(g.section_base[static_cast<std::size_t>(c.id)]) + s] = std::move(p);
    }
  }
  return edges;
}

// Barycentric placement: one boundary face on a circle, the other vertices
// at the average of their neighbours. Components sit side by side.
std::vector<Point> layout(const Arrangement& a) {
  const auto& g = a.graph;
  const int nv = g.vertex_count();
  std::vector<Point> pos(static_cast<std::size_t>(nv));
  std::vector<bool> fixed(static_cast<std::size_t>(nv), false);
  const int comps = static_cast<int>(a.components.size());
  for (int comp = 0; comp < comps; ++comp) {
    int face = -1;
    for (std::size_t fi = 0; fi < a.faces.size(); ++fi) {
      if (a.face_component[fi] != comp) continue;
      if (static_cast<int>(fi) == a.outer_face) {
        face = static_cast<int>(fi);
        break;
      }
      if (face < 0 || a.faces[fi].size() > a.faces[static_cast<std::size_t>(face)].size()) face = static_cast<int>(fi);
    }
    const double cx = comp * (2 * kRadius + 60);
    std::vector<int> ring;
    if (face >= 0) {
      for (int d : a.faces[static_cast<std::size_t>(face)]) {
        const int v = g.origin[static_cast<std::size_t>(d)];
        if (std::find(ring.begin(), ring.end(), v) == ring.end()) ring.push_back(v);
      }
    }
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const double t = ring.size() == 1 ? 0 : 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(ring.size());
      const double r = ring.size() == 1 ? 0 : kRadius;
      pos[static_cast<std::size_t>(ring[i])] = {cx + r * std::cos(t), r * std::sin(t)};
      fixed[static_cast<std::size_t>(ring[i])] = true;
    }
    for (int v = 0; v < nv; ++v) {
      if (a.vertex_component[static_cast<std::size_t>(v)] == comp && !fixed[static_cast<std::size_t>(v)]) pos[static_cast<std::size_t>(v)] = {cx, 0};
    }
  }
  for (int it = 0; it < 400; ++it) {
    for (int v = 0; v < nv; ++v) {
      if (fixed[static_cast<std::size_t>(v)]) continue;
      Point sum{0, 0};
      int n = 0;
      for (int d : g.rotation[static_cast<std::size_t>(v)]) {
        const int w = g.head(d);
        if (w == v) continue;
        sum.x += pos[static_cast<std::size_t>(w)].x;
        sum.y += pos[static_cast<std::size_t>(w)].y;
        ++n;
      }
      if (n > 0) pos[static_cast<std::size_t>(v)] = {sum.x / n, sum.y / n};
    }
  }
  return pos;
}

// Straight edges, bent apart when parallel, loops as teardrops.
std::vector<Path> layout_edges(const PlaneGraph& g, const std::vector<Point>& pos) {
  std::vector<Path> edges(static_cast<std::size_t>(g.edge_count()));
  std::map<std::pair<int, int>, std::vector<int>> bundles;
  for (int e = 0; e < g.edge_count(); ++e) {
    const int u = g.origin[static_cast<std::size_t>(2 * e)];
    const int v = g.head(2 * e);
    bundles[{std::min(u, v), std::max(u, v)}].push_back(e);
  }
  for (const auto& [key, list] : bundles) {
    for (std::size_t j = 0; j < list.size(); ++j) {
      const int e = list[j];
      const Point p = pos[static_cast<std::size_t>(g.origin[static_cast<std::size_t>(2 * e)])];
      const Point q = pos[static_cast<std::size_t>(g.head(2 * e))];
      Path path;
      if (key.first == key.second) {
        const double t = 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(list.size()) + std::numbers::pi / 2;
        const double s = 25 + 5 * static_cast<double>(j);
        for (int i = 0; i <= 16; ++i) {
          const double u = std::numbers::pi * i / 16;
          const double r = s * std::sin(u);
          const double w = t + (u - std::numbers::pi / 2) * 0.8;
          path.push_back({p.x + r * std::cos(w), p.y + r * std::sin(w)});
        }
      } else {
        const double off = (static_cast<double>(j) - (static_cast<double>(list.size()) - 1) / 2) * 14;
        const double dx = q.x - p.x, dy = q.y - p.y;
        const double len = std::max(std::hypot(dx, dy), 1e-9);
        // the offset is taken from the lower-numbered vertex so both directions agree
        const double sign = g.origin[static_cast<std::size_t>(2 * e)] == key.first ? 1 : -1;
        const Point ctrl{(p.x + q.x) / 2 - sign * off * dy / len, (p.y + q.y) / 2 + sign * off * dx / len};
        for (int i = 0; i <= 8; ++i) {
          const double t = i / 8.0;
          path.push_back(lerp(lerp(p, ctrl, t), lerp(ctrl, q, t), t));
        }
      }
      edges[static_cast<std::size_t>(e)] = std::move(path);
    }
  }
  return edges;
}

void append(Path& out, const Path& piece, bool reversed) {
  Path p = piece;
  if (reversed) std::reverse(p.begin(), p.end());
  out.insert(out.end(), p.begin() + (out.empty() ? 0 : 1), p.end());
}

}  // namespace

std::string render_svg(const CombinatorialFamily& f, const Arrangement& a, const Drawing* drawing) {
  const auto& g = a.graph;
  std::vector<Path> edges;
  std::vector<Point> vertex(static_cast<std::size_t>(g.vertex_count()));
  if (drawing != nullptr) {
    edges = geometric_edges(f, g, *drawing);
    for (int e = 0; e < g.edge_count(); ++e) {
      vertex[static_cast<std::size_t>(g.origin[static_cast<std::size_t>(2 * e)])] = edges[static_cast<std::size_t>(e)].front();
      vertex[static_cast<std::size_t>(g.head(2 * e))] = edges[static_cast<std::size_t>(e)].back();
    }
  } else {
    vertex = layout(a);
    edges = layout_edges(g, vertex);
  }
  // SVG's y axis points down; flip so counter-clockwise stays counter-clockwise.
  for (auto& p : vertex) p.y = -p.y;
  for (auto& e : edges) {
    for (auto& p : e) p.y = -p.y;
  }

  double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
  bool first = true;
  for (const auto& e : edges) {
    for (const auto& p : e) {
      if (first) {
        x0 = x1 = p.x;
        y0 = y1 = p.y;
        first = false;
      }
      x0 = std::min(x0, p.x), x1 = std::max(x1, p.x), y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
    }
  }
  const double pad = 0.06 * std::max({x1 - x0, y1 - y0, 1e-9});
  const double unit = std::max({x1 - x0, y1 - y0, 1e-9}) / 200;

  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(x0 - pad) << ' ' << num(y0 - pad) << ' '
    << num(x1 - x0 + 2 * pad) << ' ' << num(y1 - y0 + 2 * pad) << "\">\n";

  s << "<g id=\"faces\">\n";
  std::vector<Path> polys(a.faces.size());
  std::vector<int> biggest(a.components.size(), -1);
  for (std::size_t fi = 0; fi < a.faces.size(); ++fi) {
    for (int d : a.faces[fi]) append(polys[fi], edges[static_cast<std::size_t>(d / 2)], d % 2 == 1);
    auto& b = biggest[static_cast<std::size_t>(a.face_component[fi])];
    if (b < 0 || std::abs(signed_area(polys[fi])) > std::abs(signed_area(polys[static_cast<std::size_t>(b)]))) b = static_cast<int>(fi);
  }
  for (std::size_t fi = 0; fi < a.faces.size(); ++fi) {
    if (static_cast<int>(fi) == biggest[static_cast<std::size_t>(a.face_component[fi])] || polys[fi].size() < 3) continue;
    s << "<path id=\"face-" << fi << "\" fill=\"" << kFaceFill[fi % 6] << "\" fill-opacity=\"0.6\" stroke=\"none\" d=\"M";
    for (const auto& p : polys[fi]) s << ' ' << num(p.x) << ' ' << num(p.y);
    s << " Z\"/>\n";
  }
  s << "</g>\n<g id=\"curves\" fill=\"none\" stroke-width=\"" << num(unit) << "\">\n";
  for (const auto& c : f.curves) {
    Path p;
    for (int sec = 0; sec < c.section_count(); ++sec) {
      append(p, edges[static_cast<std::size_t>(g.section_base[static_cast<std::size_t>(c.id)] + sec)], false);
    }
    s << "<path id=\"curve-" << c.id << "\" stroke=\"" << kCurveStroke[c.id % 8] << "\" d=\"M";
    for (const auto& q : p) s << ' ' << num(q.x) << ' ' << num(q.y);
    s << "\"/>\n";
    const auto& lead = edges[static_cast<std::size_t>(g.section_base[static_cast<std::size_t>(c.id)])];
    const Point at = lerp(lead.front(), lead.back(), 0.5);
    s << "<text x=\"" << num(at.x + unit) << "\" y=\"" << num(at.y - unit) << "\" font-size=\"" << num(6 * unit)
      << "\" fill=\"" << kCurveStroke[c.id % 8] << "\" stroke=\"none\">c" << c.id << "</text>\n";
  }
  s << "</g>\n<g id=\"meetings\">\n";
  for (int m = 0; m < f.meeting_count(); ++m) {
    const Point p = vertex[static_cast<std::size_t>(g.meeting_vertex(m))];
    const auto& rot = f.meeting_rotations[static_cast<std::size_t>(m)];
    const bool crossing = rot[0].curve == rot[2].curve;
    const double r = 2 * unit;
    if (crossing) {
      s << "<circle id=\"meeting-" << m << "\" class=\"crossing\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"" << num(r)
        << "\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"" << num(unit / 2) << "\"/>\n";
    } else {
      s << "<path id=\"meeting-" << m << "\" class=\"touching\" fill=\"#d7191c\" d=\"M " << num(p.x) << ' ' << num(p.y - 1.5 * r) << " L "
        << num(p.x + 1.5 * r) << ' ' << num(p.y) << " L " << num(p.x) << ' ' << num(p.y + 1.5 * r) << " L " << num(p.x - 1.5 * r) << ' '
        << num(p.y) << " Z\"/>\n";
    }
  }
  s << "</g>\n<g id=\"hubs\" fill=\"#000000\">\n";
  for (int h = 0; h < f.hub_count(); ++h) {
    const Point p = vertex[static_cast<std::size_t>(h)];
    s << "<circle id=\"hub-" << h << "\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"" << num(1.5 * unit) << "\"/>\n";
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

}  // namespace pseudoseg::cli
