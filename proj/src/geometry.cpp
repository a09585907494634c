#include "pseudoseg/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <string>

#include "pseudoseg/arrangement.hpp"
#include "pseudoseg/error.hpp"
#include "pseudoseg/validate.hpp"
#include "union_find.hpp"

namespace pseudoseg {

namespace {

constexpr double kAngleResolution = 1e-9;

Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point a) { return std::hypot(a.x, a.y); }
double dist(Point a, Point b) { return norm(a - b); }

// Closest point of segment pq to x, as a parameter in [0, 1].
double project(Point p, Point q, Point x) {
  const Point d = q - p;
  const double len2 = dot(d, d);
  if (len2 == 0) return 0;
  return std::clamp(dot(x - p, d) / len2, 0.0, 1.0);
}

double point_segment_distance(Point x, Point p, Point q) { return dist(x, p + project(p, q, x) * (q - p)); }

double segment_distance(Point p, Point q, Point r, Point s) {
  const Point d1 = q - p;
  const Point d2 = s - r;
  const double den = cross(d1, d2);
  if (den != 0) {
    const double t = cross(r - p, d2) / den;
    const double u = cross(r - p, d1) / den;
    if (t >= 0 && t <= 1 && u >= 0 && u <= 1) return 0;
  }
  return std::min({point_segment_distance(p, r, s), point_segment_distance(q, r, s), point_segment_distance(r, p, q),
                   point_segment_distance(s, p, q)});
}

std::string curve_name(CurveId c) { return "curve " + std::to_string(c); }

double curve_distance(const Polyline& c, Point x) {
  double best = INFINITY;
  for (std::size_t i = 0; i + 1 < c.points.size(); ++i) best = std::min(best, point_segment_distance(x, c.points[i], c.points[i + 1]));
  return best;
}

std::vector<double> prefix_lengths(const Polyline& c) {
  std::vector<double> out{0};
  for (std::size_t i = 0; i + 1 < c.points.size(); ++i) out.push_back(out.back() + dist(c.points[i], c.points[i + 1]));
  return out;
}

// Where a point sits on a curve: at vertex `vertex` or inside segment
// `segment`.
struct Spot {
  int vertex = -1;
  int segment = -1;
  double arc = 0;
  bool endpoint = false;
  Point in_dir;   // toward the source
  Point out_dir;  // toward the target
};

Spot locate(const Polyline& c, const std::vector<double>& pre, Point x, double eps) {
  const int n = static_cast<int>(c.points.size());
  Spot s;
  for (int i = 0; i < n; ++i) {
    if (dist(c.points[static_cast<std::size_t>(i)], x) <= eps) {
      s.vertex = i;
      s.arc = pre[static_cast<std::size_t>(i)];
      s.endpoint = i == 0 || i == n - 1;
      if (i > 0) s.in_dir = c.points[static_cast<std::size_t>(i - 1)] - c.points[static_cast<std::size_t>(i)];
      if (i < n - 1) s.out_dir = c.points[static_cast<std::size_t>(i + 1)] - c.points[static_cast<std::size_t>(i)];
      return s;
    }
  }
  double best = INFINITY;
  for (int i = 0; i + 1 < n; ++i) {
    const Point p = c.points[static_cast<std::size_t>(i)];
    const Point q = c.points[static_cast<std::size_t>(i + 1)];
    const double d = point_segment_distance(x, p, q);
    if (d < best) {
      best = d;
      s.segment = i;
      s.arc = pre[static_cast<std::size_t>(i)] + project(p, q, x) * dist(p, q);
      s.in_dir = p - q;
      s.out_dir = q - p;
    }
  }
  return s;
}

struct Contact {
  Point at;
};

// Raw contact points of two segments (transversal point, or endpoint near
// the other segment). Overlapping collinear pieces throw.
void segment_contacts(Point p, Point q, Point r, Point s, double eps, CurveId a, CurveId b, std::vector<Contact>& out) {
  const Point d1 = q - p;
  const Point d2 = s - r;
  const double l1 = norm(d1);
  const double l2 = norm(d2);
  const double den = cross(d1, d2);
  const bool parallel = std::abs(den) <= 1e-12 * l1 * l2;
  if (parallel && std::abs(cross(r - p, d1)) / l1 <= eps) {
    const double t0 = dot(r - p, d1) / (l1 * l1);
    const double t1 = dot(s - p, d1) / (l1 * l1);
    const double lo = std::max(0.0, std::min(t0, t1));
    const double hi = std::min(1.0, std::max(t0, t1));
    if ((hi - lo) * l1 > eps) {
      throw Error(ErrorCode::NonFiniteIntersection, curve_name(a) + " and " + curve_name(b) + " overlap along a segment");
    }
  }
  if (!parallel) {
    const double t = cross(r - p, d2) / den;
    const double u = cross(r - p, d1) / den;
    if (t * l1 >= -eps && (t - 1) * l1 <= eps && u * l2 >= -eps && (u - 1) * l2 <= eps) {
      out.push_back({p + std::clamp(t, 0.0, 1.0) * d1});
    }
  }
  for (Point x : {p, q}) {
    if (point_segment_distance(x, r, s) <= eps) out.push_back({x});
  }
  for (Point x : {r, s}) {
    if (point_segment_distance(x, p, q) <= eps) out.push_back({x});
  }
}

double angle_of(Point d) { return std::atan2(d.y, d.x); }

}  // namespace

double default_epsilon(const std::vector<Polyline>& curves) {
  double x0 = INFINITY, y0 = INFINITY, x1 = -INFINITY, y1 = -INFINITY;
  for (const auto& c : curves) {
    for (const auto& p : c.points) {
      x0 = std::min(x0, p.x);
      y0 = std::min(y0, p.y);
      x1 = std::max(x1, p.x);
      y1 = std::max(y1, p.y);
    }
  }
  const double diag = std::isfinite(x0) ? std::hypot(x1 - x0, y1 - y0) : 0;
  return diag > 0 ? 1e-9 * diag : 1e-9;
}

void check_polylines(const std::vector<Polyline>& curves, double eps) {
  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const auto& c = curves[ci];
    if (c.id != static_cast<CurveId>(ci)) throw Error(ErrorCode::InvalidPolyline, "curve ids must be dense and ordered");
    const auto& p = c.points;
    const std::size_t n = p.size();
    if (n < 2) throw Error(ErrorCode::InvalidPolyline, curve_name(c.id) + " needs at least two points");
    for (const auto& x : p) {
      if (!std::isfinite(x.x) || !std::isfinite(x.y)) throw Error(ErrorCode::InvalidPolyline, curve_name(c.id) + " has a non-finite coordinate");
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (dist(p[i], p[i + 1]) <= eps) throw Error(ErrorCode::InvalidPolyline, curve_name(c.id) + " repeats point " + std::to_string(i));
    }
    const bool closed = n > 2 && dist(p.front(), p.back()) <= eps;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j + 1 < n; ++j) {
        if (j == i + 1) {
          const Point d1 = p[i + 1] - p[i];
          const Point d2 = p[j + 1] - p[j];
          if (std::abs(cross(d1, d2)) <= 1e-12 * norm(d1) * norm(d2) && dot(d1, d2) < 0) {
            throw Error(ErrorCode::InvalidPolyline, curve_name(c.id) + " folds back at point " + std::to_string(j));
          }
          continue;
        }
        if (closed && i == 0 && j == n - 2) continue;
        if (segment_distance(p[i], p[i + 1], p[j], p[j + 1]) <= eps) {
          throw Error(ErrorCode::InvalidPolyline, curve_name(c.id) + " intersects itself");
        }
      }
    }
  }
}

MeetingKind classify_geometric(const std::array<Ray, 4>& frame, CurveId subject) {
  auto rays = frame;
  std::sort(rays.begin(), rays.end(), [](const Ray& a, const Ray& b) { return a.angle < b.angle; });
  for (std::size_t i = 0; i < 4; ++i) {
    double gap = rays[(i + 1) % 4].angle - rays[i].angle;
    if (i == 3) gap += 2 * std::numbers::pi;
    if (gap < kAngleResolution) {
      throw Error(ErrorCode::TangencyUnresolvable, curve_name(rays[i].curve) + " and " + curve_name(rays[(i + 1) % 4].curve) +
                                                       " leave a meeting in the same direction");
    }
  }
  std::array<Branch, 4> ccw;
  for (std::size_t i = 0; i < 4; ++i) ccw[i] = {rays[i].curve, rays[i].leg};
  return classify_meeting(ccw, subject);
}

std::vector<GeometricMeeting> intersect_all(const std::vector<Polyline>& curves, double eps) {
  check_polylines(curves, eps);
  std::vector<std::vector<double>> pre;
  for (const auto& c : curves) pre.push_back(prefix_lengths(c));
  std::vector<GeometricMeeting> out;
  for (std::size_t a = 0; a < curves.size(); ++a) {
    for (std::size_t b = a + 1; b < curves.size(); ++b) {
      const auto& ca = curves[a];
      const auto& cb = curves[b];
      std::vector<Contact> raw;
      for (std::size_t i = 0; i + 1 < ca.points.size(); ++i) {
        for (std::size_t j = 0; j + 1 < cb.points.size(); ++j) {
          segment_contacts(ca.points[i], ca.points[i + 1], cb.points[j], cb.points[j + 1], eps, ca.id, cb.id, raw);
        }
      }
      // merge contacts closer than eps
      detail::UnionFind uf(static_cast<int>(raw.size()));
      for (std::size_t i = 0; i < raw.size(); ++i) {
        for (std::size_t j = i + 1; j < raw.size(); ++j) {
          if (dist(raw[i].at, raw[j].at) <= eps) uf.unite(static_cast<int>(i), static_cast<int>(j));
        }
      }
      std::map<int, Point> clusters;
      for (std::size_t i = 0; i < raw.size(); ++i) clusters.try_emplace(uf.find(static_cast<int>(i)), raw[i].at);
      for (const auto& [root, at] : clusters) {
        const Spot sa = locate(ca, pre[a], at, eps);
        const Spot sb = locate(cb, pre[b], at, eps);
        if (sa.endpoint && sb.endpoint) continue;  // shared endpoint: a hub
        if (sa.endpoint || sb.endpoint) {
          const auto& [e, o] = sa.endpoint ? std::pair{ca.id, cb.id} : std::pair{cb.id, ca.id};
          throw Error(ErrorCode::GeneralPositionViolation, "an endpoint of " + curve_name(e) + " lies on " + curve_name(o));
        }
        GeometricMeeting m;
        m.a = ca.id;
        m.b = cb.id;
        m.location = at;
        m.arc_a = sa.arc;
        m.arc_b = sb.arc;
        m.frame = {Ray{ca.id, Leg::In, angle_of(sa.in_dir)}, Ray{ca.id, Leg::Out, angle_of(sa.out_dir)},
                   Ray{cb.id, Leg::In, angle_of(sb.in_dir)}, Ray{cb.id, Leg::Out, angle_of(sb.out_dir)}};
        m.kind = classify_geometric(m.frame, ca.id);
        out.push_back(m);
      }
    }
  }
  for (const auto& m : out) {
    for (const auto& c : curves) {
      if (c.id == m.a || c.id == m.b) continue;
      if (curve_distance(c, m.location) <= eps) {
        throw Error(ErrorCode::GeneralPositionViolation, curve_name(c.id) + " passes through the meeting of " +
                                                             curve_name(m.a) + " and " + curve_name(m.b));
      }
    }
  }
  std::vector<std::vector<double>> arcs(curves.size());
  for (const auto& m : out) {
    arcs[static_cast<std::size_t>(m.a)].push_back(m.arc_a);
    arcs[static_cast<std::size_t>(m.b)].push_back(m.arc_b);
  }
  for (std::size_t c = 0; c < arcs.size(); ++c) {
    auto& v = arcs[c];
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i + 1] - v[i] <= eps) throw Error(ErrorCode::ArclengthTie, curve_name(static_cast<CurveId>(c)) + " has two meetings at one position");
    }
  }
  std::sort(out.begin(), out.end(), [](const GeometricMeeting& x, const GeometricMeeting& y) {
    return std::tie(x.a, x.b, x.arc_a) < std::tie(y.a, y.b, y.arc_a);
  });
  return out;
}

namespace {

// Polygon of one face: the geometric sections of its darts, concatenated.
std::vector<Point> face_polygon(const std::vector<int>& face, const PlaneGraph& g, const std::vector<Polyline>& curves,
                                const std::vector<std::vector<double>>& section_cuts,
                                const std::vector<std::vector<Point>>& section_ends) {
  std::vector<Point> poly;
  for (int d : face) {
    const int e = d / 2;
    const CurveId c = g.edge_curve[static_cast<std::size_t>(e)];
    const int s = g.edge_section[static_cast<std::size_t>(e)];
    const auto& cut = section_cuts[static_cast<std::size_t>(c)];
    const auto& ends = section_ends[static_cast<std::size_t>(c)];
    const auto& pts = curves[static_cast<std::size_t>(c)].points;
    const auto pre = prefix_lengths(curves[static_cast<std::size_t>(c)]);
    std::vector<Point> piece{ends[static_cast<std::size_t>(s)]};
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pre[i] > cut[static_cast<std::size_t>(s)] && pre[i] < cut[static_cast<std::size_t>(s) + 1]) piece.push_back(pts[i]);
    }
    piece.push_back(ends[static_cast<std::size_t>(s) + 1]);
    if (d % 2 == 1) std::reverse(piece.begin(), piece.end());
    poly.insert(poly.end(), piece.begin(), piece.end() - 1);
  }
  return poly;
}

double signed_area(const std::vector<Point>& poly) {
  double a = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) a += cross(poly[i], poly[(i + 1) % poly.size()]);
  return a / 2;
}

int winding(const std::vector<Point>& poly, Point x) {
  int w = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point p = poly[i];
    const Point q = poly[(i + 1) % poly.size()];
    if (p.y <= x.y) {
      if (q.y > x.y && cross(q - p, x - p) > 0) ++w;
    } else if (q.y <= x.y && cross(q - p, x - p) < 0) {
      --w;
    }
  }
  return w;
}

FaceRef face_ref(const PlaneGraph& g, int d) {
  const int e = d / 2;
  return {g.edge_curve[static_cast<std::size_t>(e)], g.edge_section[static_cast<std::size_t>(e)], d % 2 == 0 ? Side::Right : Side::Left};
}

}  // namespace

CombinatorialFamily to_combinatorial(const std::vector<Polyline>& curves, const std::vector<GeometricMeeting>& meetings,
                                     double eps) {
  CombinatorialFamily f;
  const auto n = curves.size();
  // hubs: endpoints within eps of each other
  std::vector<Point> ends;
  for (const auto& c : curves) {
    ends.push_back(c.points.front());
    ends.push_back(c.points.back());
  }
  detail::UnionFind uf(static_cast<int>(ends.size()));
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      if (dist(ends[i], ends[j]) <= eps) uf.unite(static_cast<int>(i), static_cast<int>(j));
    }
  }
  std::map<int, HubId> hub_of_root;
  std::vector<HubId> hub(ends.size());
  for (std::size_t i = 0; i < ends.size(); ++i) {
    const auto [it, fresh] = hub_of_root.try_emplace(uf.find(static_cast<int>(i)), static_cast<HubId>(hub_of_root.size()));
    hub[i] = it->second;
  }
  f.hub_rotations.resize(hub_of_root.size());
  std::vector<std::vector<std::pair<double, Branch>>> hub_rays(hub_of_root.size());
  for (std::size_t c = 0; c < n; ++c) {
    const auto& p = curves[c].points;
    const CurveId id = curves[c].id;
    f.curves.push_back({id, hub[2 * c], hub[2 * c + 1], {}});
    hub_rays[static_cast<std::size_t>(hub[2 * c])].push_back({angle_of(p[1] - p[0]), {id, Leg::Out}});
    hub_rays[static_cast<std::size_t>(hub[2 * c + 1])].push_back({angle_of(p[p.size() - 2] - p.back()), {id, Leg::In}});
  }
  for (std::size_t h = 0; h < hub_rays.size(); ++h) {
    auto& rays = hub_rays[h];
    std::sort(rays.begin(), rays.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i + 1 < rays.size(); ++i) {
      if (rays[i + 1].first - rays[i].first < kAngleResolution) {
        throw Error(ErrorCode::TangencyUnresolvable, "two curves leave hub " + std::to_string(h) + " in the same direction");
      }
    }
    for (const auto& r : rays) f.hub_rotations[h].push_back(r.second);
  }

  std::vector<std::vector<std::pair<double, MeetingEvent>>> events(n);
  for (std::size_t i = 0; i < meetings.size(); ++i) {
    const auto& m = meetings[i];
    const auto id = static_cast<MeetingId>(i);
    auto rays = m.frame;
    std::sort(rays.begin(), rays.end(), [](const Ray& a, const Ray& b) { return a.angle < b.angle; });
    std::array<Branch, 4> ccw;
    for (std::size_t k = 0; k < 4; ++k) ccw[k] = {rays[k].curve, rays[k].leg};
    f.meeting_rotations.push_back(ccw);
    events[static_cast<std::size_t>(m.a)].push_back({m.arc_a, {m.b, m.kind, id}});
    events[static_cast<std::size_t>(m.b)].push_back({m.arc_b, {m.a, m.kind.swapped(), id}});
  }
  std::vector<std::vector<double>> cuts(n);
  std::vector<std::vector<Point>> cut_points(n);
  for (std::size_t c = 0; c < n; ++c) {
    auto& ev = events[c];
    std::sort(ev.begin(), ev.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    const auto pre = prefix_lengths(curves[c]);
    cuts[c].push_back(0);
    cut_points[c].push_back(curves[c].points.front());
    for (const auto& [arc, e] : ev) {
      f.curves[c].events.push_back(e);
      cuts[c].push_back(arc);
      cut_points[c].push_back(meetings[static_cast<std::size_t>(e.meeting)].location);
    }
    cuts[c].push_back(pre.back());
    cut_points[c].push_back(curves[c].points.back());
  }
  if (n == 0) return f;

  // Containment forest from the geometry of the faces.
  const auto g = build_plane_graph(f);
  const auto faces = trace_faces(g);
  detail::UnionFind vuf(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) vuf.unite(g.origin[static_cast<std::size_t>(2 * e)], g.origin[static_cast<std::size_t>(2 * e + 1)]);
  std::map<int, int> comp_index;
  auto comp_of = [&](int v) { return comp_index.try_emplace(vuf.find(v), static_cast<int>(comp_index.size())).first->second; };
  for (std::size_t c = 0; c < n; ++c) comp_of(g.origin[static_cast<std::size_t>(2 * g.section_base[c])]);
  const int comps = static_cast<int>(comp_index.size());

  std::vector<std::vector<Point>> polys;
  std::vector<double> areas;
  std::vector<int> face_comp;
  std::vector<int> outer(static_cast<std::size_t>(comps), -1);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    polys.push_back(face_polygon(faces[i], g, curves, cuts, cut_points));
    areas.push_back(signed_area(polys.back()));
    face_comp.push_back(comp_of(g.origin[static_cast<std::size_t>(faces[i][0])]));
    auto& o = outer[static_cast<std::size_t>(face_comp.back())];
    if (o < 0 || areas.back() > areas[static_cast<std::size_t>(o)]) o = static_cast<int>(i);
  }
  if (comps == 1) return f;
  std::vector<int> host(static_cast<std::size_t>(comps), -1);
  std::vector<CurveId> first_curve(static_cast<std::size_t>(comps), -1);
  for (std::size_t c = 0; c < n; ++c) {
    auto& fc = first_curve[static_cast<std::size_t>(comp_of(g.origin[static_cast<std::size_t>(2 * g.section_base[c])]))];
    if (fc < 0) fc = static_cast<CurveId>(c);
  }
  for (int k = 0; k < comps; ++k) {
    const Point probe = curves[static_cast<std::size_t>(first_curve[static_cast<std::size_t>(k)])].points.front();
    double best = INFINITY;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (face_comp[i] == k || static_cast<int>(i) == outer[static_cast<std::size_t>(face_comp[i])]) continue;
      if (winding(polys[i], probe) != 0 && std::abs(areas[i]) < best) {
        best = std::abs(areas[i]);
        host[static_cast<std::size_t>(k)] = static_cast<int>(i);
      }
    }
  }
  int root = -1;
  for (int k = 0; k < comps && root < 0; ++k) {
    if (host[static_cast<std::size_t>(k)] < 0) root = k;
  }
  for (int k = 0; k < comps; ++k) {
    if (k == root) continue;
    int hf = host[static_cast<std::size_t>(k)];
    if (hf < 0) hf = outer[static_cast<std::size_t>(root)];
    f.containment.push_back({first_curve[static_cast<std::size_t>(k)],
                             face_ref(g, faces[static_cast<std::size_t>(outer[static_cast<std::size_t>(k)])][0]),
                             face_ref(g, faces[static_cast<std::size_t>(hf)][0])});
  }
  f.outer_face = face_ref(g, faces[static_cast<std::size_t>(outer[static_cast<std::size_t>(root)])][0]);
  return f;
}

std::vector<Polyline> jittered(const std::vector<Polyline>& curves, std::uint64_t seed, double amount) {
  const double eps = default_epsilon(curves);
  const double scale = amount * eps / 1e-9;  // amount is relative to the diagonal
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-scale, scale);
  std::vector<Polyline> out = curves;
  std::vector<std::pair<Point, Point>> moved;  // shared endpoints move together
  for (auto& c : out) {
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      auto& p = c.points[i];
      const bool end = i == 0 || i + 1 == c.points.size();
      if (end) {
        const auto it = std::find_if(moved.begin(), moved.end(), [&](const auto& m) { return dist(m.first, p) <= eps; });
        if (it != moved.end()) {
          p = it->second;
          continue;
        }
      }
      const Point q{p.x + u(rng), p.y + u(rng)};
      if (end) moved.push_back({p, q});
      p = q;
    }
  }
  return out;
}

Drawing ingest_drawing(const std::vector<Polyline>& curves, const IngestOptions& options) {
  Drawing d;
  d.curves = options.jitter_seed ? jittered(curves, *options.jitter_seed, options.jitter) : curves;
  d.epsilon = options.epsilon.value_or(default_epsilon(d.curves));
  d.meetings = intersect_all(d.curves, d.epsilon);
  d.family = to_combinatorial(d.curves, d.meetings, d.epsilon);
  return d;
}

CombinatorialFamily ingest(const std::vector<Polyline>& curves, const IngestOptions& options) {
  return ingest_drawing(curves, options).family;
}

std::vector<Polyline> parse_svg_paths(std::string_view svg) {
  std::vector<std::string_view> data;
  for (std::size_t at = 0;;) {
    const auto k = svg.find(" d=\"", at);
    if (k == std::string_view::npos) break;
    const auto end = svg.find('"', k + 4);
    if (end == std::string_view::npos) throw Error(ErrorCode::Parse, "unterminated path data");
    data.push_back(svg.substr(k + 4, end - k - 4));
    at = end + 1;
  }
  if (data.empty()) data.push_back(svg);

  std::vector<Polyline> out;
  for (auto d : data) {
    std::size_t i = 0;
    char cmd = 0;
    bool first = true;
    Point cur;
    auto skip = [&] {
      while (i < d.size() && (std::isspace(static_cast<unsigned char>(d[i])) || d[i] == ',')) ++i;
    };
    auto number = [&] {
      skip();
      double v = 0;
      const auto [end, ec] = std::from_chars(d.data() + i, d.data() + d.size(), v);
      if (ec != std::errc()) throw Error(ErrorCode::Parse, "expected a number in path data at offset " + std::to_string(i));
      i = static_cast<std::size_t>(end - d.data());
      return v;
    };
    for (skip(); i < d.size(); skip()) {
      if (std::isalpha(static_cast<unsigned char>(d[i]))) {
        cmd = d[i++];
        if (cmd != 'M' && cmd != 'm' && cmd != 'L' && cmd != 'l') {
          throw Error(ErrorCode::Parse, std::string("unsupported path command '") + cmd + "'");
        }
      } else if (cmd == 0) {
        throw Error(ErrorCode::Parse, "path data must start with M");
      }
      const double x = number();
      const double y = number();
      const bool rel = cmd == 'm' || cmd == 'l';
      const Point p = rel && !first ? Point{cur.x + x, cur.y + y} : Point{x, y};
      first = false;
      if (cmd == 'M' || cmd == 'm') {
        out.push_back({static_cast<CurveId>(out.size()), {p}});
        cmd = cmd == 'M' ? 'L' : 'l';  // further pairs are line-tos
      } else {
        if (out.empty()) throw Error(ErrorCode::Parse, "line-to before move-to");
        out.back().points.push_back(p);
      }
      cur = p;
    }
  }
  return out;
}

}  // namespace pseudoseg
