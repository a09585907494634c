#include "pseudoseg/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "pseudoseg/error.hpp"
#include "pseudoseg/validate.hpp"
#include "union_find.hpp"

namespace pseudoseg {

using detail::UnionFind;

int PlaneGraph::edge_of(const FaceRef& ref) const {
  if (ref.curve < 0 || ref.curve >= static_cast<int>(section_base.size())) {
    throw Error(ErrorCode::Structural, "face reference names unknown curve " + std::to_string(ref.curve));
  }
  const auto c = static_cast<std::size_t>(ref.curve);
  const int end = c + 1 < section_base.size() ? section_base[c + 1] : edge_count();
  const int e = section_base[c] + ref.section;
  if (ref.section < 0 || e >= end) {
    throw Error(ErrorCode::Structural, "face reference names unknown section " + std::to_string(ref.section) +
                                           " of curve " + std::to_string(ref.curve));
  }
  return e;
}

int PlaneGraph::dart_of(const FaceRef& ref) const {
  const int e = edge_of(ref);
  return ref.side == Side::Right ? 2 * e : 2 * e + 1;
}

bool PlaneGraph::is_end_section(int edge) const {
  const auto c = static_cast<std::size_t>(edge_curve[static_cast<std::size_t>(edge)]);
  const int end = c + 1 < section_base.size() ? section_base[c + 1] : edge_count();
  const int s = edge_section[static_cast<std::size_t>(edge)];
  return s == 0 || section_base[c] + s == end - 1;
}

PlaneGraph build_plane_graph(const CombinatorialFamily& f) {
  PlaneGraph g;
  g.hubs = f.hub_count();
  g.meetings = f.meeting_count();
  // meeting -> up to two (curve, event index) pairs
  std::vector<std::array<std::pair<CurveId, int>, 2>> where(static_cast<std::size_t>(g.meetings),
                                                            {std::pair{-1, -1}, std::pair{-1, -1}});
  for (const auto& c : f.curves) {
    g.section_base.push_back(g.edge_count());
    for (int s = 0; s < c.section_count(); ++s) {
      g.edge_curve.push_back(c.id);
      g.edge_section.push_back(s);
    }
    for (std::size_t i = 0; i < c.events.size(); ++i) {
      auto& slot = where[static_cast<std::size_t>(c.events[i].meeting)];
      (slot[0].first < 0 ? slot[0] : slot[1]) = {c.id, static_cast<int>(i)};
    }
  }
  g.origin.assign(static_cast<std::size_t>(g.dart_count()), -1);
  for (const auto& c : f.curves) {
    const int base = g.section_base[static_cast<std::size_t>(c.id)];
    const int m = static_cast<int>(c.events.size());
    for (int s = 0; s <= m; ++s) {
      const int start = s == 0 ? c.source : g.meeting_vertex(c.events[static_cast<std::size_t>(s - 1)].meeting);
      const int end = s == m ? c.target : g.meeting_vertex(c.events[static_cast<std::size_t>(s)].meeting);
      g.origin[static_cast<std::size_t>(2 * (base + s))] = start;
      g.origin[static_cast<std::size_t>(2 * (base + s) + 1)] = end;
    }
  }
  auto dart_at_hub = [&](const Branch& b) {
    const auto& c = f.curve(b.curve);
    const int base = g.section_base[static_cast<std::size_t>(b.curve)];
    return b.leg == Leg::Out ? 2 * base : 2 * (base + static_cast<int>(c.events.size())) + 1;
  };
  g.rotation.resize(static_cast<std::size_t>(g.vertex_count()));
  for (int h = 0; h < g.hubs; ++h) {
    for (const auto& b : f.hub_rotations[static_cast<std::size_t>(h)]) {
      g.rotation[static_cast<std::size_t>(h)].push_back(dart_at_hub(b));
    }
  }
  for (int m = 0; m < g.meetings; ++m) {
    const auto& slot = where[static_cast<std::size_t>(m)];
    for (const auto& b : f.meeting_rotations[static_cast<std::size_t>(m)]) {
      const int idx = slot[0].first == b.curve ? slot[0].second : slot[1].second;
      const int base = g.section_base[static_cast<std::size_t>(b.curve)];
      const int d = b.leg == Leg::In ? 2 * (base + idx) + 1 : 2 * (base + idx + 1);
      g.rotation[static_cast<std::size_t>(g.meeting_vertex(m))].push_back(d);
    }
  }
  g.sigma.assign(static_cast<std::size_t>(g.dart_count()), -1);
  for (const auto& rot : g.rotation) {
    for (std::size_t i = 0; i < rot.size(); ++i) {
      g.sigma[static_cast<std::size_t>(rot[i])] = rot[(i + 1) % rot.size()];
    }
  }
  return g;
}

std::vector<std::vector<int>> trace_faces(const PlaneGraph& g) {
  std::vector<std::vector<int>> faces;
  std::vector<char> used(static_cast<std::size_t>(g.dart_count()), 0);
  for (int d0 = 0; d0 < g.dart_count(); ++d0) {
    if (used[static_cast<std::size_t>(d0)]) continue;
    std::vector<int> cycle;
    int d = d0;
    do {
      used[static_cast<std::size_t>(d)] = 1;
      cycle.push_back(d);
      d = g.face_next(d);
    } while (d != d0);
    faces.push_back(std::move(cycle));
  }
  return faces;
}

namespace {

void place_components(const CombinatorialFamily& f, Arrangement& arr, UnionFind& regions) {
  const int comps = static_cast<int>(arr.components.size());
  if (comps <= 1) return;
  const bool all_single = std::all_of(arr.components.begin(), arr.components.end(),
                                      [](const ComponentStats& s) { return s.faces == 1; });
  const auto& g = arr.graph;
  auto comp_of_curve = [&](CurveId c) {
    const int e = g.section_base.at(static_cast<std::size_t>(c));
    return arr.vertex_component[static_cast<std::size_t>(g.origin[static_cast<std::size_t>(2 * e)])];
  };
  if (all_single && f.containment.empty()) {
    for (std::size_t i = 1; i < arr.faces.size(); ++i) regions.unite(0, static_cast<int>(i));
    return;
  }
  std::vector<int> container(static_cast<std::size_t>(comps), -1);
  for (const auto& entry : f.containment) {
    const int comp = comp_of_curve(entry.component);
    if (container[static_cast<std::size_t>(comp)] >= 0) {
      throw Error(ErrorCode::AmbiguousPlacement, "component of curve " + std::to_string(entry.component) + " placed twice");
    }
    int own_face = -1;
    if (entry.outer) {
      own_face = arr.dart_face[static_cast<std::size_t>(g.dart_of(*entry.outer))];
      if (arr.face_component[static_cast<std::size_t>(own_face)] != comp) {
        throw Error(ErrorCode::AmbiguousPlacement, "outer face of a placed component must belong to it");
      }
    } else if (arr.components[static_cast<std::size_t>(comp)].faces == 1) {
      for (std::size_t i = 0; i < arr.faces.size(); ++i) {
        if (arr.face_component[i] == comp) own_face = static_cast<int>(i);
      }
    } else {
      throw Error(ErrorCode::AmbiguousPlacement,
                  "component of curve " + std::to_string(entry.component) + " has several faces; name its outer face");
    }
    const int host_face = arr.dart_face[static_cast<std::size_t>(g.dart_of(entry.inside))];
    const int host = arr.face_component[static_cast<std::size_t>(host_face)];
    if (host == comp) throw Error(ErrorCode::AmbiguousPlacement, "a component cannot contain itself");
    container[static_cast<std::size_t>(comp)] = host;
    regions.unite(own_face, host_face);
  }
  int roots = 0;
  for (int c = 0; c < comps; ++c) {
    if (container[static_cast<std::size_t>(c)] < 0) ++roots;
    // walk up; a cycle means the forest is malformed
    int steps = 0;
    for (int x = c; container[static_cast<std::size_t>(x)] >= 0; x = container[static_cast<std::size_t>(x)]) {
      if (++steps > comps) throw Error(ErrorCode::AmbiguousPlacement, "containment entries form a cycle");
    }
  }
  if (roots != 1) {
    throw Error(ErrorCode::AmbiguousPlacement,
                "disconnected family needs a containment forest with one root (found " + std::to_string(roots) + ")");
  }
}

}  // namespace

Arrangement build_arrangement(const CombinatorialFamily& f) {
  check_structure(f);
  Arrangement arr;
  arr.graph = build_plane_graph(f);
  const auto& g = arr.graph;
  arr.faces = trace_faces(g);
  arr.dart_face.assign(static_cast<std::size_t>(g.dart_count()), -1);
  for (std::size_t i = 0; i < arr.faces.size(); ++i) {
    for (int d : arr.faces[i]) arr.dart_face[static_cast<std::size_t>(d)] = static_cast<int>(i);
  }

  UnionFind vuf(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    vuf.unite(g.origin[static_cast<std::size_t>(2 * e)], g.origin[static_cast<std::size_t>(2 * e + 1)]);
  }
  const int comps = vuf.label(arr.vertex_component);
  arr.components.assign(static_cast<std::size_t>(comps), {});
  for (int v = 0; v < g.vertex_count(); ++v) ++arr.components[static_cast<std::size_t>(arr.vertex_component[static_cast<std::size_t>(v)])].vertices;
  for (int e = 0; e < g.edge_count(); ++e) {
    const int c = arr.vertex_component[static_cast<std::size_t>(g.origin[static_cast<std::size_t>(2 * e)])];
    ++arr.components[static_cast<std::size_t>(c)].edges;
  }
  arr.face_component.resize(arr.faces.size());
  for (std::size_t i = 0; i < arr.faces.size(); ++i) {
    const int c = arr.vertex_component[static_cast<std::size_t>(g.origin[static_cast<std::size_t>(arr.faces[i][0])])];
    arr.face_component[i] = c;
    ++arr.components[static_cast<std::size_t>(c)].faces;
  }
  for (int c = 0; c < comps; ++c) {
    const auto& s = arr.components[static_cast<std::size_t>(c)];
    if (s.euler() != 2) {
      throw Error(ErrorCode::NotRealizable, "component " + std::to_string(c) + " has V=" + std::to_string(s.vertices) +
                                                " E=" + std::to_string(s.edges) + " F=" + std::to_string(s.faces) +
                                                " (V-E+F=" + std::to_string(s.euler()) + ", sphere needs 2)");
    }
  }

  const int face_count = static_cast<int>(arr.faces.size());
  if (face_count == 0) {
    arr.region_count = 1;
    arr.reduced_region_count = 1;
    arr.t_c = 0;
    return arr;
  }
  UnionFind regions(face_count);
  place_components(f, arr, regions);
  UnionFind reduced = regions;
  arr.region_count = regions.label(arr.face_region);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_end_section(e)) {
      reduced.unite(arr.dart_face[static_cast<std::size_t>(2 * e)], arr.dart_face[static_cast<std::size_t>(2 * e + 1)]);
    } else {
      ++arr.reduced_edges;
    }
  }
  arr.reduced_region_count = reduced.label(arr.face_reduced_region);
  arr.reduced_vertices = g.meetings;

  arr.hub_region.resize(static_cast<std::size_t>(g.hubs));
  for (int h = 0; h < g.hubs; ++h) {
    const int d = g.rotation[static_cast<std::size_t>(h)].front();
    arr.hub_region[static_cast<std::size_t>(h)] =
        arr.face_reduced_region[static_cast<std::size_t>(arr.dart_face[static_cast<std::size_t>(d)])];
  }
  arr.t_c = compute_tc(arr);

  if (f.outer_face) {
    arr.outer_face = arr.dart_face[static_cast<std::size_t>(g.dart_of(*f.outer_face))];
  } else {
    arr.outer_face = 0;
    for (int h = 0; h < g.hubs; ++h) {
      if (g.rotation[static_cast<std::size_t>(h)].size() == 1) {
        arr.outer_face = arr.dart_face[static_cast<std::size_t>(g.rotation[static_cast<std::size_t>(h)].front())];
        break;
      }
    }
  }
  return arr;
}

int compute_tc(const Arrangement& arr) {
  std::set<int> seen(arr.hub_region.begin(), arr.hub_region.end());
  return static_cast<int>(seen.size());
}

Contraction contract_endpoints(const CombinatorialFamily& f, const Arrangement& arr) {
  const auto& g = arr.graph;
  auto is_reduced = [&](int d) { return !g.is_end_section(d / 2); };
  auto region_of_dart = [&](int d) {
    return arr.face_reduced_region[static_cast<std::size_t>(arr.dart_face[static_cast<std::size_t>(d)])];
  };
  // End dart at a meeting -> branch at the new hub.
  auto end_branch = [&](int d) {
    const CurveId c = g.edge_curve[static_cast<std::size_t>(d / 2)];
    return g.edge_section[static_cast<std::size_t>(d / 2)] == 0 && (d % 2) == 1 ? Branch{c, Leg::Out}
                                                                                 : Branch{c, Leg::In};
  };
  // A one-event curve has two end-sections; the dart leaving the meeting
  // toward the source is odd on section 0, toward the target even on section 1.
  std::map<int, std::vector<std::vector<Branch>>> groups;  // region -> walk-ordered groups

  std::vector<int> reduced_sigma(static_cast<std::size_t>(g.dart_count()), -1);
  for (int v = g.hubs; v < g.vertex_count(); ++v) {
    std::vector<int> red;
    for (int d : g.rotation[static_cast<std::size_t>(v)]) {
      if (is_reduced(d)) red.push_back(d);
    }
    for (std::size_t i = 0; i < red.size(); ++i) reduced_sigma[static_cast<std::size_t>(red[i])] = red[(i + 1) % red.size()];
    if (red.empty()) {
      std::vector<Branch> group;
      for (int d : g.rotation[static_cast<std::size_t>(v)]) group.push_back(end_branch(d));
      groups[region_of_dart(g.rotation[static_cast<std::size_t>(v)].front())].push_back(std::move(group));
    }
  }
  std::vector<char> used(static_cast<std::size_t>(g.dart_count()), 0);
  for (int d0 = 0; d0 < g.dart_count(); ++d0) {
    if (!is_reduced(d0) || used[static_cast<std::size_t>(d0)]) continue;
    std::vector<Branch> group;
    int d = d0;
    do {
      used[static_cast<std::size_t>(d)] = 1;
      const int back = PlaneGraph::twin(d);
      const int next = reduced_sigma[static_cast<std::size_t>(back)];
      // end darts strictly between back and next, counter-clockwise
      for (int x = g.sigma[static_cast<std::size_t>(back)]; x != next; x = g.sigma[static_cast<std::size_t>(x)]) {
        group.push_back(end_branch(x));
      }
      d = next;
    } while (d != d0);
    if (!group.empty()) groups[region_of_dart(d0)].push_back(std::move(group));
  }
  for (const auto& c : f.curves) {
    if (!c.events.empty()) continue;
    const int d = 2 * g.section_base[static_cast<std::size_t>(c.id)];
    groups[region_of_dart(d)].push_back({Branch{c.id, Leg::Out}, Branch{c.id, Leg::In}});
  }

  Contraction out;
  out.family = f;
  out.family.hub_rotations.clear();
  std::map<int, HubId> region_hub;
  for (auto& [region, list] : groups) {
    const HubId p = static_cast<HubId>(out.family.hub_rotations.size());
    region_hub[region] = p;
    std::vector<Branch> rot;
    for (auto& group : list) rot.insert(rot.end(), group.rbegin(), group.rend());
    out.family.hub_rotations.push_back(std::move(rot));
  }
  for (HubId p = 0; p < static_cast<HubId>(out.family.hub_rotations.size()); ++p) {
    for (const auto& b : out.family.hub_rotations[static_cast<std::size_t>(p)]) {
      auto& c = out.family.curve(b.curve);
      (b.leg == Leg::Out ? c.source : c.target) = p;
    }
  }
  std::set<std::pair<HubId, HubId>> classes;
  for (const auto& c : out.family.curves) classes.insert(std::minmax(c.source, c.target));
  out.classes = static_cast<int>(classes.size());
  out.hubs = static_cast<int>(region_hub.size());
  return out;
}

}  // namespace pseudoseg
