#pragma once

#include <vector>

#include "pseudoseg/family.hpp"

namespace pseudoseg {

/// Half-edge structure of the drawing induced by a family. Every curve-section
/// is an edge, including the end-sections from an endpoint to the first
/// meeting. Vertices 0..H-1 are hubs, H..H+M-1 are meetings.
///
/// Dart 2e runs along edge e in the curve's direction, dart 2e+1 against it.
/// The face of a dart lies on its right.
struct PlaneGraph {
  int hubs = 0;
  int meetings = 0;
  std::vector<int> section_base;   // first edge id of each curve
  std::vector<CurveId> edge_curve;
  std::vector<int> edge_section;
  std::vector<int> origin;         // per dart
  std::vector<int> sigma;          // next dart counter-clockwise around the origin
  std::vector<std::vector<int>> rotation;  // per vertex, darts counter-clockwise

  int vertex_count() const { return hubs + meetings; }
  int edge_count() const { return static_cast<int>(edge_curve.size()); }
  int dart_count() const { return 2 * edge_count(); }
  static constexpr int twin(int d) { return d ^ 1; }
  int head(int d) const { return origin[static_cast<std::size_t>(twin(d))]; }
  /// Next dart along the face on the right.
  int face_next(int d) const { return sigma[static_cast<std::size_t>(twin(d))]; }
  int edge_of(const FaceRef& ref) const;
  int dart_of(const FaceRef& ref) const;
  bool is_end_section(int edge) const;
  int meeting_vertex(MeetingId m) const { return hubs + m; }
};

/// Builds the half-edge structure. Requires a structurally consistent family.
PlaneGraph build_plane_graph(const CombinatorialFamily& f);

/// Face cycles of a rotation system (orbits of face_next).
std::vector<std::vector<int>> trace_faces(const PlaneGraph& g);

struct ComponentStats {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler() const { return vertices - edges + faces; }
};

struct Arrangement {
  PlaneGraph graph;
  std::vector<std::vector<int>> faces;  // dart cycles, traced per component
  std::vector<int> dart_face;
  std::vector<int> vertex_component;
  std::vector<int> face_component;
  std::vector<ComponentStats> components;

  /// Faces after placing components inside each other (regions of the plane).
  std::vector<int> face_region;
  int region_count = 0;

  /// Regions of the drawing without end-sections: the drawing whose vertices
  /// are meetings and whose edges are sections between consecutive meetings.
  std::vector<int> face_reduced_region;
  int reduced_region_count = 0;
  int reduced_vertices = 0;
  int reduced_edges = 0;

  /// Reduced region holding each hub.
  std::vector<int> hub_region;
  int outer_face = 0;
  int t_c = 0;
};

/// Traces faces, checks V - E + F = 2 on every component (Error NotRealizable
/// otherwise), merges components through the containment forest and computes
/// the number of faces holding at least one curve endpoint.
Arrangement build_arrangement(const CombinatorialFamily& f);

/// Number of faces of the endpoint-free drawing that contain a curve endpoint.
int compute_tc(const Arrangement& arr);

struct Contraction {
  CombinatorialFamily family;
  /// Distinct unordered endpoint-hub pairs after contraction.
  int classes = 0;
  /// Number of hubs created (equals t_C of the input).
  int hubs = 0;
};

/// Moves every curve endpoint lying in a face F_i to one new hub P_i placed
/// inside F_i. The rotation at P_i follows the boundary walk of F_i, so no
/// meeting is added.
Contraction contract_endpoints(const CombinatorialFamily& f, const Arrangement& arr);

}  // namespace pseudoseg
