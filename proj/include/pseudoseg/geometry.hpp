#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pseudoseg/family.hpp"

namespace pseudoseg {

struct Point {
  double x = 0;
  double y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Polyline {
  CurveId id = -1;
  std::vector<Point> points;
  friend bool operator==(const Polyline&, const Polyline&) = default;
};

/// A branch leaving a meeting point, with its direction in radians.
struct Ray {
  CurveId curve = -1;
  Leg leg = Leg::Out;
  double angle = 0;
};

struct GeometricMeeting {
  CurveId a = -1;  // a < b
  CurveId b = -1;
  Point location;
  MeetingKind kind;  // a relative to b
  std::array<Ray, 4> frame;
  double arc_a = 0;  // arclength position on each curve
  double arc_b = 0;
};

/// 1e-9 of the bounding-box diagonal (1e-9 for a degenerate box).
double default_epsilon(const std::vector<Polyline>& curves);

/// Checks the polylines (at least two points, distinct consecutive points, no
/// self-intersection); throws InvalidPolyline.
void check_polylines(const std::vector<Polyline>& curves, double eps);

/// Pairwise meetings, ordered by (a, b, arc_a). Touchings are vertex-on-segment
/// or vertex-on-vertex contacts within eps. Throws NonFiniteIntersection for
/// overlapping collinear pieces, GeneralPositionViolation for a meeting near
/// an endpoint or a third curve near a meeting, TangencyUnresolvable when two
/// rays leave in the same direction and ArclengthTie when two meetings share
/// a position on a curve.
std::vector<GeometricMeeting> intersect_all(const std::vector<Polyline>& curves, double eps);

/// Crossing iff the curves alternate in angular order; otherwise the touching
/// of `subject` against the other curve.
MeetingKind classify_geometric(const std::array<Ray, 4>& frame, CurveId subject);

/// Events ordered by arclength, rotations by angle, endpoints within eps of
/// each other merged into hubs.
CombinatorialFamily to_combinatorial(const std::vector<Polyline>& curves, const std::vector<GeometricMeeting>& meetings,
                                     double eps);

struct IngestOptions {
  std::optional<double> epsilon;
  /// Moves every vertex by at most `jitter` times the bounding-box diagonal,
  /// seeded; shared endpoints move together.
  std::optional<std::uint64_t> jitter_seed;
  double jitter = 1e-6;
};

std::vector<Polyline> jittered(const std::vector<Polyline>& curves, std::uint64_t seed, double amount);

/// The ingested family with the geometry it came from; meeting i of the
/// family is meetings[i].
struct Drawing {
  std::vector<Polyline> curves;  // after jitter
  std::vector<GeometricMeeting> meetings;
  double epsilon = 0;
  CombinatorialFamily family;
};

Drawing ingest_drawing(const std::vector<Polyline>& curves, const IngestOptions& options = {});

CombinatorialFamily ingest(const std::vector<Polyline>& curves, const IngestOptions& options = {});

/// Curves from SVG path data: one subpath per curve, absolute and relative
/// M/L commands (and implicit line-tos) only. Throws Parse.
std::vector<Polyline> parse_svg_paths(std::string_view svg);

}  // namespace pseudoseg
