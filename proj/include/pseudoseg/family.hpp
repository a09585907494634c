#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "pseudoseg/types.hpp"

namespace pseudoseg {

/// One meeting as seen from a single curve. `kind` is stated for the pair
/// (this curve, other).
struct MeetingEvent {
  CurveId other = -1;
  MeetingKind kind;
  MeetingId meeting = -1;
  friend bool operator==(const MeetingEvent&, const MeetingEvent&) = default;
};

struct DirectedCurve {
  CurveId id = -1;
  HubId source = -1;
  HubId target = -1;
  /// Meetings in traversal order from source to target.
  std::vector<MeetingEvent> events;

  bool closed() const { return source == target; }
  int section_count() const { return static_cast<int>(events.size()) + 1; }
  friend bool operator==(const DirectedCurve&, const DirectedCurve&) = default;
};

/// Names a face by a curve-section and a side of it. Section i of a curve
/// runs from its (i-1)-th event (or the source) to its i-th event (or the
/// target).
struct FaceRef {
  CurveId curve = -1;
  int section = 0;
  Side side = Side::Left;
  friend bool operator==(const FaceRef&, const FaceRef&) = default;
};

/// Places the connected component containing `component` inside the face
/// `inside` of another component. `outer` names the face of the component
/// itself that is unbounded relative to its container.
struct Containment {
  CurveId component = -1;
  std::optional<FaceRef> outer;
  FaceRef inside;
  friend bool operator==(const Containment&, const Containment&) = default;
};

/// A family of directed curves described by event sequences and a rotation
/// system. Curve ids, meeting ids and hub ids are dense from zero. Rotations
/// list branches counter-clockwise.
struct CombinatorialFamily {
  std::vector<DirectedCurve> curves;
  std::vector<std::array<Branch, 4>> meeting_rotations;
  std::vector<std::vector<Branch>> hub_rotations;
  std::vector<Containment> containment;
  std::optional<FaceRef> outer_face;

  int curve_count() const { return static_cast<int>(curves.size()); }
  int meeting_count() const { return static_cast<int>(meeting_rotations.size()); }
  int hub_count() const { return static_cast<int>(hub_rotations.size()); }

  const DirectedCurve& curve(CurveId c) const { return curves.at(static_cast<std::size_t>(c)); }
  DirectedCurve& curve(CurveId c) { return curves.at(static_cast<std::size_t>(c)); }

  friend bool operator==(const CombinatorialFamily&, const CombinatorialFamily&) = default;
};

/// Position of `meeting` in the event list of `c`, if present.
std::optional<int> event_index(const DirectedCurve& c, MeetingId meeting);

/// First event of `c` against `other`, if any.
const MeetingEvent* event_against(const CombinatorialFamily& f, CurveId c, CurveId other);

/// Number of events on `c` against `other`.
int meetings_between(const CombinatorialFamily& f, CurveId c, CurveId other);

/// Reverses the direction of one curve: events, hub assignment, legs in every
/// rotation and the kinds on both sides of its meetings.
CombinatorialFamily with_curve_reversed(const CombinatorialFamily& f, CurveId c);

/// Mirror image: every rotation reversed, every touching side flipped.
CombinatorialFamily reflected(const CombinatorialFamily& f);

struct Subfamily {
  CombinatorialFamily family;
  std::vector<CurveId> new_id;     // indexed by old curve id, -1 when dropped
  std::vector<CurveId> old_id;     // indexed by new curve id
};

/// Keeps the listed curves (in the given order, which becomes their new id
/// order) together with their mutual meetings and the hubs they use.
Subfamily restricted(const CombinatorialFamily& f, std::span<const CurveId> keep);

}  // namespace pseudoseg
