#pragma once

#include <array>
#include <string>
#include <vector>

#include "pseudoseg/family.hpp"

namespace pseudoseg {

/// Kind of meeting encoded by a counter-clockwise cycle of four branches
/// (two per curve, one In and one Out each), stated for `subject` against
/// the other curve. Alternating curves give a crossing.
///
/// Throws Error(InvalidRotation) when the cycle does not hold exactly the
/// four branches of two distinct curves or `subject` is not one of them.
MeetingKind classify_meeting(const std::array<Branch, 4>& ccw, CurveId subject);

/// Same, with the curve of the first listed branch as subject.
MeetingKind classify_meeting(const std::array<Branch, 4>& ccw);

/// Counter-clockwise cycle of four branches realising `kind` for (subject,
/// other). A crossing also needs the side of `other` from which subject
/// arrives.
std::array<Branch, 4> rotation_for(CurveId subject, CurveId other, const MeetingKind& kind,
                                   Side subject_arrives_from = Side::Right);

struct Violation {
  CurveId a = -1;
  CurveId b = -1;
  std::string reason;
};

struct ValidationReport {
  bool is_pseudo_segment = false;
  bool is_intersecting = false;
  /// Rotations agree with stored kinds everywhere.
  bool rotations_consistent = true;
  std::vector<Violation> violations;
};

/// Throws Error(Structural) naming the offending meeting or hub when the
/// event lists and rotations do not cross-reference consistently.
void check_structure(const CombinatorialFamily& f);

/// Structural check, then pair-level checks: at most one meeting per pair
/// (pseudo-segments), exactly one (intersecting), and rotation/kind agreement.
ValidationReport validate_family(const CombinatorialFamily& f);

struct MeetingCounts {
  int touchings = 0;
  int crossings = 0;
  friend bool operator==(const MeetingCounts&, const MeetingCounts&) = default;
};

/// Each meeting counted once. Hub coincidences are not meetings.
MeetingCounts count_meetings(const CombinatorialFamily& f);

}  // namespace pseudoseg
