#pragma once

#include <vector>

#include "pseudoseg/arrangement.hpp"
#include "pseudoseg/family.hpp"

namespace pseudoseg {

enum class MoveKind : std::uint8_t { Cross, TouchSame, TouchOpposite };

/// A curve being drawn into a realised family, one meeting at a time.
///
/// The curve's current end is a temporary hub (the tip), always the last hub
/// of `family`. The tip lies in exactly one face; every extension stays
/// inside that face, so each partial drawing remains plane-realisable.
/// A curve started at a fresh point has no face until its first meeting
/// (`floating`).
struct PartialCurve {
  CombinatorialFamily family;
  CurveId curve = -1;
  bool floating = false;

  HubId tip() const { return family.hub_count() - 1; }
};

/// Starts a new curve at a fresh point; the face is chosen by the first move.
PartialCurve start_at_new_point(const CombinatorialFamily& f);

/// Starts a new curve at `hub`, inserting its source end before position
/// `position` of the hub's counter-clockwise rotation.
PartialCurve start_at_hub(const CombinatorialFamily& f, HubId hub, int position);

/// Darts the tip can reach: those on the tip's face (every dart of the
/// drawing while floating), restricted to curves other than the one drawn.
std::vector<int> reachable_darts(const PartialCurve& pc, const PlaneGraph& g);

/// Adds a meeting on the edge of `dart`, approached from the face on the
/// dart's right. Crossing moves the tip to the opposite face.
PartialCurve apply_move(const PartialCurve& pc, const PlaneGraph& g, int dart, MoveKind kind);

/// Ends the curve at the tip, which becomes an ordinary free endpoint.
CombinatorialFamily finish_free(const PartialCurve& pc);

/// Rotation positions at `hub` whose corner lies on the tip's face.
std::vector<int> hub_positions_on_tip_face(const PartialCurve& pc, const PlaneGraph& g, HubId hub);

/// Ends the curve at `hub`, inserting its target end before `position`.
CombinatorialFamily finish_at_hub(const PartialCurve& pc, HubId hub, int position);

}  // namespace pseudoseg
