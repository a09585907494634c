#include "pseudoseg/insertion.hpp"

#include <algorithm>

#include "pseudoseg/error.hpp"
#include "pseudoseg/validate.hpp"

namespace pseudoseg {

namespace {

std::vector<int> tip_face(const PartialCurve& pc, const PlaneGraph& g) {
  const auto& rot = g.rotation[static_cast<std::size_t>(pc.tip())];
  if (rot.size() != 1) throw Error(ErrorCode::Precondition, "tip hub must hold exactly one curve end");
  std::vector<int> face;
  const int start = rot.front();
  int d = start;
  do {
    face.push_back(d);
    d = g.face_next(d);
  } while (d != start);
  return face;
}

}  // namespace

PartialCurve start_at_new_point(const CombinatorialFamily& f) {
  PartialCurve pc{f, f.curve_count(), true};
  const HubId source = pc.family.hub_count();
  pc.family.hub_rotations.push_back({Branch{pc.curve, Leg::Out}});
  pc.family.hub_rotations.push_back({Branch{pc.curve, Leg::In}});
  pc.family.curves.push_back({pc.curve, source, source + 1, {}});
  return pc;
}

PartialCurve start_at_hub(const CombinatorialFamily& f, HubId hub, int position) {
  PartialCurve pc{f, f.curve_count(), false};
  auto& rot = pc.family.hub_rotations.at(static_cast<std::size_t>(hub));
  rot.insert(rot.begin() + position, Branch{pc.curve, Leg::Out});
  pc.family.hub_rotations.push_back({Branch{pc.curve, Leg::In}});
  pc.family.curves.push_back({pc.curve, hub, pc.family.hub_count() - 1, {}});
  return pc;
}

std::vector<int> reachable_darts(const PartialCurve& pc, const PlaneGraph& g) {
  std::vector<int> out;
  if (pc.floating) {
    for (int d = 0; d < g.dart_count(); ++d) {
      if (g.edge_curve[static_cast<std::size_t>(d / 2)] != pc.curve) out.push_back(d);
    }
    return out;
  }
  for (int d : tip_face(pc, g)) {
    if (g.edge_curve[static_cast<std::size_t>(d / 2)] != pc.curve) out.push_back(d);
  }
  return out;
}

PartialCurve apply_move(const PartialCurve& pc, const PlaneGraph& g, int dart, MoveKind kind) {
  const int edge = dart / 2;
  const CurveId x = g.edge_curve[static_cast<std::size_t>(edge)];
  const int section = g.edge_section[static_cast<std::size_t>(edge)];
  if (x == pc.curve) throw Error(ErrorCode::Precondition, "a curve cannot meet itself");
  const Side side = dart % 2 == 0 ? Side::Right : Side::Left;
  MeetingKind k = MeetingKind::cross();
  if (kind == MoveKind::TouchSame) k = MeetingKind::touch(side, Direction::Same);
  if (kind == MoveKind::TouchOpposite) k = MeetingKind::touch(side, Direction::Opposite);

  PartialCurve next = pc;
  next.floating = false;
  auto& fam = next.family;
  const MeetingId m = fam.meeting_count();
  fam.meeting_rotations.push_back(rotation_for(pc.curve, x, k, side));
  auto& xe = fam.curve(x).events;
  xe.insert(xe.begin() + section, MeetingEvent{pc.curve, k.swapped(), m});
  fam.curve(pc.curve).events.push_back({x, k, m});
  return next;
}

CombinatorialFamily finish_free(const PartialCurve& pc) { return pc.family; }

std::vector<int> hub_positions_on_tip_face(const PartialCurve& pc, const PlaneGraph& g, HubId hub) {
  const auto& rot = g.rotation.at(static_cast<std::size_t>(hub));
  std::vector<int> out;
  if (pc.floating) {
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) out.push_back(i);
    return out;
  }
  auto face = tip_face(pc, g);
  std::sort(face.begin(), face.end());
  for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
    if (std::binary_search(face.begin(), face.end(), rot[static_cast<std::size_t>(i)])) out.push_back(i);
  }
  return out;
}

CombinatorialFamily finish_at_hub(const PartialCurve& pc, HubId hub, int position) {
  if (hub == pc.tip()) throw Error(ErrorCode::Precondition, "cannot finish at the tip itself");
  CombinatorialFamily f = pc.family;
  f.hub_rotations.pop_back();
  f.curve(pc.curve).target = hub;
  auto& rot = f.hub_rotations.at(static_cast<std::size_t>(hub));
  rot.insert(rot.begin() + position, Branch{pc.curve, Leg::In});
  return f;
}

}  // namespace pseudoseg
