#include "pseudoseg/family.hpp"

#include <algorithm>
#include <map>

namespace pseudoseg {

std::optional<int> event_index(const DirectedCurve& c, MeetingId meeting) {
  for (std::size_t i = 0; i < c.events.size(); ++i) {
    if (c.events[i].meeting == meeting) return static_cast<int>(i);
  }
  return std::nullopt;
}

const MeetingEvent* event_against(const CombinatorialFamily& f, CurveId c, CurveId other) {
  for (const auto& e : f.curve(c).events) {
    if (e.other == other) return &e;
  }
  return nullptr;
}

int meetings_between(const CombinatorialFamily& f, CurveId c, CurveId other) {
  const auto& ev = f.curve(c).events;
  return static_cast<int>(std::count_if(ev.begin(), ev.end(), [&](const MeetingEvent& e) { return e.other == other; }));
}

CombinatorialFamily with_curve_reversed(const CombinatorialFamily& f, CurveId c) {
  CombinatorialFamily out = f;
  auto& curve = out.curve(c);
  std::reverse(curve.events.begin(), curve.events.end());
  std::swap(curve.source, curve.target);
  for (auto& e : curve.events) {
    if (e.kind.is_touch()) e.kind.direction = flip(e.kind.direction);
    auto& other = out.curve(e.other);
    for (auto& oe : other.events) {
      if (oe.meeting == e.meeting && oe.kind.is_touch()) {
        oe.kind = MeetingKind::touch(flip(oe.kind.side), flip(oe.kind.direction));
      }
    }
  }
  for (auto& rot : out.meeting_rotations) {
    for (auto& b : rot) {
      if (b.curve == c) b.leg = flip(b.leg);
    }
  }
  for (auto& rot : out.hub_rotations) {
    for (auto& b : rot) {
      if (b.curve == c) b.leg = flip(b.leg);
    }
  }
  const int sections = curve.section_count();
  auto fix_ref = [&](FaceRef& r) {
    if (r.curve != c) return;
    r.section = sections - 1 - r.section;
    r.side = flip(r.side);
  };
  for (auto& cont : out.containment) {
    if (cont.outer) fix_ref(*cont.outer);
    fix_ref(cont.inside);
  }
  if (out.outer_face) fix_ref(*out.outer_face);
  return out;
}

CombinatorialFamily reflected(const CombinatorialFamily& f) {
  CombinatorialFamily out = f;
  for (auto& c : out.curves) {
    for (auto& e : c.events) e.kind = e.kind.reflected();
  }
  for (auto& rot : out.meeting_rotations) std::reverse(rot.begin(), rot.end());
  for (auto& rot : out.hub_rotations) std::reverse(rot.begin(), rot.end());
  for (auto& cont : out.containment) {
    if (cont.outer) cont.outer->side = flip(cont.outer->side);
    cont.inside.side = flip(cont.inside.side);
  }
  if (out.outer_face) out.outer_face->side = flip(out.outer_face->side);
  return out;
}

Subfamily restricted(const CombinatorialFamily& f, std::span<const CurveId> keep) {
  Subfamily sub;
  sub.new_id.assign(f.curves.size(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    sub.new_id[static_cast<std::size_t>(keep[i])] = static_cast<CurveId>(i);
    sub.old_id.push_back(keep[i]);
  }
  std::map<MeetingId, MeetingId> meeting_map;
  std::map<HubId, HubId> hub_map;
  auto map_hub = [&](HubId h) {
    auto [it, inserted] = hub_map.try_emplace(h, static_cast<HubId>(hub_map.size()));
    return it->second;
  };
  auto& out = sub.family;
  for (CurveId old : keep) {
    const auto& src = f.curve(old);
    DirectedCurve c;
    c.id = sub.new_id[static_cast<std::size_t>(old)];
    c.source = map_hub(src.source);
    c.target = map_hub(src.target);
    for (const auto& e : src.events) {
      const CurveId other = sub.new_id[static_cast<std::size_t>(e.other)];
      if (other < 0) continue;
      auto [it, inserted] = meeting_map.try_emplace(e.meeting, static_cast<MeetingId>(meeting_map.size()));
      c.events.push_back({other, e.kind, it->second});
    }
    out.curves.push_back(std::move(c));
  }
  auto remap_branch = [&](const Branch& b) { return Branch{sub.new_id[static_cast<std::size_t>(b.curve)], b.leg}; };
  out.meeting_rotations.resize(meeting_map.size());
  for (const auto& [old_m, new_m] : meeting_map) {
    auto rot = f.meeting_rotations.at(static_cast<std::size_t>(old_m));
    for (auto& b : rot) b = remap_branch(b);
    out.meeting_rotations[static_cast<std::size_t>(new_m)] = rot;
  }
  out.hub_rotations.resize(hub_map.size());
  for (const auto& [old_h, new_h] : hub_map) {
    std::vector<Branch> rot;
    for (const auto& b : f.hub_rotations.at(static_cast<std::size_t>(old_h))) {
      if (sub.new_id[static_cast<std::size_t>(b.curve)] >= 0) rot.push_back(remap_branch(b));
    }
    out.hub_rotations[static_cast<std::size_t>(new_h)] = std::move(rot);
  }
  return sub;
}

}  // namespace pseudoseg
