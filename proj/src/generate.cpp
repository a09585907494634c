#include "pseudoseg/generate.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "pseudoseg/arrangement.hpp"
#include "pseudoseg/error.hpp"
#include "pseudoseg/validate.hpp"

namespace pseudoseg {

namespace {

constexpr HubId kX = 0, kY = 1, kA = 2, kB = 3;

// The grid of the figure: g runs east, the c_j hang below it and run east too.
CombinatorialFamily base_grid(int k) {
  CombinatorialFamily f;
  const auto touch = MeetingKind::touch(Side::Right, Direction::Same);  // c_j relative to g
  std::map<std::pair<int, int>, MeetingId> cross;
  f.curves.push_back({0, kX, kY, {}});
  for (int j = 1; j <= k; ++j) f.curves.push_back({j, kA, kB, {}});
  std::vector<MeetingId> touch_at(static_cast<std::size_t>(k + 1));
  for (int j = 1; j <= k; ++j) {
    touch_at[static_cast<std::size_t>(j)] = f.meeting_count();
    f.meeting_rotations.push_back(rotation_for(j, 0, touch, Side::Right));
  }
  for (int i = 1; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) {
      cross[{i, j}] = f.meeting_count();
      // c_j reaches the second part of c_i from its right.
      f.meeting_rotations.push_back(rotation_for(j, i, MeetingKind::cross(), Side::Right));
    }
  }
  for (int j = 1; j <= k; ++j) f.curves[0].events.push_back({j, touch.swapped(), touch_at[static_cast<std::size_t>(j)]});
  for (int j = 1; j <= k; ++j) {
    auto& ev = f.curves[static_cast<std::size_t>(j)].events;
    for (int i = 1; i < j; ++i) ev.push_back({i, MeetingKind::cross(), cross[{i, j}]});
    ev.push_back({0, touch, touch_at[static_cast<std::size_t>(j)]});
    for (int m = j + 1; m <= k; ++m) ev.push_back({m, MeetingKind::cross(), cross[{j, m}]});
  }
  f.hub_rotations.resize(4);
  f.hub_rotations[kX] = {{0, Leg::Out}};
  f.hub_rotations[kY] = {{0, Leg::In}};
  for (int j = k; j >= 1; --j) {
    f.hub_rotations[kA].push_back({j, Leg::Out});
    f.hub_rotations[kB].push_back({j, Leg::In});
  }
  return f;
}

CombinatorialFamily with_hub_merged(const CombinatorialFamily& f, HubId keep, HubId drop, std::vector<Branch> rot) {
  CombinatorialFamily out = f;
  auto remap = [&](HubId h) {
    if (h == drop) h = keep;
    return h > drop ? h - 1 : h;
  };
  for (auto& c : out.curves) {
    c.source = remap(c.source);
    c.target = remap(c.target);
  }
  out.hub_rotations[static_cast<std::size_t>(keep)] = std::move(rot);
  out.hub_rotations.erase(out.hub_rotations.begin() + drop);
  return out;
}

bool plane(const CombinatorialFamily& f) {
  try {
    build_arrangement(f);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// Candidate rotations for joining two hubs: every pair of cyclic shifts of
// their rotations laid end to end.
std::vector<std::vector<Branch>> merged_rotations(const std::vector<Branch>& r1, const std::vector<Branch>& r2) {
  std::vector<std::vector<Branch>> out;
  for (std::size_t s1 = 0; s1 < r1.size(); ++s1) {
    for (std::size_t s2 = 0; s2 < r2.size(); ++s2) {
      std::vector<Branch> rot;
      for (std::size_t i = 0; i < r1.size(); ++i) rot.push_back(r1[(s1 + i) % r1.size()]);
      for (std::size_t i = 0; i < r2.size(); ++i) rot.push_back(r2[(s2 + i) % r2.size()]);
      out.push_back(std::move(rot));
    }
  }
  return out;
}

// Joins hubs with equal labels one pair at a time, backtracking over the
// candidate rotations until the whole drawing is planar.
std::optional<CombinatorialFamily> merge_all(const CombinatorialFamily& f, std::vector<int>& hub_label) {
  for (std::size_t a = 0; a < hub_label.size(); ++a) {
    for (std::size_t b = a + 1; b < hub_label.size(); ++b) {
      if (hub_label[a] != hub_label[b]) continue;
      auto labels = hub_label;
      labels.erase(labels.begin() + static_cast<long>(b));
      for (auto& rot : merged_rotations(f.hub_rotations[a], f.hub_rotations[b])) {
        auto cand = with_hub_merged(f, static_cast<HubId>(a), static_cast<HubId>(b), std::move(rot));
        auto rest = labels;
        if (auto done = merge_all(cand, rest)) {
          hub_label = std::move(rest);
          return done;
        }
      }
      return std::nullopt;
    }
  }
  if (!plane(f)) return std::nullopt;
  return f;
}

}  // namespace

CombinatorialFamily generate_canonical_quasigrid(int k, TouchClass cls, HubPattern hubs) {
  if (k < 1) throw Error(ErrorCode::Precondition, "a quasi-grid needs at least one curve");
  const bool reverse_g = cls.side == Side::Left && cls.direction == Direction::Opposite;
  const bool reverse_c = cls.side == Side::Right && cls.direction == Direction::Opposite;
  const bool mirror = cls.side == Side::Left && cls.direction == Direction::Same;

  // Labels of the base hubs X, Y, A, B before any reversal.
  auto lab = hubs.label;
  if (reverse_g) std::swap(lab[0], lab[1]);
  if (reverse_c) std::swap(lab[2], lab[3]);

  CombinatorialFamily f = base_grid(k);
  std::vector<int> hub_label(lab.begin(), lab.end());  // per current hub id
  auto merged = merge_all(f, hub_label);
  if (!merged) throw Error(ErrorCode::Precondition, "the hub pattern admits no planar drawing of this grid");
  f = std::move(*merged);

  if (reverse_g) f = with_curve_reversed(f, 0);
  if (reverse_c) {
    for (CurveId c = 1; c <= k; ++c) f = with_curve_reversed(f, c);
  }
  if (mirror) f = reflected(f);

  // Number hubs by increasing label.
  std::vector<HubId> order(hub_label.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<HubId>(i);
  std::sort(order.begin(), order.end(), [&](HubId x, HubId y) {
    return hub_label[static_cast<std::size_t>(x)] < hub_label[static_cast<std::size_t>(y)];
  });
  std::vector<HubId> new_id(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) new_id[static_cast<std::size_t>(order[i])] = static_cast<HubId>(i);
  CombinatorialFamily out = f;
  for (auto& c : out.curves) {
    c.source = new_id[static_cast<std::size_t>(c.source)];
    c.target = new_id[static_cast<std::size_t>(c.target)];
  }
  for (std::size_t h = 0; h < order.size(); ++h) {
    out.hub_rotations[static_cast<std::size_t>(new_id[h])] = f.hub_rotations[h];
  }
  return out;
}

}  // namespace pseudoseg
