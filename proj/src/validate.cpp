#include "pseudoseg/validate.hpp"

#include <algorithm>
#include <string>

#include "pseudoseg/error.hpp"

namespace pseudoseg {

namespace {

[[noreturn]] void structural(const std::string& what) { throw Error(ErrorCode::Structural, what); }

}  // namespace

MeetingKind classify_meeting(const std::array<Branch, 4>& ccw, CurveId subject) {
  int subject_count = 0;
  CurveId other = -1;
  for (const auto& b : ccw) {
    if (b.curve == subject) {
      ++subject_count;
    } else if (other == -1 || other == b.curve) {
      other = b.curve;
    } else {
      throw Error(ErrorCode::InvalidRotation, "three curves in one meeting rotation");
    }
  }
  if (subject_count != 2 || other == -1) {
    throw Error(ErrorCode::InvalidRotation, "rotation must hold two branches of each curve");
  }
  const std::array<Branch, 4> want = {Branch{subject, Leg::In}, Branch{subject, Leg::Out}, Branch{other, Leg::In},
                                      Branch{other, Leg::Out}};
  for (const auto& w : want) {
    if (std::count(ccw.begin(), ccw.end(), w) != 1) {
      throw Error(ErrorCode::InvalidRotation, "rotation must hold one In and one Out branch per curve");
    }
  }
  int start = 0;
  while (ccw[static_cast<std::size_t>(start)] != want[0]) ++start;
  auto at = [&](int k) { return ccw[static_cast<std::size_t>((start + k) % 4)]; };
  // at(0) is subject-in; classify by where subject-out sits.
  if (at(2).curve == subject) return MeetingKind::cross();
  if (at(3).curve == subject) {
    // subject-in, o?, o?, subject-out: other lies on subject's right.
    return at(1).leg == Leg::In ? MeetingKind::touch(Side::Left, Direction::Same)
                                : MeetingKind::touch(Side::Right, Direction::Opposite);
  }
  // subject-in, subject-out, o?, o?: other lies on subject's left.
  return at(2).leg == Leg::In ? MeetingKind::touch(Side::Left, Direction::Opposite)
                              : MeetingKind::touch(Side::Right, Direction::Same);
}

MeetingKind classify_meeting(const std::array<Branch, 4>& ccw) { return classify_meeting(ccw, ccw[0].curve); }

std::array<Branch, 4> rotation_for(CurveId subject, CurveId other, const MeetingKind& kind, Side arrives_from) {
  const Branch x_in{other, Leg::In}, x_out{other, Leg::Out};
  const Branch c_in{subject, Leg::In}, c_out{subject, Leg::Out};
  if (kind.crossing) {
    return arrives_from == Side::Right ? std::array{x_in, c_in, x_out, c_out} : std::array{x_in, c_out, x_out, c_in};
  }
  if (kind.side == Side::Right) {
    return kind.direction == Direction::Same ? std::array{x_in, c_in, c_out, x_out}
                                             : std::array{x_in, c_out, c_in, x_out};
  }
  return kind.direction == Direction::Opposite ? std::array{x_in, x_out, c_in, c_out}
                                               : std::array{x_in, x_out, c_out, c_in};
}

void check_structure(const CombinatorialFamily& f) {
  const int n = f.curve_count();
  const int meetings = f.meeting_count();
  const int hubs = f.hub_count();
  struct Seen {
    CurveId curve = -1;
    int index = -1;
  };
  std::vector<std::vector<Seen>> seen(static_cast<std::size_t>(meetings));
  for (int i = 0; i < n; ++i) {
    const auto& c = f.curves[static_cast<std::size_t>(i)];
    if (c.id != i) structural("curve ids must be dense and ordered; found " + std::to_string(c.id) + " at " + std::to_string(i));
    if (c.source < 0 || c.source >= hubs || c.target < 0 || c.target >= hubs) {
      structural("curve " + std::to_string(i) + " references an unknown hub");
    }
    for (std::size_t k = 0; k < c.events.size(); ++k) {
      const auto& e = c.events[k];
      if (e.meeting < 0 || e.meeting >= meetings) structural("unknown meetingId " + std::to_string(e.meeting));
      if (e.other == i) structural("meetingId " + std::to_string(e.meeting) + ": curve meets itself");
      if (e.other < 0 || e.other >= n) structural("meetingId " + std::to_string(e.meeting) + ": unknown other curve");
      seen[static_cast<std::size_t>(e.meeting)].push_back({i, static_cast<int>(k)});
    }
  }
  for (int m = 0; m < meetings; ++m) {
    const auto& s = seen[static_cast<std::size_t>(m)];
    const std::string tag = "meetingId " + std::to_string(m);
    if (s.size() != 2) structural(tag + " must appear on exactly two curves (found " + std::to_string(s.size()) + ")");
    const auto& ea = f.curve(s[0].curve).events[static_cast<std::size_t>(s[0].index)];
    const auto& eb = f.curve(s[1].curve).events[static_cast<std::size_t>(s[1].index)];
    if (s[0].curve == s[1].curve) structural(tag + " appears twice on one curve");
    if (ea.other != s[1].curve || eb.other != s[0].curve) structural(tag + ": other-curve references disagree");
    if (!(ea.kind.swapped() == eb.kind)) structural(tag + ": kinds disagree between the two curves");
    const auto& rot = f.meeting_rotations[static_cast<std::size_t>(m)];
    for (CurveId c : {s[0].curve, s[1].curve}) {
      for (Leg l : {Leg::In, Leg::Out}) {
        if (std::count(rot.begin(), rot.end(), Branch{c, l}) != 1) {
          structural(tag + ": rotation does not list each branch of the two curves once");
        }
      }
    }
  }
  std::vector<std::vector<Branch>> expected(static_cast<std::size_t>(hubs));
  for (const auto& c : f.curves) {
    expected[static_cast<std::size_t>(c.source)].push_back({c.id, Leg::Out});
    expected[static_cast<std::size_t>(c.target)].push_back({c.id, Leg::In});
  }
  for (int h = 0; h < hubs; ++h) {
    auto want = expected[static_cast<std::size_t>(h)];
    auto have = f.hub_rotations[static_cast<std::size_t>(h)];
    std::sort(want.begin(), want.end());
    std::sort(have.begin(), have.end());
    if (want.empty()) structural("hub " + std::to_string(h) + " has no curve ends");
    if (want != have) structural("hub " + std::to_string(h) + ": rotation does not match the curve ends attached to it");
  }
}

ValidationReport validate_family(const CombinatorialFamily& f) {
  check_structure(f);
  ValidationReport report;
  const int n = f.curve_count();
  std::vector<int> pair_count(static_cast<std::size_t>(n * n), 0);
  for (const auto& c : f.curves) {
    for (const auto& e : c.events) ++pair_count[static_cast<std::size_t>(c.id * n + e.other)];
  }
  bool pseudo = true;
  bool intersecting = true;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const int k = pair_count[static_cast<std::size_t>(a * n + b)];
      if (k > 1) {
        pseudo = false;
        report.violations.push_back({a, b, "curves meet " + std::to_string(k) + " times (pseudo-segments meet at most once)"});
      } else if (k == 0) {
        intersecting = false;
        report.violations.push_back({a, b, "curves do not meet (intersecting families meet exactly once)"});
      }
    }
  }
  for (const auto& c : f.curves) {
    for (const auto& e : c.events) {
      if (c.id > e.other) continue;
      const auto got = classify_meeting(f.meeting_rotations[static_cast<std::size_t>(e.meeting)], c.id);
      if (!(got == e.kind)) {
        report.rotations_consistent = false;
        report.violations.push_back({c.id, e.other,
                                     "meetingId " + std::to_string(e.meeting) + ": rotation encodes " + to_string(got) +
                                         " but the event stores " + to_string(e.kind)});
      }
    }
  }
  report.is_pseudo_segment = pseudo;
  report.is_intersecting = pseudo && intersecting;
  return report;
}

MeetingCounts count_meetings(const CombinatorialFamily& f) {
  MeetingCounts counts;
  for (const auto& c : f.curves) {
    for (const auto& e : c.events) {
      if (c.id > e.other) continue;
      if (e.kind.crossing) {
        ++counts.crossings;
      } else {
        ++counts.touchings;
      }
    }
  }
  return counts;
}

}  // namespace pseudoseg
