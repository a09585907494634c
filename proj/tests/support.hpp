#pragma once

#include <stdexcept>
#include <vector>

#include "pseudoseg/arrangement.hpp"
#include "pseudoseg/insertion.hpp"

namespace pseudoseg::drawkit {

struct Step {
  CurveId curve;
  MoveKind kind;
  Side side;  // side of `curve` the new curve approaches from
};

/// Draws a new curve from a fresh point through the listed meetings, taking
/// the first reachable section of each named curve on the requested side,
/// and leaves its end free.
inline CombinatorialFamily draw(const CombinatorialFamily& f, const std::vector<Step>& steps) {
  PartialCurve pc = start_at_new_point(f);
  for (const auto& s : steps) {
    const auto g = build_plane_graph(pc.family);
    int pick = -1;
    for (int d : reachable_darts(pc, g)) {
      const bool right = d % 2 == 0;
      if (g.edge_curve[static_cast<std::size_t>(d / 2)] == s.curve && right == (s.side == Side::Right)) {
        pick = d;
        break;
      }
    }
    if (pick < 0) throw std::logic_error("step not reachable");
    pc = apply_move(pc, g, pick, s.kind);
  }
  return finish_free(pc);
}

inline CombinatorialFamily single_curve() { return draw({}, {}); }

}  // namespace pseudoseg::drawkit
