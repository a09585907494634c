#pragma once

#include <array>

#include "pseudoseg/family.hpp"

namespace pseudoseg {

/// Which of the four endpoints X, Y (of g) and A, B (of the grid curves)
/// coincide: equal labels share a hub. Labels refer to the generated curves'
/// own sources and targets.
struct HubPattern {
  std::array<int, 4> label{0, 1, 2, 3};  // X, Y, A, B

  static HubPattern distinct() { return {}; }
  static HubPattern closed_grid() { return {{0, 1, 2, 2}}; }
};

/// g is curve 0; c_1..c_k are curves 1..k with touching points along g in
/// index order (against g's direction for the classes reached by reversing g).
/// Every c_j crosses c_1..c_{j-1}, touches g, then crosses c_{j+1}..c_k.
/// Error Precondition when k < 1 or no planar rotation exists at merged hubs.
CombinatorialFamily generate_canonical_quasigrid(int k, TouchClass cls, HubPattern hubs = HubPattern::distinct());

}  // namespace pseudoseg
