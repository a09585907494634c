#pragma once

#include <climits>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pseudoseg/family.hpp"

namespace pseudoseg {

/// Meeting outcomes a new curve may have with one earlier curve.
namespace allow {
inline constexpr std::uint8_t skip = 1;
inline constexpr std::uint8_t cross = 2;
inline constexpr std::uint8_t touch(TouchClass c) { return static_cast<std::uint8_t>(4u << c.index()); }
inline constexpr std::uint8_t any_touch = 4 | 8 | 16 | 32;
inline constexpr std::uint8_t meet = cross | any_touch;
inline constexpr std::uint8_t anything = skip | meet;
}  // namespace allow

/// How one curve is drawn into the families built so far.
struct CurvePlan {
  /// Endpoint hub labels; -1 is a fresh point of its own. Equal labels share
  /// a hub, created when the label is first used.
  int source = -1;
  int target = -1;
  /// Per earlier curve (by id): allowed outcomes, touch classes taken as the
  /// new curve relative to the earlier one. Missing entries mean `skip`.
  std::vector<std::uint8_t> allowed;
  /// When non-empty, the curves to meet, in this order along the new curve.
  std::vector<CurveId> order;
  /// Meetings with this curve must land behind everything already on it.
  std::optional<CurveId> append_on;
};

struct DrawOptions {
  int max_meetings = INT_MAX;
  /// Partial families are cut into tasks once this many curves are drawn;
  /// tasks are numbered in traversal order and run from `first_task`.
  int task_depth = 0;
  std::int64_t first_task = 0;
  /// Called after each curve is finished; false prunes the branch.
  std::function<bool(const CombinatorialFamily&, int curves)> accept;
  /// Every complete family.
  std::function<void(const CombinatorialFamily&)> emit;
  /// After each task; false stops the traversal.
  std::function<bool(std::int64_t task)> task_done;
  /// Polled at every node; true aborts the current task and stops.
  std::function<bool()> interrupt;
};

struct DrawStats {
  std::int64_t nodes = 0;
  std::int64_t next_task = 0;
  bool finished = true;
};

/// Exhaustively draws curves one after another, each as a path through the
/// faces of the drawing so far. Every emitted family is plane-realisable and
/// connected; each labelled family appears once.
DrawStats draw_families(const std::vector<CurvePlan>& plans, const DrawOptions& options);

struct CanonicalOptions {
  bool reflections = true;
  bool reversals = true;
  /// Optional colour per curve that isomorphisms must preserve.
  std::vector<int> colors;
};

/// Lexicographically least traversal code of the drawing over all root
/// darts (and mirror images when allowed). Equal codes mean isomorphic
/// families under curve relabelling and the enabled symmetries.
std::vector<int> canonical_code(const CombinatorialFamily& f, const CanonicalOptions& options = {});

struct EnumerationLimits {
  int max_curves = 2;
  /// Smallest curve count emitted; defaults to max_curves.
  std::optional<int> min_curves;
  int max_meetings = INT_MAX;
  bool require_intersecting = true;
  /// Endpoint hub labels per curve (source, target); empty means every
  /// endpoint is a distinct point.
  std::vector<std::pair<int, int>> endpoints;
  CanonicalOptions symmetry;
};

/// Realisable connected pseudo-segment families within the limits, one per
/// isomorphism class, in order of canonical code.
std::vector<CombinatorialFamily> enumerate_families(const EnumerationLimits& limits);

}  // namespace pseudoseg
