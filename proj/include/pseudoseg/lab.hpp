#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pseudoseg/enumerate.hpp"
#include "pseudoseg/family.hpp"

namespace pseudoseg {

struct BoundProbe {
  int n = 0;
  int t_c = 0;
  int touchings = 0;
  int crossings = 0;
  double t_per_n = 0;
  double t_per_tc_n = 0;
  double t_per_tc2_n = 0;
  bool intersecting = false;
  /// One hub holds exactly one end of every curve.
  bool grounded = false;
  /// Two hubs, every curve running between them.
  bool double_grounded = false;
};

/// Counts and normalised touching ratios; ratios are zero when n or t_C is.
BoundProbe probe_bounds(const CombinatorialFamily& f);

struct PairViolation {
  CurveId a = -1;
  CurveId b = -1;
  std::string reason;
};

struct Lemma32Report {
  int pairs_checked = 0;
  std::vector<PairViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// For every two curves touching g in the same class and sharing distinct
/// endpoint hubs: they must cross exactly once, and the crossing lies before
/// the touching with g on one curve and after it on the other.
Lemma32Report check_lemma32(const CombinatorialFamily& f, CurveId g);

/// Hub label of the ground in grounded plans.
inline constexpr int kGround = 0;

/// n curves, each leaving the ground hub and ending at a free point, every
/// pair meeting once.
std::vector<CurvePlan> grounded_plans(int n);

/// Every grounded intersecting family with n curves (labelled, not reduced by
/// symmetry).
std::vector<CombinatorialFamily> generate_grounded(int n);

struct TouchClassPlan {
  /// Members besides g.
  int k = 1;
  TouchClass cls;
  /// All members start and end at hub A; otherwise they run from A to B.
  bool closed = false;
  /// Endpoint labels of g: -1 for a free point, 0 for A, 1 for B.
  int g_source = -1;
  int g_target = -1;
};

/// Curve 0 is g; curves 1..k touch it in class `cls`, in this order along g,
/// and meet each other exactly once.
std::vector<CurvePlan> touch_class_plans(const TouchClassPlan& p);

/// Endpoint placements of g that the enumeration covers for a class.
std::vector<std::pair<int, int>> g_endpoint_patterns(bool closed);

}  // namespace pseudoseg
