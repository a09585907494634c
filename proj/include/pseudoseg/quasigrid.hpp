#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "pseudoseg/family.hpp"

namespace pseudoseg {

/// Curves touching g, grouped by the side of g they lie on and their
/// direction. Curves crossing g are not listed.
struct TouchPartition {
  CurveId g = -1;
  std::array<std::vector<CurveId>, 4> classes;  // indexed by TouchClass::index()

  int nonempty() const;
};

TouchPartition touch_classes(const CombinatorialFamily& f, CurveId g);

struct CrossPoint {
  int i = 0;  // positions in the certified order, i < j
  int j = 0;
  MeetingId meeting = -1;
  friend bool operator==(const CrossPoint&, const CrossPoint&) = default;
};

struct QuasiGridCertificate {
  CurveId g = -1;
  HubId a = -1;
  HubId b = -1;
  TouchClass touch_class;
  std::vector<CurveId> curves;          // c_1..c_k
  std::vector<MeetingId> touch_points;  // P_1..P_k
  std::vector<CrossPoint> cross_points;
  /// True when P_1..P_k run against g's direction.
  bool reversed_along_g = false;
  /// Named points in their order along each c_j: the crossings and the
  /// touching with g.
  std::vector<std::vector<MeetingId>> curve_orders;
};

struct FailureReason {
  /// 0: the curves do not share both endpoint hubs; 1..5: the violated
  /// condition of the quasi-grid definition.
  int condition = 0;
  std::string message;
  std::vector<CurveId> curves;
  std::vector<MeetingId> meetings;
};

struct QuasiGridCheck {
  std::optional<QuasiGridCertificate> certificate;
  FailureReason failure;
  bool ok() const { return certificate.has_value(); }
};

enum class OrderPolicy : std::uint8_t {
  /// Index the curves by their touching order along g (either way round).
  SortAlongG,
  /// Keep the caller's order; the touchings must follow it along g.
  AsGiven,
};

QuasiGridCheck verify_quasi_grid(const CombinatorialFamily& f, CurveId g, std::span<const CurveId> curves,
                                 OrderPolicy policy = OrderPolicy::SortAlongG);

/// Split of a closed class's common hub into two hubs. `first` and `second`
/// list the ends in rotation order; curves in `h12` leave through `first`.
struct HubSplit {
  int color = 0;
  HubId hub = -1;
  std::vector<Branch> first;
  std::vector<Branch> second;
  std::vector<CurveId> h12;
  std::vector<CurveId> h21;
};

struct PartGroup {
  HubId a = -1;
  HubId b = -1;
  int parts = 0;
};

struct DecompositionReport {
  CurveId g = -1;
  std::vector<QuasiGridCertificate> parts;
  int bound_claimed = 0;
  std::vector<CurveId> residual;
  std::vector<HubSplit> splits;
  /// Curves reversed so that every group runs from its lower hub id.
  std::vector<CurveId> reversed;
  /// Part counts per endpoint-hub pair (each is held to `bound_claimed`).
  std::vector<PartGroup> groups;
};

/// Splits touch-equivalent curves sharing source A and target B != A into at
/// most two quasi-grids with respect to g.
DecompositionReport decompose_open(const CombinatorialFamily& f, CurveId g, std::span<const CurveId> h);

/// Touch-equivalent curves that all start and end at one hub: colours the
/// touching graph, splits each colour class at the hub and decomposes both
/// directions; at most twelve quasi-grids.
DecompositionReport decompose_closed(const CombinatorialFamily& f, CurveId g, std::span<const CurveId> h);

/// All curves touching g, grouped by their (unordered) endpoint hubs and touch
/// class. When `hubs` is given only curves with those endpoints are used.
/// Curves not touching g are reported as residual.
DecompositionReport decompose_all(const CombinatorialFamily& f, CurveId g,
                                  std::optional<std::pair<HubId, HubId>> hubs = std::nullopt);

struct TouchingGraph {
  std::vector<CurveId> nodes;
  std::vector<std::pair<CurveId, CurveId>> edges;
  int max_degree() const;
};

TouchingGraph touching_graph(const CombinatorialFamily& f, std::span<const CurveId> curves);

/// Colours a graph of maximum degree two with at most three colours by
/// walking its paths and cycles. Colours are indexed like `g.nodes`.
std::vector<int> color_paths_and_cycles(const TouchingGraph& g);

struct BipartiteGraph {
  int left = 0;
  int right = 0;
  /// (left vertex, right vertex) pairs.
  std::vector<std::pair<int, int>> edges;
};

struct CoreResult {
  std::vector<bool> keep_left;
  std::vector<bool> keep_right;
  std::vector<std::pair<int, int>> edges;
  friend bool operator==(const CoreResult&, const CoreResult&) = default;
};

/// Degree threshold used to force a five-curve quasi-grid: 4 * 48^2 + 1.
inline constexpr int kCoreThreshold = 4 * 48 * 48 + 1;

/// Repeatedly deletes vertices of degree below k, lowest index first.
CoreResult prune_k_core(const BipartiteGraph& g, int k);

/// Same deletion rule, picking each deleted vertex at random.
CoreResult prune_k_core(const BipartiteGraph& g, int k, std::mt19937_64& rng);

/// Bipartite touching graph between two curve sets.
BipartiteGraph touching_bigraph(const CombinatorialFamily& f, std::span<const CurveId> c1,
                                std::span<const CurveId> c2);

}  // namespace pseudoseg
