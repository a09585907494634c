#include <gtest/gtest.h>

#include <set>

#include "pseudoseg/arrangement.hpp"
#include "pseudoseg/error.hpp"
#include "pseudoseg/validate.hpp"
#include "support.hpp"

using namespace pseudoseg;
using drawkit::Step;

namespace {

void expect_euler(const Arrangement& a) {
  for (const auto& c : a.components) EXPECT_EQ(c.euler(), 2);
}

// Every way of drawing a third curve that crosses curve 0 and then curve 1.
std::vector<CombinatorialFamily> triangles() {
  auto f = drawkit::single_curve();
  f = drawkit::draw(f, {{0, MoveKind::Cross, Side::Right}});
  std::vector<CombinatorialFamily> out;
  const auto pc = start_at_new_point(f);
  const auto g0 = build_plane_graph(pc.family);
  for (int d0 : reachable_darts(pc, g0)) {
    if (g0.edge_curve[static_cast<std::size_t>(d0 / 2)] != 0) continue;
    const auto p1 = apply_move(pc, g0, d0, MoveKind::Cross);
    const auto g1 = build_plane_graph(p1.family);
    for (int d1 : reachable_darts(p1, g1)) {
      if (g1.edge_curve[static_cast<std::size_t>(d1 / 2)] != 1) continue;
      out.push_back(finish_free(apply_move(p1, g1, d1, MoveKind::Cross)));
    }
  }
  return out;
}

}  // namespace

TEST(Arrangement, SingleCurve) {
  const auto a = build_arrangement(drawkit::single_curve());
  EXPECT_EQ(a.graph.vertex_count(), 2);
  EXPECT_EQ(a.graph.edge_count(), 1);
  EXPECT_EQ(a.region_count, 1);
  EXPECT_EQ(a.reduced_region_count, 1);
  EXPECT_EQ(a.t_c, 1);
}

TEST(Arrangement, TwoCrossingCurves) {
  auto f = drawkit::single_curve();
  f = drawkit::draw(f, {{0, MoveKind::Cross, Side::Right}});
  const auto a = build_arrangement(f);
  EXPECT_EQ(a.graph.vertex_count(), 5);
  EXPECT_EQ(a.graph.edge_count(), 4);
  EXPECT_EQ(a.region_count, 1);
  EXPECT_EQ(a.reduced_vertices, 1);
  EXPECT_EQ(a.reduced_edges, 0);
  EXPECT_EQ(a.reduced_region_count, 1);
  EXPECT_EQ(a.t_c, 1);
  expect_euler(a);
}

TEST(Arrangement, ThreePairwiseCrossing) {
  std::set<int> tcs;
  const auto all = triangles();
  EXPECT_FALSE(all.empty());
  for (const auto& f : all) {
    EXPECT_TRUE(validate_family(f).is_intersecting);
    const auto a = build_arrangement(f);
    expect_euler(a);
    EXPECT_EQ(a.graph.edge_count(), 9);
    EXPECT_EQ(a.region_count, 2);
    EXPECT_EQ(a.reduced_vertices, 3);
    EXPECT_EQ(a.reduced_edges, 3);
    EXPECT_EQ(a.reduced_region_count, 2);
    tcs.insert(a.t_c);
  }
  // All endpoints outside the triangle, or an end of the last curve inside.
  EXPECT_EQ(tcs, (std::set<int>{1, 2}));
}

TEST(Arrangement, TouchingCurvesShareOneRegionWithoutCycle) {
  auto f = drawkit::single_curve();
  f = drawkit::draw(f, {{0, MoveKind::TouchSame, Side::Left}});
  const auto a = build_arrangement(f);
  EXPECT_EQ(a.region_count, 1);
  EXPECT_EQ(a.t_c, 1);
}

TEST(Arrangement, InconsistentRotationsAreNotRealizable) {
  // Two closed curves through one hub, crossing once elsewhere: with the ends
  // at the hub not interleaved they would cross an odd number of times.
  const Branch a_in{0, Leg::In}, a_out{0, Leg::Out}, b_in{1, Leg::In}, b_out{1, Leg::Out};
  CombinatorialFamily f;
  f.curves = {{0, 0, 0, {{1, MeetingKind::cross(), 0}}}, {1, 0, 0, {{0, MeetingKind::cross(), 0}}}};
  f.meeting_rotations = {{a_in, b_in, a_out, b_out}};
  f.hub_rotations = {{a_out, a_in, b_out, b_in}};
  EXPECT_NO_THROW(check_structure(f));
  try {
    build_arrangement(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRealizable);
  }
  f.hub_rotations = {{a_out, b_in, a_in, b_out}};
  EXPECT_NO_THROW(build_arrangement(f));
}

TEST(Arrangement, DisjointCurvesNeedContainmentOnlyWhenAmbiguous) {
  auto f = drawkit::single_curve();
  f = drawkit::draw(f, {});
  const auto a = build_arrangement(f);
  EXPECT_EQ(a.components.size(), 2u);
  EXPECT_EQ(a.region_count, 1);
  EXPECT_EQ(a.t_c, 1);
}

TEST(Contraction, TwoCrossingCurvesCollapseToOneHub) {
  auto f = drawkit::single_curve();
  f = drawkit::draw(f, {{0, MoveKind::Cross, Side::Right}});
  const auto a = build_arrangement(f);
  const auto c = contract_endpoints(f, a);
  EXPECT_EQ(c.hubs, 1);
  EXPECT_EQ(c.classes, 1);
  EXPECT_EQ(c.family.hub_count(), 1);
  const auto b = build_arrangement(c.family);
  expect_euler(b);
  EXPECT_EQ(b.t_c, 1);
  EXPECT_TRUE(validate_family(c.family).rotations_consistent);
}

TEST(Contraction, PreservesMeetingsAndRealizability) {
  for (const auto& f : triangles()) {
    const auto a = build_arrangement(f);
    const auto c = contract_endpoints(f, a);
    EXPECT_EQ(c.hubs, a.t_c);
    EXPECT_EQ(c.family.meeting_count(), f.meeting_count());
    EXPECT_LE(c.classes, c.hubs * (c.hubs + 1) / 2);
    const auto b = build_arrangement(c.family);
    expect_euler(b);
    EXPECT_EQ(b.t_c, a.t_c);
    const auto v = validate_family(c.family);
    EXPECT_TRUE(v.rotations_consistent);
    EXPECT_TRUE(v.is_intersecting);
  }
}
