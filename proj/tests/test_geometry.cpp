#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pseudoseg/arrangement.hpp"
#include "pseudoseg/error.hpp"
#include "pseudoseg/geometry.hpp"
#include "pseudoseg/io.hpp"
#include "pseudoseg/quasigrid.hpp"
#include "pseudoseg/validate.hpp"

using namespace pseudoseg;

namespace {

std::vector<Polyline> fixture(const std::string& name) {
  return parse_family_file(read_text(std::string(PSEUDOSEG_FIXTURES) + "/" + name)).curves;
}

std::vector<Polyline> lines(std::vector<std::vector<Point>> pts) {
  std::vector<Polyline> out;
  for (auto& p : pts) out.push_back({static_cast<CurveId>(out.size()), std::move(p)});
  return out;
}

template <class F>
std::vector<Polyline> mapped(std::vector<Polyline> curves, F f) {
  for (auto& c : curves) {
    for (auto& p : c.points) p = f(p);
  }
  return curves;
}

ErrorCode code_of(const std::vector<Polyline>& curves) {
  try {
    ingest(curves);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "ingest succeeded";
  return ErrorCode::Structural;
}

double deg(double d) { return d * std::numbers::pi / 180; }

std::vector<MeetingKind> kinds(const CombinatorialFamily& f) {
  std::vector<MeetingKind> out;
  for (const auto& c : f.curves) {
    for (const auto& e : c.events) out.push_back(e.kind);
  }
  return out;
}

}  // namespace

TEST(Intersect, TwoSegmentsCross) {
  const auto curves = lines({{{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}});
  const auto ms = intersect_all(curves, default_epsilon(curves));
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_TRUE(ms[0].kind.crossing);
  EXPECT_NEAR(ms[0].location.x, 1, 1e-12);
  EXPECT_NEAR(ms[0].location.y, 1, 1e-12);
  const auto f = to_combinatorial(curves, ms, default_epsilon(curves));
  EXPECT_EQ(f.curve(0).events.size(), 1u);
  EXPECT_EQ(f.curve(1).events.size(), 1u);
}

TEST(Intersect, ApexTouch) {
  // h is curve 0, g is curve 1; h lies below g and both run east.
  const auto curves = lines({{{0, 0}, {1, 1}, {2, 0}}, {{0, 1}, {2, 1}}});
  const auto ms = intersect_all(curves, default_epsilon(curves));
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].kind, MeetingKind::touch(Side::Right, Direction::Same));
}

TEST(Intersect, ParallelSegmentsDoNotMeet) {
  const auto curves = lines({{{0, 0}, {2, 0}}, {{0, 1}, {2, 1}}});
  EXPECT_TRUE(intersect_all(curves, default_epsilon(curves)).empty());
}

TEST(Intersect, GeneralPositionErrors) {
  EXPECT_EQ(code_of(lines({{{0, 0}, {2, 0}}, {{1, 0}, {3, 0}}})), ErrorCode::NonFiniteIntersection);
  EXPECT_EQ(code_of(lines({{{0, 0}, {2, 0}}, {{1, 0}, {1, 2}}})), ErrorCode::GeneralPositionViolation);
  EXPECT_EQ(code_of(lines({{{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}, {{1, -1}, {1, 3}}})), ErrorCode::GeneralPositionViolation);
  EXPECT_EQ(code_of(lines({{{0, 0}}})), ErrorCode::InvalidPolyline);
  EXPECT_EQ(code_of(lines({{{0, 0}, {2, 0}, {1, 0}}})), ErrorCode::InvalidPolyline);
  EXPECT_EQ(code_of(lines({{{0, 0}, {2, 0}, {2, 1}, {1, -1}}})), ErrorCode::InvalidPolyline);
}

TEST(Intersect, SharedEndpointsBecomeHubs) {
  const auto f = ingest(lines({{{0, 0}, {2, 0}}, {{0, 0}, {0, 2}}, {{2, 0}, {0, 2}}}));
  EXPECT_EQ(f.hub_count(), 3);
  EXPECT_EQ(f.meeting_count(), 0);
  EXPECT_EQ(f.hub_rotations[0].size(), 2u);
  EXPECT_NO_THROW(build_arrangement(f));
}

TEST(Classify, AlternatingRaysCross) {
  const std::array<Ray, 4> frame{Ray{0, Leg::In, deg(180)}, Ray{0, Leg::Out, deg(0)}, Ray{1, Leg::In, deg(-90)},
                                 Ray{1, Leg::Out, deg(90)}};
  EXPECT_TRUE(classify_geometric(frame, 0).crossing);
}

TEST(Classify, GroupedRaysTouch) {
  // Counter-clockwise g_in, h_in, h_out, g_out: g runs above h, both east.
  const CurveId g = 0, h = 1;
  const std::array<Ray, 4> frame{Ray{g, Leg::In, deg(150)}, Ray{h, Leg::In, deg(210)}, Ray{h, Leg::Out, deg(330)},
                                 Ray{g, Leg::Out, deg(30)}};
  EXPECT_EQ(classify_geometric(frame, g), MeetingKind::touch(Side::Left, Direction::Same));
  EXPECT_EQ(classify_geometric(frame, h), MeetingKind::touch(Side::Right, Direction::Same));
}

TEST(Classify, EqualRaysAreRejected) {
  const std::array<Ray, 4> frame{Ray{0, Leg::In, deg(180)}, Ray{0, Leg::Out, deg(0)}, Ray{1, Leg::In, deg(180)},
                                 Ray{1, Leg::Out, deg(90)}};
  try {
    classify_geometric(frame, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TangencyUnresolvable);
  }
}

TEST(Ingest, FigureOneIsOneGrid) {
  const auto f = ingest(fixture("fig1_quasigrid.json"));
  EXPECT_TRUE(validate_family(f).is_intersecting);
  const std::vector<CurveId> h{1, 2, 3};
  EXPECT_TRUE(verify_quasi_grid(f, 0, h, OrderPolicy::AsGiven).ok());
  const auto counts = count_meetings(f);
  EXPECT_EQ(counts.touchings, 3);
  EXPECT_EQ(counts.crossings, 3);
  EXPECT_EQ(decompose_all(f, 0).parts.size(), 1u);
}

TEST(Ingest, FigureThreeIsTwoGrids) {
  const auto f = ingest(fixture("fig3_two_grids.json"));
  EXPECT_TRUE(validate_family(f).is_pseudo_segment);
  const auto r = decompose_all(f, 0);
  ASSERT_EQ(r.parts.size(), 2u);
  EXPECT_EQ(r.parts[0].curves, (std::vector<CurveId>{1, 2}));
  EXPECT_EQ(r.parts[1].curves, (std::vector<CurveId>{3, 4}));
}

TEST(Ingest, RotationLeavesKindsUnchanged) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  for (const char* name : {"fig1_quasigrid.json", "fig3_two_grids.json"}) {
    const auto curves = fixture(name);
    const auto base = ingest(curves);
    for (int i = 0; i < 10; ++i) {
      const double t = angle(rng);
      const auto turned = mapped(curves, [&](Point p) {
        return Point{p.x * std::cos(t) - p.y * std::sin(t), p.x * std::sin(t) + p.y * std::cos(t)};
      });
      EXPECT_EQ(kinds(ingest(turned)), kinds(base)) << name << " angle " << t;
    }
  }
}

TEST(Ingest, MirrorSwapsSides) {
  for (const char* name : {"fig1_quasigrid.json", "fig3_two_grids.json"}) {
    const auto curves = fixture(name);
    const auto base = kinds(ingest(curves));
    const auto mirrored = kinds(ingest(mapped(curves, [](Point p) { return Point{-p.x, p.y}; })));
    ASSERT_EQ(base.size(), mirrored.size());
    for (std::size_t i = 0; i < base.size(); ++i) EXPECT_EQ(mirrored[i], base[i].reflected());
  }
}

TEST(Ingest, DisjointCurvesGetAContainmentForest) {
  const auto f = ingest(lines({{{0, 0}, {1, 0}}, {{3, 0}, {4, 0}}}));
  ASSERT_EQ(f.containment.size(), 1u);
  const auto a = build_arrangement(f);
  EXPECT_EQ(a.t_c, 1);
}

TEST(Ingest, CurveInsideALoop) {
  // A closed square through one hub with a short segment inside it.
  const auto f = ingest(lines({{{0, 0}, {4, 0}, {4, 4}, {0, 4}, {0, 0}}, {{1, 1}, {2, 2}}}));
  ASSERT_EQ(f.containment.size(), 1u);
  EXPECT_EQ(f.containment[0].component, 1);
  const auto a = build_arrangement(f);
  EXPECT_EQ(a.region_count, 2);
  // the loop's inner face holds the segment
  const int inner = a.dart_face[static_cast<std::size_t>(a.graph.dart_of(f.containment[0].inside))];
  EXPECT_NE(inner, a.dart_face[static_cast<std::size_t>(a.graph.dart_of(*f.outer_face))]);
}

TEST(Ingest, JitterIsSeededAndKeepsHubs) {
  const auto curves = lines({{{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}, {{0, 0}, {1, -3}}});
  const auto a = jittered(curves, 42, 1e-6);
  EXPECT_EQ(a, jittered(curves, 42, 1e-6));
  EXPECT_NE(a, jittered(curves, 43, 1e-6));
  EXPECT_EQ(a[0].points[0], a[2].points[0]);
  IngestOptions opt;
  opt.jitter_seed = 42;
  EXPECT_EQ(kinds(ingest(curves, opt)), kinds(ingest(curves)));
}

TEST(Svg, MoveAndLineOnly) {
  const auto curves = parse_svg_paths(R"(<svg><path d="M 0 0 L 2 2"/><path d="m0,2 l2,-2"/></svg>)");
  ASSERT_EQ(curves.size(), 2u);
  EXPECT_EQ(curves[1].points[1], (Point{2, 0}));
  EXPECT_EQ(ingest(curves).meeting_count(), 1);
  EXPECT_EQ(parse_svg_paths("M0 0 1 1 2 0").front().points.size(), 3u);
  EXPECT_THROW(parse_svg_paths("M 0 0 C 1 1 2 2 3 3"), Error);
}
