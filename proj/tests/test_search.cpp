#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "pseudoseg/error.hpp"
#include "pseudoseg/quasigrid.hpp"
#include "pseudoseg/search.hpp"
#include "pseudoseg/validate.hpp"

using namespace pseudoseg;

namespace {

SearchLimits touch_two(bool relaxed = false) {
  SearchLimits l;
  l.lemma = Lemma::TouchTwo;
  l.relaxed = relaxed;
  return l;
}

SearchLimits unique_ground(int k) {
  SearchLimits l;
  l.lemma = Lemma::UniqueGround;
  l.h_size = k;
  return l;
}

// The witness predicate spelled out directly on the family.
bool touches_only_middle(const CombinatorialFamily& f) {
  if (!validate_family(f).is_intersecting) return false;
  for (CurveId x : {0, 1, 3}) {
    if (!event_against(f, 4, x)->kind.crossing) return false;
  }
  return event_against(f, 4, 2)->kind.is_touch();
}

// Whether some grid order of {1, 2, 3} w.r.t. curve 0 puts curve 2 in the middle.
bool middle_of_a_grid(const CombinatorialFamily& f) {
  std::vector<CurveId> h{1, 2, 3};
  do {
    if (h[1] == 2 && verify_quasi_grid(f, 0, h, OrderPolicy::AsGiven).ok()) return true;
  } while (std::next_permutation(h.begin(), h.end()));
  return false;
}

}  // namespace

TEST(TouchTwoSearch, NoCurveTouchesOnlyTheMiddle) {
  const auto o = search_lemma41(touch_two());
  EXPECT_TRUE(o.state.finished);
  EXPECT_FALSE(o.exhausted);
  EXPECT_EQ(o.runs, 60);
  EXPECT_GT(o.state.searched, 0);
  EXPECT_EQ(o.state.witness_count, 0);
}

TEST(TouchTwoSearch, RelaxedControlFindsWitnesses) {
  auto l = touch_two(true);
  l.only_run = 0;
  const auto o = run_search(l);
  EXPECT_GT(o.state.witness_count, 0);
  ASSERT_FALSE(o.state.witnesses.empty());
  for (const auto& w : o.state.witnesses) {
    EXPECT_TRUE(touches_only_middle(w));
    EXPECT_FALSE(middle_of_a_grid(w));
    EXPECT_TRUE(replays(l, 0, w));
  }
}

TEST(UniqueGroundSearch, OneCurveHasTwoGrounds) {
  const auto o = search_lemma42(unique_ground(1));
  EXPECT_GT(o.state.witness_count, 0);
  for (const auto& w : o.state.witnesses) {
    EXPECT_TRUE(validate_family(w).is_pseudo_segment);
    EXPECT_TRUE(oracle::some_order_certifies(w, 0, {1}));
    EXPECT_TRUE(oracle::some_order_certifies(w, 2, {1}));
  }
}

TEST(UniqueGroundSearch, SmallGridsAgreeWithTheOracle) {
  for (int k : {2, 3}) {
    const auto o = search_lemma42(unique_ground(k));
    EXPECT_GT(o.state.witness_count, 0) << k;
    std::vector<CurveId> h;
    for (int j = 1; j <= k; ++j) h.push_back(j);
    for (std::size_t i = 0; i < o.state.witnesses.size(); ++i) {
      const auto& w = o.state.witnesses[i];
      EXPECT_TRUE(oracle::some_order_certifies(w, 0, h));
      EXPECT_TRUE(oracle::some_order_certifies(w, k + 1, h));
      EXPECT_TRUE(replays(o.limits, o.state.witness_runs[i], w));
    }
  }
}

TEST(UniqueGroundSearch, FiveCurvesHaveOneGround) {
  auto l = unique_ground(5);
  l.max_meetings = 25;
  const auto o = search_lemma42(l);
  EXPECT_TRUE(o.state.finished);
  EXPECT_GT(o.state.tasks, 0);
  EXPECT_EQ(o.state.witness_count, 0);
}

TEST(Search, SearchedCountsCanonicalForms) {
  for (const auto& l : {touch_two(), unique_ground(3)}) {
    std::int64_t total = 0;
    for (const auto& run : search_runs(l)) {
      std::set<std::vector<int>> codes;
      std::int64_t emitted = 0;
      CanonicalOptions sym{false, false, {}};
      DrawOptions opt;
      opt.max_meetings = l.max_meetings;
      opt.accept = run.accept;
      opt.emit = [&](const CombinatorialFamily& f) {
        ++emitted;
        sym.colors.resize(static_cast<std::size_t>(f.curve_count()));
        for (int i = 0; i < f.curve_count(); ++i) sym.colors[static_cast<std::size_t>(i)] = i;
        codes.insert(canonical_code(f, sym));
      };
      draw_families(run.plans, opt);
      EXPECT_EQ(static_cast<std::int64_t>(codes.size()), emitted) << run.label;
      total += emitted;
    }
    EXPECT_EQ(run_search(l).state.searched, total);
  }
}

TEST(Search, ResumeMatchesAnUnbrokenRun) {
  const auto l = unique_ground(3);
  const auto whole = run_search(l);
  SearchState st;
  int legs = 0;
  while (!st.finished) {
    const auto part = run_search(l, st, {.max_tasks = 7});
    const auto text = checkpoint_to_json(l, part.state).dump();
    auto [l2, st2] = checkpoint_from_json(nlohmann::json::parse(text));
    EXPECT_EQ(limits_to_json(l2), limits_to_json(l));
    st = std::move(st2);
    ++legs;
  }
  EXPECT_GT(legs, 2);
  EXPECT_EQ(st, whole.state);
}

TEST(Search, NodeBudgetStopsBetweenTasks) {
  const auto l = unique_ground(3);
  const auto whole = run_search(l);
  const auto part = run_search(l, {}, {.max_nodes = 5000});
  EXPECT_TRUE(part.exhausted);
  EXPECT_FALSE(part.state.finished);
  EXPECT_LT(part.state.tasks, whole.state.tasks);
  const auto rest = run_search(l, part.state);
  EXPECT_EQ(rest.state, whole.state);
}

TEST(Search, CheckpointErrors) {
  EXPECT_THROW(checkpoint_from_json(nlohmann::json::parse(R"({"version":1,"mode":"combinatorial"})")), Error);
  EXPECT_THROW(checkpoint_from_json(nlohmann::json::parse(
                   R"({"version":1,"mode":"search-checkpoint","limits":{"lemma":43,"h_size":1,"max_meetings":9,"relaxed":false,"keep_witnesses":1},"state":{}})")),
               Error);
  auto l = unique_ground(1);
  l.only_run = 10000;
  EXPECT_THROW(run_search(l), Error);
}
