#include "pseudoseg/search.hpp"

#include <chrono>

#include "pseudoseg/error.hpp"
#include "pseudoseg/io.hpp"
#include "pseudoseg/quasigrid.hpp"
#include "pseudoseg/validate.hpp"

namespace pseudoseg {

using nlohmann::json;

namespace {

const char* class_tag(int c) {
  static constexpr const char* tags[] = {"RS", "RO", "LS", "LO"};
  return tags[c];
}

std::string label_string(const std::vector<int>& labels) {
  std::string s;
  for (int l : labels) s += l < 0 ? '*' : static_cast<char>('0' + l);
  return s;
}

bool crosses(const CombinatorialFamily& f, CurveId a, CurveId b) {
  const auto* e = event_against(f, a, b);
  return e != nullptr && e->kind.crossing;
}

// Set partitions of {A, B, C, D} as restricted growth strings.
std::vector<std::vector<int>> hub_partitions() {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(4, 0);
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (i == 4) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      cur[static_cast<std::size_t>(i)] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 1, 1);
  return out;
}

std::vector<SearchRun> lemma41_runs(const SearchLimits& lim) {
  std::vector<SearchRun> runs;
  for (const auto& p : hub_partitions()) {
    for (int c = 0; c < 4; ++c) {
      const auto cls = TouchClass::from_index(c);
      SearchRun r;
      r.label = "ABCD=" + label_string(p) + (lim.relaxed ? " any" : std::string(" ") + class_tag(c));
      r.plans.resize(5);
      r.plans[0] = {p[0], p[1], {}, {}, {}};
      for (int j = 1; j <= 3; ++j) {
        auto& h = r.plans[static_cast<std::size_t>(j)];
        h.source = p[2];
        h.target = p[3];
        h.allowed.assign(static_cast<std::size_t>(j), allow::meet);
        h.allowed[0] = lim.relaxed ? allow::any_touch : allow::touch(cls);
        if (!lim.relaxed) h.append_on = 0;
      }
      r.plans[4] = {p[0], p[1], {allow::meet, allow::meet, allow::any_touch, allow::meet}, {}, {}};
      r.task_depth = 4;
      const bool relaxed = lim.relaxed;
      r.accept = [relaxed](const CombinatorialFamily& f, int curves) {
        if (curves != 4 || relaxed) return true;
        const std::vector<CurveId> h{1, 2, 3};
        return verify_quasi_grid(f, 0, h, OrderPolicy::AsGiven).ok();
      };
      r.witness = [](const CombinatorialFamily& f) { return crosses(f, 4, 0) && crosses(f, 4, 1) && crosses(f, 4, 3); };
      runs.push_back(std::move(r));
      if (lim.relaxed) break;  // the touch class is free
    }
  }
  return runs;
}

// Endpoint labels for g1 and g2: fresh, A or B. A and B share a hub when
// `ab_equal`, leaving only fresh or A.
std::vector<std::vector<int>> ground_patterns(bool ab_equal) {
  const std::vector<int> choices = ab_equal ? std::vector<int>{-1, 0} : std::vector<int>{-1, 0, 1};
  std::vector<std::vector<int>> out;
  std::vector<int> cur(4);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == 4) {
      out.push_back(cur);
      return;
    }
    for (int c : choices) {
      cur[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<SearchRun> lemma42_runs(const SearchLimits& lim) {
  std::vector<SearchRun> runs;
  const int k = lim.h_size;
  const CurveId g2 = k + 1;
  for (bool ab_equal : {false, true}) {
    for (const auto& p : ground_patterns(ab_equal)) {
      for (int c = 0; c < 4; ++c) {
        const auto cls = TouchClass::from_index(c);
        SearchRun r;
        r.label = std::string(ab_equal ? "A=B" : "A,B") + " g=" + label_string(p) + " " + class_tag(c);
        r.plans.resize(static_cast<std::size_t>(k + 2));
        r.plans[0].source = p[0];
        r.plans[0].target = p[1];
        for (int j = 1; j <= k; ++j) {
          auto& h = r.plans[static_cast<std::size_t>(j)];
          h.source = 0;
          h.target = ab_equal ? 0 : 1;
          h.allowed.assign(static_cast<std::size_t>(j), allow::meet);
          h.allowed[0] = allow::touch(cls);
          h.append_on = 0;
        }
        auto& last = r.plans.back();
        last.source = p[2];
        last.target = p[3];
        last.allowed.assign(static_cast<std::size_t>(k + 1), allow::any_touch);
        last.allowed[0] = allow::anything;
        r.task_depth = k + 1;
        std::vector<CurveId> h;
        for (int j = 1; j <= k; ++j) h.push_back(j);
        r.accept = [k, h](const CombinatorialFamily& f, int curves) {
          if (curves != k + 1) return true;
          return verify_quasi_grid(f, 0, h, OrderPolicy::AsGiven).ok();
        };
        r.witness = [g2, h](const CombinatorialFamily& f) { return verify_quasi_grid(f, g2, h).ok(); };
        runs.push_back(std::move(r));
      }
    }
  }
  return runs;
}

using Clock = std::chrono::steady_clock;

}  // namespace

std::vector<SearchRun> search_runs(const SearchLimits& limits) {
  if (limits.lemma == Lemma::TouchTwo) return lemma41_runs(limits);
  if (limits.h_size < 1) throw Error(ErrorCode::Precondition, "grid size must be positive");
  return lemma42_runs(limits);
}

SearchOutcome run_search(const SearchLimits& limits, SearchState start, const SearchBudget& budget,
                         const std::function<void(const SearchState&)>& progress) {
  const auto t0 = Clock::now();
  const auto runs = search_runs(limits);
  SearchOutcome out;
  out.limits = limits;
  out.runs = static_cast<int>(runs.size());
  out.state = std::move(start);
  auto& st = out.state;
  int end = out.runs;
  if (limits.only_run) {
    if (*limits.only_run < 0 || *limits.only_run >= out.runs) throw Error(ErrorCode::Precondition, "no such run");
    if (st.run < *limits.only_run) {
      st = SearchState{};
      st.run = *limits.only_run;
    }
    end = *limits.only_run + 1;
  }
  std::int64_t done_here = 0;
  auto over_budget = [&] {
    if (budget.max_nodes && out.nodes > *budget.max_nodes) return true;
    return budget.max_seconds && std::chrono::duration<double>(Clock::now() - t0).count() > *budget.max_seconds;
  };

  while (!st.finished && st.run < end) {
    const auto& run = runs[static_cast<std::size_t>(st.run)];
    std::int64_t found = 0, hits = 0;
    std::vector<CombinatorialFamily> pending;
    DrawOptions opt;
    opt.max_meetings = limits.max_meetings;
    opt.task_depth = run.task_depth;
    opt.first_task = st.next_task;
    opt.accept = run.accept;
    opt.emit = [&](const CombinatorialFamily& f) {
      ++found;
      if (!run.witness(f)) return;
      ++hits;
      if (st.witnesses.size() + pending.size() < static_cast<std::size_t>(limits.keep_witnesses)) pending.push_back(f);
    };
    opt.task_done = [&](std::int64_t t) {
      st.searched += found;
      st.witness_count += hits;
      for (auto& w : pending) {
        st.witnesses.push_back(std::move(w));
        st.witness_runs.push_back(st.run);
      }
      found = hits = 0;
      pending.clear();
      st.next_task = t + 1;
      ++st.tasks;
      ++done_here;
      if (progress) progress(st);
      return !over_budget() && !(budget.max_tasks && done_here >= *budget.max_tasks);
    };
    opt.interrupt = [&] {
      ++out.nodes;
      return over_budget();
    };
    const auto stats = draw_families(run.plans, opt);
    if (!stats.finished) {
      out.exhausted = true;
      break;
    }
    ++st.run;
    st.next_task = 0;
  }
  if (!out.exhausted) st.finished = true;
  out.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return out;
}

SearchOutcome search_lemma41(const SearchLimits& limits) {
  auto l = limits;
  l.lemma = Lemma::TouchTwo;
  return run_search(l);
}

SearchOutcome search_lemma42(const SearchLimits& limits) {
  auto l = limits;
  l.lemma = Lemma::UniqueGround;
  return run_search(l);
}

bool replays(const SearchLimits& limits, int run, const CombinatorialFamily& witness) {
  const auto runs = search_runs(limits);
  if (run < 0 || run >= static_cast<int>(runs.size())) return false;
  const auto& r = runs[static_cast<std::size_t>(run)];
  if (witness.curve_count() != static_cast<int>(r.plans.size())) return false;
  if (!validate_family(witness).is_pseudo_segment) return false;
  return r.accept(witness, witness.curve_count() - 1) && r.witness(witness);
}

json limits_to_json(const SearchLimits& l) {
  json j{{"lemma", static_cast<int>(l.lemma)}, {"h_size", l.h_size}, {"max_meetings", l.max_meetings},
         {"relaxed", l.relaxed}, {"keep_witnesses", l.keep_witnesses}};
  if (l.only_run) j["only_run"] = *l.only_run;
  return j;
}

SearchLimits limits_from_json(const json& j) {
  try {
    SearchLimits l;
    const int lemma = j.at("lemma").get<int>();
    if (lemma != 41 && lemma != 42) throw Error(ErrorCode::Schema, "$.limits.lemma: expected 41 or 42");
    l.lemma = static_cast<Lemma>(lemma);
    l.h_size = j.at("h_size").get<int>();
    l.max_meetings = j.at("max_meetings").get<int>();
    l.relaxed = j.at("relaxed").get<bool>();
    l.keep_witnesses = j.at("keep_witnesses").get<int>();
    if (j.contains("only_run")) l.only_run = j["only_run"].get<int>();
    return l;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Schema, std::string("$.limits: ") + e.what());
  }
}

json checkpoint_to_json(const SearchLimits& limits, const SearchState& st) {
  json witnesses = json::array();
  for (std::size_t i = 0; i < st.witnesses.size(); ++i) {
    witnesses.push_back({{"run", st.witness_runs[i]}, {"family", family_to_json(st.witnesses[i])}});
  }
  return {{"version", 1},
          {"mode", "search-checkpoint"},
          {"limits", limits_to_json(limits)},
          {"state",
           {{"run", st.run},
            {"next_task", st.next_task},
            {"searched", st.searched},
            {"tasks", st.tasks},
            {"witness_count", st.witness_count},
            {"witnesses", witnesses},
            {"finished", st.finished}}}};
}

std::pair<SearchLimits, SearchState> checkpoint_from_json(const json& j) {
  if (!j.is_object() || j.value("mode", "") != "search-checkpoint" || j.value("version", 0) != 1) {
    throw Error(ErrorCode::Schema, "$: not a version 1 search checkpoint");
  }
  const auto limits = limits_from_json(j.at("limits"));
  SearchState st;
  try {
    const auto& s = j.at("state");
    st.run = s.at("run").get<int>();
    st.next_task = s.at("next_task").get<std::int64_t>();
    st.searched = s.at("searched").get<std::int64_t>();
    st.tasks = s.at("tasks").get<std::int64_t>();
    st.witness_count = s.at("witness_count").get<std::int64_t>();
    st.finished = s.at("finished").get<bool>();
    for (const auto& w : s.at("witnesses")) {
      st.witness_runs.push_back(w.at("run").get<int>());
      st.witnesses.push_back(family_from_json(w.at("family")));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Schema, std::string("$.state: ") + e.what());
  }
  return {limits, st};
}

json manifest_json(const SearchOutcome& o) {
  const auto runs = search_runs(o.limits);
  json labels = json::array();
  for (const auto& r : runs) labels.push_back(r.label);
  return {{"limits", limits_to_json(o.limits)},
          {"runs", labels},
          {"searched", o.state.searched},
          {"tasks", o.state.tasks},
          {"witnesses", o.state.witness_count},
          {"complete", o.state.finished},
          {"budget_exhausted", o.exhausted},
          {"nodes", o.nodes},
          {"seconds", o.seconds}};
}

}  // namespace pseudoseg
