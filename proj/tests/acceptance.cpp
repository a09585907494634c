// One pass/fail line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "mutations.hpp"
#include "oracles.hpp"
#include "pseudoseg/arrangement.hpp"
#include "pseudoseg/enumerate.hpp"
#include "pseudoseg/generate.hpp"
#include "pseudoseg/geometry.hpp"
#include "pseudoseg/io.hpp"
#include "pseudoseg/lab.hpp"
#include "pseudoseg/quasigrid.hpp"
#include "pseudoseg/search.hpp"
#include "pseudoseg/validate.hpp"

using namespace pseudoseg;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::vector<CurveId> members(int k) {
  std::vector<CurveId> h(static_cast<std::size_t>(k));
  std::iota(h.begin(), h.end(), 1);
  return h;
}

std::string fixture(const std::string& name) { return std::string(PSEUDOSEG_FIXTURES) + "/" + name; }

CombinatorialFamily load(const std::string& name) {
  const auto file = parse_family_file(read_text(fixture(name)));
  return file.mode == FileMode::Geometric ? ingest(file.curves) : file.family;
}

template <class... A>
std::string fmt(const char* f, A... a) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, a...);
  return buf;
}

Verdict verifier_soundness() {
  int grids = 0, rejected = 0, wrong = 0;
  auto expect = [&](const CombinatorialFamily& f, const std::vector<CurveId>& h, int condition, OrderPolicy p) {
    const auto r = verify_quasi_grid(f, 0, h, p);
    if (!r.ok() && r.failure.condition == condition) {
      ++rejected;
    } else {
      ++wrong;
    }
  };
  for (int c = 0; c < 4; ++c) {
    for (int k = 1; k <= 10; ++k) {
      const auto f = generate_canonical_quasigrid(k, TouchClass::from_index(c));
      const auto h = members(k);
      if (verify_quasi_grid(f, 0, h).ok()) {
        ++grids;
      } else {
        ++wrong;
      }
      expect(drawkit::meet_twice(f), h, 1, OrderPolicy::SortAlongG);
      expect(drawkit::cross_g(f), h, 2, OrderPolicy::SortAlongG);
      if (k >= 2) expect(drawkit::touch_pair(f), h, 3, OrderPolicy::SortAlongG);
      if (k >= 3) expect(drawkit::swap_on_g(f), h, 4, OrderPolicy::AsGiven);
      if (k >= 2) expect(drawkit::late_crossing(f), h, 5, OrderPolicy::SortAlongG);
    }
  }
  return {wrong == 0 && grids == 40,
          fmt("%d/40 canonical grids certified, %d mutations rejected under the right condition, %d mismatches", grids,
              rejected, wrong)};
}

Verdict open_classes() {
  long families = 0, two = 0, bad = 0;
  for (int c = 0; c < 4; ++c) {
    for (auto [gs, gt] : g_endpoint_patterns(false)) {
      for (int k = 1; k <= 6; ++k) {
        DrawOptions opt;
        opt.emit = [&](const CombinatorialFamily& f) {
          ++families;
          const auto h = members(k);
          const auto r = decompose_open(f, 0, h);
          std::vector<CurveId> seen;
          bool ok = r.parts.size() <= 2;
          for (const auto& part : r.parts) {
            ok = ok && verify_quasi_grid(f, 0, part.curves, OrderPolicy::AsGiven).ok();
            seen.insert(seen.end(), part.curves.begin(), part.curves.end());
          }
          std::sort(seen.begin(), seen.end());
          ok = ok && seen == h;
          if (r.parts.size() == 2) {
            ++two;
            ok = ok && oracle::min_quasi_grid_parts(f, 0, h) == 2;
          }
          bad += !ok;
        };
        draw_families(touch_class_plans({k, TouchClass::from_index(c), false, gs, gt}), opt);
      }
    }
  }
  return {bad == 0 && families > 0,
          fmt("%ld open families (k <= 6), %ld split in two, all minimal per the partition oracle, %ld failures", families,
              two, bad)};
}

Verdict closed_classes() {
  long families = 0, bad = 0;
  int max_degree = 0;
  std::size_t max_parts = 0;
  for (int c = 0; c < 4; ++c) {
    for (auto [gs, gt] : g_endpoint_patterns(true)) {
      for (int k = 1; k <= 6; ++k) {
        DrawOptions opt;
        opt.emit = [&](const CombinatorialFamily& f) {
          ++families;
          const auto h = members(k);
          const int d = touching_graph(f, h).max_degree();
          max_degree = std::max(max_degree, d);
          try {
            const auto r = decompose_closed(f, 0, h);
            max_parts = std::max(max_parts, r.parts.size());
            bad += d > 2 || r.parts.size() > 12;
          } catch (const Error&) {
            ++bad;
          }
        };
        draw_families(touch_class_plans({k, TouchClass::from_index(c), true, gs, gt}), opt);
      }
    }
  }
  return {bad == 0 && families > 0,
          fmt("%ld closed families (k <= 6): max touching degree %d, max parts %zu, %ld failures", families, max_degree,
              max_parts, bad)};
}

Verdict unique_ground() {
  SearchLimits l;
  l.h_size = 5;
  l.max_meetings = 25;
  const auto o = search_lemma42(l);
  const auto m = manifest_json(o);
  const bool recorded = m["limits"]["max_meetings"] == 25 && m["searched"] == o.state.searched;
  return {o.state.finished && o.state.witness_count == 0 && recorded,
          fmt("|H| = 5, meeting budget 25: %lld families searched over %d runs (%lld grid prefixes, %lld nodes), %lld witnesses",
              static_cast<long long>(o.state.searched), o.runs, static_cast<long long>(o.state.tasks),
              static_cast<long long>(o.nodes), static_cast<long long>(o.state.witness_count))};
}

Verdict touch_two() {
  SearchLimits l;
  l.lemma = Lemma::TouchTwo;
  const auto o = search_lemma41(l);
  // Control: without the grid requirement, runs until one finds a witness.
  l.relaxed = true;
  std::int64_t control = 0, control_searched = 0;
  const int runs = static_cast<int>(search_runs(l).size());
  for (int r = 0; r < runs && control == 0; ++r) {
    l.only_run = r;
    const auto c = run_search(l);
    control += c.state.witness_count;
    control_searched += c.state.searched;
  }
  return {o.state.finished && o.state.witness_count == 0 && control > 0,
          fmt("%lld families searched, %lld witnesses; relaxed control: %lld witnesses among %lld families",
              static_cast<long long>(o.state.searched), static_cast<long long>(o.state.witness_count),
              static_cast<long long>(control), static_cast<long long>(control_searched))};
}

// Corpus for the arrangement and contraction checks.
std::vector<CombinatorialFamily> corpus() {
  std::vector<CombinatorialFamily> out;
  for (const char* name : {"fig1_quasigrid.json", "fig3_two_grids.json", "mixed_four_classes.json"}) out.push_back(load(name));
  // Disconnected drawings placed through the containment forest.
  const std::vector<Point> square{{0, 0}, {8, 0}, {8, 8}, {0, 8}, {0, 0}};
  const std::vector<Point> inner{{2, 2}, {6, 2}, {6, 6}, {2, 6}, {2, 2}};
  const std::vector<std::vector<std::vector<Point>>> drawings{
      {{{0, 0}, {1, 0}}, {{3, 0}, {4, 0}}},
      {square, {{3, 3}, {4, 4}}},
      {square, {{9, 1}, {12, 3}}},
      {square, inner, {{3.5, 4}, {4.5, 4}}, {{10, 0}, {10, 5}}},
      {{{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}, {{5, 0}, {6, 0}}},
  };
  for (const auto& d : drawings) {
    std::vector<Polyline> curves;
    for (const auto& pts : d) curves.push_back({static_cast<CurveId>(curves.size()), pts});
    out.push_back(ingest(curves));
  }
  for (int c = 0; c < 4; ++c) {
    for (int k = 1; k <= 10; ++k) out.push_back(generate_canonical_quasigrid(k, TouchClass::from_index(c)));
    for (int k = 1; k <= 6; ++k) out.push_back(generate_canonical_quasigrid(k, TouchClass::from_index(c), HubPattern::closed_grid()));
  }
  EnumerationLimits lim;
  lim.max_curves = 3;
  lim.min_curves = 1;
  lim.require_intersecting = false;
  for (auto& f : enumerate_families(lim)) out.push_back(std::move(f));
  for (int n = 1; n <= 3; ++n) {
    for (auto& f : generate_grounded(n)) out.push_back(std::move(f));
  }
  for (int c = 0; c < 4; ++c) {
    for (bool closed : {false, true}) {
      for (auto [gs, gt] : g_endpoint_patterns(closed)) {
        for (int k = 1; k <= 4; ++k) {
          DrawOptions opt;
          opt.emit = [&](const CombinatorialFamily& f) { out.push_back(f); };
          draw_families(touch_class_plans({k, TouchClass::from_index(c), closed, gs, gt}), opt);
        }
      }
    }
  }
  return out;
}

// Components and faces recounted from the half-edge structure alone.
bool euler_holds(const Arrangement& a, std::string& why) {
  const auto& g = a.graph;
  std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
  int comps = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<int> stack{s};
    comp[static_cast<std::size_t>(s)] = comps;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int d : g.rotation[static_cast<std::size_t>(v)]) {
        const int w = g.head(d);
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = comps;
          stack.push_back(w);
        }
      }
    }
    ++comps;
  }
  std::vector<long> v(static_cast<std::size_t>(comps)), e(static_cast<std::size_t>(comps)), f(static_cast<std::size_t>(comps));
  for (int x = 0; x < g.vertex_count(); ++x) ++v[static_cast<std::size_t>(comp[static_cast<std::size_t>(x)])];
  for (int x = 0; x < g.edge_count(); ++x) ++e[static_cast<std::size_t>(comp[static_cast<std::size_t>(g.origin[static_cast<std::size_t>(2 * x)])])];
  const auto faces = trace_faces(g);
  std::size_t darts = 0;
  for (const auto& cycle : faces) {
    ++f[static_cast<std::size_t>(comp[static_cast<std::size_t>(g.origin[static_cast<std::size_t>(cycle.front())])])];
    darts += cycle.size();
  }
  if (darts != static_cast<std::size_t>(g.dart_count())) {
    why = "face lengths sum to " + std::to_string(darts) + ", not " + std::to_string(g.dart_count());
    return false;
  }
  std::size_t arr_darts = 0;
  for (const auto& cycle : a.faces) arr_darts += cycle.size();
  if (arr_darts != darts || a.faces.size() != faces.size()) {
    why = "arrangement faces disagree with the trace";
    return false;
  }
  for (int c = 0; c < comps; ++c) {
    if (v[static_cast<std::size_t>(c)] - e[static_cast<std::size_t>(c)] + f[static_cast<std::size_t>(c)] != 2) {
      why = "component " + std::to_string(c) + " has V - E + F != 2";
      return false;
    }
  }
  return true;
}

Verdict arrangements(const std::vector<CombinatorialFamily>& fams) {
  long intersecting = 0, bad = 0;
  std::string first;
  for (const auto& f : fams) {
    std::string why;
    bool ok = true;
    try {
      const auto a = build_arrangement(f);
      ok = euler_holds(a, why);
      if (validate_family(f).is_intersecting) {
        ++intersecting;
        const auto m = count_meetings(f);
        const int n = f.curve_count();
        if (m.touchings + m.crossings != n * (n - 1) / 2) {
          ok = false;
          why = "T + X != C(n, 2)";
        }
      }
    } catch (const Error& e) {
      ok = false;
      why = e.what();
    }
    if (!ok && first.empty()) first = why;
    bad += !ok;
  }
  return {bad == 0, fmt("%zu families (%ld intersecting): Euler per component, face lengths and T + X checked, %ld failures%s%s",
                        fams.size(), intersecting, bad, first.empty() ? "" : ": ", first.c_str())};
}

Verdict contraction_bookkeeping(const std::vector<CombinatorialFamily>& fams) {
  long over = 0, grounded = 0, exact = 0, below = 0;
  for (const auto& f : fams) {
    const auto a = build_arrangement(f);
    const auto c = contract_endpoints(f, a);
    over += c.classes > c.hubs * (c.hubs + 1) / 2;
  }
  for (int n = 1; n <= 3; ++n) {
    for (const auto& f : generate_grounded(n)) {
      const auto a = build_arrangement(f);
      const auto c = contract_endpoints(f, a);
      ++grounded;
      exact += c.classes == c.hubs + 1;
      below += c.classes <= c.hubs;
    }
  }
  return {over == 0 && exact == grounded,
          fmt("s <= t(t+1)/2 on %zu corpus families (%ld over); grounded families with s = t + 1: %ld of %ld (s <= t in %ld)",
              fams.size(), over, exact, grounded, below)};
}

Verdict figures() {
  const auto r1 = decompose_all(load("fig1_quasigrid.json"), 0);
  const auto r3 = decompose_all(load("fig3_two_grids.json"), 0);
  const bool ok = r1.parts.size() == 1 && r3.parts.size() == 2 && r3.parts[0].curves == std::vector<CurveId>{1, 2} &&
                  r3.parts[1].curves == std::vector<CurveId>{3, 4};
  return {ok, fmt("figure 1: %zu part; figure 3: %zu parts", r1.parts.size(), r3.parts.size())};
}

Verdict core_confluence() {
  std::mt19937_64 rng(20240611);
  int graphs = 0, bad = 0;
  for (; graphs < 100; ++graphs) {
    std::uniform_int_distribution<int> side(1, 25);
    BipartiteGraph g{side(rng), side(rng), {}};
    std::bernoulli_distribution edge(std::uniform_real_distribution<double>(0.05, 0.5)(rng));
    for (int i = 0; i < g.left; ++i) {
      for (int j = 0; j < g.right; ++j) {
        if (edge(rng)) g.edges.push_back({i, j});
      }
    }
    for (int k = 1; k <= 6; ++k) {
      const auto canonical = prune_k_core(g, k);
      for (int t = 0; t < 3; ++t) bad += !(prune_k_core(g, k, rng) == canonical);
    }
  }
  return {bad == 0, fmt("%d random bipartite graphs (<= 50 vertices), k = 1..6, 3 random orders each: %d disagreements", graphs, bad)};
}

Verdict determinism() {
  int resumes = 0, bad = 0;
  auto check = [&](const SearchLimits& l, int stride) {
    const auto whole = run_search(l);
    std::vector<std::string> checkpoints;
    run_search(l, {}, {}, [&](const SearchState& st) { checkpoints.push_back(checkpoint_to_json(l, st).dump()); });
    for (std::size_t i = 0; i < checkpoints.size(); i += static_cast<std::size_t>(stride)) {
      auto [l2, st] = checkpoint_from_json(nlohmann::json::parse(checkpoints[i]));
      ++resumes;
      bad += !(run_search(l2, std::move(st)).state == whole.state);
    }
  };
  SearchLimits t2;
  t2.lemma = Lemma::TouchTwo;
  check(t2, 1);
  SearchLimits ug;
  ug.h_size = 3;
  check(ug, 9);

  // Through the command line: budgeted legs chained by checkpoint files.
  const auto dir = std::filesystem::temp_directory_path() / "pseudoseg-acceptance";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  auto cli_run = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return std::make_pair(code, out.str());
  };
  const auto p = [&](const char* n) { return (dir / n).string(); };
  const auto whole = cli_run({"search", "--lemma", "42", "--max-curves", "5", "--witnesses", p("w0.json")});
  auto leg = cli_run({"search", "--lemma", "42", "--max-curves", "5", "--max-tasks", "25", "--checkpoint", p("c.json"),
                      "--witnesses", p("w1.json")});
  int legs = 1;
  while (leg.first == cli::exit_code::budget_exhausted) {
    leg = cli_run({"search", "--resume", p("c.json"), "--max-tasks", "25", "--checkpoint", p("c.json"), "--witnesses", p("w1.json")});
    ++legs;
  }
  const auto a = nlohmann::json::parse(whole.second)["manifest"];
  const auto b = nlohmann::json::parse(leg.second)["manifest"];
  const bool cli_ok = whole.first == leg.first && a["searched"] == b["searched"] && a["witnesses"] == b["witnesses"] &&
                      read_text(p("w0.json")) == read_text(p("w1.json"));
  std::filesystem::remove_all(dir);
  return {bad == 0 && cli_ok && legs > 1,
          fmt("%d library resumes from recorded checkpoints, %d mismatches; command line: %d legs, counts and witness file %s",
              resumes, bad, legs, cli_ok ? "identical" : "differ")};
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const auto fams = corpus();
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"quasi-grid verifier soundness", verifier_soundness},
      {"open classes split into at most two grids", open_classes},
      {"closed classes: touching degree and part count", closed_classes},
      {"unique-ground search, |H| = 5", unique_ground},
      {"touch-two search and relaxed control", touch_two},
      {"arrangement correctness", [&] { return arrangements(fams); }},
      {"endpoint contraction bookkeeping", [&] { return contraction_bookkeeping(fams); }},
      {"geometry matches the figures", figures},
      {"k-core pruning confluence", core_confluence},
      {"search resume determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("[%s] %zu %s: %s (%.2f s)\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.c_str(), s);
    std::fflush(stdout);
    failed += !v.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
