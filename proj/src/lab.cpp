#include "pseudoseg/lab.hpp"

#include <algorithm>
#include <map>

#include "pseudoseg/arrangement.hpp"
#include "pseudoseg/quasigrid.hpp"
#include "pseudoseg/validate.hpp"

namespace pseudoseg {

BoundProbe probe_bounds(const CombinatorialFamily& f) {
  BoundProbe p;
  p.n = f.curve_count();
  const auto counts = count_meetings(f);
  p.touchings = counts.touchings;
  p.crossings = counts.crossings;
  p.t_c = p.n == 0 ? 0 : build_arrangement(f).t_c;
  p.intersecting = validate_family(f).is_intersecting;
  if (p.n > 0) {
    const double n = p.n;
    p.t_per_n = p.touchings / n;
    if (p.t_c > 0) {
      p.t_per_tc_n = p.touchings / (p.t_c * n);
      p.t_per_tc2_n = p.touchings / (static_cast<double>(p.t_c) * p.t_c * n);
    }
  }
  if (p.n == 0) return p;

  auto holds_one_end = [&](HubId h) {
    return std::all_of(f.curves.begin(), f.curves.end(),
                       [&](const DirectedCurve& c) { return (c.source == h) != (c.target == h); });
  };
  const auto& c0 = f.curves.front();
  p.grounded = holds_one_end(c0.source) || holds_one_end(c0.target);
  if (!c0.closed()) {
    p.double_grounded = std::all_of(f.curves.begin(), f.curves.end(), [&](const DirectedCurve& c) {
      return (c.source == c0.source && c.target == c0.target) || (c.source == c0.target && c.target == c0.source);
    });
  }
  return p;
}

Lemma32Report check_lemma32(const CombinatorialFamily& f, CurveId g) {
  Lemma32Report r;
  const auto parts = touch_classes(f, g);
  for (const auto& cls : parts.classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        const auto& a = f.curve(cls[i]);
        const auto& b = f.curve(cls[j]);
        if (a.closed() || a.source != b.source || a.target != b.target) continue;
        ++r.pairs_checked;
        if (meetings_between(f, a.id, b.id) != 1) {
          r.violations.push_back({a.id, b.id, "curves do not meet exactly once"});
          continue;
        }
        const auto* q = event_against(f, a.id, b.id);
        if (q->kind.is_touch()) {
          r.violations.push_back({a.id, b.id, "curves touch"});
          continue;
        }
        auto after_touch = [&](const DirectedCurve& c) {
          const auto* p = event_against(f, c.id, g);
          return *event_index(c, q->meeting) > *event_index(c, p->meeting);
        };
        if (after_touch(a) == after_touch(b)) {
          r.violations.push_back({a.id, b.id, after_touch(a) ? "crossing on both second parts" : "crossing on both first parts"});
        }
      }
    }
  }
  return r;
}

std::vector<CurvePlan> grounded_plans(int n) {
  std::vector<CurvePlan> plans(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& p = plans[static_cast<std::size_t>(i)];
    p.source = kGround;
    p.allowed.assign(static_cast<std::size_t>(i), allow::meet);
  }
  return plans;
}

std::vector<CombinatorialFamily> generate_grounded(int n) {
  std::vector<CombinatorialFamily> out;
  DrawOptions opt;
  opt.emit = [&](const CombinatorialFamily& f) { out.push_back(f); };
  draw_families(grounded_plans(n), opt);
  return out;
}

std::vector<CurvePlan> touch_class_plans(const TouchClassPlan& p) {
  std::vector<CurvePlan> plans(static_cast<std::size_t>(p.k + 1));
  plans[0].source = p.g_source;
  plans[0].target = p.g_target;
  for (int i = 1; i <= p.k; ++i) {
    auto& c = plans[static_cast<std::size_t>(i)];
    c.source = 0;
    c.target = p.closed ? 0 : 1;
    c.allowed.assign(static_cast<std::size_t>(i), allow::meet);
    c.allowed[0] = allow::touch(p.cls);
    c.append_on = 0;
  }
  return plans;
}

std::vector<std::pair<int, int>> g_endpoint_patterns(bool closed) {
  if (closed) return {{-1, -1}, {0, -1}, {-1, 0}};
  return {{-1, -1}, {0, -1}, {-1, 0}, {1, -1}, {-1, 1}, {0, 1}, {1, 0}};
}

}  // namespace pseudoseg
