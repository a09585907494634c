#include "pseudoseg/enumerate.hpp"

#include <algorithm>
#include <map>

#include "pseudoseg/arrangement.hpp"
#include "pseudoseg/insertion.hpp"
#include "union_find.hpp"

namespace pseudoseg {

namespace {

class Drawer {
 public:
  Drawer(const std::vector<CurvePlan>& plans, const DrawOptions& opt)
      : plans_(plans), opt_(opt), task_depth_(std::min<int>(opt.task_depth, static_cast<int>(plans.size()))) {}

  DrawStats run() {
    stats_.next_task = opt_.first_task;
    after_curves(CombinatorialFamily{}, 0, 0);
    return stats_;
  }

 private:
  // Hub carrying `label` among the first `curves` curves of f (or the source
  // of the curve being drawn), -1 when the label is still unused.
  HubId hub_of(const CombinatorialFamily& f, int label, int curves) const {
    if (label < 0) return -1;
    for (int i = 0; i < curves; ++i) {
      const auto& p = plans_[static_cast<std::size_t>(i)];
      if (p.source == label) return f.curve(i).source;
      if (p.target == label) return f.curve(i).target;
    }
    return -1;
  }

  void after_curves(const CombinatorialFamily& f, int done, int meetings) {
    if (stop_) return;
    if (done > 0 && opt_.accept && !opt_.accept(f, done)) return;
    if (done == task_depth_) {
      const std::int64_t t = task_++;
      if (t < opt_.first_task) return;
      body(f, done, meetings);
      if (stop_) return;
      stats_.next_task = t + 1;
      if (opt_.task_done && !opt_.task_done(t)) {
        stop_ = true;
        stats_.finished = false;
      }
      return;
    }
    body(f, done, meetings);
  }

  void body(const CombinatorialFamily& f, int done, int meetings) {
    if (done == static_cast<int>(plans_.size())) {
      if (opt_.emit) opt_.emit(f);
      return;
    }
    const auto& plan = plans_[static_cast<std::size_t>(done)];
    const HubId hub = hub_of(f, plan.source, done);
    if (hub < 0) {
      auto pc = start_at_new_point(f);
      extend(pc, done, 0, 0, meetings);
      return;
    }
    const int deg = static_cast<int>(f.hub_rotations[static_cast<std::size_t>(hub)].size());
    for (int pos = 0; pos < deg && !stop_; ++pos) {
      auto pc = start_at_hub(f, hub, pos);
      extend(pc, done, 0, 0, meetings);
    }
  }

  void extend(const PartialCurve& pc, int idx, std::uint64_t met, std::size_t k, int meetings) {
    if (stop_) return;
    ++stats_.nodes;
    if (opt_.interrupt && opt_.interrupt()) {
      stop_ = true;
      stats_.finished = false;
      return;
    }
    const auto& plan = plans_[static_cast<std::size_t>(idx)];
    const auto g = build_plane_graph(pc.family);
    auto allowed = [&](CurveId x) -> std::uint8_t {
      return static_cast<std::size_t>(x) < plan.allowed.size() ? plan.allowed[static_cast<std::size_t>(x)] : allow::skip;
    };

    bool complete = plan.order.empty() ? true : k == plan.order.size();
    for (CurveId x = 0; x < idx && complete; ++x) {
      if (!(met >> x & 1u) && !(allowed(x) & allow::skip)) complete = false;
    }
    if (complete) {
      HubId hub = hub_of(pc.family, plan.target, idx);
      if (hub < 0 && plan.target >= 0 && plan.target == plan.source) hub = pc.family.curve(idx).source;
      if (hub < 0) {
        if (!pc.floating || idx == 0) after_curves(finish_free(pc), idx + 1, meetings);
      } else {
        for (int pos : hub_positions_on_tip_face(pc, g, hub)) {
          if (stop_) return;
          after_curves(finish_at_hub(pc, hub, pos), idx + 1, meetings);
        }
      }
    }
    if (meetings >= opt_.max_meetings) return;

    for (int d : reachable_darts(pc, g)) {
      if (stop_) return;
      const int edge = d / 2;
      const CurveId x = g.edge_curve[static_cast<std::size_t>(edge)];
      if (met >> x & 1u) continue;
      if (!plan.order.empty() && (k >= plan.order.size() || plan.order[k] != x)) continue;
      if (plan.append_on == x && g.edge_section[static_cast<std::size_t>(edge)] != pc.family.curve(x).section_count() - 1) {
        continue;
      }
      const auto bits = allowed(x);
      const Side side = d % 2 == 0 ? Side::Right : Side::Left;
      const std::uint64_t met2 = met | (std::uint64_t{1} << x);
      if (bits & allow::cross) extend(apply_move(pc, g, d, MoveKind::Cross), idx, met2, k + 1, meetings + 1);
      if (bits & allow::touch({side, Direction::Same})) {
        extend(apply_move(pc, g, d, MoveKind::TouchSame), idx, met2, k + 1, meetings + 1);
      }
      if (bits & allow::touch({side, Direction::Opposite})) {
        extend(apply_move(pc, g, d, MoveKind::TouchOpposite), idx, met2, k + 1, meetings + 1);
      }
    }
  }

  const std::vector<CurvePlan>& plans_;
  const DrawOptions& opt_;
  int task_depth_;
  std::int64_t task_ = 0;
  bool stop_ = false;
  DrawStats stats_;
};

struct CodeContext {
  const PlaneGraph& g;
  const CanonicalOptions& opt;
  std::vector<int> pos;  // index of each dart in its origin's rotation
};

std::vector<int> traversal_code(const CodeContext& cx, int root, bool mirror) {
  const auto& g = cx.g;
  std::vector<int> vnum(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> entry(static_cast<std::size_t>(g.vertex_count()), -1);
  std::vector<int> cnum(g.section_base.size(), -1);
  std::vector<int> queue;
  std::vector<int> code;
  int next_curve = 0;
  auto visit = [&](int v, int via) {
    vnum[static_cast<std::size_t>(v)] = static_cast<int>(queue.size());
    entry[static_cast<std::size_t>(v)] = via;
    queue.push_back(v);
  };
  auto rel = [&](int d) {
    const int v = g.origin[static_cast<std::size_t>(d)];
    const int deg = static_cast<int>(g.rotation[static_cast<std::size_t>(v)].size());
    const int p = cx.pos[static_cast<std::size_t>(d)];
    const int e = cx.pos[static_cast<std::size_t>(entry[static_cast<std::size_t>(v)])];
    return mirror ? (e - p + deg) % deg : (p - e + deg) % deg;
  };
  visit(g.origin[static_cast<std::size_t>(root)], root);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int v = queue[qi];
    const auto& rot = g.rotation[static_cast<std::size_t>(v)];
    const int deg = static_cast<int>(rot.size());
    code.push_back(v < g.hubs ? 0 : 1);
    code.push_back(deg);
    const int start = cx.pos[static_cast<std::size_t>(entry[static_cast<std::size_t>(v)])];
    for (int s = 0; s < deg; ++s) {
      const int i = mirror ? (start - s + deg) % deg : (start + s) % deg;
      const int d = rot[static_cast<std::size_t>(i)];
      const int u = g.head(d);
      if (vnum[static_cast<std::size_t>(u)] < 0) visit(u, PlaneGraph::twin(d));
      code.push_back(vnum[static_cast<std::size_t>(u)]);
      code.push_back(rel(PlaneGraph::twin(d)));
      const CurveId c = g.edge_curve[static_cast<std::size_t>(d / 2)];
      auto& cn = cnum[static_cast<std::size_t>(c)];
      if (cn < 0) cn = next_curve++;
      code.push_back(cn);
      if (!cx.opt.colors.empty()) code.push_back(cx.opt.colors[static_cast<std::size_t>(c)]);
      if (!cx.opt.reversals) code.push_back(d & 1);
    }
  }
  return code;
}

}  // namespace

DrawStats draw_families(const std::vector<CurvePlan>& plans, const DrawOptions& options) {
  return Drawer(plans, options).run();
}

std::vector<int> canonical_code(const CombinatorialFamily& f, const CanonicalOptions& options) {
  if (f.curve_count() == 0) return {};
  const auto g = build_plane_graph(f);
  CodeContext cx{g, options, std::vector<int>(static_cast<std::size_t>(g.dart_count()))};
  for (const auto& rot : g.rotation) {
    for (std::size_t i = 0; i < rot.size(); ++i) cx.pos[static_cast<std::size_t>(rot[i])] = static_cast<int>(i);
  }
  detail::UnionFind uf(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) uf.unite(g.origin[static_cast<std::size_t>(2 * e)], g.origin[static_cast<std::size_t>(2 * e + 1)]);
  std::map<int, std::vector<int>> best;  // per component root
  for (int d = 0; d < g.dart_count(); ++d) {
    const int comp = uf.find(g.origin[static_cast<std::size_t>(d)]);
    for (bool mirror : {false, true}) {
      if (mirror && !options.reflections) continue;
      auto code = traversal_code(cx, d, mirror);
      auto it = best.find(comp);
      if (it == best.end()) {
        best.emplace(comp, std::move(code));
      } else if (code < it->second) {
        it->second = std::move(code);
      }
    }
  }
  std::vector<std::vector<int>> parts;
  for (auto& [c, code] : best) parts.push_back(std::move(code));
  std::sort(parts.begin(), parts.end());
  std::vector<int> out;
  for (const auto& p : parts) {
    out.push_back(static_cast<int>(p.size()));
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

std::vector<CombinatorialFamily> enumerate_families(const EnumerationLimits& limits) {
  std::map<std::vector<int>, CombinatorialFamily> seen;
  const int lo = limits.min_curves.value_or(limits.max_curves);
  for (int n = std::max(0, lo); n <= limits.max_curves; ++n) {
    if (n == 0) {
      seen.emplace(std::vector<int>{}, CombinatorialFamily{});
      continue;
    }
    std::vector<CurvePlan> plans(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      auto& p = plans[static_cast<std::size_t>(i)];
      if (static_cast<std::size_t>(i) < limits.endpoints.size()) {
        p.source = limits.endpoints[static_cast<std::size_t>(i)].first;
        p.target = limits.endpoints[static_cast<std::size_t>(i)].second;
      }
      p.allowed.assign(static_cast<std::size_t>(i), limits.require_intersecting ? allow::meet : allow::anything);
    }
    DrawOptions opt;
    opt.max_meetings = limits.max_meetings;
    opt.emit = [&](const CombinatorialFamily& f) { seen.try_emplace(canonical_code(f, limits.symmetry), f); };
    draw_families(plans, opt);
  }
  std::vector<CombinatorialFamily> out;
  for (auto& [code, f] : seen) out.push_back(std::move(f));
  return out;
}

}  // namespace pseudoseg
