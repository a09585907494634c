#include "pseudoseg/quasigrid.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pseudoseg/error.hpp"

namespace pseudoseg {

namespace {

std::string curve_name(CurveId c) { return "curve " + std::to_string(c); }

QuasiGridCheck fail(int condition, std::string message, std::vector<CurveId> curves = {},
                    std::vector<MeetingId> meetings = {}) {
  QuasiGridCheck r;
  r.failure = {condition, std::move(message), std::move(curves), std::move(meetings)};
  return r;
}

int position_on(const DirectedCurve& c, CurveId other) {
  for (std::size_t i = 0; i < c.events.size(); ++i) {
    if (c.events[i].other == other) return static_cast<int>(i);
  }
  return -1;
}

// Checks the event order on every c_j for one indexing; returns the failure
// or fills the certificate.
std::optional<FailureReason> check_orders(const CombinatorialFamily& f, CurveId g, const std::vector<CurveId>& order,
                                          QuasiGridCertificate& cert) {
  const int k = static_cast<int>(order.size());
  std::map<CurveId, int> index;
  for (int i = 0; i < k; ++i) index[order[static_cast<std::size_t>(i)]] = i;
  cert.curve_orders.assign(static_cast<std::size_t>(k), {});
  for (int j = 0; j < k; ++j) {
    const CurveId cj = order[static_cast<std::size_t>(j)];
    std::vector<CurveId> want;
    for (int i = 0; i < k; ++i) want.push_back(i == j ? g : order[static_cast<std::size_t>(i)]);
    std::vector<CurveId> have;
    auto& seq = cert.curve_orders[static_cast<std::size_t>(j)];
    for (const auto& e : f.curve(cj).events) {
      if (e.other == g || index.contains(e.other)) {
        have.push_back(e.other);
        seq.push_back(e.meeting);
      }
    }
    for (std::size_t p = 0; p < want.size(); ++p) {
      if (have[p] != want[p]) {
        const auto* ev = event_against(f, cj, have[p]);
        return FailureReason{5,
                             curve_name(cj) + " meets " + curve_name(have[p]) + " where the order expects " +
                                 curve_name(want[p]),
                             {cj, have[p], want[p]},
                             {ev ? ev->meeting : -1}};
      }
    }
  }
  cert.curves = order;
  cert.touch_points.clear();
  cert.cross_points.clear();
  for (int i = 0; i < k; ++i) {
    const CurveId ci = order[static_cast<std::size_t>(i)];
    cert.touch_points.push_back(event_against(f, ci, g)->meeting);
    for (int j = i + 1; j < k; ++j) {
      cert.cross_points.push_back({i, j, event_against(f, ci, order[static_cast<std::size_t>(j)])->meeting});
    }
  }
  return std::nullopt;
}

void require_touch_equivalent(const CombinatorialFamily& f, CurveId g, std::span<const CurveId> h) {
  std::optional<TouchClass> cls;
  for (CurveId c : h) {
    const auto* e = event_against(f, c, g);
    if (e == nullptr || e->kind.crossing) {
      throw Error(ErrorCode::Precondition, curve_name(c) + " does not touch " + curve_name(g));
    }
    const auto t = touch_class_of(e->kind);
    if (cls && !(*cls == t)) throw Error(ErrorCode::Precondition, "curves are not touch-equivalent with respect to g");
    cls = t;
  }
}

std::vector<CurveId> sorted_along(const CombinatorialFamily& f, CurveId g, std::span<const CurveId> h) {
  std::vector<CurveId> out(h.begin(), h.end());
  std::vector<int> pos(static_cast<std::size_t>(f.curve_count()), -1);
  for (CurveId c : h) pos[static_cast<std::size_t>(c)] = position_on(f.curve(g), c);
  std::stable_sort(out.begin(), out.end(),
                   [&](CurveId a, CurveId b) { return pos[static_cast<std::size_t>(a)] < pos[static_cast<std::size_t>(b)]; });
  return out;
}

QuasiGridCertificate certify_or_throw(const CombinatorialFamily& f, CurveId g, std::span<const CurveId> part) {
  auto r = verify_quasi_grid(f, g, part);
  if (!r.ok()) {
    throw Error(ErrorCode::InputContradictsLemma, "split part is not a quasi-grid (condition " +
                                                      std::to_string(r.failure.condition) + "): " + r.failure.message);
  }
  return std::move(*r.certificate);
}

// The open split without the endpoint premise; reused by the closed case.
std::vector<QuasiGridCertificate> split_open(const CombinatorialFamily& f, CurveId g, std::span<const CurveId> h) {
  if (h.empty()) return {};
  require_touch_equivalent(f, g, h);
  // A class that is already one grid (possibly read against g) stays whole.
  if (auto whole = verify_quasi_grid(f, g, h); whole.ok()) return {std::move(*whole.certificate)};
  const auto order = sorted_along(f, g, h);
  const CurveId first = order.front();
  const auto dir = event_against(f, first, g)->kind.direction;
  std::vector<CurveId> h1{first}, h2;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const CurveId c = order[i];
    const int at_h = position_on(f.curve(c), first);
    const int at_g = position_on(f.curve(c), g);
    if (at_h < 0) {
      throw Error(ErrorCode::InputContradictsLemma, curve_name(c) + " does not meet " + curve_name(first));
    }
    const bool h_first = at_h < at_g;
    // Opposite classes mirror the rule: the part of h is the curves meeting g first.
    if (h_first == (dir == Direction::Same)) {
      h1.push_back(c);
    } else {
      h2.push_back(c);
    }
  }
  std::vector<QuasiGridCertificate> parts;
  parts.push_back(certify_or_throw(f, g, h1));
  if (!h2.empty()) parts.push_back(certify_or_throw(f, g, h2));
  return parts;
}

std::vector<QuasiGridCertificate> split_closed(const CombinatorialFamily& f, CurveId g, std::span<const CurveId> h,
                                               std::vector<HubSplit>& splits) {
  if (h.empty()) return {};
  require_touch_equivalent(f, g, h);
  const HubId hub = f.curve(h.front()).source;
  const auto tg = touching_graph(f, h);
  if (tg.max_degree() > 2) {
    throw Error(ErrorCode::InputContradictsLemma,
                "a curve touches " + std::to_string(tg.max_degree()) + " others of its class");
  }
  const auto colors = color_paths_and_cycles(tg);
  std::vector<QuasiGridCertificate> parts;
  for (int color = 0; color < 3; ++color) {
    std::set<CurveId> members;
    for (std::size_t i = 0; i < tg.nodes.size(); ++i) {
      if (colors[i] == color) members.insert(tg.nodes[i]);
    }
    if (members.empty()) continue;
    std::vector<Branch> ends;
    for (const auto& b : f.hub_rotations[static_cast<std::size_t>(hub)]) {
      if (members.contains(b.curve)) ends.push_back(b);
    }
    const std::size_t k = members.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (ends[i].curve != ends[i + k].curve) {
        throw Error(ErrorCode::InputContradictsLemma,
                    "ends at hub " + std::to_string(hub) + " are not paired antipodally (" + curve_name(ends[i].curve) +
                        " opposite " + curve_name(ends[i + k].curve) + ")");
      }
    }
    HubSplit split{color, hub, {ends.begin(), ends.begin() + static_cast<long>(k)},
                   {ends.begin() + static_cast<long>(k), ends.end()}, {}, {}};
    for (const auto& b : split.first) (b.leg == Leg::Out ? split.h12 : split.h21).push_back(b.curve);
    for (auto* side : {&split.h12, &split.h21}) {
      std::sort(side->begin(), side->end());
      for (auto& p : split_open(f, g, *side)) parts.push_back(std::move(p));
    }
    splits.push_back(std::move(split));
  }
  return parts;
}

void require_hubs(const CombinatorialFamily& f, std::span<const CurveId> h, bool closed) {
  if (h.empty()) return;
  const auto& c0 = f.curve(h.front());
  for (CurveId c : h) {
    const auto& cc = f.curve(c);
    if (cc.source != c0.source || cc.target != c0.target) {
      throw Error(ErrorCode::Precondition, "curves do not share their endpoint hubs");
    }
  }
  if (closed != c0.closed()) {
    throw Error(ErrorCode::Precondition, closed ? "curves must start and end at one hub"
                                                : "curves must have distinct source and target hubs");
  }
}

}  // namespace

int TouchPartition::nonempty() const {
  return static_cast<int>(std::count_if(classes.begin(), classes.end(), [](const auto& v) { return !v.empty(); }));
}

TouchPartition touch_classes(const CombinatorialFamily& f, CurveId g) {
  TouchPartition p;
  p.g = g;
  for (const auto& c : f.curves) {
    if (c.id == g) continue;
    const auto* e = event_against(f, c.id, g);
    if (e != nullptr && e->kind.is_touch()) p.classes[static_cast<std::size_t>(touch_class_of(e->kind).index())].push_back(c.id);
  }
  return p;
}

QuasiGridCheck verify_quasi_grid(const CombinatorialFamily& f, CurveId g, std::span<const CurveId> curves,
                                 OrderPolicy policy) {
  const std::vector<CurveId> given(curves.begin(), curves.end());
  {
    std::set<CurveId> seen;
    for (CurveId c : given) {
      if (c < 0 || c >= f.curve_count()) return fail(0, "unknown " + curve_name(c), {c});
      if (c == g) return fail(0, "g is listed among the curves", {c});
      if (!seen.insert(c).second) return fail(0, curve_name(c) + " is listed twice", {c});
    }
  }
  if (g < 0 || g >= f.curve_count()) return fail(0, "unknown reference " + curve_name(g), {g});
  QuasiGridCertificate cert;
  cert.g = g;
  if (!given.empty()) {
    cert.a = f.curve(given.front()).source;
    cert.b = f.curve(given.front()).target;
  }
  for (CurveId c : given) {
    if (f.curve(c).source != cert.a || f.curve(c).target != cert.b) {
      return fail(0, curve_name(c) + " does not run between the same hubs as " + curve_name(given.front()),
                  {given.front(), c});
    }
  }

  // Condition 1 (meeting at most once, and the listed curves meet pairwise);
  // a listed curve missing g is reported under condition 2.
  std::vector<CurveId> all = given;
  all.push_back(g);
  for (std::size_t x = 0; x < all.size(); ++x) {
    for (std::size_t y = x + 1; y < all.size(); ++y) {
      const int n = meetings_between(f, all[x], all[y]);
      if (n > 1) {
        return fail(1, curve_name(all[x]) + " and " + curve_name(all[y]) + " meet " + std::to_string(n) + " times",
                    {all[x], all[y]});
      }
      if (n == 0 && all[y] != g) {
        return fail(1, curve_name(all[x]) + " and " + curve_name(all[y]) + " do not meet", {all[x], all[y]});
      }
    }
  }

  // Condition 2.
  for (CurveId c : given) {
    const auto* e = event_against(f, c, g);
    if (e == nullptr) return fail(2, curve_name(c) + " does not meet g", {c, g});
    if (e->kind.crossing) return fail(2, curve_name(c) + " crosses g", {c, g}, {e->meeting});
    const auto t = touch_class_of(e->kind);
    if (c == given.front()) {
      cert.touch_class = t;
    } else if (!(t == cert.touch_class)) {
      return fail(2, curve_name(c) + " touches g as " + to_string(t) + ", " + curve_name(given.front()) + " as " +
                         to_string(cert.touch_class),
                  {given.front(), c}, {e->meeting});
    }
  }

  // Condition 3.
  for (std::size_t x = 0; x < given.size(); ++x) {
    for (std::size_t y = x + 1; y < given.size(); ++y) {
      const auto* e = event_against(f, given[x], given[y]);
      if (!e->kind.crossing) {
        return fail(3, curve_name(given[x]) + " touches " + curve_name(given[y]), {given[x], given[y]}, {e->meeting});
      }
    }
  }

  // Condition 4: along g the touchings follow the indexing, in either direction.
  const auto ascending = sorted_along(f, g, given);
  auto descending = ascending;
  std::reverse(descending.begin(), descending.end());
  std::vector<std::pair<std::vector<CurveId>, bool>> candidates;
  if (policy == OrderPolicy::AsGiven) {
    if (given == ascending) {
      candidates.push_back({ascending, false});
    } else if (given == descending) {
      candidates.push_back({descending, true});
    } else {
      std::size_t i = 0;
      while (given[i] == ascending[i]) ++i;
      return fail(4, "touchings along g are out of order at " + curve_name(given[i]), {given[i], ascending[i]},
                  {event_against(f, given[i], g)->meeting, event_against(f, ascending[i], g)->meeting});
    }
  } else {
    candidates.push_back({ascending, false});
    if (given.size() > 1) candidates.push_back({descending, true});
  }

  // Condition 5.
  std::optional<FailureReason> first_failure;
  for (const auto& [order, reversed] : candidates) {
    auto trial = cert;
    auto why = check_orders(f, g, order, trial);
    if (!why) {
      trial.reversed_along_g = reversed;
      QuasiGridCheck ok;
      ok.certificate = std::move(trial);
      return ok;
    }
    if (!first_failure) first_failure = std::move(why);
  }
  QuasiGridCheck r;
  r.failure = std::move(*first_failure);
  return r;
}

DecompositionReport decompose_open(const CombinatorialFamily& f, CurveId g, std::span<const CurveId> h) {
  require_hubs(f, h, false);
  DecompositionReport r;
  r.g = g;
  r.bound_claimed = 2;
  r.parts = split_open(f, g, h);
  if (!h.empty()) r.groups.push_back({f.curve(h.front()).source, f.curve(h.front()).target, static_cast<int>(r.parts.size())});
  return r;
}

DecompositionReport decompose_closed(const CombinatorialFamily& f, CurveId g, std::span<const CurveId> h) {
  require_hubs(f, h, true);
  DecompositionReport r;
  r.g = g;
  r.bound_claimed = 12;
  r.parts = split_closed(f, g, h, r.splits);
  if (r.parts.size() > 12) throw Error(ErrorCode::InputContradictsLemma, "closed class needs more than 12 parts");
  if (!h.empty()) r.groups.push_back({f.curve(h.front()).source, f.curve(h.front()).source, static_cast<int>(r.parts.size())});
  return r;
}

DecompositionReport decompose_all(const CombinatorialFamily& f, CurveId g, std::optional<std::pair<HubId, HubId>> hubs) {
  DecompositionReport r;
  r.g = g;
  r.bound_claimed = 48;
  auto key = [](HubId a, HubId b) { return std::pair{std::min(a, b), std::max(a, b)}; };
  std::optional<std::pair<HubId, HubId>> want;
  if (hubs) want = key(hubs->first, hubs->second);

  CombinatorialFamily nf = f;
  std::vector<CurveId> touchers;
  for (const auto& c : f.curves) {
    if (c.id == g) continue;
    const auto* e = event_against(f, c.id, g);
    if (e == nullptr || e->kind.crossing || (want && key(c.source, c.target) != *want)) {
      r.residual.push_back(c.id);
      continue;
    }
    touchers.push_back(c.id);
    if (c.source > c.target) {
      nf = with_curve_reversed(nf, c.id);
      r.reversed.push_back(c.id);
    }
  }
  std::map<std::pair<HubId, HubId>, std::array<std::vector<CurveId>, 4>> groups;
  for (CurveId c : touchers) {
    const auto& cc = nf.curve(c);
    const auto t = touch_class_of(event_against(nf, c, g)->kind);
    groups[{cc.source, cc.target}][static_cast<std::size_t>(t.index())].push_back(c);
  }
  for (const auto& [hub_pair, classes] : groups) {
    int count = 0;
    for (const auto& cls : classes) {
      auto parts = hub_pair.first == hub_pair.second ? split_closed(nf, g, cls, r.splits) : split_open(nf, g, cls);
      count += static_cast<int>(parts.size());
      for (auto& p : parts) r.parts.push_back(std::move(p));
    }
    if (count > 48) {
      throw Error(ErrorCode::InputContradictsLemma, "hub pair (" + std::to_string(hub_pair.first) + ", " +
                                                        std::to_string(hub_pair.second) + ") needs " +
                                                        std::to_string(count) + " parts");
    }
    r.groups.push_back({hub_pair.first, hub_pair.second, count});
  }
  return r;
}

int TouchingGraph::max_degree() const {
  std::map<CurveId, int> deg;
  for (const auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  int m = 0;
  for (const auto& [c, d] : deg) m = std::max(m, d);
  return m;
}

TouchingGraph touching_graph(const CombinatorialFamily& f, std::span<const CurveId> curves) {
  TouchingGraph t;
  t.nodes.assign(curves.begin(), curves.end());
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t j = i + 1; j < curves.size(); ++j) {
      const auto* e = event_against(f, curves[i], curves[j]);
      if (e != nullptr && e->kind.is_touch()) t.edges.push_back({curves[i], curves[j]});
    }
  }
  return t;
}

std::vector<int> color_paths_and_cycles(const TouchingGraph& g) {
  const std::size_t n = g.nodes.size();
  std::map<CurveId, int> idx;
  for (std::size_t i = 0; i < n; ++i) idx[g.nodes[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : g.edges) {
    adj[static_cast<std::size_t>(idx[a])].push_back(idx[b]);
    adj[static_cast<std::size_t>(idx[b])].push_back(idx[a]);
  }
  for (const auto& nb : adj) {
    if (nb.size() > 2) throw Error(ErrorCode::Precondition, "graph has a vertex of degree above two");
  }
  std::vector<int> color(n, -1);
  auto paint = [&](int v) {
    int c = 0;
    while (std::any_of(adj[static_cast<std::size_t>(v)].begin(), adj[static_cast<std::size_t>(v)].end(),
                       [&](int u) { return color[static_cast<std::size_t>(u)] == c; })) {
      ++c;
    }
    color[static_cast<std::size_t>(v)] = c;
  };
  auto walk = [&](int start) {
    int prev = -1, cur = start;
    while (cur >= 0 && color[static_cast<std::size_t>(cur)] < 0) {
      paint(cur);
      int next = -1;
      for (int u : adj[static_cast<std::size_t>(cur)]) {
        if (u != prev && color[static_cast<std::size_t>(u)] < 0) {
          next = u;
          break;
        }
      }
      prev = cur;
      cur = next;
    }
  };
  // Paths from an end first, then what is left (cycles and isolated vertices).
  for (std::size_t v = 0; v < n; ++v) {
    if (color[v] < 0 && adj[v].size() == 1) walk(static_cast<int>(v));
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (color[v] < 0) walk(static_cast<int>(v));
  }
  return color;
}

namespace {

template <class Pick>
CoreResult prune(const BipartiteGraph& g, int k, Pick pick) {
  const int n = g.left + g.right;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [l, r] : g.edges) {
    adj[static_cast<std::size_t>(l)].push_back(g.left + r);
    adj[static_cast<std::size_t>(g.left + r)].push_back(l);
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  std::set<int> low;
  for (int v = 0; v < n; ++v) {
    if (deg[static_cast<std::size_t>(v)] < k) low.insert(v);
  }
  while (!low.empty()) {
    const int v = pick(low);
    low.erase(v);
    alive[static_cast<std::size_t>(v)] = false;
    for (int u : adj[static_cast<std::size_t>(v)]) {
      if (!alive[static_cast<std::size_t>(u)]) continue;
      if (--deg[static_cast<std::size_t>(u)] < k) low.insert(u);
    }
  }
  CoreResult r;
  r.keep_left.assign(alive.begin(), alive.begin() + g.left);
  r.keep_right.assign(alive.begin() + g.left, alive.end());
  for (const auto& e : g.edges) {
    if (alive[static_cast<std::size_t>(e.first)] && alive[static_cast<std::size_t>(g.left + e.second)]) r.edges.push_back(e);
  }
  return r;
}

}  // namespace

CoreResult prune_k_core(const BipartiteGraph& g, int k) {
  return prune(g, k, [](const std::set<int>& low) { return *low.begin(); });
}

CoreResult prune_k_core(const BipartiteGraph& g, int k, std::mt19937_64& rng) {
  return prune(g, k, [&](const std::set<int>& low) {
    std::uniform_int_distribution<std::size_t> d(0, low.size() - 1);
    return *std::next(low.begin(), static_cast<long>(d(rng)));
  });
}

BipartiteGraph touching_bigraph(const CombinatorialFamily& f, std::span<const CurveId> c1, std::span<const CurveId> c2) {
  BipartiteGraph b;
  b.left = static_cast<int>(c1.size());
  b.right = static_cast<int>(c2.size());
  for (std::size_t i = 0; i < c1.size(); ++i) {
    for (std::size_t j = 0; j < c2.size(); ++j) {
      if (c1[i] == c2[j]) continue;
      const auto* e = event_against(f, c1[i], c2[j]);
      if (e != nullptr && e->kind.is_touch()) b.edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  return b;
}

}  // namespace pseudoseg
