#include "strongl/linkdiag.hpp"

#include <algorithm>
#include <map>

namespace strongl {

namespace {

bool alternation_holds(const Diagram& d) {
  Diagram probe = d;
  probe.alternating = true;
  for (const auto& v : validate_diagram(probe).violations)
    if (v.rfind("alternating", 0) == 0) return false;
  return true;
}

}  // namespace

Diagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  std::vector<int> cur(static_cast<std::size_t>(strands));
  for (int p = 0; p < strands; ++p) cur[static_cast<std::size_t>(p)] = p;
  int next = strands;
  Diagram d;
  for (int g : word) {
    const int i = std::abs(g);
    if (g == 0 || i >= strands) throw std::invalid_argument("generator " + std::to_string(g) + " out of range");
    const auto l = static_cast<std::size_t>(i - 1), r = static_cast<std::size_t>(i);
    // Bottom-left a, bottom-right b, top-right e, top-left c, counterclockwise.
    const int a = cur[l], b = cur[r], c = next++, e = next++;
    d.crossings.push_back(g > 0 ? Crossing{{b, e, c, a}} : Crossing{{a, b, e, c}});
    cur[l] = c;
    cur[r] = e;
  }
  std::map<int, int> close;
  for (int p = 0; p < strands; ++p) {
    if (cur[static_cast<std::size_t>(p)] == p) ++d.free_loops;
    else close[cur[static_cast<std::size_t>(p)]] = p;
  }
  for (auto& x : d.crossings)
    for (auto& a : x.arcs)
      if (auto it = close.find(a); it != close.end()) a = it->second;
  d = relabel(d);
  d.alternating = alternation_holds(d);
  return d;
}

Diagram unknot_diagram() {
  Diagram d;
  d.free_loops = 1;
  return d;
}

Diagram hopf_diagram() { return braid_closure(2, {1, 1}); }
Diagram trefoil_diagram() { return braid_closure(2, {1, 1, 1}); }
Diagram brm_standard() { return braid_closure(3, {1, -2, 1, -2, 1, -2}); }

Diagram medial_diagram(const PlaneGraph& g) {
  const auto m = g.edges.size();
  std::vector<int> vertex_of(2 * m, -1);
  for (std::size_t v = 0; v < g.rotation.size(); ++v)
    for (int dart : g.rotation[v]) {
      if (dart < 0 || static_cast<std::size_t>(dart) >= 2 * m || vertex_of[static_cast<std::size_t>(dart)] != -1)
        throw std::invalid_argument("rotation system must list every dart once");
      vertex_of[static_cast<std::size_t>(dart)] = static_cast<int>(v);
    }
  if (std::find(vertex_of.begin(), vertex_of.end(), -1) != vertex_of.end())
    throw std::invalid_argument("rotation system misses a dart");

  // Crossing on edge e, slots ccw: upper-right 0, upper-left 1, lower-left 2,
  // lower-right 3, with the edge drawn from tail (left) to head (right).
  auto ccw_side = [](int dart) { return dart % 2 == 0 ? 1 : 3; };
  auto cw_side = [](int dart) { return dart % 2 == 0 ? 2 : 0; };
  std::vector<std::array<int, 4>> slots(m, {-1, -1, -1, -1});
  int arc = 0;
  for (const auto& rot : g.rotation)
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const int d1 = rot[i], d2 = rot[(i + 1) % rot.size()];
      slots[static_cast<std::size_t>(d1 / 2)][static_cast<std::size_t>(ccw_side(d1))] = arc;
      slots[static_cast<std::size_t>(d2 / 2)][static_cast<std::size_t>(cw_side(d2))] = arc;
      ++arc;
    }
  Diagram d;
  for (const auto& s : slots) d.crossings.push_back(Crossing{{s[1], s[2], s[3], s[0]}});
  d = relabel(d);
  d.alternating = true;
  return d;
}

namespace {

// Two-terminal plane network. Terminal dart lists are ccw with the outer gap
// at the break: s lists edges leaving right from bottom to top, t lists
// edges leaving left from top to bottom.
struct Net {
  std::vector<std::vector<int>> inner;
  std::vector<int> s, t;
};

Net edge_net(int& edges) {
  const int e = edges++;
  return Net{{}, {2 * e}, {2 * e + 1}};
}

// b drawn below a.
Net parallel(Net a, Net b) {
  Net out;
  out.inner = std::move(a.inner);
  out.inner.insert(out.inner.end(), b.inner.begin(), b.inner.end());
  out.s = b.s;
  out.s.insert(out.s.end(), a.s.begin(), a.s.end());
  out.t = a.t;
  out.t.insert(out.t.end(), b.t.begin(), b.t.end());
  return out;
}

// a to the left of b.
Net series(Net a, Net b) {
  Net out;
  out.inner = std::move(a.inner);
  out.inner.insert(out.inner.end(), b.inner.begin(), b.inner.end());
  std::vector<int> mid = b.s;
  mid.insert(mid.end(), a.t.begin(), a.t.end());
  out.inner.push_back(std::move(mid));
  out.s = std::move(a.s);
  out.t = std::move(b.t);
  return out;
}

}  // namespace

PlaneGraph chain_tait_graph(const std::vector<long long>& weights) {
  if (weights.empty()) throw std::invalid_argument("chain needs at least one weight");
  for (auto w : weights)
    if (w < 1) throw std::invalid_argument("chain weights must be >= 1");
  int edges = 0;
  auto bundle = [&](long long w, bool in_parallel) {
    Net n = edge_net(edges);
    for (long long i = 1; i < w; ++i) n = in_parallel ? parallel(n, edge_net(edges)) : series(n, edge_net(edges));
    return n;
  };
  const auto k = weights.size();
  Net net = bundle(weights[k - 1], true);
  bool last_series = false;
  for (std::size_t i = k - 1; i-- > 0;) {
    last_series = !last_series;
    net = last_series ? series(bundle(weights[i], false), net) : parallel(bundle(weights[i], true), net);
  }
  std::vector<std::vector<int>> rotation = std::move(net.inner);
  if (last_series) {
    std::vector<int> merged = net.s;
    merged.insert(merged.end(), net.t.begin(), net.t.end());
    rotation.push_back(std::move(merged));
  } else {
    rotation.push_back(net.s);
    rotation.push_back(net.t);
  }
  PlaneGraph g;
  g.vertices = static_cast<int>(rotation.size());
  g.edges.assign(static_cast<std::size_t>(edges), {-1, -1});
  for (std::size_t v = 0; v < rotation.size(); ++v)
    for (int dart : rotation[v]) {
      auto& e = g.edges[static_cast<std::size_t>(dart / 2)];
      (dart % 2 == 0 ? e.first : e.second) = static_cast<int>(v);
    }
  g.rotation = std::move(rotation);
  return g;
}

Diagram chain_tree_to_diagram(const AWTree& t) {
  const auto v = validate_awtree(t);
  if (!v.ok()) throw std::invalid_argument("invalid tree: " + v.violations.front());
  if (t.vertices.empty()) throw std::invalid_argument("chain tree is empty");
  if (t.edges.size() + 1 != t.vertices.size()) throw std::invalid_argument("chain tree must be a single path");
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& [a, b] : t.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::map<std::string, const TreeVertex*> by_id;
  std::string start;
  for (const auto& x : t.vertices) {
    by_id[x.id] = &x;
    if (adj[x.id].size() > 2) throw std::invalid_argument("chain tree must be a single path");
    if (start.empty() && adj[x.id].size() <= 1) start = x.id;
  }
  std::vector<long long> weights;
  std::string prev, cur = start;
  while (!cur.empty()) {
    const Slope& w = by_id.at(cur)->weight;
    if (w.is_infinite() || denom(w.value()) != 1 || w.value() < 1)
      throw std::invalid_argument("vertex " + cur + ": chain weights must be integers >= 1");
    weights.push_back(static_cast<long long>(numer(w.value())));
    std::string next;
    for (const auto& n : adj[cur])
      if (n != prev) next = n;
    prev = cur;
    cur = next;
  }
  return medial_diagram(chain_tait_graph(weights));
}

}  // namespace strongl
