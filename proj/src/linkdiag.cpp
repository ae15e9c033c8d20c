#include "strongl/linkdiag.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace strongl {

namespace {

struct End {
  int crossing;
  int slot;
};

// arc id -> its endpoints; ids must be non-negative.
std::map<int, std::vector<End>> endpoints(const Diagram& d) {
  std::map<int, std::vector<End>> ends;
  for (std::size_t x = 0; x < d.crossings.size(); ++x)
    for (int s = 0; s < 4; ++s) ends[d.crossings[x].arcs[static_cast<std::size_t>(s)]].push_back({static_cast<int>(x), s});
  return ends;
}

// Dense partner table: partner[4x + s] = 4y + t for the other end of the arc.
std::vector<int> partner_table(const Diagram& d) {
  const auto ends = endpoints(d);
  std::vector<int> partner(4 * d.crossings.size(), -1);
  for (const auto& [arc, e] : ends) {
    if (e.size() != 2) throw std::invalid_argument("arc " + std::to_string(arc) + " does not appear exactly twice");
    partner[static_cast<std::size_t>(4 * e[0].crossing + e[0].slot)] = 4 * e[1].crossing + e[1].slot;
    partner[static_cast<std::size_t>(4 * e[1].crossing + e[1].slot)] = 4 * e[0].crossing + e[0].slot;
  }
  return partner;
}

int mod4(int v) { return ((v % 4) + 4) % 4; }

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// Crossing pieces: component id per crossing.
std::vector<int> crossing_pieces(const Diagram& d, int& count) {
  const auto partner = partner_table(d);
  Dsu dsu(d.crossings.size());
  for (std::size_t i = 0; i < partner.size(); ++i) dsu.unite(static_cast<int>(i / 4), partner[i] / 4);
  std::vector<int> id(d.crossings.size(), -1);
  std::map<int, int> roots;
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    const auto [it, fresh] = roots.emplace(dsu.find(static_cast<int>(x)), static_cast<int>(roots.size()));
    id[x] = it->second;
  }
  count = static_cast<int>(roots.size());
  return id;
}

// Face id for every corner (x, i) = sector between slots i and i+1.
std::vector<int> corner_faces(const std::vector<int>& partner, int& faces) {
  std::vector<int> face(partner.size(), -1);
  faces = 0;
  for (std::size_t start = 0; start < partner.size(); ++start) {
    if (face[start] != -1) continue;
    std::size_t c = start;
    while (face[c] == -1) {
      face[c] = faces;
      const int x = static_cast<int>(c / 4), i = static_cast<int>(c % 4);
      const int next = partner[static_cast<std::size_t>(4 * x + mod4(i + 1))];
      c = static_cast<std::size_t>(next);
    }
    ++faces;
  }
  return face;
}

}  // namespace

Crossing make_crossing(std::array<int, 4> arcs, int over_parity) {
  if (over_parity != 0 && over_parity != 1) throw std::invalid_argument("over must be 0 or 1");
  if (over_parity == 0) std::rotate(arcs.begin(), arcs.begin() + 1, arcs.end());
  return Crossing{arcs};
}

Verdict2 validate_diagram(const Diagram& d) {
  Verdict2 v;
  if (d.free_loops < 0) v.violations.push_back("arcs: negative free loop count");
  const auto ends = endpoints(d);
  for (const auto& [arc, e] : ends) {
    if (arc < 0) v.violations.push_back("arcs: negative arc id " + std::to_string(arc));
    if (e.size() != 2)
      v.violations.push_back("arcs: arc " + std::to_string(arc) + " appears " + std::to_string(e.size()) + " times");
  }
  if (!v.ok() || d.crossings.empty()) return v;
  const auto partner = partner_table(d);
  int pieces = 0, faces = 0;
  crossing_pieces(d, pieces);
  corner_faces(partner, faces);
  const auto c = static_cast<int>(d.crossings.size());
  if (faces != c + 1 + pieces)
    v.violations.push_back("planarity: " + std::to_string(faces) + " faces, expected " + std::to_string(c + 1 + pieces));
  if (d.alternating) {
    for (std::size_t i = 0; i < partner.size(); ++i)
      if (static_cast<int>(i % 2) == partner[i] % 2) {
        v.violations.push_back("alternating: arc " +
                               std::to_string(d.crossings[i / 4].arcs[i % 4]) + " joins two " +
                               (i % 2 ? "over" : "under") + " passages");
        break;
      }
  }
  return v;
}

std::size_t piece_count(const Diagram& d) {
  int pieces = 0;
  if (!d.crossings.empty()) crossing_pieces(d, pieces);
  return static_cast<std::size_t>(pieces + d.free_loops);
}

Diagram relabel(const Diagram& d) {
  std::map<int, int> names;
  Diagram out = d;
  for (auto& x : out.crossings)
    for (auto& a : x.arcs) {
      const auto [it, fresh] = names.emplace(a, static_cast<int>(names.size()));
      a = it->second;
    }
  return out;
}

Diagram smooth_many(const Diagram& d, const std::vector<std::optional<SmoothMode>>& modes) {
  if (modes.size() != d.crossings.size()) throw std::invalid_argument("one smoothing entry per crossing expected");
  std::map<int, int> index;
  for (const auto& x : d.crossings)
    for (int a : x.arcs) index.emplace(a, static_cast<int>(index.size()));
  Dsu dsu(index.size());
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    if (!modes[x]) continue;
    const auto& arcs = d.crossings[x].arcs;
    auto join = [&](int s, int t) {
      dsu.unite(index.at(arcs[static_cast<std::size_t>(s)]), index.at(arcs[static_cast<std::size_t>(t)]));
    };
    if (*modes[x] == SmoothMode::A) {
      join(0, 1);
      join(2, 3);
    } else {
      join(0, 3);
      join(1, 2);
    }
  }
  Diagram out;
  out.alternating = d.alternating;
  out.free_loops = d.free_loops;
  std::map<int, int> rep_arc;  // class root -> smallest arc id in class
  for (const auto& [arc, i] : index) rep_arc.emplace(dsu.find(i), arc);
  std::vector<char> used(index.size(), 0);
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    if (modes[x]) continue;
    Crossing nx = d.crossings[x];
    for (auto& a : nx.arcs) {
      const int root = dsu.find(index.at(a));
      a = rep_arc.at(root);
      used[static_cast<std::size_t>(root)] = 1;
    }
    out.crossings.push_back(nx);
  }
  // Every class that lost all its crossings closes up into one circle.
  for (const auto& [root, arc] : rep_arc)
    if (!used[static_cast<std::size_t>(root)]) ++out.free_loops;
  return relabel(out);
}

Diagram smooth(const Diagram& d, SmoothingChoice c) {
  if (c.crossing >= d.crossings.size()) throw std::out_of_range("no crossing " + std::to_string(c.crossing));
  std::vector<std::optional<SmoothMode>> modes(d.crossings.size());
  modes[c.crossing] = c.mode;
  return smooth_many(d, modes);
}

std::vector<Diagram> connected_components(const Diagram& d) {
  std::vector<Diagram> out;
  if (!d.crossings.empty()) {
    int pieces = 0;
    const auto id = crossing_pieces(d, pieces);
    out.resize(static_cast<std::size_t>(pieces));
    for (auto& p : out) p.alternating = d.alternating;
    for (std::size_t x = 0; x < d.crossings.size(); ++x)
      out[static_cast<std::size_t>(id[x])].crossings.push_back(d.crossings[x]);
    for (auto& p : out) p = relabel(p);
  }
  for (int i = 0; i < d.free_loops; ++i) {
    Diagram loop;
    loop.free_loops = 1;
    loop.alternating = d.alternating;
    out.push_back(loop);
  }
  return out;
}

std::vector<int> canonical_code(const Diagram& d) {
  if (piece_count(d) != 1) throw std::invalid_argument("canonical code needs a single-piece diagram");
  if (d.crossings.empty()) return {-1};
  const auto partner = partner_table(d);
  const int c = static_cast<int>(d.crossings.size());
  std::vector<int> best;
  std::vector<int> num(static_cast<std::size_t>(c)), base(static_cast<std::size_t>(c)), order, code;
  for (int start = 0; start < c; ++start)
    for (int b0 : {0, 2})
      for (int o : {1, -1}) {
        std::fill(num.begin(), num.end(), -1);
        order.assign(1, start);
        num[static_cast<std::size_t>(start)] = 0;
        base[static_cast<std::size_t>(start)] = b0;
        code.clear();
        bool worse = false;
        for (std::size_t idx = 0; idx < order.size() && !worse; ++idx) {
          const int x = order[idx];
          for (int pos = 0; pos < 4; ++pos) {
            const int slot = mod4(base[static_cast<std::size_t>(x)] + pos * o);
            const int other = partner[static_cast<std::size_t>(4 * x + slot)];
            const int z = other / 4, k = other % 4;
            if (num[static_cast<std::size_t>(z)] == -1) {
              num[static_cast<std::size_t>(z)] = static_cast<int>(order.size());
              base[static_cast<std::size_t>(z)] = k % 2 == 0 ? k : mod4(k - o);
              order.push_back(z);
            }
            code.push_back(num[static_cast<std::size_t>(z)]);
            code.push_back(mod4((k - base[static_cast<std::size_t>(z)]) * o));
          }
          // Prefix comparison lets losing starts stop early.
          if (!best.empty() && std::lexicographical_compare(best.begin(), best.begin() + static_cast<std::ptrdiff_t>(code.size()),
                                                            code.begin(), code.end()))
            worse = true;
        }
        if (!worse && (best.empty() || code < best)) best = code;
      }
  return best;
}

bool isomorphic(const Diagram& a, const Diagram& b) {
  if (a.crossings.size() != b.crossings.size() || a.free_loops != b.free_loops) return false;
  return canonical_code(a) == canonical_code(b);
}

// ---------------------------------------------------------------------------
// Goeritz matrices

GoeritzData goeritz(const Diagram& d, int shade) {
  if (shade != 0 && shade != 1) throw std::invalid_argument("shade must be 0 or 1");
  if (piece_count(d) != 1) throw std::invalid_argument("Goeritz matrix needs a connected projection");
  GoeritzData g;
  if (d.crossings.empty()) return g;
  const auto partner = partner_table(d);
  int faces = 0;
  const auto face = corner_faces(partner, faces);

  // Two-color faces: corners i and i+1 of a crossing lie in different colors.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(faces));
  for (std::size_t x = 0; x < d.crossings.size(); ++x)
    for (int i = 0; i < 4; ++i) {
      const int f = face[4 * x + static_cast<std::size_t>(i)], h = face[4 * x + static_cast<std::size_t>(mod4(i + 1))];
      adj[static_cast<std::size_t>(f)].push_back(h);
      adj[static_cast<std::size_t>(h)].push_back(f);
    }
  std::vector<int> color(static_cast<std::size_t>(faces), -1);
  color[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int h : adj[static_cast<std::size_t>(f)]) {
      if (color[static_cast<std::size_t>(h)] == -1) {
        color[static_cast<std::size_t>(h)] = 1 - color[static_cast<std::size_t>(f)];
        stack.push_back(h);
      } else if (color[static_cast<std::size_t>(h)] == color[static_cast<std::size_t>(f)]) {
        throw std::logic_error("faces admit no checkerboard coloring");
      }
    }
  }
  std::vector<int> region(static_cast<std::size_t>(faces), -1);
  int regions = 0;
  for (int f = 0; f < faces; ++f)
    if (color[static_cast<std::size_t>(f)] == shade) region[static_cast<std::size_t>(f)] = regions++;
  g.full.assign(static_cast<std::size_t>(regions), std::vector<long long>(static_cast<std::size_t>(regions), 0));
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    const int first = color[static_cast<std::size_t>(face[4 * x])] == shade ? 0 : 1;
    const long long eta = first == 0 ? 1 : -1;
    const int r = region[static_cast<std::size_t>(face[4 * x + static_cast<std::size_t>(first)])];
    const int s = region[static_cast<std::size_t>(face[4 * x + static_cast<std::size_t>(first + 2)])];
    if (r == s) continue;
    g.full[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] -= eta;
    g.full[static_cast<std::size_t>(s)][static_cast<std::size_t>(r)] -= eta;
    g.full[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] += eta;
    g.full[static_cast<std::size_t>(s)][static_cast<std::size_t>(s)] += eta;
  }
  const int n = regions - 1;
  g.reduced = IntMatrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.reduced(i, j) = g.full[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return g;
}

BigInt goeritz_h1(const Diagram& d) {
  const BigInt a = boost::multiprecision::abs(det_exact(goeritz(d, 0).reduced));
  const BigInt b = boost::multiprecision::abs(det_exact(goeritz(d, 1).reduced));
  if (a != b) throw std::logic_error("checkerboard colorings disagree: " + a.str() + " vs " + b.str());
  return a;
}

}  // namespace strongl
