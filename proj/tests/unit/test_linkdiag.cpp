#include "strongl/linkdiag.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace strongl;

namespace {

// Link components: follow each strand straight through its crossings.
int strand_count(const Diagram& d) {
  std::map<int, std::vector<std::pair<int, int>>> ends;
  for (int x = 0; x < static_cast<int>(d.crossings.size()); ++x)
    for (int s = 0; s < 4; ++s) ends[d.crossings[static_cast<std::size_t>(x)].arcs[static_cast<std::size_t>(s)]].push_back({x, s});
  std::set<int> seen;
  int count = d.free_loops;
  for (const auto& [arc, e] : ends) {
    if (seen.count(arc)) continue;
    ++count;
    int a = arc;
    auto [x, s] = e[1];
    while (!seen.count(a)) {
      seen.insert(a);
      const int out = (s + 2) % 4;
      a = d.crossings[static_cast<std::size_t>(x)].arcs[static_cast<std::size_t>(out)];
      const auto& ae = ends[a];
      const auto next = ae[0] == std::pair{x, out} ? ae[1] : ae[0];
      x = next.first;
      s = next.second;
    }
  }
  return count;
}

// Matrix-tree theorem on the plane graph.
BigInt spanning_trees(const PlaneGraph& g) {
  const int n = g.vertices;
  if (n <= 1) return 1;
  IntMatrix lap(n - 1);
  for (const auto& [a, b] : g.edges) {
    if (a == b) continue;
    if (a < n - 1) lap(a, a) += 1;
    if (b < n - 1) lap(b, b) += 1;
    if (a < n - 1 && b < n - 1) {
      lap(a, b) -= 1;
      lap(b, a) -= 1;
    }
  }
  return det_exact(lap);
}

long long continuant(const std::vector<long long>& w) {
  long long prev = 1, cur = w[0];
  for (std::size_t i = 1; i < w.size(); ++i) {
    const long long next = w[i] * cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

PlaneGraph tetrahedron() {
  PlaneGraph g;
  g.vertices = 4;
  g.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}};
  g.rotation = {{0, 2, 4}, {6, 1, 11}, {8, 3, 7}, {10, 5, 9}};
  return g;
}

Diagram figure_eight() { return braid_closure(3, {1, -2, 1, -2}); }

// Same diagram with crossings shuffled, arcs renamed, slots rotated by two
// and optionally reflected.
Diagram scramble(const Diagram& d, std::mt19937& rng, bool reflect) {
  Diagram out = d;
  std::shuffle(out.crossings.begin(), out.crossings.end(), rng);
  std::map<int, int> names;
  std::vector<int> pool;
  for (const auto& x : d.crossings)
    for (int a : x.arcs) names[a] = 0;
  for (std::size_t i = 0; i < names.size(); ++i) pool.push_back(static_cast<int>(100 + 3 * i));
  std::shuffle(pool.begin(), pool.end(), rng);
  std::size_t k = 0;
  for (auto& [a, v] : names) v = pool[k++];
  for (auto& x : out.crossings) {
    for (auto& a : x.arcs) a = names[a];
    if (rng() % 2) std::rotate(x.arcs.begin(), x.arcs.begin() + 2, x.arcs.end());
    if (reflect) std::swap(x.arcs[1], x.arcs[3]);
  }
  return out;
}

AWTree path_tree(const std::vector<long long>& w) {
  AWTree t;
  for (std::size_t i = 0; i < w.size(); ++i) {
    t.vertices.push_back({"v" + std::to_string(i), i % 2 ? -1 : 1, Slope(w[i])});
    if (i) t.edges.push_back({"v" + std::to_string(i - 1), "v" + std::to_string(i)});
  }
  return t;
}

}  // namespace

TEST_CASE("validate_diagram clauses") {
  CHECK(validate_diagram(trefoil_diagram()).ok());
  CHECK(trefoil_diagram().alternating);
  CHECK(validate_diagram(unknot_diagram()).ok());
  CHECK(validate_diagram(brm_standard()).ok());

  Diagram once = trefoil_diagram();
  once.crossings[0].arcs[0] = 77;
  const auto v = validate_diagram(once);
  REQUIRE_FALSE(v.ok());
  CHECK(v.violations.front().rfind("arcs:", 0) == 0);

  Diagram virt{{Crossing{{0, 1, 0, 1}}}, 0, false};
  const auto p = validate_diagram(virt);
  REQUIRE_FALSE(p.ok());
  CHECK(p.violations.front().rfind("planarity:", 0) == 0);

  Diagram kink{{Crossing{{0, 0, 1, 1}}}, 0, false};
  CHECK(validate_diagram(kink).ok());
  kink.alternating = true;
  CHECK(validate_diagram(kink).ok());

  CHECK_FALSE(braid_closure(2, {1, -1}).alternating);
}

TEST_CASE("make_crossing reads PD over parity") {
  CHECK(make_crossing({1, 2, 3, 4}, 1).arcs == std::array<int, 4>{1, 2, 3, 4});
  CHECK(make_crossing({1, 2, 3, 4}, 0).arcs == std::array<int, 4>{2, 3, 4, 1});
  CHECK_THROWS(make_crossing({1, 2, 3, 4}, 2));
}

TEST_CASE("braid closures") {
  CHECK(trefoil_diagram().crossing_count() == 3);
  CHECK(strand_count(trefoil_diagram()) == 1);
  CHECK(strand_count(hopf_diagram()) == 2);
  CHECK(strand_count(brm_standard()) == 3);
  CHECK(strand_count(figure_eight()) == 1);
  const Diagram loose = braid_closure(3, {1, 1});
  CHECK(loose.free_loops == 1);
  CHECK(piece_count(loose) == 2);
  CHECK(connected_components(loose).size() == 2);
  CHECK_THROWS(braid_closure(2, {2}));
}

TEST_CASE("smoothing the trefoil") {
  const Diagram t = trefoil_diagram();
  for (std::size_t x = 0; x < 3; ++x) {
    const Diagram a = smooth(t, {x, SmoothMode::A});
    const Diagram b = smooth(t, {x, SmoothMode::B});
    CHECK(a.crossing_count() == 2);
    CHECK(b.crossing_count() == 2);
    CHECK(validate_diagram(a).ok());
    CHECK(validate_diagram(b).ok());
    const bool a_hopf = isomorphic(a, hopf_diagram());
    const bool b_hopf = isomorphic(b, hopf_diagram());
    CHECK(a_hopf != b_hopf);
    CHECK(strand_count(a_hopf ? b : a) == 1);
    CHECK(goeritz_h1(a_hopf ? b : a) == 1);
  }
  CHECK_THROWS_AS(smooth(t, {3, SmoothMode::A}), std::out_of_range);
}

TEST_CASE("smoothing keeps diagrams valid and drops one crossing") {
  const std::vector<Diagram> pool{brm_standard(), figure_eight(), braid_closure(3, {1, 1, -2, 1, -2, -2, 1}),
                                  chain_tree_to_diagram(path_tree({2, 3, 1, 2}))};
  for (const auto& d : pool)
    for (std::size_t x = 0; x < d.crossing_count(); ++x)
      for (auto m : {SmoothMode::A, SmoothMode::B}) {
        const Diagram s = smooth(d, {x, m});
        CHECK(s.crossing_count() + 1 == d.crossing_count());
        CHECK(validate_diagram(s).ok());
      }
}

TEST_CASE("connected components") {
  CHECK(connected_components(Diagram{}).empty());
  CHECK(connected_components(trefoil_diagram()).size() == 1);
  Diagram split = trefoil_diagram();
  split.free_loops = 1;
  const auto parts = connected_components(split);
  REQUIRE(parts.size() == 2);
  CHECK(isomorphic(parts[0], trefoil_diagram()));
  CHECK(parts[1].free_loops == 1);
  CHECK(parts[1].crossings.empty());
}

TEST_CASE("isomorphism invariance under relabel, rotation and reflection") {
  std::mt19937 rng(11);
  const std::vector<Diagram> pool{trefoil_diagram(), hopf_diagram(), figure_eight(), brm_standard(),
                                  chain_tree_to_diagram(path_tree({3, 1, 2})), braid_closure(3, {1, 1, -2, 1, -2, -2, 1})};
  for (const auto& d : pool)
    for (int trial = 0; trial < 20; ++trial) {
      const Diagram s = scramble(d, rng, trial % 2 == 1);
      CHECK(validate_diagram(s).ok());
      CHECK(canonical_code(s) == canonical_code(d));
    }
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j) CHECK_FALSE(isomorphic(pool[i], pool[j]));
  CHECK(isomorphic(medial_diagram(tetrahedron()), brm_standard()));
  CHECK_THROWS(canonical_code(braid_closure(3, {1})));
}

TEST_CASE("Goeritz determinants") {
  CHECK(goeritz_h1(unknot_diagram()) == 1);
  CHECK(goeritz_h1(hopf_diagram()) == 2);
  CHECK(goeritz_h1(trefoil_diagram()) == 3);
  CHECK(goeritz_h1(figure_eight()) == 5);
  CHECK(goeritz_h1(brm_standard()) == 16);
  CHECK(goeritz_h1(braid_closure(2, {1, -1})) == 0);  // split unlink
  CHECK_THROWS_AS(goeritz(braid_closure(3, {1}), 0), std::invalid_argument);
  CHECK(goeritz_h1(medial_diagram(tetrahedron())) == spanning_trees(tetrahedron()));
}

TEST_CASE("Goeritz rows sum to zero and any region may be deleted") {
  const std::vector<Diagram> pool{brm_standard(), figure_eight(), braid_closure(3, {1, 1, -2, 1, -2, -2, 1}),
                                  chain_tree_to_diagram(path_tree({2, 1, 3}))};
  for (const auto& d : pool)
    for (int shade : {0, 1}) {
      const auto g = goeritz(d, shade);
      const int n = static_cast<int>(g.full.size());
      for (const auto& row : g.full) CHECK(std::accumulate(row.begin(), row.end(), 0LL) == 0);
      std::set<BigInt> dets;
      for (int del = 0; del < n; ++del) {
        IntMatrix m(n - 1);
        for (int i = 0, r = 0; i < n; ++i) {
          if (i == del) continue;
          for (int j = 0, c = 0; j < n; ++j) {
            if (j == del) continue;
            m(r, c++) = g.full[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          }
          ++r;
        }
        dets.insert(boost::multiprecision::abs(det_exact(m)));
      }
      CHECK(dets.size() == 1);
      CHECK(*dets.begin() == goeritz_h1(d));
    }
}

TEST_CASE("chain Tait graphs count spanning trees by the continuant") {
  for (const auto& w : std::vector<std::vector<long long>>{{1}, {2}, {5}, {2, 2}, {1, 1, 1}, {3, 1, 4, 1, 5}, {2, 7, 1, 8}}) {
    const PlaneGraph g = chain_tait_graph(w);
    CHECK(spanning_trees(g) == continuant(w));
    const Diagram d = medial_diagram(g);
    CHECK(validate_diagram(d).ok());
    CHECK(goeritz_h1(d) == continuant(w));
  }
  CHECK_THROWS(chain_tait_graph({}));
  CHECK_THROWS(chain_tait_graph({2, 0}));
}

TEST_CASE("chain_tree_to_diagram matches the surgery homology") {
  CHECK(goeritz_h1(chain_tree_to_diagram(path_tree({2}))) == 2);
  CHECK(isomorphic(chain_tree_to_diagram(path_tree({2})), hopf_diagram()));
  CHECK(isomorphic(chain_tree_to_diagram(path_tree({3})), trefoil_diagram()));
  CHECK(goeritz_h1(chain_tree_to_diagram(path_tree({2, 2}))) == 5);

  std::size_t checked = 0;
  for (std::size_t len = 1; len <= 5; ++len) {
    std::vector<long long> w(len, 1);
    while (true) {
      const AWTree t = path_tree(w);
      const Diagram d = chain_tree_to_diagram(t);
      CHECK(validate_diagram(d).ok());
      const auto h = h1_order(tree_to_framed_link(t));
      REQUIRE(h.has_value());
      CHECK(goeritz_h1(d) == *h);
      CHECK(*h == continuant(w));
      ++checked;
      std::size_t i = 0;
      while (i < len && w[i] == 4) w[i++] = 1;
      if (i == len) break;
      ++w[i];
    }
  }
  CHECK(checked == 4 + 16 + 64 + 256 + 1024);

  AWTree frac = path_tree({2});
  frac.vertices[0].weight = Slope(Rational(3, 2));
  CHECK_THROWS_AS(chain_tree_to_diagram(frac), std::invalid_argument);
  AWTree inf = path_tree({2, 2});
  inf.vertices[1].weight = Slope::infinity();
  CHECK_THROWS_AS(chain_tree_to_diagram(inf), std::invalid_argument);
  AWTree star;
  star.vertices = {{"c", 1, Slope(2)}, {"a", -1, Slope(2)}, {"b", -1, Slope(2)}, {"d", -1, Slope(2)}};
  star.edges = {{"c", "a"}, {"c", "b"}, {"c", "d"}};
  CHECK_THROWS_AS(chain_tree_to_diagram(star), std::invalid_argument);
}

TEST_CASE("containment examples") {
  CHECK(diagram_contains(hopf_diagram(), trefoil_diagram()));
  CHECK_FALSE(diagram_contains(trefoil_diagram(), hopf_diagram()));
  CHECK(diagram_contains(trefoil_diagram(), trefoil_diagram()));
  CHECK(diagram_contains(brm_standard(), brm_standard()));
  CHECK(diagram_contains(unknot_diagram(), trefoil_diagram()));
  CHECK_FALSE(brm_free(brm_standard()));
  CHECK(brm_free(trefoil_diagram()));
  CHECK(brm_free(figure_eight()));
  CHECK_FALSE(diagram_contains(braid_closure(3, {1}), brm_standard()));
  CHECK_THROWS_AS(diagram_contains(hopf_diagram(), braid_closure(2, std::vector<int>(13, 1))), BudgetExceeded);
}

TEST_CASE("2-bridge chain diagrams are Borromean-free") {
  for (const auto& w : std::vector<std::vector<long long>>{{2, 2, 2}, {1, 1, 1, 1, 1, 1}, {2, 1, 2, 1}, {3, 3}, {1, 2, 1, 2, 1}})
    CHECK(brm_free(chain_tree_to_diagram(path_tree(w))));
}

TEST_CASE("containment: parallel search equals the full reference") {
  std::vector<Diagram> pool{unknot_diagram(), hopf_diagram(), trefoil_diagram(), figure_eight(),
                            chain_tree_to_diagram(path_tree({2, 2})), chain_tree_to_diagram(path_tree({1, 1, 1})),
                            braid_closure(2, {1, 1, 1, 1}), braid_closure(3, {1, -2, 1, -2, 1})};
  const Diagram extra = smooth(brm_standard(), {0, SmoothMode::A});
  pool.push_back(extra);
  for (const auto& a : pool)
    for (const auto& b : pool) {
      const bool fast = diagram_contains(a, b);
      CHECK(fast == diagram_contains_reference(a, b));
      if (fast) CHECK(a.crossing_count() <= b.crossing_count());
    }
  // Transitivity on the pool.
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (const auto& c : pool)
        if (diagram_contains(a, b) && diagram_contains(b, c)) CHECK(diagram_contains(a, c));
}
