#pragma once

// Link diagrams as 4-valent planar maps: validation, smoothing, connected
// pieces, isomorphism, the smoothing containment order, Goeritz
// determinants, and builders (braid closures, Tait-graph medials, chain
// trees).

#include "strongl/surgery.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace strongl {

/// Four arc ids counterclockwise; slots 0 and 2 carry the under-strand.
struct Crossing {
  std::array<int, 4> arcs{};
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Diagram {
  std::vector<Crossing> crossings;
  int free_loops = 0;       // crossing-free unknotted circles
  bool alternating = true;  // declared; checked by validate_diagram

  std::size_t crossing_count() const { return crossings.size(); }
  friend bool operator==(const Diagram&, const Diagram&) = default;
};

/// Builds a crossing from arcs listed counterclockwise; `over_parity` 1 means
/// slots 1 and 3 are over (the usual PD convention), 0 means slots 0 and 2.
Crossing make_crossing(std::array<int, 4> arcs, int over_parity);

/// Clauses: "arcs", "planarity", "alternating".
Verdict2 validate_diagram(const Diagram& d);

/// Number of pieces of the projection: connected crossing sets plus free loops.
std::size_t piece_count(const Diagram& d);

/// A pairs slots (0,1),(2,3); B pairs (0,3),(1,2).
enum class SmoothMode { A, B };

struct SmoothingChoice {
  std::size_t crossing = 0;
  SmoothMode mode = SmoothMode::A;
};

/// Removes one crossing; arcs are renumbered 0.. in order of appearance.
/// Throws std::out_of_range for an unknown crossing.
Diagram smooth(const Diagram& d, SmoothingChoice c);
/// Smooths every crossing whose entry is set, keeps the rest. `modes` has one
/// entry per crossing.
Diagram smooth_many(const Diagram& d, const std::vector<std::optional<SmoothMode>>& modes);

std::vector<Diagram> connected_components(const Diagram& d);

/// Arcs renumbered 0.. in order of first appearance.
Diagram relabel(const Diagram& d);

/// Isomorphism invariant of a connected diagram (one piece): planar-map
/// equivalence preserving over/under, allowing reflection of the sphere.
/// Throws std::invalid_argument for disconnected input.
std::vector<int> canonical_code(const Diagram& d);
bool isomorphic(const Diagram& a, const Diagram& b);

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::size_t kMaxContainmentCrossings = 12;

/// Some set of smoothings of d2 has a connected component isomorphic to d1.
/// d1 must be a single piece (otherwise false). Throws BudgetExceeded above
/// kMaxContainmentCrossings crossings in d2.
bool diagram_contains(const Diagram& d1, const Diagram& d2);
/// Serial reference: every keep/A/B assignment of d2's crossings.
bool diagram_contains_reference(const Diagram& d1, const Diagram& d2);

/// The fixed 6-crossing Borromean diagram: closure of (s1 s2^-1)^3.
Diagram brm_standard();
bool brm_free(const Diagram& d);

struct GoeritzData {
  std::vector<std::vector<long long>> full;  // rows sum to zero
  IntMatrix reduced{0};
};

/// shade = 0 or 1 picks one of the two checkerboard colorings. Throws
/// std::invalid_argument for a disconnected projection.
GoeritzData goeritz(const Diagram& d, int shade);
/// |det| of the reduced Goeritz matrix; both colorings are computed and
/// must agree (std::logic_error otherwise).
BigInt goeritz_h1(const Diagram& d);

// ---------------------------------------------------------------------------
// Builders

/// Closure of a braid word on `strands` strands; generator i > 0 is s_i,
/// i < 0 its inverse. Strands untouched by the word become free loops.
Diagram braid_closure(int strands, const std::vector<int>& word);
Diagram unknot_diagram();
Diagram hopf_diagram();
Diagram trefoil_diagram();

/// Plane multigraph given by a rotation system. Dart 2e is the tail end of
/// edge e, dart 2e+1 its head end; rotation[v] lists v's darts ccw.
struct PlaneGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> rotation;
};

/// Alternating medial diagram: one crossing per edge of g.
Diagram medial_diagram(const PlaneGraph& g);

/// Series-parallel Tait graph for the integer path weights w1..wk (all >= 1):
/// its spanning-tree count is the continuant K(w1, ..., wk).
PlaneGraph chain_tait_graph(const std::vector<long long>& weights);

/// Alternating rational-link diagram for a path tree with integer weights.
/// Throws std::invalid_argument for non-paths or non-integer / zero / infinite
/// weights.
Diagram chain_tree_to_diagram(const AWTree& t);

}  // namespace strongl
