#pragma once

// Alternatingly weighted trees, framed plumbing links and their first
// homology, blow-ups, the type-2 / type-3 surgery builders and the
// continued-fraction Kirby reduction.

#include "strongl/contfrac.hpp"
#include "strongl/signmat.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace strongl {

/// Signed rational surgery slope or the symbol infinity.
class Slope {
 public:
  Slope() = default;
  Slope(Rational v) : value_(std::move(v)) {}  // NOLINT(implicit)
  Slope(long long v) : value_(v) {}            // NOLINT(implicit)
  static Slope infinity() { Slope s; s.infinite_ = true; return s; }

  bool is_infinite() const { return infinite_; }
  /// Throws std::logic_error for infinity.
  const Rational& value() const;
  /// -1, 0, +1; infinity reports 0.
  int sign() const { return infinite_ ? 0 : value_.sign(); }

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  bool infinite_ = false;
  Rational value_{0};
};

std::string to_string(const Slope& s);
/// Accepts "p/q", "-p/q", integers, "inf" / "infinity".
Slope parse_slope(const std::string& text);

struct Verdict2 {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// ---------------------------------------------------------------------------
// Alternatingly weighted trees

struct TreeVertex {
  std::string id;
  int sign = 1;   // +1 or -1
  Slope weight;   // >= 0 or infinity
};

struct AWTree {
  std::vector<TreeVertex> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

/// Clauses reported: "ids", "edges", "forest", "alternating", "weight", "sign".
Verdict2 validate_awtree(const AWTree& t);

// ---------------------------------------------------------------------------
// Framed links

struct LinkComponent {
  std::string id;
  Slope framing;
  friend bool operator==(const LinkComponent&, const LinkComponent&) = default;
};

struct LinkEntry {
  std::string a;
  std::string b;
  int lk = 1;  // nonzero
  friend bool operator==(const LinkEntry&, const LinkEntry&) = default;
};

class FramedLink {
 public:
  FramedLink() = default;

  /// Throws std::invalid_argument on a duplicate id.
  void add_component(std::string id, Slope framing);
  /// Throws on unknown ids, self links, zero linking number or a second
  /// entry for the same pair.
  void link(const std::string& a, const std::string& b, int lk = 1);
  void unlink(const std::string& a, const std::string& b);

  const std::vector<LinkComponent>& components() const { return comps_; }
  const std::vector<LinkEntry>& links() const { return links_; }
  std::size_t size() const { return comps_.size(); }
  bool empty() const { return comps_.empty(); }

  bool has(const std::string& id) const;
  const Slope& framing(const std::string& id) const;
  void set_framing(const std::string& id, Slope s);
  /// Linking number, 0 when unlinked.
  int linking(const std::string& a, const std::string& b) const;
  std::size_t index_of(const std::string& id) const;

  /// Removes the component and every entry that touches it.
  void remove(const std::string& id);

  friend bool operator==(const FramedLink&, const FramedLink&) = default;

 private:
  std::vector<LinkComponent> comps_;
  std::vector<LinkEntry> links_;
};

/// One unknot per vertex framed sign*weight, one +1 entry per edge.
/// Throws std::invalid_argument if validate_awtree fails.
FramedLink tree_to_framed_link(const AWTree& t);

FramedLink erase_infinity(const FramedLink& l);

/// Row i: diagonal p_i, off-diagonal q_i * lk(i, j), framing i = p_i / q_i.
/// Throws std::invalid_argument if an infinite framing is present.
IntMatrix presentation_matrix(const FramedLink& l);

/// |H_1| of the surgered manifold; nullopt when infinite (b_1 > 0).
std::optional<BigInt> h1_order(const FramedLink& l);

/// Independent route for forests: collapse leaves into their parents
/// (w_parent -= lk^2 / w_leaf) and multiply the numerators.
std::optional<BigInt> h1_order_by_pruning(const FramedLink& l);

/// Replaces the edge a-b (framings 1+r1, 1+r2 for insert = -1, or -1+r1,
/// -1+r2 for insert = +1) by the chain a(r1) - x(insert) - b(r2).
/// The caller's edge must carry linking number +-1. Returns the new link;
/// the inserted component is named `new_id`.
FramedLink blow_up_pair(const FramedLink& l, const std::string& a, const std::string& b,
                        const std::string& new_id, int insert = -1);

/// Forest, all linking numbers +-1, and framing signs alternate along every
/// edge. Zero and infinite framings act as either sign.
bool is_alternating_weighted(const FramedLink& l);

// ---------------------------------------------------------------------------
// Gamma sequences

enum class GammaForm { NLeading, MLeading };

struct GammaSequence {
  GammaForm form = GammaForm::NLeading;
  std::vector<long long> entries;
  long long n0 = 1;
  long long m0 = 1;
};

/// n-leading (n1, m1, ..., m_{k-1}, nk): every m equals m0 and n1 == nk.
/// m-leading dually with n0.
Verdict2 validate_gamma_sequence(const GammaSequence& x);

// ---------------------------------------------------------------------------
// Genus-2 builders

enum class Type2Kind { I, II };

struct SlopeSet2 {
  Type2Kind kind = Type2Kind::I;
  std::vector<Slope> r_alpha;  // 1 entry for 2-(I), 2 for 2-(II)
  std::vector<Slope> r_beta;   // 2 entries; infinity when gamma_i = beta_i
};

Verdict2 validate_slopes(const SlopeSet2& s);

/// 2-(I): K1 - C1 - K2; 2-(II): K1 - C1 - C2 - K2. Infinite K slopes are
/// erased. Throws std::invalid_argument on invariant violations.
FramedLink build_type2(const SlopeSet2& s);

/// Blow-ups that turn a build_type2 link into an alternatingly weighted one.
FramedLink alternate_type2(const SlopeSet2& s);

// ---------------------------------------------------------------------------
// Genus-3 links and the Kirby reduction

enum class Type3Kind { I_III, II_IV };

struct SlopeSet3 {
  Type3Kind kind = Type3Kind::I_III;
  PosRational p1q1{2, 1};   // chain-side residue, > 1
  PosRational p2q2{3, 2};   // torus companion parameters, > 1
  PosRational p3q3{2, 1};   // C3 framing is -p3/q3
  PosRational p2q2_prime{2, 1};  // partner slope p2'/q2', > 1
  std::vector<Rational> r_beta{2, -2, -2};

  /// +1 for 3-(I,III), -1 for 3-(II,IV).
  int chain_sign() const { return kind == Type3Kind::I_III ? 1 : -1; }
  /// Mediant orientation that produces p2'/q2' in this kind.
  int orientation() const { return kind == Type3Kind::I_III ? 1 : -1; }
};

Verdict2 validate_slopes(const SlopeSet3& s);

/// Framed link with the torus companion kept symbolic: C1 carries the
/// chain slope sign*p1/q1 + p2 + q2 - 1 and the pending (p2, q2) cable
/// parameters, C2 the partner slope, C3 and K1..K3 their own slopes.
struct L3Link {
  SlopeSet3 slopes;
  Rational chain_slope;    // r on the torus-knot component C1
  Rational partner_slope;  // r on C2
  CFrac expansion;         // cfe(p2/q2)
};

/// Throws std::invalid_argument on invariant violations.
L3Link build_L3(const SlopeSet3& s);

struct KirbyStep {
  std::size_t index = 0;     // 1-based
  BigInt k;                  // k_i
  BigInt remainder;          // Euclidean remainder multiplied by k_i
  Rational chain_slope;      // after the step
  Rational partner_slope;    // after the step
  std::size_t emitted = 0;   // blow-up components added by this step
};

struct KirbyResult {
  FramedLink link;
  Rational chain_final;
  Rational partner_final;
  std::vector<KirbyStep> steps;
};

/// Iterates the blow-up recursion over cfe(p2/q2) and assembles the
/// resulting unknot link. Propagates InadmissibleSlope.
KirbyResult kirby_reduce(const L3Link& l);

/// Closed-form endpoints: chain r - (p2 + q2 - 1), partner R(p2,q2,p2',q2').
std::pair<Rational, Rational> kirby_endpoints(const L3Link& l);

/// The reduced link assembled from closed-form endpoints; its h1_order is
/// the first homology order attributed to the symbolic L3 link.
FramedLink l3_closed_form_link(const L3Link& l);
std::optional<BigInt> h1_order(const L3Link& l);

/// Grid of admissible L3 inputs: both kinds, every reduced p2/q2 with
/// 1 <= q2 < p2 <= pmax that has a mediant predecessor, and partner slopes
/// blend(p2/q2, mediant, d2/d1) for 1 <= d1, d2 <= dmax (deduplicated).
std::vector<SlopeSet3> kirby_grid(int pmax, int dmax);

struct KirbyGridReport {
  std::size_t cases = 0;
  std::size_t endpoint_violations = 0;
  std::size_t h1_violations = 0;
  std::size_t alternation_violations = 0;
  std::size_t inadmissible = 0;
  std::vector<std::string> failures;  // one line per failing input, grid order
};

/// OpenMP verification of endpoints, h1 invariance and alternation.
KirbyGridReport verify_kirby_grid(const std::vector<SlopeSet3>& grid);
/// Serial reference with identical output.
KirbyGridReport verify_kirby_grid_reference(const std::vector<SlopeSet3>& grid);

std::string describe(const SlopeSet3& s);

}  // namespace strongl
