// Genus-3 links with a symbolic torus-knot companion and the blow-up
// recursion that trades the companion for chains of unknots.

#include "strongl/surgery.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace strongl {

namespace {

bool gt(const PosRational& r, long long v) { return r.value() > v; }

}  // namespace

Verdict2 validate_slopes(const SlopeSet3& s) {
  Verdict2 v;
  if (s.r_beta.size() != 3) {
    v.violations.push_back("arity: expected 3 beta slopes");
    return v;
  }
  if (!gt(s.p1q1, 1)) v.violations.push_back("p1q1: p1/q1 must exceed 1");
  if (!gt(s.p2q2, 1)) v.violations.push_back("p2q2: p2/q2 must exceed 1");
  if (!gt(s.p2q2_prime, 1)) v.violations.push_back("partner: p2'/q2' must exceed 1");
  const bool first = s.kind == Type3Kind::I_III;
  if (first) {
    if (s.r_beta[0] <= 1) v.violations.push_back("beta: r_beta1 must exceed +1");
  } else if (s.r_beta[0] >= -1) {
    v.violations.push_back("beta: r_beta1 must be below -1");
  }
  if (s.r_beta[1] >= -1) v.violations.push_back("beta: r_beta2 must be below -1");
  if (s.r_beta[2] >= -1) v.violations.push_back("beta: r_beta3 must be below -1");
  return v;
}

L3Link build_L3(const SlopeSet3& s) {
  const auto v = validate_slopes(s);
  if (!v.ok()) throw std::invalid_argument("invalid slopes: " + v.violations.front());
  L3Link l{s, 0, s.p2q2_prime.value(), cfe(s.p2q2)};
  l.chain_slope = s.p1q1.value() * s.chain_sign() + Rational(s.p2q2.p() + s.p2q2.q() - 1);
  return l;
}

namespace {

// C1 carries the chain slope and C2 the partner slope. Blow-up unknots E_i
// hang off C1; for n odd the first one sits between C1 and C2. The
// K-components and C3 attach to whichever of C1 / E1 has the opposite
// expected sign.
FramedLink assemble(const L3Link& l, const Rational& chain, const Rational& partner, const BigInt& emitted) {
  const SlopeSet3& s = l.slopes;
  const int sign = s.chain_sign();
  const int eps = -sign;
  FramedLink out;
  out.add_component("C1", Slope(chain));
  out.add_component("C2", Slope(partner));
  const auto count = static_cast<std::size_t>(emitted);
  for (std::size_t i = 1; i <= count; ++i) {
    const std::string id = "E" + std::to_string(i);
    out.add_component(id, Slope(eps));
    out.link("C1", id);
  }
  if (l.expansion.length() % 2 == 1) out.link("E1", "C2");
  else out.link("C1", "C2");

  struct Extra {
    const char* id;
    Rational framing;
    int expected;
  };
  const Extra extras[] = {
      {"K1", s.r_beta[0], s.kind == Type3Kind::I_III ? 1 : -1},
      {"K2", s.r_beta[1], -1},
      {"K3", s.r_beta[2], -1},
      {"C3", -s.p3q3.value(), -1},
  };
  for (const auto& x : extras) {
    out.add_component(x.id, Slope(x.framing));
    out.link(x.expected == -sign ? "C1" : "E1", x.id);
  }
  return out;
}

BigInt total_terms(const CFrac& c) {
  BigInt t = 0;
  for (const auto& k : c.terms()) t += k;
  return t;
}

}  // namespace

KirbyResult kirby_reduce(const L3Link& l) {
  KirbyResult res;
  const auto& ks = l.expansion.terms();
  BigInt prev = l.slopes.p2q2.p();
  BigInt cur = l.slopes.p2q2.q();
  Rational chain = l.chain_slope;
  Rational partner = l.partner_slope;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const BigInt& k = ks[i];
    chain -= Rational(k * cur);
    if (i == 0) {
      partner -= Rational(k);
    } else {
      if (partner == 0) throw InadmissibleSlope("partner slope vanishes before step " + std::to_string(i + 1));
      partner = -(Rational(k) + 1 / (-partner));
    }
    res.steps.push_back({i + 1, k, cur, chain, partner, static_cast<std::size_t>(k)});
    BigInt next = prev - k * cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  if (cur != 0 || prev != 1) throw std::logic_error("Euclidean remainders did not terminate at 1");
  res.chain_final = chain;
  res.partner_final = partner;
  res.link = assemble(l, chain, partner, total_terms(l.expansion));
  return res;
}

std::pair<Rational, Rational> kirby_endpoints(const L3Link& l) {
  const auto& s = l.slopes;
  return {l.chain_slope - Rational(s.p2q2.p() + s.p2q2.q() - 1), r_value(l.expansion, s.p2q2_prime.value())};
}

FramedLink l3_closed_form_link(const L3Link& l) {
  const auto [chain, partner] = kirby_endpoints(l);
  return assemble(l, chain, partner, total_terms(l.expansion));
}

std::optional<BigInt> h1_order(const L3Link& l) { return h1_order(l3_closed_form_link(l)); }

// ---------------------------------------------------------------------------
// Grid verification

std::string describe(const SlopeSet3& s) {
  std::string out = s.kind == Type3Kind::I_III ? "L(13)" : "L(24)";
  out += " p1/q1=" + to_string(s.p1q1) + " p2/q2=" + to_string(s.p2q2) + " p3/q3=" + to_string(s.p3q3) +
         " p2'/q2'=" + to_string(s.p2q2_prime) + " r_beta=";
  for (std::size_t i = 0; i < s.r_beta.size(); ++i) out += (i ? "," : "") + to_string(s.r_beta[i]);
  return out;
}

std::vector<SlopeSet3> kirby_grid(int pmax, int dmax) {
  if (pmax < 2 || dmax < 1) throw std::invalid_argument("kirby grid needs pmax >= 2 and dmax >= 1");
  std::vector<SlopeSet3> out;
  const auto zs = z_grid(dmax);
  for (Type3Kind kind : {Type3Kind::I_III, Type3Kind::II_IV}) {
    for (const auto& r : slope_grid(pmax)) {
      SlopeSet3 s;
      s.kind = kind;
      s.p1q1 = PosRational(3, 1);
      s.p2q2 = r;
      s.p3q3 = PosRational(2, 1);
      s.r_beta = kind == Type3Kind::I_III ? std::vector<Rational>{2, -2, -2} : std::vector<Rational>{-2, -2, -2};
      const auto mp = mediant_pred(r, s.orientation());
      if (!mp) continue;
      std::vector<PosRational> seen;
      for (const auto& z : zs) {
        const PosRational b = blend(r, *mp, z);
        if (std::find(seen.begin(), seen.end(), b) != seen.end()) continue;
        seen.push_back(b);
        s.p2q2_prime = b;
        out.push_back(s);
      }
    }
  }
  return out;
}

namespace {

struct CaseResult {
  bool endpoint = true;
  bool h1 = true;
  bool alternating = true;
  bool admissible = true;
  std::string note;
};

CaseResult verify_one(const SlopeSet3& s) {
  CaseResult c;
  try {
    const L3Link l = build_L3(s);
    const KirbyResult r = kirby_reduce(l);
    const auto [chain, partner] = kirby_endpoints(l);
    c.endpoint = r.chain_final == chain && r.partner_final == partner &&
                 chain == s.p1q1.value() * s.chain_sign();
    c.h1 = h1_order(r.link) == h1_order(l);
    c.alternating = is_alternating_weighted(r.link);
    if (!c.endpoint) c.note += " endpoint";
    if (!c.h1) c.note += " h1";
    if (!c.alternating) c.note += " alternation(R=" + to_string(r.partner_final) + ")";
  } catch (const InadmissibleSlope& e) {
    c.admissible = false;
    c.note = std::string(" inadmissible: ") + e.what();
  }
  return c;
}

KirbyGridReport fold(const std::vector<SlopeSet3>& grid, const std::vector<CaseResult>& results) {
  KirbyGridReport rep;
  rep.cases = grid.size();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& c = results[i];
    rep.endpoint_violations += !c.endpoint;
    rep.h1_violations += !c.h1;
    rep.alternation_violations += !c.alternating;
    rep.inadmissible += !c.admissible;
    if (!c.note.empty()) rep.failures.push_back(describe(grid[i]) + ":" + c.note);
  }
  return rep;
}

}  // namespace

KirbyGridReport verify_kirby_grid(const std::vector<SlopeSet3>& grid) {
  std::vector<CaseResult> results(grid.size());
  const auto count = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    results[static_cast<std::size_t>(i)] = verify_one(grid[static_cast<std::size_t>(i)]);
  return fold(grid, results);
}

KirbyGridReport verify_kirby_grid_reference(const std::vector<SlopeSet3>& grid) {
  std::vector<CaseResult> results;
  results.reserve(grid.size());
  for (const auto& s : grid) results.push_back(verify_one(s));
  return fold(grid, results);
}

}  // namespace strongl
