#include "strongl/surgery.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace strongl {

const Rational& Slope::value() const {
  if (infinite_) throw std::logic_error("infinite slope has no rational value");
  return value_;
}

std::string to_string(const Slope& s) { return s.is_infinite() ? "inf" : to_string(s.value()); }

Slope parse_slope(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "∞") return Slope::infinity();
  return Slope(parse_rational(text));
}

namespace {

// Union-find over indices, used for forest checks.
struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

std::pair<std::string, std::string> ordered(const std::string& a, const std::string& b) {
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

// ---------------------------------------------------------------------------
// Trees

Verdict2 validate_awtree(const AWTree& t) {
  Verdict2 v;
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    const auto& x = t.vertices[i];
    if (x.id.empty()) v.violations.push_back("ids: empty vertex id");
    else if (!index.emplace(x.id, i).second) v.violations.push_back("ids: duplicate id " + x.id);
    if (x.sign != 1 && x.sign != -1) v.violations.push_back("sign: vertex " + x.id + " has sign " + std::to_string(x.sign));
    if (!x.weight.is_infinite() && x.weight.value() < 0)
      v.violations.push_back("weight: vertex " + x.id + " has negative weight " + to_string(x.weight));
  }
  Dsu dsu(t.vertices.size());
  std::set<std::pair<std::string, std::string>> seen;
  bool cycle = false;
  for (const auto& [a, b] : t.edges) {
    const auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      v.violations.push_back("edges: unknown endpoint in " + a + "-" + b);
      continue;
    }
    if (a == b) {
      v.violations.push_back("edges: self loop at " + a);
      continue;
    }
    if (!seen.insert(ordered(a, b)).second) {
      v.violations.push_back("edges: duplicate edge " + a + "-" + b);
      continue;
    }
    if (!dsu.unite(ia->second, ib->second)) cycle = true;
    if (t.vertices[ia->second].sign == t.vertices[ib->second].sign)
      v.violations.push_back("alternating: " + a + "-" + b + " share sign");
  }
  if (cycle) v.violations.push_back("forest: graph contains a cycle");
  return v;
}

FramedLink tree_to_framed_link(const AWTree& t) {
  const auto v = validate_awtree(t);
  if (!v.ok()) throw std::invalid_argument("invalid tree: " + v.violations.front());
  FramedLink l;
  for (const auto& x : t.vertices)
    l.add_component(x.id, x.weight.is_infinite() ? Slope::infinity() : Slope(x.weight.value() * x.sign));
  for (const auto& [a, b] : t.edges) l.link(a, b, 1);
  return l;
}

// ---------------------------------------------------------------------------
// Framed links

void FramedLink::add_component(std::string id, Slope framing) {
  if (has(id)) throw std::invalid_argument("duplicate component id " + id);
  comps_.push_back({std::move(id), std::move(framing)});
}

bool FramedLink::has(const std::string& id) const {
  return std::any_of(comps_.begin(), comps_.end(), [&](const LinkComponent& c) { return c.id == id; });
}

std::size_t FramedLink::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < comps_.size(); ++i)
    if (comps_[i].id == id) return i;
  throw std::invalid_argument("unknown component " + id);
}

const Slope& FramedLink::framing(const std::string& id) const { return comps_[index_of(id)].framing; }

void FramedLink::set_framing(const std::string& id, Slope s) { comps_[index_of(id)].framing = std::move(s); }

void FramedLink::link(const std::string& a, const std::string& b, int lk) {
  index_of(a);
  index_of(b);
  if (a == b) throw std::invalid_argument("self linking entry on " + a);
  if (lk == 0) throw std::invalid_argument("linking number must be nonzero");
  if (linking(a, b) != 0) throw std::invalid_argument("second linking entry for " + a + "-" + b);
  links_.push_back({a, b, lk});
}

void FramedLink::unlink(const std::string& a, const std::string& b) {
  std::erase_if(links_, [&](const LinkEntry& e) { return (e.a == a && e.b == b) || (e.a == b && e.b == a); });
}

int FramedLink::linking(const std::string& a, const std::string& b) const {
  for (const auto& e : links_)
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.lk;
  return 0;
}

void FramedLink::remove(const std::string& id) {
  const std::size_t i = index_of(id);
  comps_.erase(comps_.begin() + static_cast<std::ptrdiff_t>(i));
  std::erase_if(links_, [&](const LinkEntry& e) { return e.a == id || e.b == id; });
}

FramedLink erase_infinity(const FramedLink& l) {
  FramedLink out = l;
  for (const auto& c : l.components())
    if (c.framing.is_infinite()) out.remove(c.id);
  return out;
}

IntMatrix presentation_matrix(const FramedLink& l) {
  const int n = static_cast<int>(l.size());
  IntMatrix m(n);
  const auto& comps = l.components();
  for (int i = 0; i < n; ++i) {
    const auto& f = comps[static_cast<std::size_t>(i)].framing;
    if (f.is_infinite()) throw std::invalid_argument("infinite framing on " + comps[static_cast<std::size_t>(i)].id);
    m(i, i) = numer(f.value());
  }
  for (const auto& e : l.links()) {
    const int a = static_cast<int>(l.index_of(e.a)), b = static_cast<int>(l.index_of(e.b));
    m(a, b) = denom(comps[static_cast<std::size_t>(a)].framing.value()) * e.lk;
    m(b, a) = denom(comps[static_cast<std::size_t>(b)].framing.value()) * e.lk;
  }
  return m;
}

std::optional<BigInt> h1_order(const FramedLink& l) {
  const FramedLink f = erase_infinity(l);
  const BigInt d = boost::multiprecision::abs(det_exact(presentation_matrix(f)));
  if (d == 0) return std::nullopt;
  return d;
}

std::optional<BigInt> h1_order_by_pruning(const FramedLink& l) {
  const FramedLink f = erase_infinity(l);
  const std::size_t n = f.size();
  std::vector<Rational> w(n);
  BigInt qprod = 1;
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = f.components()[i].framing.value();
    qprod *= denom(w[i]);
  }
  std::vector<std::map<std::size_t, int>> adj(n);
  Dsu dsu(n);
  for (const auto& e : f.links()) {
    const std::size_t a = f.index_of(e.a), b = f.index_of(e.b);
    if (!dsu.unite(a, b)) throw std::invalid_argument("pruning needs a forest");
    adj[a][b] = e.lk;
    adj[b][a] = e.lk;
  }
  // Symmetric determinant by eliminating leaves; a zero leaf eliminates its
  // neighbour with it (the 2x2 block [[0, l], [l, *]] contributes -l^2).
  Rational det = 1;
  std::vector<bool> alive(n, true);
  std::size_t remaining = n;
  auto drop = [&](std::size_t v) {
    for (const auto& [u, lk] : adj[v]) adj[u].erase(v);
    adj[v].clear();
    alive[v] = false;
    --remaining;
  };
  while (remaining > 0) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n && pick == n; ++v)
      if (alive[v] && adj[v].size() <= 1) pick = v;
    if (pick == n) throw std::logic_error("forest without a leaf");
    if (adj[pick].empty()) {
      det *= w[pick];
      drop(pick);
      continue;
    }
    const auto [parent, lk] = *adj[pick].begin();
    if (w[pick] != 0) {
      det *= w[pick];
      w[parent] -= Rational(lk * lk) / w[pick];
      drop(pick);
    } else {
      det *= -Rational(lk * lk);
      drop(pick);
      drop(parent);
    }
  }
  const Rational total = boost::multiprecision::abs(det * qprod);
  if (total == 0) return std::nullopt;
  if (denom(total) != 1) throw std::logic_error("non-integral pruning determinant");
  return numer(total);
}

FramedLink blow_up_pair(const FramedLink& l, const std::string& a, const std::string& b, const std::string& new_id,
                        int insert) {
  if (insert != 1 && insert != -1) throw std::invalid_argument("blow-up framing must be +1 or -1");
  const int lk = l.linking(a, b);
  if (lk == 0) throw std::invalid_argument("no edge " + a + "-" + b);
  if (lk != 1 && lk != -1) throw std::invalid_argument("blow-up needs linking number +-1 on " + a + "-" + b);
  if (l.framing(a).is_infinite() || l.framing(b).is_infinite())
    throw std::invalid_argument("blow-up endpoints need finite framings");
  FramedLink out = l;
  out.unlink(a, b);
  out.set_framing(a, Slope(l.framing(a).value() + insert));
  out.set_framing(b, Slope(l.framing(b).value() + insert));
  out.add_component(new_id, Slope(insert));
  out.link(a, new_id, 1);
  out.link(new_id, b, 1);
  return out;
}

bool is_alternating_weighted(const FramedLink& l) {
  const std::size_t n = l.size();
  std::vector<std::vector<std::size_t>> adj(n);
  Dsu dsu(n);
  for (const auto& e : l.links()) {
    if (e.lk != 1 && e.lk != -1) return false;
    const std::size_t a = l.index_of(e.a), b = l.index_of(e.b);
    if (!dsu.unite(a, b)) return false;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  // In each tree, fixed signs times the bipartition parity must be constant.
  std::vector<int> parity(n, -1);
  for (std::size_t root = 0; root < n; ++root) {
    if (parity[root] != -1) continue;
    int expected = 0;
    std::vector<std::size_t> stack{root};
    parity[root] = 0;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      const int s = l.components()[v].framing.sign();
      if (s != 0) {
        const int normalized = parity[v] ? -s : s;
        if (expected == 0) expected = normalized;
        else if (expected != normalized) return false;
      }
      for (std::size_t u : adj[v])
        if (parity[u] == -1) {
          parity[u] = 1 - parity[v];
          stack.push_back(u);
        }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Gamma sequences

Verdict2 validate_gamma_sequence(const GammaSequence& x) {
  Verdict2 v;
  const auto& e = x.entries;
  if (e.empty()) {
    v.violations.push_back("length: empty sequence");
    return v;
  }
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 1) v.violations.push_back("positive: entry " + std::to_string(i + 1) + " is " + std::to_string(e[i]));
  if (e.size() % 2 == 0) v.violations.push_back("length: both ends must be the leading letter");
  const bool nlead = x.form == GammaForm::NLeading;
  const long long constant = nlead ? x.m0 : x.n0;
  const char* inner = nlead ? "m" : "n";
  const char* outer = nlead ? "n" : "m";
  for (std::size_t i = 1; i < e.size(); i += 2)
    if (e[i] != constant)
      v.violations.push_back(std::string("constant: ") + inner + std::to_string(i / 2 + 1) + "=" + std::to_string(e[i]) +
                             " differs from " + inner + "0=" + std::to_string(constant));
  if (e.front() != e.back())
    v.violations.push_back(std::string("ends: ") + outer + "1=" + std::to_string(e.front()) + " differs from last " +
                           outer + "=" + std::to_string(e.back()));
  return v;
}

// ---------------------------------------------------------------------------
// Genus 2

namespace {

bool abs_gt(const Slope& s, long long bound) {
  return s.is_infinite() || boost::multiprecision::abs(s.value()) > bound;
}

bool has_sign(const Slope& s, int sign) { return s.is_infinite() || s.sign() == sign; }

}  // namespace

Verdict2 validate_slopes(const SlopeSet2& s) {
  Verdict2 v;
  const bool one = s.kind == Type2Kind::I;
  const std::size_t want_alpha = one ? 1 : 2;
  if (s.r_alpha.size() != want_alpha) v.violations.push_back("arity: expected " + std::to_string(want_alpha) + " alpha slopes");
  if (s.r_beta.size() != 2) v.violations.push_back("arity: expected 2 beta slopes");
  if (!v.ok()) return v;
  for (const auto& a : s.r_alpha)
    if (a.is_infinite()) v.violations.push_back("alpha: alpha slopes must be finite");
  if (!v.ok()) return v;
  if (one) {
    if (!abs_gt(s.r_alpha[0], 2)) v.violations.push_back("alpha: |r_alpha1| must exceed 2");
    if (!has_sign(s.r_alpha[0], 1)) v.violations.push_back("sign: r_alpha1 must be positive");
    for (int i = 0; i < 2; ++i) {
      if (!abs_gt(s.r_beta[i], 1)) v.violations.push_back("beta: |r_beta" + std::to_string(i + 1) + "| must exceed 1");
      if (!has_sign(s.r_beta[i], 1)) v.violations.push_back("sign: r_beta" + std::to_string(i + 1) + " must be positive");
    }
  } else {
    const int signs[2] = {1, -1};
    for (int i = 0; i < 2; ++i) {
      const std::string k = std::to_string(i + 1);
      if (!abs_gt(s.r_alpha[i], 1)) v.violations.push_back("alpha: |r_alpha" + k + "| must exceed 1");
      if (!abs_gt(s.r_beta[i], 1)) v.violations.push_back("beta: |r_beta" + k + "| must exceed 1");
      if (!has_sign(s.r_alpha[i], signs[i])) v.violations.push_back("sign: r_alpha" + k + " has the wrong sign");
      if (!has_sign(s.r_beta[i], signs[i])) v.violations.push_back("sign: r_beta" + k + " has the wrong sign");
    }
  }
  return v;
}

FramedLink build_type2(const SlopeSet2& s) {
  const auto v = validate_slopes(s);
  if (!v.ok()) throw std::invalid_argument("invalid slopes: " + v.violations.front());
  FramedLink l;
  l.add_component("K1", s.r_beta[0]);
  l.add_component("C1", s.r_alpha[0]);
  if (s.kind == Type2Kind::II) l.add_component("C2", s.r_alpha[1]);
  l.add_component("K2", s.r_beta[1]);
  l.link("K1", "C1");
  if (s.kind == Type2Kind::I) {
    l.link("C1", "K2");
  } else {
    l.link("C1", "C2");
    l.link("C2", "K2");
  }
  return erase_infinity(l);
}

FramedLink alternate_type2(const SlopeSet2& s) {
  FramedLink l = build_type2(s);
  if (s.kind == Type2Kind::I) {
    if (l.has("K1")) l = blow_up_pair(l, "K1", "C1", "X1", -1);
    if (l.has("K2")) l = blow_up_pair(l, "C1", "K2", "X2", -1);
  } else {
    if (l.has("K1")) l = blow_up_pair(l, "K1", "C1", "X1", -1);
    if (l.has("K2")) l = blow_up_pair(l, "C2", "K2", "X2", 1);
  }
  return l;
}

}  // namespace strongl
