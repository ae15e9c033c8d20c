#include "strongl/cli.hpp"

#include "strongl/contfrac.hpp"
#include "strongl/io.hpp"
#include "strongl/linkdiag.hpp"
#include "strongl/signmat.hpp"
#include "strongl/surgery.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <functional>
#include <numeric>

namespace strongl::cli {

using nlohmann::json;

namespace {

struct Options {
  int threads = 0;
  std::string format = "text";
  int g = 0;
  bool maximal = false;
  bool nonsingular = false;
  bool all = false;
  int max_p = 60;
  int max_d = 12;
  std::string matrix, a, b;
  std::string r, rp;
  std::string tree, link, slopes;
  std::string diagram, in;
  std::size_t crossing = 0;
  std::string mode = "A";
};

bool as_json(const Options& o) { return o.format == "json"; }

// Row/column bipartite pieces of the nonzero pattern: more than one means
// the matrix splits as a direct sum (a connected sum of the manifolds).
int block_count(const SignMatrix& s) {
  const int g = s.dim();
  std::vector<int> parent(static_cast<std::size_t>(2 * g));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]);
  };
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      if (s(i, j) != Sign::Zero) parent[static_cast<std::size_t>(find(i))] = find(g + j);
  int blocks = 0;
  for (int x = 0; x < 2 * g; ++x) blocks += find(x) == x;
  return blocks;
}

SignMatrix effective_input(const std::string& text, const char* name) {
  const SignMatrix s = parse_sign_matrix(text);
  if (!is_effective(s)) throw InputError(std::string(name) + ": matrix is not effective");
  return s;
}

// ---------------------------------------------------------------------------

int signmat_enumerate(const Options& o, std::ostream& out) {
  if (o.g < 1 || o.g > kMaxEnumerationGenus)
    throw InputError("--g must lie in 1.." + std::to_string(kMaxEnumerationGenus));
  const auto classes = o.nonsingular ? enumerate_nonsingular_maximal_classes(o.g)
                       : o.maximal   ? enumerate_maximal_effective_classes(o.g)
                                     : enumerate_effective_classes(o.g);
  if (as_json(o)) {
    json j{{"g", o.g}, {"maximal", o.maximal || o.nonsingular}, {"nonsingular", o.nonsingular}, {"total", classes.size()}};
    j["classes"] = json::array();
    for (const auto& c : classes) j["classes"].push_back(format_inline(c));
    out << j.dump() << '\n';
  } else {
    for (const auto& c : classes) out << format_block(c) << '\n';
    out << "total: " << classes.size() << '\n';
  }
  return kOk;
}

int signmat_canon(const Options& o, std::ostream& out) {
  const SignMatrix s = parse_sign_matrix(o.matrix);
  const SignMatrix c = canonical_form(s);
  const bool eff = is_effective(s);
  const bool max = eff && is_maximal(s);
  if (as_json(o)) {
    out << json{{"canonical", format_inline(c)}, {"effective", eff}, {"maximal", max}, {"blocks", block_count(s)}}.dump()
        << '\n';
  } else {
    out << format_inline(c) << '\n'
        << "effective: " << (eff ? "true" : "false") << '\n'
        << "maximal: " << (max ? "true" : "false") << '\n'
        << "blocks: " << block_count(s) << '\n';
  }
  return kOk;
}

int signmat_strong_pair(const Options& o, std::ostream& out) {
  const IntMatrix a = parse_int_matrix(o.a);
  const IntMatrix b = o.b.empty() ? a.abs() : parse_int_matrix(o.b);
  if (a.dim() != b.dim()) throw InputError("--a and --b differ in size");
  const bool strong = is_strong_pair(a, b);
  const BigInt det = boost::multiprecision::abs(det_exact(a)), perm = perm_abs(b);
  if (as_json(o)) out << json{{"strong", strong}, {"abs_det", to_string(det)}, {"perm", to_string(perm)}}.dump() << '\n';
  else out << "strong: " << (strong ? "true" : "false") << "\n|det|: " << det << "\nperm: " << perm << '\n';
  return kOk;
}

int signmat_class_le(const Options& o, std::ostream& out) {
  const bool le = class_le(effective_input(o.a, "--a"), effective_input(o.b, "--b"));
  if (as_json(o)) out << json{{"le", le}}.dump() << '\n';
  else out << (le ? "true" : "false") << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------

PosRational pos_rational(const std::string& text, const char* name) {
  if (text.empty()) throw InputError(std::string(name) + " is required");
  const Rational v = parse_rational(text);
  if (v <= 0) throw InputError(std::string(name) + " must be positive");
  return PosRational::from(v);
}

int cf_cfe(const Options& o, std::ostream& out) {
  const PosRational r = pos_rational(o.r, "--r");
  if (r.value() <= 1) throw InputError("--r must exceed 1");
  const CFrac c = cfe(r);
  if (as_json(o)) {
    json ks = json::array();
    for (const auto& k : c.terms()) ks.push_back(to_string(k));
    out << json{{"r", to_string(r)}, {"terms", ks}}.dump() << '\n';
  } else {
    out << to_string(c) << '\n';
  }
  return kOk;
}

int cf_r_value(const Options& o, std::ostream& out) {
  const PosRational r = pos_rational(o.r, "--r");
  if (r.value() <= 1) throw InputError("--r must exceed 1");
  if (o.rp.empty()) throw InputError("--rp is required");
  const Rational rp = parse_rational(o.rp);
  Rational v;
  try {
    v = r_value(cfe(r), rp);
  } catch (const InadmissibleSlope& e) {
    throw InputError(std::string("inadmissible slope: ") + e.what());
  }
  if (as_json(o)) out << json{{"R", to_string(v)}}.dump() << '\n';
  else out << to_string(v) << '\n';
  return kOk;
}

int cf_claim(const Options& o, int orientation, std::ostream& out) {
  if (o.max_p < 3 || o.max_d < 1) throw InputError("--max-p must be >= 3 and --max-d >= 1");
  const ClaimReport rep = check_claim(orientation, o.max_p, o.max_d);
  if (as_json(o)) {
    json lines = json::array();
    for (const auto& c : rep.lines)
      if (o.all || c.verdict != Verdict::Ok) lines.push_back(format_line(c));
    out << json{{"orientation", orientation}, {"cases", rep.cases}, {"violations", rep.violations},
                {"skips", rep.skips}, {"lines", lines}}
               .dump()
        << '\n';
  } else {
    for (const auto& c : rep.lines)
      if (o.all || c.verdict != Verdict::Ok) out << format_line(c) << '\n';
    out << format_summary(rep) << '\n';
  }
  return rep.violations ? kViolation : kOk;
}

// ---------------------------------------------------------------------------

json load(const std::string& path, const char* flag) {
  if (path.empty()) throw InputError(std::string(flag) + " is required");
  return parse_json(read_file(path), path);
}

FramedLink link_input(const Options& o) {
  if (!o.tree.empty() && !o.link.empty()) throw InputError("give either --tree or --link");
  if (!o.tree.empty()) {
    const AWTree t = tree_from_json(load(o.tree, "--tree"));
    const auto v = validate_awtree(t);
    if (!v.ok()) throw InputError(o.tree + ": invalid tree: " + v.violations.front());
    return tree_to_framed_link(t);
  }
  return link_from_json(load(o.link, "--link"));
}

std::string h1_text(const std::optional<BigInt>& h) { return h ? to_string(*h) : "infinite"; }

int surgery_h1(const Options& o, std::ostream& out) {
  const auto h = h1_order(link_input(o));
  if (as_json(o)) out << json{{"h1", h1_text(h)}}.dump() << '\n';
  else out << h1_text(h) << '\n';
  return kOk;
}

int surgery_validate_tree(const Options& o, std::ostream& out) {
  const auto v = validate_awtree(tree_from_json(load(o.tree, "--tree")));
  if (as_json(o)) {
    out << json{{"ok", v.ok()}, {"violations", v.violations}}.dump() << '\n';
  } else {
    if (v.ok()) out << "ok\n";
    for (const auto& s : v.violations) out << s << '\n';
  }
  return v.ok() ? kOk : kViolation;
}

Rational rational_field(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("slopes: missing field \"") + key + "\"");
  const json& v = j[key];
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) throw InputError(std::string("slopes.") + key + ": expected \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("slopes.") + key + ": " + e.what());
  }
}

std::vector<Slope> slope_list(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) throw InputError(std::string("slopes: \"") + key + "\" must be an array");
  std::vector<Slope> out;
  for (const auto& v : j[key]) {
    if (v.is_number_integer()) out.emplace_back(v.get<long long>());
    else if (v.is_string()) out.push_back(parse_slope(v.get<std::string>()));
    else throw InputError(std::string("slopes.") + key + ": expected \"p/q\" or \"inf\"");
  }
  return out;
}

PosRational pos_field(const json& j, const char* key) {
  const Rational v = rational_field(j, key);
  if (v <= 0) throw InputError(std::string("slopes.") + key + ": must be positive");
  return PosRational::from(v);
}

SlopeSet3 slopes3(const json& j, const std::string& type) {
  SlopeSet3 s;
  s.kind = type == "3-I,III" ? Type3Kind::I_III : Type3Kind::II_IV;
  s.p1q1 = pos_field(j, "p1q1");
  s.p2q2 = pos_field(j, "p2q2");
  s.p3q3 = pos_field(j, "p3q3");
  s.p2q2_prime = pos_field(j, "p2q2_prime");
  s.r_beta.clear();
  for (const auto& v : slope_list(j, "r_beta")) {
    if (v.is_infinite()) throw InputError("slopes.r_beta: infinity not allowed for genus 3");
    s.r_beta.push_back(v.value());
  }
  return s;
}

std::string slopes_type(const json& j) {
  if (!j.contains("type") || !j["type"].is_string()) throw InputError("slopes: missing \"type\"");
  const auto t = j["type"].get<std::string>();
  if (t != "2-I" && t != "2-II" && t != "3-I,III" && t != "3-II,IV")
    throw InputError("slopes.type: expected 2-I, 2-II, 3-I,III or 3-II,IV");
  return t;
}

void print_link(const FramedLink& l, const Options& o, std::ostream& out, json extra = json::object()) {
  if (as_json(o)) {
    json j = to_json(l);
    for (auto& [k, v] : extra.items()) j[k] = v;
    out << j.dump() << '\n';
    return;
  }
  for (const auto& c : l.components()) out << "component " << c.id << ' ' << to_string(c.framing) << '\n';
  for (const auto& e : l.links()) out << "link " << e.a << ' ' << e.b << ' ' << e.lk << '\n';
  for (auto& [k, v] : extra.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

int surgery_build(const Options& o, std::ostream& out) {
  const json j = load(o.slopes, "--slopes");
  const std::string type = slopes_type(j);
  FramedLink l;
  json extra = json::object();
  if (type[0] == '2') {
    SlopeSet2 s{type == "2-I" ? Type2Kind::I : Type2Kind::II, slope_list(j, "r_alpha"), slope_list(j, "r_beta")};
    const auto v = validate_slopes(s);
    if (!v.ok()) throw InputError("slopes: " + v.violations.front());
    l = build_type2(s);
    extra["alternating_form"] = to_json(alternate_type2(s));
    if (!as_json(o)) extra = json::object();
    extra["h1"] = h1_text(h1_order(l));
  } else {
    const SlopeSet3 s = slopes3(j, type);
    const auto v = validate_slopes(s);
    if (!v.ok()) throw InputError("slopes: " + v.violations.front());
    const L3Link l3 = build_L3(s);
    // Symbolic companion: report its slopes, then the closed-form reduction.
    extra["chain_slope"] = to_string(l3.chain_slope);
    extra["partner_slope"] = to_string(l3.partner_slope);
    extra["companion"] = to_string(s.p2q2) + " " + to_string(l3.expansion);
    try {
      l = l3_closed_form_link(l3);
      extra["h1"] = h1_text(h1_order(l));
    } catch (const InadmissibleSlope& e) {
      throw InputError(std::string("inadmissible slope: ") + e.what());
    }
  }
  print_link(l, o, out, extra);
  return kOk;
}

int surgery_reduce_grid(const Options& o, std::ostream& out) {
  if (o.max_p < 2 || o.max_d < 1) throw InputError("--max-p must be >= 2 and --max-d >= 1");
  const auto rep = verify_kirby_grid(kirby_grid(o.max_p, o.max_d));
  const std::size_t bad = rep.endpoint_violations + rep.h1_violations + rep.alternation_violations;
  if (as_json(o)) {
    out << json{{"cases", rep.cases},
                {"endpoint_violations", rep.endpoint_violations},
                {"h1_violations", rep.h1_violations},
                {"alternation_violations", rep.alternation_violations},
                {"inadmissible", rep.inadmissible},
                {"failures", rep.failures}}
               .dump()
        << '\n';
  } else {
    for (const auto& f : rep.failures) out << f << '\n';
    out << "cases: " << rep.cases << " endpoint_violations: " << rep.endpoint_violations
        << " h1_violations: " << rep.h1_violations << " alternation_violations: " << rep.alternation_violations
        << " inadmissible: " << rep.inadmissible << '\n';
  }
  return bad ? kViolation : kOk;
}

int surgery_reduce(const Options& o, std::ostream& out) {
  if (o.slopes.empty()) return surgery_reduce_grid(o, out);
  const json j = load(o.slopes, "--slopes");
  const std::string type = slopes_type(j);
  if (type[0] != '3') throw InputError("surgery reduce needs genus-3 slopes (3-I,III or 3-II,IV)");
  const SlopeSet3 s = slopes3(j, type);
  const auto v = validate_slopes(s);
  if (!v.ok()) throw InputError("slopes: " + v.violations.front());
  const L3Link l3 = build_L3(s);
  KirbyResult r;
  std::pair<Rational, Rational> ends;
  try {
    r = kirby_reduce(l3);
    ends = kirby_endpoints(l3);
  } catch (const InadmissibleSlope& e) {
    throw InputError(std::string("inadmissible slope: ") + e.what());
  }
  const bool endpoints_ok = r.chain_final == ends.first && r.partner_final == ends.second;
  const bool h1_ok = h1_order(r.link) == h1_order(l3);
  const bool alt = is_alternating_weighted(r.link);
  json steps = json::array();
  for (const auto& st : r.steps)
    steps.push_back({{"index", st.index}, {"k", to_string(st.k)}, {"remainder", to_string(st.remainder)},
                     {"chain", to_string(st.chain_slope)}, {"partner", to_string(st.partner_slope)},
                     {"emitted", st.emitted}});
  if (as_json(o)) {
    out << json{{"steps", steps},
                {"chain_final", to_string(r.chain_final)},
                {"partner_final", to_string(r.partner_final)},
                {"endpoints_ok", endpoints_ok},
                {"h1", h1_text(h1_order(r.link))},
                {"h1_ok", h1_ok},
                {"alternating", alt},
                {"link", to_json(r.link)}}
               .dump()
        << '\n';
  } else {
    for (const auto& st : r.steps)
      out << "step " << st.index << " k=" << st.k << " chain=" << to_string(st.chain_slope)
          << " partner=" << to_string(st.partner_slope) << " emitted=" << st.emitted << '\n';
    out << "chain_final: " << to_string(r.chain_final) << " (closed form " << to_string(ends.first) << ")\n"
        << "partner_final: " << to_string(r.partner_final) << " (closed form " << to_string(ends.second) << ")\n"
        << "h1: " << h1_text(h1_order(r.link)) << (h1_ok ? "" : " (changed)") << '\n'
        << "alternating: " << (alt ? "true" : "false") << '\n';
  }
  return endpoints_ok && h1_ok && alt ? kOk : kViolation;
}

// ---------------------------------------------------------------------------

Diagram diagram_input(const std::string& path, const char* flag) {
  if (path.empty()) throw InputError(std::string(flag) + " is required");
  return parse_diagram(read_file(path), path);
}

std::string to_pd(const Diagram& d) {
  std::string out;
  for (const auto& x : d.crossings) {
    out += "X[" + std::to_string(x.arcs[0]);
    for (std::size_t i = 1; i < 4; ++i) out += "," + std::to_string(x.arcs[i]);
    out += "]\n";
  }
  if (d.free_loops) out += "loops " + std::to_string(d.free_loops) + "\n";
  return out;
}

void print_diagram(const Diagram& d, const Options& o, std::ostream& out) {
  if (as_json(o)) out << to_json(d).dump() << '\n';
  else out << to_pd(d);
}

void require_valid(const Diagram& d, const std::string& name) {
  const auto v = validate_diagram(d);
  if (!v.ok()) throw InputError(name + ": invalid diagram: " + v.violations.front());
}

void print_bool(bool v, const char* key, const Options& o, std::ostream& out) {
  if (as_json(o)) out << json{{key, v}}.dump() << '\n';
  else out << (v ? "true" : "false") << '\n';
}

int diagram_validate(const Options& o, std::ostream& out) {
  const Diagram d = diagram_input(o.diagram, "--diagram");
  const auto v = validate_diagram(d);
  if (as_json(o)) {
    out << json{{"ok", v.ok()}, {"crossings", d.crossing_count()}, {"alternating", d.alternating},
                {"pieces", v.ok() ? piece_count(d) : 0}, {"violations", v.violations}}
               .dump()
        << '\n';
  } else {
    if (v.ok()) out << "ok crossings=" << d.crossing_count() << " pieces=" << piece_count(d)
                    << (d.alternating ? " alternating" : "") << '\n';
    for (const auto& s : v.violations) out << s << '\n';
  }
  return v.ok() ? kOk : kViolation;
}

int diagram_smooth(const Options& o, std::ostream& out) {
  const Diagram d = diagram_input(o.diagram, "--diagram");
  require_valid(d, o.diagram);
  if (o.mode != "A" && o.mode != "B") throw InputError("--mode must be A or B");
  if (o.crossing >= d.crossing_count()) throw InputError("--crossing out of range");
  print_diagram(smooth(d, {o.crossing, o.mode == "A" ? SmoothMode::A : SmoothMode::B}), o, out);
  return kOk;
}

int diagram_contains_cmd(const Options& o, std::ostream& out) {
  const Diagram d1 = diagram_input(o.diagram, "--diagram");
  const Diagram d2 = diagram_input(o.in, "--in");
  require_valid(d1, o.diagram);
  require_valid(d2, o.in);
  try {
    print_bool(diagram_contains(d1, d2), "contains", o, out);
  } catch (const BudgetExceeded& e) {
    throw InputError(e.what());
  }
  return kOk;
}

int diagram_brm_free(const Options& o, std::ostream& out) {
  const Diagram d = diagram_input(o.diagram, "--diagram");
  require_valid(d, o.diagram);
  try {
    print_bool(brm_free(d), "brm_free", o, out);
  } catch (const BudgetExceeded& e) {
    throw InputError(e.what());
  }
  return kOk;
}

int diagram_goeritz(const Options& o, std::ostream& out) {
  const Diagram d = diagram_input(o.diagram, "--diagram");
  require_valid(d, o.diagram);
  if (piece_count(d) != 1) throw InputError(o.diagram + ": Goeritz matrix needs a connected projection");
  const BigInt h = goeritz_h1(d);
  if (as_json(o)) {
    const auto g = goeritz(d, 0);
    json rows = json::array();
    for (int i = 0; i < g.reduced.dim(); ++i) {
      json row = json::array();
      for (int k = 0; k < g.reduced.dim(); ++k) row.push_back(to_string(g.reduced(i, k)));
      rows.push_back(row);
    }
    out << json{{"h1", to_string(h)}, {"reduced", rows}}.dump() << '\n';
  } else {
    out << h << '\n';
  }
  return kOk;
}

int diagram_from_chain(const Options& o, std::ostream& out) {
  const AWTree t = tree_from_json(load(o.tree, "--tree"));
  Diagram d;
  try {
    d = chain_tree_to_diagram(t);
  } catch (const std::invalid_argument& e) {
    throw InputError(o.tree + ": " + e.what());
  }
  print_diagram(d, o, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::function<int(std::ostream&)> action;
  CLI::App app{"Exact kernels for strong Heegaard diagrams, surgery links and alternating diagrams", "strongl"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", o.threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto leaf = [&](CLI::App* group, const char* name, const char* help, auto fn) {
    CLI::App* c = group->add_subcommand(name, help);
    c->callback([&action, &o, fn] { action = [&o, fn](std::ostream& os) { return fn(o, os); }; });
    return c;
  };

  CLI::App* sm = app.add_subcommand("signmat", "Sign matrices")->require_subcommand(1);
  auto* en = leaf(sm, "enumerate", "Effective classes E_g (or ME_g with --maximal)", signmat_enumerate);
  en->add_option("--g", o.g, "Genus")->required();
  en->add_flag("--maximal", o.maximal, "Only maximal classes");
  en->add_flag("--nonsingular", o.nonsingular, "Maximal classes with a nonzero permutation term");
  leaf(sm, "canon", "Canonical form of a sign or integer matrix", signmat_canon)
      ->add_option("--matrix", o.matrix, "Rows separated by ';'")->required();
  auto* sp = leaf(sm, "strong-pair", "|det A| = perm B test", signmat_strong_pair);
  sp->add_option("--a", o.a, "Algebraic intersection matrix")->required();
  sp->add_option("--b", o.b, "Geometric count matrix (default |A|)");
  auto* le = leaf(sm, "class-le", "[A] <= [B] in the class order", signmat_class_le);
  le->add_option("--a", o.a)->required();
  le->add_option("--b", o.b)->required();

  CLI::App* cf = app.add_subcommand("cf", "Continued fractions")->require_subcommand(1);
  leaf(cf, "cfe", "Expansion [k1..kn] of r > 1", cf_cfe)->add_option("--r", o.r, "p/q")->required();
  auto* rv = leaf(cf, "r-value", "R(p,q,p',q')", cf_r_value);
  rv->add_option("--r", o.r, "p/q")->required();
  rv->add_option("--rp", o.rp, "p'/q'")->required();
  for (int orient : {1, -1}) {
    auto* c = leaf(cf, orient == 1 ? "check-claim3" : "check-claim4", "Parity sweep of R",
                   [orient](const Options& opt, std::ostream& os) { return cf_claim(opt, orient, os); });
    c->add_option("--max-p", o.max_p, "Largest numerator");
    c->add_option("--max-d", o.max_d, "Largest d1, d2");
    c->add_flag("--all", o.all, "Print every case, not only failures");
  }

  CLI::App* su = app.add_subcommand("surgery", "Framed links and surgery")->require_subcommand(1);
  auto* h1 = leaf(su, "h1", "|H_1| of the surgered manifold", surgery_h1);
  h1->add_option("--tree", o.tree, "Tree JSON");
  h1->add_option("--link", o.link, "Framed link JSON");
  leaf(su, "validate-tree", "Check an alternatingly weighted tree", surgery_validate_tree)
      ->add_option("--tree", o.tree, "Tree JSON")->required();
  leaf(su, "build", "Build the type-2 or L3 link from a slope set", surgery_build)
      ->add_option("--slopes", o.slopes, "Slope set JSON")->required();
  auto* rd = leaf(su, "reduce", "Kirby reduction of one L3 slope set, or the whole grid", surgery_reduce);
  rd->add_option("--slopes", o.slopes, "Slope set JSON (omit for the grid)");
  rd->add_option("--max-p", o.max_p, "Grid: largest p2");
  rd->add_option("--max-d", o.max_d, "Grid: largest d1, d2");

  CLI::App* di = app.add_subcommand("diagram", "Link diagrams")->require_subcommand(1);
  leaf(di, "validate", "Arc pairing, planarity, alternation", diagram_validate)
      ->add_option("--diagram", o.diagram, "Diagram JSON or PD")->required();
  auto* smo = leaf(di, "smooth", "Smooth one crossing", diagram_smooth);
  smo->add_option("--diagram", o.diagram)->required();
  smo->add_option("--crossing", o.crossing, "Crossing index")->required();
  smo->add_option("--mode", o.mode, "A or B");
  auto* ct = leaf(di, "contains", "Does --in contain --diagram after smoothing?", diagram_contains_cmd);
  ct->add_option("--diagram", o.diagram, "The smaller diagram")->required();
  ct->add_option("--in", o.in, "The larger diagram")->required();
  leaf(di, "brm-free", "Borromean-freeness", diagram_brm_free)->add_option("--diagram", o.diagram)->required();
  leaf(di, "goeritz", "|H_1| of the branched double cover", diagram_goeritz)
      ->add_option("--diagram", o.diagram)->required();
  leaf(di, "from-chain", "Diagram of an integer-weight chain tree", diagram_from_chain)
      ->add_option("--tree", o.tree, "Tree JSON")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    // Subcommand help is reported through the same path.
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (o.threads > 0) omp_set_num_threads(o.threads);
  try {
    return action(out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace strongl::cli
