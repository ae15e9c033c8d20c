#include "doctest.h"
#include "strongl/surgery.hpp"

#include <random>

using namespace strongl;

namespace {

Rational Q(long long p, long long q = 1) { return Rational(p, q); }

FramedLink chain(const std::vector<Slope>& framings) {
  FramedLink l;
  for (std::size_t i = 0; i < framings.size(); ++i) {
    l.add_component("v" + std::to_string(i), framings[i]);
    if (i) l.link("v" + std::to_string(i - 1), "v" + std::to_string(i));
  }
  return l;
}

bool has_clause(const Verdict2& v, const std::string& clause) {
  for (const auto& s : v.violations)
    if (s.rfind(clause + ":", 0) == 0) return true;
  return false;
}

// Random tree with alternating signs and rational weights.
AWTree random_tree(std::mt19937& rng, int n, bool allow_zero) {
  std::uniform_int_distribution<int> num(allow_zero ? 0 : 1, 7), den(1, 3);
  AWTree t;
  std::vector<int> sign(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int s = 1;
    if (i) {
      const int parent = std::uniform_int_distribution<int>(0, i - 1)(rng);
      s = -sign[static_cast<std::size_t>(parent)];
      t.edges.emplace_back("t" + std::to_string(parent), "t" + std::to_string(i));
    }
    sign[static_cast<std::size_t>(i)] = s;
    t.vertices.push_back({"t" + std::to_string(i), s, Slope(Q(num(rng), den(rng)))});
  }
  return t;
}

}  // namespace

TEST_CASE("slopes") {
  CHECK(to_string(parse_slope("-7/5")) == "-7/5");
  CHECK(parse_slope("inf").is_infinite());
  CHECK_THROWS_AS(Slope::infinity().value(), std::logic_error);
  CHECK(Slope::infinity().sign() == 0);
  CHECK(Slope(Q(-3, 2)).sign() == -1);
}

TEST_CASE("tree validation") {
  AWTree single{{{"a", 1, Slope(Q(5, 2))}}, {}};
  CHECK(validate_awtree(single).ok());
  AWTree same{{{"a", 1, Slope(2)}, {"b", 1, Slope(2)}}, {{"a", "b"}}};
  CHECK(has_clause(validate_awtree(same), "alternating"));
  AWTree tri{{{"a", 1, Slope(1)}, {"b", -1, Slope(1)}, {"c", 1, Slope(1)}}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}};
  const auto tv = validate_awtree(tri);
  CHECK(has_clause(tv, "forest"));
  CHECK(has_clause(tv, "alternating"));
  AWTree bad{{{"a", 2, Slope(-1)}, {"a", 1, Slope(1)}}, {{"a", "z"}}};
  const auto bv = validate_awtree(bad);
  CHECK(has_clause(bv, "sign"));
  CHECK(has_clause(bv, "weight"));
  CHECK(has_clause(bv, "ids"));
  CHECK(has_clause(bv, "edges"));
}

TEST_CASE("tree to framed link") {
  AWTree lens{{{"a", 1, Slope(7)}}, {}};
  const auto l = tree_to_framed_link(lens);
  CHECK(l.size() == 1);
  CHECK(l.framing("a") == Slope(7));
  CHECK(h1_order(l) == BigInt(7));

  AWTree path{{{"a", 1, Slope(2)}, {"b", -1, Slope(2)}}, {{"a", "b"}}};
  const auto lp = tree_to_framed_link(path);
  CHECK(lp.framing("b") == Slope(-2));
  CHECK(lp.linking("a", "b") == 1);

  AWTree inf{{{"a", 1, Slope::infinity()}}, {}};
  CHECK(tree_to_framed_link(inf).framing("a").is_infinite());
  CHECK_THROWS_AS(tree_to_framed_link(AWTree{{{"a", 1, Slope(2)}, {"b", 1, Slope(2)}}, {{"a", "b"}}}),
                  std::invalid_argument);
}

TEST_CASE("infinity erasure") {
  FramedLink solo;
  solo.add_component("x", Slope::infinity());
  CHECK(erase_infinity(solo).empty());
  CHECK(h1_order(solo) == BigInt(1));
  const auto two = chain({Slope(2), Slope::infinity()});
  const auto e = erase_infinity(two);
  CHECK(e.size() == 1);
  CHECK(e.links().empty());
  CHECK(erase_infinity(e) == e);
  const auto fin = chain({Slope(2), Slope(3)});
  CHECK(erase_infinity(fin) == fin);
}

TEST_CASE("presentation matrix and first homology") {
  CHECK(presentation_matrix(chain({Slope(5)})) == parse_int_matrix("5"));
  CHECK(presentation_matrix(chain({Slope(2), Slope(-2)})) == parse_int_matrix("2 1; 1 -2"));
  CHECK(presentation_matrix(chain({Slope(Q(3, 2))})) == parse_int_matrix("3"));
  CHECK(presentation_matrix(chain({Slope(Q(3, 2)), Slope(1)})) == parse_int_matrix("3 2; 1 1"));
  CHECK(h1_order(chain({Slope(2), Slope(-2)})) == BigInt(5));
  CHECK(h1_order(chain({Slope(1), Slope(-1)})) == BigInt(2));
  CHECK_FALSE(h1_order(chain({Slope(0)})).has_value());
  CHECK_THROWS_AS(presentation_matrix(chain({Slope::infinity()})), std::invalid_argument);
  FramedLink l;
  l.add_component("a", Slope(1));
  CHECK_THROWS(l.add_component("a", Slope(2)));
  CHECK_THROWS(l.link("a", "a"));
  CHECK_THROWS(l.link("a", "zz"));
}

TEST_CASE("first homology by leaf pruning agrees with the determinant") {
  std::mt19937 rng(41);
  for (int rep = 0; rep < 400; ++rep) {
    const int n = std::uniform_int_distribution<int>(1, 7)(rng);
    const auto l = tree_to_framed_link(random_tree(rng, n, true));
    CHECK(h1_order(l) == h1_order_by_pruning(l));
  }
  // Lens space L(p, q) as the chain of its negative continued fraction.
  CHECK(h1_order_by_pruning(chain({Slope(-2), Slope(-2), Slope(-2)})) == BigInt(4));
  CHECK(h1_order_by_pruning(chain({Slope(0), Slope(3)})) == BigInt(1));
}

TEST_CASE("blow-ups") {
  const auto l = chain({Slope(2), Slope(3)});
  const auto b = blow_up_pair(l, "v0", "v1", "x");
  CHECK(b.framing("v0") == Slope(1));
  CHECK(b.framing("x") == Slope(-1));
  CHECK(b.framing("v1") == Slope(2));
  CHECK(b.linking("v0", "v1") == 0);
  CHECK(presentation_matrix(b) == parse_int_matrix("1 0 1; 0 2 1; 1 1 -1"));
  CHECK(h1_order(l) == BigInt(5));
  CHECK(h1_order(b) == BigInt(5));
  CHECK(is_alternating_weighted(b));

  const auto z = blow_up_pair(chain({Slope(1), Slope(1)}), "v0", "v1", "x");
  CHECK(z.framing("v0") == Slope(0));
  CHECK_FALSE(h1_order(z).has_value());

  const auto m = blow_up_pair(chain({Slope(-3), Slope(Q(-5, 2))}), "v0", "v1", "y", 1);
  CHECK(m.framing("v1") == Slope(Q(-3, 2)));
  CHECK(h1_order(m) == h1_order(chain({Slope(-3), Slope(Q(-5, 2))})));
  CHECK(is_alternating_weighted(m));

  CHECK_THROWS(blow_up_pair(l, "v0", "nope", "x"));
  CHECK_THROWS(blow_up_pair(chain({Slope(1), Slope(1), Slope(1)}), "v0", "v2", "x"));

  std::mt19937 rng(43);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const auto t = tree_to_framed_link(random_tree(rng, n, true));
    const auto& e = t.links()[std::uniform_int_distribution<std::size_t>(0, t.links().size() - 1)(rng)];
    for (int ins : {1, -1}) CHECK(h1_order(blow_up_pair(t, e.a, e.b, "new", ins)) == h1_order(t));
  }
}

TEST_CASE("alternation") {
  CHECK_FALSE(is_alternating_weighted(chain({Slope(1), Slope(1)})));
  CHECK(is_alternating_weighted(FramedLink{}));
  CHECK(is_alternating_weighted(chain({Slope(1), Slope(-1), Slope(Q(1, 3))})));
  CHECK(is_alternating_weighted(chain({Slope(1), Slope(0), Slope(-1)})) == false);
  CHECK(is_alternating_weighted(chain({Slope(1), Slope(0), Slope(1)})));
  CHECK(is_alternating_weighted(chain({Slope(1), Slope::infinity(), Slope(1)})));
  FramedLink cyc = chain({Slope(1), Slope(-1), Slope(1), Slope(-1)});
  cyc.link("v0", "v3");
  CHECK_FALSE(is_alternating_weighted(cyc));
  FramedLink two = chain({Slope(1), Slope(-1)});
  two.unlink("v0", "v1");
  two.link("v0", "v1", 2);
  CHECK_FALSE(is_alternating_weighted(two));

  std::mt19937 rng(47);
  for (int rep = 0; rep < 100; ++rep)
    CHECK(is_alternating_weighted(tree_to_framed_link(random_tree(rng, 6, false))));
}

TEST_CASE("gamma sequences") {
  CHECK(has_clause(validate_gamma_sequence({GammaForm::NLeading, {1, 1, 1, 2, 1}, 1, 1}), "constant"));
  CHECK(validate_gamma_sequence({GammaForm::NLeading, {2, 3, 1, 3, 2}, 1, 3}).ok());
  CHECK(validate_gamma_sequence({GammaForm::NLeading, {4}, 1, 1}).ok());
  CHECK(has_clause(validate_gamma_sequence({GammaForm::NLeading, {2, 3, 1, 3, 1}, 1, 3}), "ends"));
  CHECK(has_clause(validate_gamma_sequence({GammaForm::NLeading, {2, 3}, 1, 3}), "length"));
  CHECK(validate_gamma_sequence({GammaForm::MLeading, {5, 2, 1, 2, 5}, 2, 9}).ok());
  CHECK(has_clause(validate_gamma_sequence({GammaForm::MLeading, {5, 2, 1, 3, 5}, 2, 9}), "constant"));
  CHECK(has_clause(validate_gamma_sequence({GammaForm::NLeading, {0}, 1, 1}), "positive"));
}

TEST_CASE("genus two builders") {
  SlopeSet2 s{Type2Kind::I, {Slope(3)}, {Slope(2), Slope(2)}};
  const auto l = build_type2(s);
  CHECK(l.size() == 3);
  CHECK(presentation_matrix(l) == parse_int_matrix("2 1 0; 1 3 1; 0 1 2"));
  CHECK(h1_order(l) == BigInt(8));
  const auto a = alternate_type2(s);
  CHECK(is_alternating_weighted(a));
  CHECK(h1_order(a) == BigInt(8));
  CHECK(a.size() == 5);

  SlopeSet2 inf{Type2Kind::I, {Slope(Q(7, 2))}, {Slope::infinity(), Slope::infinity()}};
  const auto c = build_type2(inf);
  CHECK(c.size() == 1);
  CHECK(c.components()[0].id == "C1");

  CHECK_THROWS_AS(build_type2({Type2Kind::I, {Slope(2)}, {Slope(2), Slope(2)}}), std::invalid_argument);
  CHECK_THROWS_AS(build_type2({Type2Kind::I, {Slope(3)}, {Slope(1), Slope(2)}}), std::invalid_argument);

  SlopeSet2 two{Type2Kind::II, {Slope(Q(5, 3)), Slope(Q(-7, 4))}, {Slope(Q(3, 2)), Slope(-4)}};
  const auto l2 = build_type2(two);
  CHECK(l2.size() == 4);
  const auto a2 = alternate_type2(two);
  CHECK(is_alternating_weighted(a2));
  CHECK(h1_order(a2) == h1_order(l2));
  CHECK_THROWS(build_type2({Type2Kind::II, {Slope(2), Slope(2)}, {Slope(2), Slope(-2)}}));

  // Every admissible slope choice on a small grid alternates after the blow-ups.
  const Rational vals[] = {Q(3, 2), Q(2), Q(5, 2), Q(7, 3), Q(4)};
  for (const auto& x : vals)
    for (const auto& y : vals)
      for (const auto& z : vals) {
        SlopeSet2 s1{Type2Kind::I, {Slope(x + 1)}, {Slope(y), Slope(z)}};
        CHECK(is_alternating_weighted(alternate_type2(s1)));
        CHECK(h1_order(alternate_type2(s1)) == h1_order(build_type2(s1)));
        SlopeSet2 s2{Type2Kind::II, {Slope(x), Slope(-y)}, {Slope(z), Slope(-x)}};
        CHECK(is_alternating_weighted(alternate_type2(s2)));
        CHECK(h1_order(alternate_type2(s2)) == h1_order(build_type2(s2)));
      }
}

TEST_CASE("genus three link and Kirby reduction") {
  SlopeSet3 s;
  s.kind = Type3Kind::I_III;
  s.p1q1 = PosRational(3, 1);
  s.p2q2 = PosRational(7, 5);
  s.p2q2_prime = PosRational(10, 7);
  s.r_beta = {2, -2, -2};
  const L3Link l = build_L3(s);
  CHECK(l.chain_slope == 14);
  CHECK(l.expansion.length() == 3);
  const auto r = kirby_reduce(l);
  CHECK(r.chain_final == 3);
  CHECK(r.partner_final == r_value(cfe(PosRational(7, 5)), Q(10, 7)));
  CHECK(r.partner_final == 1);
  REQUIRE(r.steps.size() == 3);
  CHECK(r.steps[0].remainder == 5);
  CHECK(r.steps[1].remainder == 2);
  CHECK(r.steps[2].remainder == 1);
  CHECK(r.steps[0].partner_slope == Q(3, 7));
  CHECK(is_alternating_weighted(r.link));
  CHECK(h1_order(r.link) == h1_order(l));
  CHECK(r.link.size() == 2 + 5 + 4);

  SlopeSet3 t = s;
  t.kind = Type3Kind::II_IV;
  t.p2q2_prime = PosRational(11, 8);
  t.r_beta = {-2, -2, -2};
  const auto r2 = kirby_reduce(build_L3(t));
  CHECK(r2.chain_final == -3);
  CHECK(r2.partner_final == Q(-1, 2));
  CHECK(is_alternating_weighted(r2.link));

  SlopeSet3 bad = s;
  bad.r_beta = {2, -1, -2};
  CHECK_THROWS_AS(build_L3(bad), std::invalid_argument);
  bad = t;
  bad.r_beta = {2, -2, -2};
  CHECK_THROWS_AS(build_L3(bad), std::invalid_argument);

  // p2'/q2' equal to k1 makes the first partner slope vanish.
  SlopeSet3 zero = s;
  zero.p2q2 = PosRational(5, 2);
  zero.p2q2_prime = PosRational(2, 1);
  CHECK_THROWS_AS(kirby_reduce(build_L3(zero)), InadmissibleSlope);
}

TEST_CASE("Kirby grid") {
  const auto grid = kirby_grid(12, 4);
  CHECK(grid.size() > 100);
  const auto par = verify_kirby_grid(grid);
  const auto ser = verify_kirby_grid_reference(grid);
  CHECK(par.endpoint_violations == 0);
  CHECK(par.h1_violations == 0);
  CHECK(par.alternation_violations == 0);
  CHECK(par.inadmissible == 0);
  CHECK(par.failures == ser.failures);
  CHECK(par.cases == ser.cases);
}
