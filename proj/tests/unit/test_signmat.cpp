#include "doctest.h"
#include "oracles.hpp"
#include "strongl/signmat.hpp"

#include <random>
#include <set>

using namespace strongl;

namespace {

SignMatrix S(const std::string& t) { return parse_sign_matrix(t); }
IntMatrix M(const std::string& t) { return parse_int_matrix(t); }

const char* kA2 = "+ +; - +";
const char* kA3 = "+ + +; - + +; 0 - +";
const char* kA3p = "+ 0 +; - + 0; 0 - +";

}  // namespace

TEST_CASE("determinant") {
  CHECK(det_exact(M("1 1; -1 1")) == 2);
  CHECK(det_exact(IntMatrix::identity(3)) == 1);
  CHECK(det_exact(M("1 1; 1 1")) == 0);
  CHECK(det_exact(IntMatrix(0)) == 1);
  CHECK(det_exact(M("0 1; 1 0")) == -1);
  CHECK(det_exact(M("0 0 2; 0 3 0; 5 0 0")) == -30);
}

TEST_CASE("determinant and permanent against Leibniz expansion") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int g = 1; g <= 6; ++g) {
    for (int rep = 0; rep < 60; ++rep) {
      std::vector<std::int64_t> m;
      for (int i = 0; i < g * g; ++i) m.push_back(d(rng));
      const auto ref = oracle::leibniz(m, g);
      const IntMatrix im = oracle::to_int_matrix(m, g);
      CHECK(det_exact(im) == ref.det);
      CHECK(perm_abs(im) == ref.perm);
      CHECK(perm_abs_expansion(im) == perm_abs_ryser(im));
    }
  }
}

TEST_CASE("permanent") {
  CHECK(perm_abs(M("1 1; -1 1")) == 2);
  CHECK(perm_abs(IntMatrix::identity(4)) == 1);
  CHECK(perm_abs(M("1 1 1; 1 1 1; 0 1 1")) == 4);
  CHECK(perm_abs_ryser(M("1 1 1; 1 1 1; 1 1 1")) == 6);
}

TEST_CASE("effectiveness") {
  CHECK(is_effective(S(kA2)));
  CHECK_FALSE(is_effective(S("+ +; + +")));
  CHECK(is_effective(SignMatrix(3)));
  CHECK(is_effective(S(kA3)));
  CHECK(is_effective(S(kA3p)));
}

TEST_CASE("strong pairs") {
  CHECK(is_strong_pair(M("2"), M("2")));
  CHECK(is_strong_pair(M("1 1; -1 1"), M("1 1; 1 1")));
  CHECK_FALSE(is_strong_pair(M("1 1; -1 1"), M("2 1; 1 1")));
  CHECK_THROWS_AS(is_strong_pair(M("3"), M("2")), std::invalid_argument);
  CHECK_THROWS_AS(is_strong_pair(M("1"), M("1 0; 0 1")), std::invalid_argument);
  CHECK(is_strong_pair_by_pattern(M("1 1; -1 1"), M("1 1; 1 1")));
  CHECK_FALSE(is_strong_pair_by_pattern(M("1 1; -1 1"), M("2 1; 1 1")));
  // B has support off every contributing permutation: both routes agree.
  CHECK(is_strong_pair(M("1 0; 0 1"), M("1 1; 0 1")));
  CHECK(is_strong_pair_by_pattern(M("1 0; 0 1"), M("1 1; 0 1")));
}

TEST_CASE("strong pair routes agree on random intersection data") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-2, 2), extra(0, 1);
  for (int g = 1; g <= 4; ++g) {
    for (int rep = 0; rep < 400; ++rep) {
      std::vector<BigInt> a, b;
      for (int i = 0; i < g * g; ++i) {
        const int v = d(rng);
        a.emplace_back(v);
        b.emplace_back(std::abs(v) + extra(rng) * extra(rng));
      }
      const IntMatrix A(g, a), B(g, b);
      CHECK(is_strong_pair(A, B) == is_strong_pair_by_pattern(A, B));
    }
  }
}

TEST_CASE("triangle bound") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int g = 1; g <= 4; ++g)
    for (int rep = 0; rep < 200; ++rep) {
      std::vector<std::int64_t> m;
      for (int i = 0; i < g * g; ++i) m.push_back(d(rng));
      const IntMatrix im = oracle::to_int_matrix(m, g);
      CHECK(boost::multiprecision::abs(det_exact(im)) <= perm_abs(im.abs()));
    }
}

TEST_CASE("maximality") {
  CHECK(is_maximal(S(kA3)));
  CHECK(is_maximal(S(kA2)));
  CHECK_FALSE(is_maximal(SignMatrix::diagonal(2)));
  CHECK_FALSE(is_maximal(S(kA3p)));
  CHECK_THROWS_AS(is_maximal(S("+ +; + +")), std::invalid_argument);
}

TEST_CASE("canonical form") {
  CHECK(canonical_form(S(kA2)) == canonical_form(S("+ -; + +")));
  CHECK(canonical_form(SignMatrix::diagonal(2)) == canonical_form(SignMatrix::diagonal(2, Sign::Minus)));
  CHECK(canonical_form(S("+")) == S("-"));
  CHECK(canonical_form(S("0")) == S("0"));
}

TEST_CASE("canonical form matches full orbit minimum") {
  std::mt19937 rng(5);
  for (int g = 1; g <= 3; ++g)
    for (int rep = 0; rep < 150; ++rep) {
      const SignMatrix s = oracle::random_sign_matrix(g, rng);
      const SignMatrix c = canonical_form(s);
      CHECK(c == canonical_form_bruteforce(s));
      CHECK(canonical_form(c) == c);
    }
  for (int rep = 0; rep < 10; ++rep) {
    const SignMatrix s = oracle::random_sign_matrix(4, rng);
    CHECK(canonical_form(s) == canonical_form_bruteforce(s));
  }
}

TEST_CASE("orbit invariance of effectiveness, maximality and canonical form") {
  std::mt19937 rng(9);
  for (int g = 1; g <= 4; ++g)
    for (int rep = 0; rep < 100; ++rep) {
      const SignMatrix s = oracle::random_sign_matrix(g, rng);
      SignMatrix t = s;
      for (int k = 0; k < 8; ++k) t = oracle::random_move(t, rng);
      CHECK(is_effective(s) == is_effective(t));
      if (is_effective(s)) CHECK(is_maximal(s) == is_maximal(t));
      CHECK(canonical_form(s) == canonical_form(t));
      CHECK(are_equivalent(s, t));
    }
}

TEST_CASE("equivalence") {
  CHECK(are_equivalent(S(kA3), S(kA3).transposed()));
  CHECK_FALSE(are_equivalent(S(kA2), SignMatrix::diagonal(2)));
  CHECK(are_equivalent(S(kA3p), S(kA3p)));
  CHECK_THROWS_AS(are_equivalent(S(kA2), S(kA3)), std::invalid_argument);
}

TEST_CASE("class order") {
  CHECK(class_le(S(kA3p), S(kA3)));
  CHECK_FALSE(class_le(S(kA3), S(kA3p)));
  CHECK(class_le(S(kA2), S(kA2)));
  CHECK(class_le(SignMatrix::diagonal(2), S(kA2)));
  CHECK_THROWS_AS(class_le(S("+ +; + +"), S(kA2)), std::invalid_argument);
}

TEST_CASE("enumeration") {
  const auto e1 = enumerate_effective_classes(1);
  REQUIRE(e1.size() == 2);
  CHECK(std::set<SignMatrix>(e1.begin(), e1.end()) == std::set<SignMatrix>{S("0"), canonical_form(S("+"))});
  CHECK(enumerate_maximal_effective_classes(1) == std::vector<SignMatrix>{canonical_form(S("+"))});

  const auto me2 = enumerate_maximal_effective_classes(2);
  CHECK(me2 == std::vector<SignMatrix>{canonical_form(S(kA2))});
  // The rank-deficient class with a zero row is vacuously effective and
  // cannot be filled, so it is maximal alongside A3.
  const auto me3 = enumerate_maximal_effective_classes(3);
  CHECK(me3 == std::vector<SignMatrix>{S("- - -; - - -; 0 0 0"), canonical_form(S(kA3))});
  CHECK(enumerate_nonsingular_maximal_classes(3) == std::vector<SignMatrix>{canonical_form(S(kA3))});
  CHECK(enumerate_nonsingular_maximal_classes(2) == me2);
  CHECK_FALSE(has_nonzero_term(S("- - -; - - -; 0 0 0")));
  CHECK(has_nonzero_term(S(kA3p)));

  for (int g = 1; g <= 3; ++g) {
    const auto fast = enumerate_effective_classes(g);
    CHECK(fast == enumerate_effective_classes_reference(g));
    const auto me = enumerate_maximal_effective_classes(g);
    for (const auto& m : fast) {
      CHECK(is_effective(m));
      CHECK(canonical_form(m) == m);
      bool below = false;
      for (const auto& top : me) below = below || class_le(m, top);
      CHECK(below);
    }
  }
  CHECK_THROWS_AS(enumerate_effective_classes(0), std::out_of_range);
  CHECK_THROWS_AS(enumerate_effective_classes(kMaxEnumerationGenus + 1), std::out_of_range);
}

TEST_CASE("class order is sound with respect to zero counts") {
  const auto e3 = enumerate_effective_classes(3);
  for (std::size_t i = 0; i < e3.size(); i += 3)
    for (std::size_t j = 0; j < e3.size(); j += 5)
      if (class_le(e3[i], e3[j])) CHECK(e3[i].zero_count() >= e3[j].zero_count());
}

TEST_CASE("text format") {
  CHECK(format_inline(S(kA2)) == "+ +; - +");
  CHECK(format_block(S(kA2)) == "+ +\n- +\n");
  CHECK(format_inline(M("2 -1; 0 3")) == "2 -1; 0 3");
  CHECK_THROWS_AS(parse_sign_matrix("+ +; -"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sign_matrix("+ x"), std::invalid_argument);
}
