#pragma once

// Sign patterns and exact integer matrices: effectiveness, maximality,
// the row/column/negation/transpose equivalence and its class order.

#include "strongl/numeric.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace strongl {

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

constexpr Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}
constexpr int to_int(Sign s) { return static_cast<int>(s); }
char to_char(Sign s);

/// Square g x g matrix over {-, 0, +}. Row-major storage; ordering compares
/// entries row-major with - < 0 < +.
class SignMatrix {
 public:
  explicit SignMatrix(int g);
  SignMatrix(int g, std::vector<Sign> entries);
  static SignMatrix diagonal(int g, Sign s = Sign::Plus);

  int dim() const { return g_; }
  Sign operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * g_ + j)]; }
  Sign& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * g_ + j)]; }
  const std::vector<Sign>& entries() const { return e_; }

  int zero_count() const;
  SignMatrix transposed() const;

  friend bool operator==(const SignMatrix&, const SignMatrix&) = default;
  friend std::strong_ordering operator<=>(const SignMatrix& a, const SignMatrix& b);

 private:
  int g_;
  std::vector<Sign> e_;
};

class IntMatrix {
 public:
  explicit IntMatrix(int g);
  IntMatrix(int g, std::vector<BigInt> entries);
  static IntMatrix identity(int g);

  int dim() const { return g_; }
  const BigInt& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i * g_ + j)]; }
  BigInt& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * g_ + j)]; }

  SignMatrix sign_pattern() const;
  IntMatrix abs() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int g_;
  std::vector<BigInt> e_;
};

/// Exact determinant (fraction-free Bareiss elimination). An empty (0 x 0)
/// matrix has determinant 1.
BigInt det_exact(const IntMatrix& m);

/// Permanent of the entrywise absolute values. Direct expansion over S_g for
/// g <= 5, Ryser inclusion-exclusion above.
BigInt perm_abs(const IntMatrix& m);
BigInt perm_abs_expansion(const IntMatrix& m);
BigInt perm_abs_ryser(const IntMatrix& m);

/// All nonzero terms sgn(s) * prod s_{i,s(i)} share one sign.
bool is_effective(const SignMatrix& s);

/// Some permutation term is nonzero (the pattern admits a nonsingular
/// realization).
bool has_nonzero_term(const SignMatrix& s);

/// |det A| == perm(B). Throws std::invalid_argument on dimension mismatch or
/// when some |a_ij| > b_ij.
bool is_strong_pair(const IntMatrix& a, const IntMatrix& b);

/// Second route: sign(A) effective and |a_ij| == b_ij everywhere. Same
/// preconditions as is_strong_pair.
bool is_strong_pair_by_pattern(const IntMatrix& a, const IntMatrix& b);

/// No zero entry can be set to + or - while staying effective.
/// Throws std::invalid_argument on a non-effective input.
bool is_maximal(const SignMatrix& s);

/// Least element of the orbit under row/column permutations, row/column
/// negations and transpose.
SignMatrix canonical_form(const SignMatrix& s);

/// Reference orbit minimum by full enumeration of the group. Slow; kept as
/// the oracle for canonical_form.
SignMatrix canonical_form_bruteforce(const SignMatrix& s);

bool are_equivalent(const SignMatrix& a, const SignMatrix& b);

/// [a] <= [b]: some subset of the zeros of a can be filled with +/- so the
/// result is equivalent to b. Both inputs must be effective.
bool class_le(const SignMatrix& a, const SignMatrix& b);

constexpr int kMaxEnumerationGenus = 4;

/// Canonical forms of every effective g x g pattern, sorted ascending.
/// Throws std::out_of_range for g < 1 or g > kMaxEnumerationGenus.
std::vector<SignMatrix> enumerate_effective_classes(int g);
std::vector<SignMatrix> enumerate_maximal_effective_classes(int g);
/// ME_g restricted to classes with a nonzero permutation term.
std::vector<SignMatrix> enumerate_nonsingular_maximal_classes(int g);

/// Serial reference: classify all 3^(g*g) patterns one by one. g <= 3.
std::vector<SignMatrix> enumerate_effective_classes_reference(int g);

// Text format: rows separated by ';', entries by whitespace.
SignMatrix parse_sign_matrix(const std::string& text);
IntMatrix parse_int_matrix(const std::string& text);
std::string format_inline(const SignMatrix& s);
std::string format_block(const SignMatrix& s);
std::string format_inline(const IntMatrix& m);

}  // namespace strongl
