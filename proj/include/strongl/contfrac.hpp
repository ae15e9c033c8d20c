#pragma once

// Exact continued fractions, mediant predecessors, the blend formula and the
// R-function, plus the exhaustive parity-claim sweeps.

#include "strongl/numeric.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace strongl {

/// Positive rational p/q in lowest terms.
class PosRational {
 public:
  PosRational(BigInt p, BigInt q);
  static PosRational from(const Rational& r);

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  Rational value() const { return Rational(p_, q_); }

  friend bool operator==(const PosRational&, const PosRational&) = default;

 private:
  BigInt p_;
  BigInt q_;
};

std::string to_string(const PosRational& r);

/// Expansion [k1, ..., kn] with every ki >= 1 and kn >= 2.
class CFrac {
 public:
  explicit CFrac(std::vector<BigInt> ks);

  const std::vector<BigInt>& terms() const { return ks_; }
  std::size_t length() const { return ks_.size(); }

  friend bool operator==(const CFrac&, const CFrac&) = default;

 private:
  std::vector<BigInt> ks_;
};

std::string to_string(const CFrac& c);

/// Solution of pbar*q - qbar*p = orientation inside 1 <= pbar <= p, 1 <= qbar <= q.
struct MediantPair {
  BigInt pbar;
  BigInt qbar;
  int orientation;

  Rational value() const { return Rational(pbar, qbar); }
  friend bool operator==(const MediantPair&, const MediantPair&) = default;
};

/// Throws std::domain_error unless r > 1.
CFrac cfe(const PosRational& r);

/// Value of an arbitrary positive-term expansion (no kn >= 2 requirement).
Rational eval_terms(const std::vector<BigInt>& ks);
PosRational eval_cfrac(const CFrac& ks);

/// nullopt when the bounded grid has no solution (e.g. integer slopes with
/// orientation +1). Throws std::domain_error unless p > q >= 1 and coprime,
/// or when orientation is not +-1.
std::optional<MediantPair> mediant_pred(const PosRational& r, int orientation);

struct Truncation {
  PosRational value;
  /// The truncated expansion was empty and 1/1 was substituted.
  bool empty_convention;
};

/// [k1..k_{n-1}] for (+1, n odd) and (-1, n even); [k1..kn - 1] otherwise.
Truncation truncation_value(const CFrac& ks, int orientation);

/// (pbar + p z) / (qbar + q z), z >= 0.
PosRational blend(const PosRational& r, const MediantPair& mp, const Rational& z);

/// Thrown when a nested reciprocal in r_value hits zero.
struct InadmissibleSlope : std::domain_error {
  using std::domain_error::domain_error;
};

/// -(kn + 1/(k_{n-1} + ... + 1/(k1 - rp))).
Rational r_value(const CFrac& ks, const Rational& rp);

// ---------------------------------------------------------------------------
// Claim sweeps

enum class Verdict { Ok, Violation, Skip };
const char* to_string(Verdict v);

struct ClaimCase {
  PosRational r;
  std::optional<Rational> z;  // empty for skip lines
  std::size_t n = 0;
  std::optional<Rational> value;
  Verdict verdict = Verdict::Ok;
  std::string note;
};

struct ClaimReport {
  int orientation = 1;
  std::size_t cases = 0;       // evaluated (non-skip) cases
  std::size_t violations = 0;
  std::size_t skips = 0;
  /// Every line in sweep order: p/q ascending by (p, q), then z ascending.
  std::vector<ClaimCase> lines;
};

/// Is R consistent with the parity statement for this orientation?
/// orientation +1: n odd => R > 0, n even => -1 < R < 0.
/// orientation -1: n odd => -1 < R < 0, n even => R > 0.
bool claim_holds(int orientation, std::size_t n, const Rational& R);

/// Distinct reduced z = d2/d1 for 1 <= d1, d2 <= dmax, ascending.
std::vector<Rational> z_grid(int dmax);

/// Reduced p/q with 1 <= q < p <= pmax, ordered by p then q.
std::vector<PosRational> slope_grid(int pmax);

/// OpenMP sweep. Output is independent of thread count.
ClaimReport check_claim(int orientation, int pmax, int dmax);
ClaimReport check_claim3(int pmax, int dmax);
ClaimReport check_claim4(int pmax, int dmax);

/// Serial reference sweep with identical output.
ClaimReport check_claim_reference(int orientation, int pmax, int dmax);

std::string format_line(const ClaimCase& c);
std::string format_summary(const ClaimReport& r);

}  // namespace strongl
