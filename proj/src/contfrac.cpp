#include "strongl/contfrac.hpp"

namespace strongl {

PosRational::PosRational(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ < 1 || q_ < 1) throw std::domain_error("positive rational needs p, q >= 1");
  const BigInt g = boost::multiprecision::gcd(p_, q_);
  if (g != 1) {
    p_ /= g;
    q_ /= g;
  }
}

PosRational PosRational::from(const Rational& r) {
  if (r <= 0) throw std::domain_error("rational is not positive: " + to_string(r));
  return PosRational(numer(r), denom(r));
}

std::string to_string(const PosRational& r) { return r.p().str() + "/" + r.q().str(); }

CFrac::CFrac(std::vector<BigInt> ks) : ks_(std::move(ks)) {
  if (ks_.empty()) throw std::domain_error("continued fraction needs at least one term");
  for (const auto& k : ks_)
    if (k < 1) throw std::domain_error("continued fraction terms must be >= 1");
  if (ks_.back() < 2) throw std::domain_error("last continued fraction term must be >= 2");
}

std::string to_string(const CFrac& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.length(); ++i) {
    if (i) out += ",";
    out += c.terms()[i].str();
  }
  return out + "]";
}

CFrac cfe(const PosRational& r) {
  if (r.p() <= r.q()) throw std::domain_error("cfe needs r > 1, got " + to_string(r));
  std::vector<BigInt> ks;
  BigInt a = r.p(), b = r.q();
  while (b != 0) {
    ks.push_back(a / b);
    BigInt rem = a % b;
    a = std::move(b);
    b = std::move(rem);
  }
  return CFrac(std::move(ks));
}

Rational eval_terms(const std::vector<BigInt>& ks) {
  if (ks.empty()) throw std::domain_error("empty expansion");
  Rational x = ks.back();
  for (auto it = ks.rbegin() + 1; it != ks.rend(); ++it) x = Rational(*it) + 1 / x;
  return x;
}

PosRational eval_cfrac(const CFrac& ks) { return PosRational::from(eval_terms(ks.terms())); }

std::optional<MediantPair> mediant_pred(const PosRational& r, int orientation) {
  if (orientation != 1 && orientation != -1) throw std::domain_error("orientation must be +1 or -1");
  const BigInt& p = r.p();
  const BigInt& q = r.q();
  if (p <= q) throw std::domain_error("mediant_pred needs p > q, got " + to_string(r));

  // pbar * q == orientation (mod p); inverse of q mod p by extended Euclid.
  BigInt old_r = q % p, cur_r = p, old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    BigInt quot = old_r / cur_r;
    BigInt tmp = old_r - quot * cur_r;
    old_r = std::move(cur_r);
    cur_r = std::move(tmp);
    tmp = old_s - quot * cur_s;
    old_s = std::move(cur_s);
    cur_s = std::move(tmp);
  }
  BigInt pbar = (old_s * orientation) % p;
  if (pbar <= 0) pbar += p;
  const BigInt num = pbar * q - orientation;
  const BigInt qbar = num / p;
  if (qbar < 1 || qbar > q) return std::nullopt;
  return MediantPair{pbar, qbar, orientation};
}

Truncation truncation_value(const CFrac& ks, int orientation) {
  if (orientation != 1 && orientation != -1) throw std::domain_error("orientation must be +1 or -1");
  const std::size_t n = ks.length();
  const bool odd = n % 2 == 1;
  const bool drop_last = (orientation == 1) == odd;
  std::vector<BigInt> terms = ks.terms();
  if (drop_last) {
    terms.pop_back();
    if (terms.empty()) return {PosRational(1, 1), true};
  } else {
    terms.back() -= 1;
  }
  return {PosRational::from(eval_terms(terms)), false};
}

PosRational blend(const PosRational& r, const MediantPair& mp, const Rational& z) {
  if (z < 0) throw std::domain_error("blend needs z >= 0");
  return PosRational::from((Rational(mp.pbar) + Rational(r.p()) * z) / (Rational(mp.qbar) + Rational(r.q()) * z));
}

Rational r_value(const CFrac& ks, const Rational& rp) {
  const auto& k = ks.terms();
  Rational x = Rational(k.front()) - rp;
  for (std::size_t i = 1; i < k.size(); ++i) {
    if (x == 0) throw InadmissibleSlope("nested reciprocal hits zero at term " + std::to_string(i));
    x = Rational(k[i]) + 1 / x;
  }
  return -x;
}

}  // namespace strongl
