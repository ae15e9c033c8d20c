#include "strongl/contfrac.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>

namespace strongl {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Ok: return "ok";
    case Verdict::Violation: return "violation";
    case Verdict::Skip: return "skip";
  }
  return "?";
}

bool claim_holds(int orientation, std::size_t n, const Rational& R) {
  const bool positive_case = (orientation == 1) == (n % 2 == 1);
  if (positive_case) return R > 0;
  return R > -1 && R < 0;
}

std::vector<Rational> z_grid(int dmax) {
  std::vector<Rational> zs;
  for (int d1 = 1; d1 <= dmax; ++d1)
    for (int d2 = 1; d2 <= dmax; ++d2) zs.emplace_back(d2, d1);
  std::sort(zs.begin(), zs.end());
  zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
  return zs;
}

std::vector<PosRational> slope_grid(int pmax) {
  std::vector<PosRational> out;
  for (int p = 2; p <= pmax; ++p)
    for (int q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
  return out;
}

namespace {

void check_args(int orientation, int pmax, int dmax) {
  if (orientation != 1 && orientation != -1) throw std::invalid_argument("orientation must be +1 or -1");
  if (pmax < 3) throw std::invalid_argument("max-p must be >= 3");
  if (dmax < 1) throw std::invalid_argument("max-d must be >= 1");
}

std::vector<ClaimCase> sweep_slope(int orientation, const PosRational& r, const std::vector<Rational>& zs) {
  std::vector<ClaimCase> lines;
  const CFrac ks = cfe(r);
  const auto mp = mediant_pred(r, orientation);
  if (!mp) {
    lines.push_back({r, std::nullopt, ks.length(), std::nullopt, Verdict::Skip, "no bounded mediant pair"});
    return lines;
  }
  for (const auto& z : zs) {
    ClaimCase c{r, z, ks.length(), std::nullopt, Verdict::Ok, {}};
    const PosRational rp = blend(r, *mp, z);
    try {
      c.value = r_value(ks, rp.value());
      if (!claim_holds(orientation, ks.length(), *c.value)) c.verdict = Verdict::Violation;
    } catch (const InadmissibleSlope& e) {
      c.verdict = Verdict::Violation;
      c.note = e.what();
    }
    lines.push_back(std::move(c));
  }
  return lines;
}

ClaimReport assemble(int orientation, std::vector<std::vector<ClaimCase>>& parts) {
  ClaimReport rep;
  rep.orientation = orientation;
  for (auto& part : parts) {
    for (auto& c : part) {
      if (c.verdict == Verdict::Skip) ++rep.skips;
      else ++rep.cases;
      if (c.verdict == Verdict::Violation) ++rep.violations;
      rep.lines.push_back(std::move(c));
    }
  }
  return rep;
}

}  // namespace

ClaimReport check_claim(int orientation, int pmax, int dmax) {
  check_args(orientation, pmax, dmax);
  const auto slopes = slope_grid(pmax);
  const auto zs = z_grid(dmax);
  std::vector<std::vector<ClaimCase>> parts(slopes.size());
  const auto count = static_cast<std::ptrdiff_t>(slopes.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    parts[static_cast<std::size_t>(i)] = sweep_slope(orientation, slopes[static_cast<std::size_t>(i)], zs);
  }
  return assemble(orientation, parts);
}

ClaimReport check_claim_reference(int orientation, int pmax, int dmax) {
  check_args(orientation, pmax, dmax);
  const auto zs = z_grid(dmax);
  std::vector<std::vector<ClaimCase>> parts;
  for (const auto& r : slope_grid(pmax)) parts.push_back(sweep_slope(orientation, r, zs));
  return assemble(orientation, parts);
}

ClaimReport check_claim3(int pmax, int dmax) { return check_claim(1, pmax, dmax); }
ClaimReport check_claim4(int pmax, int dmax) { return check_claim(-1, pmax, dmax); }

std::string format_line(const ClaimCase& c) {
  std::string out = "p/q=" + to_string(c.r);
  out += " z=" + (c.z ? to_string(*c.z) : std::string("-"));
  out += " n=" + std::to_string(c.n);
  out += " R=" + (c.value ? to_string(*c.value) : std::string("-"));
  out += " VERDICT=";
  out += to_string(c.verdict);
  return out;
}

std::string format_summary(const ClaimReport& r) {
  return "violations: " + std::to_string(r.violations) + " / cases: " + std::to_string(r.cases);
}

}  // namespace strongl
