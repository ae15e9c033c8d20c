#include "strongl/signmat.hpp"

#include "perm_table.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace strongl {

char to_char(Sign s) {
  switch (s) {
    case Sign::Minus: return '-';
    case Sign::Zero: return '0';
    case Sign::Plus: return '+';
  }
  return '?';
}

// ---------------------------------------------------------------------------
// SignMatrix / IntMatrix

SignMatrix::SignMatrix(int g) : g_(g), e_(static_cast<std::size_t>(g * g), Sign::Zero) {
  if (g < 1) throw std::invalid_argument("sign matrix dimension must be >= 1");
}

SignMatrix::SignMatrix(int g, std::vector<Sign> entries) : g_(g), e_(std::move(entries)) {
  if (g < 1) throw std::invalid_argument("sign matrix dimension must be >= 1");
  if (e_.size() != static_cast<std::size_t>(g * g))
    throw std::invalid_argument("sign matrix is not square");
}

SignMatrix SignMatrix::diagonal(int g, Sign s) {
  SignMatrix m(g);
  for (int i = 0; i < g; ++i) m(i, i) = s;
  return m;
}

int SignMatrix::zero_count() const {
  return static_cast<int>(std::count(e_.begin(), e_.end(), Sign::Zero));
}

SignMatrix SignMatrix::transposed() const {
  SignMatrix t(g_);
  for (int i = 0; i < g_; ++i)
    for (int j = 0; j < g_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::strong_ordering operator<=>(const SignMatrix& a, const SignMatrix& b) {
  if (a.g_ != b.g_) return a.g_ <=> b.g_;
  for (std::size_t k = 0; k < a.e_.size(); ++k) {
    if (a.e_[k] != b.e_[k]) return to_int(a.e_[k]) <=> to_int(b.e_[k]);
  }
  return std::strong_ordering::equal;
}

IntMatrix::IntMatrix(int g) : g_(g), e_(static_cast<std::size_t>(g * g)) {
  if (g < 0) throw std::invalid_argument("matrix dimension must be >= 0");
}

IntMatrix::IntMatrix(int g, std::vector<BigInt> entries) : g_(g), e_(std::move(entries)) {
  if (g < 0) throw std::invalid_argument("matrix dimension must be >= 0");
  if (e_.size() != static_cast<std::size_t>(g * g))
    throw std::invalid_argument("integer matrix is not square");
}

IntMatrix IntMatrix::identity(int g) {
  IntMatrix m(g);
  for (int i = 0; i < g; ++i) m(i, i) = 1;
  return m;
}

SignMatrix IntMatrix::sign_pattern() const {
  std::vector<Sign> s;
  s.reserve(e_.size());
  for (const auto& v : e_) s.push_back(static_cast<Sign>(v.sign()));
  return SignMatrix(g_, std::move(s));
}

IntMatrix IntMatrix::abs() const {
  IntMatrix r(*this);
  for (auto& v : r.e_) v = boost::multiprecision::abs(v);
  return r;
}

// ---------------------------------------------------------------------------
// Determinant and permanent

BigInt det_exact(const IntMatrix& m) {
  const int n = m.dim();
  if (n == 0) return 1;
  std::vector<BigInt> a(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i * n + j)] = m(i, j);
  auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i * n + j)]; };

  int sign = 1;
  BigInt prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (at(r, k) != 0) { swap_row = r; break; }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

BigInt perm_abs_expansion(const IntMatrix& m) {
  const int n = m.dim();
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  BigInt total = 0;
  do {
    BigInt term = 1;
    for (int i = 0; i < n && term != 0; ++i) term *= boost::multiprecision::abs(m(i, p[static_cast<std::size_t>(i)]));
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

BigInt perm_abs_ryser(const IntMatrix& m) {
  const int n = m.dim();
  if (n == 0) return 1;
  if (n > 30) throw std::out_of_range("permanent dimension too large");
  BigInt total = 0;
  std::vector<BigInt> row_sum(static_cast<std::size_t>(n));
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t s = 1; s < subsets; ++s) {
    std::fill(row_sum.begin(), row_sum.end(), BigInt(0));
    for (int j = 0; j < n; ++j) {
      if (!(s >> j & 1U)) continue;
      for (int i = 0; i < n; ++i) row_sum[static_cast<std::size_t>(i)] += boost::multiprecision::abs(m(i, j));
    }
    BigInt prod = 1;
    for (const auto& r : row_sum) prod *= r;
    const int bits = std::popcount(s);
    if ((n - bits) % 2 == 0) total += prod; else total -= prod;
  }
  return total;
}

BigInt perm_abs(const IntMatrix& m) {
  return m.dim() <= 5 ? perm_abs_expansion(m) : perm_abs_ryser(m);
}

// ---------------------------------------------------------------------------
// Effectiveness and strong pairs

bool is_effective(const SignMatrix& s) {
  const int g = s.dim();
  const auto& table = detail::permutations(g);
  bool pos = false, neg = false;
  for (const auto& perm : table) {
    int term = perm.parity;
    for (int i = 0; i < g && term != 0; ++i) term *= to_int(s(i, perm.image[static_cast<std::size_t>(i)]));
    if (term > 0) pos = true;
    if (term < 0) neg = true;
    if (pos && neg) return false;
  }
  return true;
}

bool has_nonzero_term(const SignMatrix& s) {
  const int g = s.dim();
  for (const auto& perm : detail::permutations(g)) {
    bool nonzero = true;
    for (int i = 0; i < g && nonzero; ++i) nonzero = s(i, perm.image[static_cast<std::size_t>(i)]) != Sign::Zero;
    if (nonzero) return true;
  }
  return false;
}

namespace {

void check_pair(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      if (b(i, j) < 0) throw std::invalid_argument("geometric intersection count is negative");
      if (boost::multiprecision::abs(a(i, j)) > b(i, j))
        throw std::invalid_argument("|a_ij| exceeds b_ij: invalid intersection data");
    }
  }
}

}  // namespace

bool is_strong_pair(const IntMatrix& a, const IntMatrix& b) {
  check_pair(a, b);
  return boost::multiprecision::abs(det_exact(a)) == perm_abs(b);
}

bool is_strong_pair_by_pattern(const IntMatrix& a, const IntMatrix& b) {
  check_pair(a, b);
  // Entries with a zero term in every permutation do not affect either side;
  // only the supports that actually contribute must match.
  if (!is_effective(a.sign_pattern())) return false;
  const int g = a.dim();
  const auto& table = detail::permutations(g);
  for (const auto& perm : table) {
    bool b_term = true;
    for (int i = 0; i < g; ++i) b_term = b_term && b(i, perm.image[static_cast<std::size_t>(i)]) != 0;
    if (!b_term) continue;
    for (int i = 0; i < g; ++i) {
      const int j = perm.image[static_cast<std::size_t>(i)];
      if (boost::multiprecision::abs(a(i, j)) != b(i, j)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Maximality

bool is_maximal(const SignMatrix& s) {
  if (!is_effective(s)) throw std::invalid_argument("is_maximal requires an effective matrix");
  SignMatrix work = s;
  for (int i = 0; i < s.dim(); ++i) {
    for (int j = 0; j < s.dim(); ++j) {
      if (s(i, j) != Sign::Zero) continue;
      for (Sign fill : {Sign::Plus, Sign::Minus}) {
        work(i, j) = fill;
        if (is_effective(work)) return false;
      }
      work(i, j) = Sign::Zero;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Canonical form
//
// For a fixed transpose choice, row order and row negation mask, the best
// column treatment is forced: negate every column whose first nonzero entry
// is +, then sort columns ascending as top-to-bottom vectors. So the search
// only ranges over 2 * g! * 2^g candidates.

namespace {

using Col = std::vector<int>;

// Writes the candidate into `out` (row-major ints).
void build_candidate(const std::vector<int>& src, int g, const std::vector<int>& row_order,
                     unsigned row_neg, std::vector<Col>& cols, std::vector<int>& out) {
  for (int j = 0; j < g; ++j) {
    Col& c = cols[static_cast<std::size_t>(j)];
    int first = 0;
    for (int i = 0; i < g; ++i) {
      int v = src[static_cast<std::size_t>(row_order[static_cast<std::size_t>(i)] * g + j)];
      if (row_neg >> i & 1U) v = -v;
      c[static_cast<std::size_t>(i)] = v;
      if (first == 0) first = v;
    }
    if (first > 0)
      for (auto& v : c) v = -v;
  }
  std::sort(cols.begin(), cols.end());
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      out[static_cast<std::size_t>(i * g + j)] = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
}

std::vector<int> to_ints(const SignMatrix& s) {
  std::vector<int> v;
  v.reserve(s.entries().size());
  for (Sign e : s.entries()) v.push_back(to_int(e));
  return v;
}

SignMatrix from_ints(int g, const std::vector<int>& v) {
  std::vector<Sign> s;
  s.reserve(v.size());
  for (int x : v) s.push_back(static_cast<Sign>(x));
  return SignMatrix(g, std::move(s));
}

// Visits every reduced candidate; stops early when visit returns false.
template <typename Visit>
void for_each_candidate(const SignMatrix& s, Visit&& visit) {
  const int g = s.dim();
  const std::vector<int> plain = to_ints(s);
  const std::vector<int> trans = to_ints(s.transposed());
  const auto& table = detail::permutations(g);
  std::vector<Col> cols(static_cast<std::size_t>(g), Col(static_cast<std::size_t>(g)));
  std::vector<int> cand(static_cast<std::size_t>(g * g));
  for (const auto* src : {&plain, &trans}) {
    for (const auto& perm : table) {
      for (unsigned mask = 0; mask < (1U << g); ++mask) {
        build_candidate(*src, g, perm.image, mask, cols, cand);
        if (!visit(cand)) return;
      }
    }
  }
}

}  // namespace

SignMatrix canonical_form(const SignMatrix& s) {
  std::vector<int> best;
  for_each_candidate(s, [&](const std::vector<int>& cand) {
    if (best.empty() || cand < best) best = cand;
    return true;
  });
  return from_ints(s.dim(), best);
}

namespace detail {

bool is_canonical(const SignMatrix& s) {
  const std::vector<int> self = to_ints(s);
  bool canonical = true;
  for_each_candidate(s, [&](const std::vector<int>& cand) {
    if (cand < self) canonical = false;
    return canonical;
  });
  return canonical;
}

}  // namespace detail

SignMatrix canonical_form_bruteforce(const SignMatrix& s) {
  const int g = s.dim();
  const auto& table = detail::permutations(g);
  std::vector<int> best;
  std::vector<int> cand(static_cast<std::size_t>(g * g));
  for (const SignMatrix& src : {s, s.transposed()}) {
    for (const auto& rp : table)
      for (const auto& cp : table)
        for (unsigned rn = 0; rn < (1U << g); ++rn)
          for (unsigned cn = 0; cn < (1U << g); ++cn) {
            for (int i = 0; i < g; ++i)
              for (int j = 0; j < g; ++j) {
                int v = to_int(src(rp.image[static_cast<std::size_t>(i)], cp.image[static_cast<std::size_t>(j)]));
                if (rn >> i & 1U) v = -v;
                if (cn >> j & 1U) v = -v;
                cand[static_cast<std::size_t>(i * g + j)] = v;
              }
            if (best.empty() || cand < best) best = cand;
          }
  }
  return from_ints(g, best);
}

bool are_equivalent(const SignMatrix& a, const SignMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  if (a.zero_count() != b.zero_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------------------
// Class order

namespace {

bool fill_search(SignMatrix& work, const std::vector<std::pair<int, int>>& zeros, std::size_t from,
                 int remaining, const SignMatrix& target) {
  if (remaining == 0) return canonical_form(work) == target;
  if (zeros.size() - from < static_cast<std::size_t>(remaining)) return false;
  for (std::size_t k = from; k < zeros.size(); ++k) {
    auto [i, j] = zeros[k];
    for (Sign fill : {Sign::Plus, Sign::Minus}) {
      work(i, j) = fill;
      if (fill_search(work, zeros, k + 1, remaining - 1, target)) return true;
    }
    work(i, j) = Sign::Zero;
  }
  return false;
}

}  // namespace

bool class_le(const SignMatrix& a, const SignMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  if (!is_effective(a) || !is_effective(b))
    throw std::invalid_argument("class_le requires effective matrices");
  const int extra = a.zero_count() - b.zero_count();
  if (extra < 0) return false;
  const SignMatrix target = canonical_form(b);
  std::vector<std::pair<int, int>> zeros;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (a(i, j) == Sign::Zero) zeros.emplace_back(i, j);
  SignMatrix work = a;
  return fill_search(work, zeros, 0, extra, target);
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::vector<std::vector<std::string>> split_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream all(text);
  std::string row;
  while (std::getline(all, row, ';')) {
    std::stringstream rs(row);
    std::vector<std::string> tokens;
    std::string tok;
    while (rs >> tok) tokens.push_back(tok);
    if (!tokens.empty()) rows.push_back(std::move(tokens));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw std::invalid_argument("matrix is not square: '" + text + "'");
  return rows;
}

BigInt parse_entry(const std::string& tok) {
  if (tok == "+") return 1;
  if (tok == "-") return -1;
  std::size_t start = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (start == tok.size() || tok.find_first_not_of("0123456789", start) != std::string::npos)
    throw std::invalid_argument("bad matrix entry '" + tok + "'");
  return BigInt(tok[0] == '+' ? tok.substr(1) : tok);
}

}  // namespace

IntMatrix parse_int_matrix(const std::string& text) {
  const auto rows = split_rows(text);
  const int g = static_cast<int>(rows.size());
  IntMatrix m(g);
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) m(i, j) = parse_entry(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return m;
}

SignMatrix parse_sign_matrix(const std::string& text) { return parse_int_matrix(text).sign_pattern(); }

std::string format_inline(const SignMatrix& s) {
  std::string out;
  for (int i = 0; i < s.dim(); ++i) {
    if (i) out += "; ";
    for (int j = 0; j < s.dim(); ++j) {
      if (j) out += ' ';
      out += to_char(s(i, j));
    }
  }
  return out;
}

std::string format_block(const SignMatrix& s) {
  std::string out;
  for (int i = 0; i < s.dim(); ++i) {
    for (int j = 0; j < s.dim(); ++j) {
      if (j) out += ' ';
      out += to_char(s(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string format_inline(const IntMatrix& m) {
  std::string out;
  for (int i = 0; i < m.dim(); ++i) {
    if (i) out += "; ";
    for (int j = 0; j < m.dim(); ++j) {
      if (j) out += ' ';
      out += m(i, j).str();
    }
  }
  return out;
}

}  // namespace strongl
