// Enumeration of E_g / ME_g. The OpenMP kernel walks only column-sorted,
// column-normalized patterns (every canonical form is one); the serial
// reference classifies every pattern and is kept for cross-checking.

#include "perm_table.hpp"
#include "strongl/signmat.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>

namespace strongl {

namespace detail {

namespace {

constexpr int kMaxTableDim = 8;

std::vector<Permutation> build_permutations(int g) {
  std::vector<Permutation> out;
  std::vector<int> p(static_cast<std::size_t>(g));
  std::iota(p.begin(), p.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < g; ++i)
      for (int j = i + 1; j < g; ++j)
        if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) ++inversions;
    out.push_back({p, inversions % 2 == 0 ? 1 : -1});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

const std::vector<Permutation>& permutations(int g) {
  static const std::array<std::vector<Permutation>, kMaxTableDim + 1> tables = [] {
    std::array<std::vector<Permutation>, kMaxTableDim + 1> t;
    for (int n = 0; n <= kMaxTableDim; ++n) t[static_cast<std::size_t>(n)] = build_permutations(n);
    return t;
  }();
  if (g < 0 || g > kMaxTableDim) throw std::out_of_range("permutation table supports g <= 8");
  return tables[static_cast<std::size_t>(g)];
}

}  // namespace detail

namespace {

void check_budget(int g) {
  if (g < 1 || g > kMaxEnumerationGenus)
    throw std::out_of_range("enumeration supports 1 <= g <= " + std::to_string(kMaxEnumerationGenus));
}

// Column vectors whose first nonzero entry is '-', plus the zero column,
// in ascending top-to-bottom order.
std::vector<std::vector<Sign>> normalized_columns(int g) {
  std::vector<std::vector<Sign>> cols;
  std::vector<Sign> c(static_cast<std::size_t>(g), Sign::Minus);
  while (true) {
    int first = 0;
    for (Sign s : c)
      if (first == 0) first = to_int(s);
    if (first <= 0) cols.push_back(c);
    int k = g - 1;
    while (k >= 0 && c[static_cast<std::size_t>(k)] == Sign::Plus) c[static_cast<std::size_t>(k--)] = Sign::Minus;
    if (k < 0) break;
    c[static_cast<std::size_t>(k)] = static_cast<Sign>(to_int(c[static_cast<std::size_t>(k)]) + 1);
  }
  return cols;
}

}  // namespace

std::vector<SignMatrix> enumerate_effective_classes(int g) {
  check_budget(g);
  const auto cols = normalized_columns(g);
  const int ncols = static_cast<int>(cols.size());

  std::vector<std::vector<SignMatrix>> per_first(static_cast<std::size_t>(ncols));

#pragma omp parallel for schedule(dynamic, 1)
  for (int first = 0; first < ncols; ++first) {
    auto& found = per_first[static_cast<std::size_t>(first)];
    std::vector<int> idx(static_cast<std::size_t>(g), first);
    SignMatrix m(g);
    while (true) {
      for (int j = 0; j < g; ++j)
        for (int i = 0; i < g; ++i)
          m(i, j) = cols[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])][static_cast<std::size_t>(i)];
      if (is_effective(m) && detail::is_canonical(m)) found.push_back(m);
      // Next nondecreasing index tuple with idx[0] fixed.
      int k = g - 1;
      while (k >= 1 && idx[static_cast<std::size_t>(k)] == ncols - 1) --k;
      if (k < 1) break;
      const int v = idx[static_cast<std::size_t>(k)] + 1;
      for (int r = k; r < g; ++r) idx[static_cast<std::size_t>(r)] = v;
    }
  }

  std::vector<SignMatrix> out;
  for (auto& part : per_first) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SignMatrix> enumerate_maximal_effective_classes(int g) {
  auto all = enumerate_effective_classes(g);
  std::vector<SignMatrix> out;
  for (auto& m : all)
    if (is_maximal(m)) out.push_back(std::move(m));
  return out;
}

std::vector<SignMatrix> enumerate_nonsingular_maximal_classes(int g) {
  auto all = enumerate_maximal_effective_classes(g);
  std::erase_if(all, [](const SignMatrix& m) { return !has_nonzero_term(m); });
  return all;
}

std::vector<SignMatrix> enumerate_effective_classes_reference(int g) {
  if (g < 1 || g > 3) throw std::out_of_range("reference enumeration supports 1 <= g <= 3");
  const int cells = g * g;
  std::set<SignMatrix> classes;
  std::vector<int> digits(static_cast<std::size_t>(cells), 0);
  while (true) {
    std::vector<Sign> e;
    e.reserve(static_cast<std::size_t>(cells));
    for (int d : digits) e.push_back(static_cast<Sign>(d - 1));
    SignMatrix m(g, std::move(e));
    if (is_effective(m)) classes.insert(canonical_form_bruteforce(m));
    int k = cells - 1;
    while (k >= 0 && digits[static_cast<std::size_t>(k)] == 2) digits[static_cast<std::size_t>(k--)] = 0;
    if (k < 0) break;
    ++digits[static_cast<std::size_t>(k)];
  }
  return {classes.begin(), classes.end()};
}

}  // namespace strongl
