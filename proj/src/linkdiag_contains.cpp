#include "strongl/linkdiag.hpp"

#include <omp.h>

#include <atomic>
#include <bit>
#include <cstdint>

namespace strongl {

namespace {

bool has_copy(const Diagram& smoothed, const Diagram& target, const std::vector<int>& code) {
  for (const auto& piece : connected_components(smoothed)) {
    if (piece.crossings.size() != target.crossings.size()) continue;
    if (canonical_code(piece) == code) return true;
  }
  return false;
}

void check_budget(const Diagram& d2) {
  if (d2.crossings.size() > kMaxContainmentCrossings)
    throw BudgetExceeded("containment search limited to " + std::to_string(kMaxContainmentCrossings) +
                         " crossings, got " + std::to_string(d2.crossings.size()));
}

}  // namespace

// A component isomorphic to d1 is untouched by smoothings elsewhere, so it
// suffices to keep exactly c(d1) crossings and smooth all the others.
bool diagram_contains(const Diagram& d1, const Diagram& d2) {
  if (piece_count(d1) != 1) return false;
  const std::size_t c1 = d1.crossings.size(), c2 = d2.crossings.size();
  if (c1 > c2) return false;
  check_budget(d2);
  const auto code = canonical_code(d1);

  std::vector<std::uint32_t> kept;
  const std::uint32_t full = (1u << c2);
  for (std::uint32_t m = 0; m < full; ++m)
    if (static_cast<std::size_t>(std::popcount(m)) == c1) kept.push_back(m);

  std::atomic<bool> found{false};
  const auto count = static_cast<std::ptrdiff_t>(kept.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    if (found.load(std::memory_order_relaxed)) continue;
    const std::uint32_t keep = kept[static_cast<std::size_t>(i)];
    std::vector<std::size_t> free_slots;
    for (std::size_t x = 0; x < c2; ++x)
      if (!(keep >> x & 1u)) free_slots.push_back(x);
    std::vector<std::optional<SmoothMode>> modes(c2);
    for (std::uint32_t bits = 0; bits < (1u << free_slots.size()); ++bits) {
      for (std::size_t j = 0; j < free_slots.size(); ++j)
        modes[free_slots[j]] = (bits >> j & 1u) ? SmoothMode::B : SmoothMode::A;
      if (has_copy(smooth_many(d2, modes), d1, code)) {
        found.store(true, std::memory_order_relaxed);
        break;
      }
    }
  }
  return found.load();
}

bool diagram_contains_reference(const Diagram& d1, const Diagram& d2) {
  if (piece_count(d1) != 1) return false;
  check_budget(d2);
  const std::size_t c2 = d2.crossings.size();
  std::vector<int> digit(c2, 0);  // 0 keep, 1 A, 2 B
  while (true) {
    std::vector<std::optional<SmoothMode>> modes(c2);
    for (std::size_t x = 0; x < c2; ++x)
      if (digit[x]) modes[x] = digit[x] == 1 ? SmoothMode::A : SmoothMode::B;
    for (const auto& piece : connected_components(smooth_many(d2, modes)))
      if (isomorphic(piece, d1)) return true;
    std::size_t x = 0;
    while (x < c2 && digit[x] == 2) digit[x++] = 0;
    if (x == c2) return false;
    ++digit[x];
  }
}

bool brm_free(const Diagram& d) { return !diagram_contains(brm_standard(), d); }

}  // namespace strongl
