#pragma once

#include "strongl/signmat.hpp"

#include <vector>

namespace strongl::detail {

struct Permutation {
  std::vector<int> image;
  int parity;  // +1 even, -1 odd
};

/// All permutations of {0..g-1} in lexicographic order, cached per g.
const std::vector<Permutation>& permutations(int g);

bool is_canonical(const SignMatrix& s);

}  // namespace strongl::detail
