#pragma once

#include <cstdint>
#include <vector>

#include "ordertop/poset.hpp"

namespace ordertop {

// One representative per isomorphism class of n-element posets, relabeled
// into canonical order ("e0", "e1", ...) and sorted by canonical form.
// Generated by extending each (n-1)-class with a new maximal element over
// every lower set; SizeLimit for n = 0 or n > 7.
std::vector<FinitePoset> enumerate_posets(std::size_t n);

struct BruteForceCount {
  std::uint64_t labeled = 0;  // reflexive-transitive-antisymmetric matrices
  std::uint64_t classes = 0;  // distinct canonical forms among them
};

// Independent oracle: walks all 3^(n choose 2) orientation assignments,
// keeps the transitive ones, dedups by canonical form.  SizeLimit for n > 6.
BruteForceCount brute_force_poset_count(std::size_t n);

}  // namespace ordertop
