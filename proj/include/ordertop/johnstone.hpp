#pragma once

#include <cstdint>
#include <string>

#include "ordertop/poset.hpp"

namespace ordertop {

// N ∪ {∞} with the obvious order; ∞ is a distinguished state, never a
// sentinel number.
class NatOrInf {
 public:
  static NatOrInf nat(std::uint64_t k) { return NatOrInf(false, k); }
  static NatOrInf inf() { return NatOrInf(true, 0); }

  bool is_inf() const { return inf_; }
  std::uint64_t value() const;  // throws InvalidElement on ∞

  friend bool operator==(const NatOrInf& a, const NatOrInf& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.k_ == b.k_);
  }
  // n ≤ ∞ for every n, ∞ ≤ n only for n = ∞
  friend bool operator<=(const NatOrInf& a, const NatOrInf& b) {
    if (b.inf_) return true;
    if (a.inf_) return false;
    return a.k_ <= b.k_;
  }

 private:
  NatOrInf(bool inf, std::uint64_t k) : inf_(inf), k_(k) {}
  bool inf_;
  std::uint64_t k_;
};

// An element (m, n) of X = N x (N ∪ {∞}); m ≥ 1 and n ≥ 1 (or ∞).
struct JohnstoneElement {
  std::uint64_t m = 1;
  NatOrInf n = NatOrInf::nat(1);
};

JohnstoneElement johnstone_element(std::uint64_t m, NatOrInf n);  // validates
std::string johnstone_label(const JohnstoneElement& e);           // "(m,n)" / "(m,inf)"

// (m,n) ≤ (m',n')  iff  m = m' and n ≤ n',  or  n' = ∞ and n ≤ m'.
bool johnstone_leq(const JohnstoneElement& u, const JohnstoneElement& v);

// The restriction to {(m,n) : m ≤ M, n ≤ N or n = ∞}, with poset axioms
// re-validated by construction.  Element labels follow johnstone_label.
FinitePoset johnstone_truncate(std::uint64_t M, std::uint64_t N);

struct JohnstoneClaims {
  // symbolic case analyses over the full space
  bool down_sets_of_finite_levels_are_chains = false;  // ↓(m,n), n finite
  bool column_upper_bounds_single_infinity = false;    // ub{(m,k):k∈N} = {(m,∞)}
  bool infinity_ideals_never_down_linear = false;      // ↓(m,∞) has an incomparable pair
  // the same facts instantiated on the truncation
  bool truncation_finite_levels_down_linear = false;
  bool truncation_infinity_chain_iff_width_one = false;
  std::uint64_t cases_checked = 0;
  bool passed() const {
    return down_sets_of_finite_levels_are_chains &&
           column_upper_bounds_single_infinity &&
           infinity_ideals_never_down_linear &&
           truncation_finite_levels_down_linear &&
           truncation_infinity_chain_iff_width_one;
  }
};

// Checks the structural claims about X both symbolically (each case of the
// order definition resolved with a refuting or confirming witness, every
// witness re-evaluated through johnstone_leq) and on the (M, N) truncation.
JohnstoneClaims johnstone_claims(std::uint64_t M, std::uint64_t N);

struct AxiomSampleReport {
  std::uint64_t trials = 0;
  std::uint64_t violations = 0;
  bool passed() const { return violations == 0; }
};

// Random (m, n) with m, n ≤ 1000 (n = ∞ with probability 1/8): reflexivity,
// antisymmetry, transitivity of johnstone_leq on each sampled triple.
// Throws InvalidInput when trials = 0.
AxiomSampleReport johnstone_axioms_sample(std::uint64_t seed, std::uint64_t trials);

}  // namespace ordertop
