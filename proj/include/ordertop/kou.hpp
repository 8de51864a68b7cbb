#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <variant>

#include "ordertop/johnstone.hpp"  // AxiomSampleReport

namespace ordertop {

using Rational = boost::multiprecision::cpp_rational;

// X: 0 < x ≤ 1.
struct KouPoint {
  Rational x;
};
// P_0: 0 < k < 1 and 0 < b ≤ a ≤ 1.
struct KouTriple {
  Rational k, a, b;
};
using KouElement = std::variant<KouPoint, KouTriple>;

// Validating constructors; throw InvalidElement outside the ranges.
KouElement kou_point(Rational x);
KouElement kou_triple(Rational k, Rational a, Rational b);

// Accepts "p/q" and plain integers; anything else (decimals included) is
// InvalidInput.
Rational parse_rational(const std::string& s);
std::string rational_string(const Rational& r);
std::string kou_label(const KouElement& e);

// Points compare only to themselves; triples with equal (a, b) compare by
// the first coordinate; (k,a,b) ⊑ x iff a = x or kb ≤ x < b; a point is
// never beneath a triple.
bool kou_leq(const KouElement& u, const KouElement& v);

struct KouClaims {
  bool down_sets_are_chains = false;       // ↓(h,a,b) = {(k,a,b) : k ≤ h}
  bool upper_bounds_single_point = false;  // ub{(k,x,x) : 0<k<1} = {x}
  bool ladder_independent_of_k = false;    // (k,a,b) ⊑ a for every k
  std::uint64_t cases_checked = 0;
  AxiomSampleReport axioms;
  bool passed() const {
    return down_sets_are_chains && upper_bounds_single_point &&
           ladder_independent_of_k && axioms.passed();
  }
};

// The structural claims, decided by case analysis over the two element
// shapes with every refuting witness ((h+1)/2 against triple bounds,
// (y/x+1)/2 against low point bounds) replayed through kou_leq on sampled
// instances; plus the axiom sampling below.  Throws InvalidInput when
// trials = 0.
KouClaims kou_claims(std::uint64_t seed, std::uint64_t trials);

// Random points and triples with denominators ≤ 1000: reflexivity,
// antisymmetry, transitivity on each sampled triple of elements.
AxiomSampleReport kou_axioms_sample(std::uint64_t seed, std::uint64_t trials);

}  // namespace ordertop
