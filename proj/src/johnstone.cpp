#include "ordertop/johnstone.hpp"

#include <random>

#include "ordertop/classify.hpp"
#include "ordertop/errors.hpp"

namespace ordertop {

std::uint64_t NatOrInf::value() const {
  if (inf_) throw InvalidElement("infinity has no finite value");
  return k_;
}

JohnstoneElement johnstone_element(std::uint64_t m, NatOrInf n) {
  if (m == 0) throw InvalidElement("first coordinate must be positive");
  if (!n.is_inf() && n.value() == 0)
    throw InvalidElement("second coordinate must be positive or infinity");
  return JohnstoneElement{m, n};
}

std::string johnstone_label(const JohnstoneElement& e) {
  return "(" + std::to_string(e.m) + "," +
         (e.n.is_inf() ? std::string("inf") : std::to_string(e.n.value())) + ")";
}

bool johnstone_leq(const JohnstoneElement& u, const JohnstoneElement& v) {
  if (u.m == v.m && u.n <= v.n) return true;
  return v.n.is_inf() && !u.n.is_inf() && u.n.value() <= v.m;
}

namespace {

constexpr std::size_t kTruncationCap = 2048;

std::size_t truncation_index(std::uint64_t m, std::uint64_t n_or_zero_for_inf,
                             std::uint64_t N) {
  // column-major: (m, 1..N) then (m, ∞)
  std::size_t base = static_cast<std::size_t>((m - 1) * (N + 1));
  if (n_or_zero_for_inf == 0) return base + N;
  return base + static_cast<std::size_t>(n_or_zero_for_inf - 1);
}

JohnstoneElement element_at(std::size_t idx, std::uint64_t N) {
  std::uint64_t m = idx / (N + 1) + 1;
  std::uint64_t slot = idx % (N + 1);
  if (slot == N) return johnstone_element(m, NatOrInf::inf());
  return johnstone_element(m, NatOrInf::nat(slot + 1));
}

}  // namespace

FinitePoset johnstone_truncate(std::uint64_t M, std::uint64_t N) {
  if (M == 0 || N == 0) throw InvalidInput("truncation bounds must be positive");
  std::size_t size = static_cast<std::size_t>(M) * (N + 1);
  if (M > kTruncationCap || size > kTruncationCap)
    throw SizeLimit("truncation too large");

  std::vector<std::string> labels(size);
  std::vector<Bits> up(size, Bits(size));
  for (std::size_t i = 0; i < size; ++i) {
    JohnstoneElement u = element_at(i, N);
    labels[i] = johnstone_label(u);
    for (std::size_t j = 0; j < size; ++j)
      if (johnstone_leq(u, element_at(j, N))) up[i].set(j);
  }
  return FinitePoset(std::move(labels), std::move(up));
}

namespace {

JohnstoneElement je(std::uint64_t m, std::uint64_t n) {
  return johnstone_element(m, NatOrInf::nat(n));
}
JohnstoneElement jinf(std::uint64_t m) {
  return johnstone_element(m, NatOrInf::inf());
}

// ↓(m,n) for finite n is {(m,k) : k ≤ n}: the first clause gives exactly the
// k ≤ n part of the column, the second needs n = ∞.  The closed form is
// replayed against johnstone_leq over a box around (m,n) plus the boundary
// and ∞ cases.
bool finite_level_down_sets(std::uint64_t m, std::uint64_t n, std::uint64_t& cases) {
  JohnstoneElement target = je(m, n);
  for (std::uint64_t mp = 1; mp <= m + 3; ++mp) {
    for (std::uint64_t np = 1; np <= n + 3; ++np) {
      bool expected = mp == m && np <= n;
      ++cases;
      if (johnstone_leq(je(mp, np), target) != expected) return false;
    }
    ++cases;
    if (johnstone_leq(jinf(mp), target)) return false;  // no ∞ element below
  }
  // members form a chain
  for (std::uint64_t a = 1; a <= n; ++a)
    for (std::uint64_t b = a; b <= n; ++b) {
      ++cases;
      if (!johnstone_leq(je(m, a), je(m, b))) return false;
    }
  return true;
}

// ub{(m,k) : k ∈ N} = {(m,∞)}:
//   (m',n') with n' finite is refuted by k = n'+1 (first clause needs
//   k ≤ n', second needs n' = ∞);
//   (m',∞) with m' ≠ m is refuted by k = m'+1 (first clause needs m' = m,
//   second k ≤ m');
//   (m,∞) absorbs every (m,k) through the first clause.
// Every witness is replayed through johnstone_leq.
bool column_upper_bounds(std::uint64_t m, std::uint64_t& cases) {
  for (std::uint64_t mp : {std::uint64_t{1}, std::uint64_t{2}, m, m + 1, m + 17}) {
    for (std::uint64_t np : {std::uint64_t{1}, std::uint64_t{5}, m, m + 9}) {
      ++cases;
      if (johnstone_leq(je(m, np + 1), je(mp, np))) return false;
    }
    if (mp != m) {
      ++cases;
      if (johnstone_leq(je(m, mp + 1), jinf(mp))) return false;
    }
  }
  for (std::uint64_t k : {std::uint64_t{1}, std::uint64_t{2}, m, m + 1,
                          std::uint64_t{1} << 40}) {
    ++cases;
    if (!johnstone_leq(je(m, k), jinf(m))) return false;
  }
  return true;
}

// (1,1) and (2,1) are incomparable yet both lie under every (m,∞), so no
// ↓(m,∞) is a chain in the full space.
bool infinity_not_down_linear(std::uint64_t m, std::uint64_t& cases) {
  cases += 4;
  return johnstone_leq(je(1, 1), jinf(m)) && johnstone_leq(je(2, 1), jinf(m)) &&
         !johnstone_leq(je(1, 1), je(2, 1)) && !johnstone_leq(je(2, 1), je(1, 1));
}

}  // namespace

JohnstoneClaims johnstone_claims(std::uint64_t M, std::uint64_t N) {
  JohnstoneClaims r;

  r.down_sets_of_finite_levels_are_chains = true;
  for (std::uint64_t m : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{3},
                          std::uint64_t{7}, std::uint64_t{50}})
    for (std::uint64_t n : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{4},
                            std::uint64_t{40}})
      if (!finite_level_down_sets(m, n, r.cases_checked))
        r.down_sets_of_finite_levels_are_chains = false;

  r.column_upper_bounds_single_infinity = true;
  r.infinity_ideals_never_down_linear = true;
  for (std::uint64_t m : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{3},
                          std::uint64_t{10}, std::uint64_t{999}}) {
    if (!column_upper_bounds(m, r.cases_checked))
      r.column_upper_bounds_single_infinity = false;
    if (!infinity_not_down_linear(m, r.cases_checked))
      r.infinity_ideals_never_down_linear = false;
  }

  FinitePoset t = johnstone_truncate(M, N);
  r.truncation_finite_levels_down_linear = true;
  r.truncation_infinity_chain_iff_width_one = true;
  for (std::uint64_t m = 1; m <= M; ++m) {
    for (std::uint64_t n = 1; n <= N; ++n) {
      ++r.cases_checked;
      if (!is_down_linear(t, truncation_index(m, n, N)))
        r.truncation_finite_levels_down_linear = false;
    }
    // with a single column the ∞ ideal is the column chain; a second column
    // contributes (m',1) ≤ (m,∞) and breaks it
    ++r.cases_checked;
    if (is_down_linear(t, truncation_index(m, 0, N)) != (M == 1))
      r.truncation_infinity_chain_iff_width_one = false;
  }
  return r;
}

AxiomSampleReport johnstone_axioms_sample(std::uint64_t seed, std::uint64_t trials) {
  if (trials == 0) throw InvalidInput("at least one trial required");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> coord(1, 1000);
  std::uniform_int_distribution<std::uint64_t> inf_die(0, 7);

  auto draw = [&]() {
    std::uint64_t m = coord(rng);
    if (inf_die(rng) == 0) return jinf(m);
    return je(m, coord(rng));
  };
  auto same = [](const JohnstoneElement& a, const JohnstoneElement& b) {
    return a.m == b.m && a.n == b.n;
  };

  AxiomSampleReport rep;
  rep.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    JohnstoneElement u = draw(), v = draw(), w = draw();
    if (!johnstone_leq(u, u)) ++rep.violations;
    if (johnstone_leq(u, v) && johnstone_leq(v, u) && !same(u, v)) ++rep.violations;
    if (johnstone_leq(u, v) && johnstone_leq(v, w) && !johnstone_leq(u, w))
      ++rep.violations;
  }
  return rep;
}

}  // namespace ordertop
