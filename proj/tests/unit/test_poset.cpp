#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "ordertop/errors.hpp"
#include "ordertop/poset.hpp"

using namespace ordertop;

namespace {

FinitePoset diamond() {
  return FinitePoset::from_covers({"bot", "x", "y", "top"},
                                  {{"bot", "x"}, {"bot", "y"}, {"x", "top"}, {"y", "top"}});
}

FinitePoset n_poset() {
  // a < b, c < b, c < d
  return FinitePoset::from_covers({"a", "b", "c", "d"},
                                  {{"a", "b"}, {"c", "b"}, {"c", "d"}});
}

Bits of(const FinitePoset& p, std::initializer_list<const char*> labels) {
  Bits b(p.size());
  for (auto* l : labels) b.set(p.index_of(l));
  return b;
}

}  // namespace

TEST_CASE("closure from edge list and basic queries") {
  auto p = diamond();
  CHECK(p.size() == 4);
  CHECK(p.leq(p.index_of("bot"), p.index_of("top")));
  CHECK_FALSE(p.leq(p.index_of("x"), p.index_of("y")));
  CHECK(p.down(p.index_of("top")).count() == 4);
  CHECK(p.up(p.index_of("bot")).count() == 4);
  CHECK(p.bottom() == p.index_of("bot"));
  CHECK(p.top() == p.index_of("top"));
  CHECK(p.minimal_elements() == of(p, {"bot"}));
  CHECK(p.maximal_elements() == of(p, {"top"}));
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(FinitePoset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
                  CycleDetected);
  CHECK_THROWS_AS(FinitePoset::from_covers({"a", "a"}, {}), InvalidInput);
  CHECK_THROWS_AS(FinitePoset::from_covers({"a"}, {{"a", "z"}}), UnknownLabel);
  CHECK_THROWS_AS(FinitePoset::from_covers({""}, {}), InvalidInput);
  // Longer cycle through three elements.
  CHECK_THROWS_AS(
      FinitePoset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}),
      CycleDetected);
}

TEST_CASE("lower and upper sets") {
  auto p = n_poset();
  CHECK(p.lower_closure(of(p, {"b"})) == of(p, {"a", "b", "c"}));
  CHECK(p.lower_closure(of(p, {"d"})) == of(p, {"c", "d"}));
  CHECK(p.upper_closure(of(p, {"c"})) == of(p, {"b", "c", "d"}));
  CHECK(p.is_lower_set(of(p, {"a", "c"})));
  CHECK_FALSE(p.is_lower_set(of(p, {"b"})));
  CHECK(p.is_upper_set(of(p, {"b", "d"})));
  CHECK(p.is_chain(of(p, {"a", "b"})));
  CHECK_FALSE(p.is_chain(of(p, {"a", "d"})));
  CHECK(p.is_antichain(of(p, {"a", "d"})));
  CHECK_FALSE(p.is_antichain(of(p, {"c", "d"})));
}

TEST_CASE("directedness and suprema") {
  auto p = diamond();
  CHECK(p.is_directed(of(p, {"bot", "x"})));
  CHECK_FALSE(p.is_directed(of(p, {"x", "y"})));  // no bound inside the set
  CHECK(p.is_directed(of(p, {"x", "y", "top"})));
  CHECK(p.directed_sup(of(p, {"bot", "x"})) == p.index_of("x"));
  CHECK(p.directed_sup(of(p, {"x", "y", "top"})) == p.index_of("top"));
  CHECK_THROWS_AS(p.directed_sup(of(p, {"x", "y"})), NotDirected);
  CHECK_THROWS_AS(p.directed_sup(Bits(4)), InvalidInput);
}

TEST_CASE("upper bounds and minimal upper bounds") {
  auto p = diamond();
  CHECK(p.upper_bounds(of(p, {"x", "y"})) == of(p, {"top"}));
  CHECK(p.minimal_upper_bounds(of(p, {"x", "y"})) == of(p, {"top"}));
  // bowtie: two minimal upper bounds
  auto q = FinitePoset::from_covers({"a", "b", "c", "d"},
                                    {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
  CHECK(q.minimal_upper_bounds(of(q, {"a", "b"})) == of(q, {"c", "d"}));
  // empty set: every element is a bound
  CHECK(p.upper_bounds(Bits(4)).count() == 4);
}

TEST_CASE("restriction and opposite") {
  auto p = diamond();
  auto c = p.restricted(of(p, {"bot", "x", "top"}));
  CHECK(c.size() == 3);
  CHECK(c.leq(c.index_of("bot"), c.index_of("top")));
  CHECK(c.is_chain(Bits::full(3)));
  auto o = p.opposite();
  CHECK(o.leq(o.index_of("top"), o.index_of("bot")));
  CHECK(o.opposite().same_relation(p));
}

TEST_CASE("adding a top element") {
  auto p = FinitePoset::antichain(3);
  auto q = p.with_top();
  CHECK(q.size() == 4);
  CHECK(q.top() == q.index_of("top"));
  for (std::size_t i = 0; i < 3; ++i) CHECK(q.leq(i, 3));
  // label collision gets uniquified
  auto r = FinitePoset::from_covers({"top"}, {}).with_top();
  CHECK(r.label(1) == "top'");
  CHECK(r.top() == 1);
}

TEST_CASE("cover pairs") {
  auto p = diamond();
  auto covers = p.cover_pairs();
  CHECK(covers.size() == 4);
  // transitive edge bot<top is not a cover
  for (auto [i, j] : covers)
    CHECK_FALSE((i == p.index_of("bot") && j == p.index_of("top")));
  CHECK(FinitePoset::chain(5).cover_pairs().size() == 4);
  CHECK(FinitePoset::antichain(5).cover_pairs().empty());
}

TEST_CASE("linear extension is order-compatible") {
  auto p = n_poset();
  auto order = p.linear_extension();
  std::vector<std::size_t> pos(p.size());
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = k;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.lt(i, j)) CHECK(pos[i] < pos[j]);
}

TEST_CASE("lower-set enumeration matches frozen counts") {
  CHECK(diamond().lower_sets().size() == 6);
  CHECK(n_poset().lower_sets().size() == 8);
  CHECK(FinitePoset::chain(4).lower_sets().size() == 5);
  CHECK(FinitePoset::antichain(3).lower_sets().size() == 8);
  CHECK(FinitePoset::antichain(10).lower_sets().size() == 1024);

  // Against a brute-force filter over all subsets.
  auto p = n_poset();
  std::size_t brute = 0;
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    Bits s(4);
    for (std::size_t t = 0; t < 4; ++t)
      if ((mask >> t) & 1) s.set(t);
    if (p.is_lower_set(s)) ++brute;
  }
  CHECK(p.lower_sets().size() == brute);

  // Deterministic order: by size, then member-lex; first is empty, last full.
  auto sets = diamond().lower_sets();
  CHECK(sets.front().none());
  CHECK(sets.back().count() == 4);
  CHECK(std::is_sorted(sets.begin(), sets.end(), Bits::family_less));

  CHECK_THROWS_AS(FinitePoset::antichain(30).lower_sets(1 << 20), SizeLimit);
}

TEST_CASE("directed-subset enumeration agrees with a subset filter") {
  for (auto p : {diamond(), n_poset(), FinitePoset::chain(3), FinitePoset::antichain(3)}) {
    std::set<std::vector<std::size_t>> enumerated;
    p.for_each_directed_subset(
        [&](const Bits& s) { CHECK(enumerated.insert(s.to_indices()).second); });
    std::set<std::vector<std::size_t>> brute;
    for (std::uint64_t mask = 1; mask < (1u << p.size()); ++mask) {
      Bits s(p.size());
      for (std::size_t t = 0; t < p.size(); ++t)
        if ((mask >> t) & 1) s.set(t);
      if (p.is_directed(s)) brute.insert(s.to_indices());
    }
    CHECK(enumerated == brute);
  }
}

TEST_CASE("minimal upper bound diagnostics on finite posets") {
  // Finite posets always satisfy both properties; the report verifies rather
  // than assumes this.
  for (auto p : {diamond(), n_poset(), FinitePoset::antichain(4), FinitePoset::chain(4)}) {
    auto rep = property_mM_report(p);
    CHECK(rep.has_m);
    CHECK(rep.has_M);
    CHECK_FALSE(rep.witness.has_value());
  }
  // Antichain count: 3-antichain has all 8 subsets as antichains.
  CHECK(property_mM_report(FinitePoset::antichain(3)).antichains_checked == 8);
  // Chain: only empty and singletons.
  CHECK(property_mM_report(FinitePoset::chain(4)).antichains_checked == 5);
  CHECK_THROWS_AS(property_mM_report(FinitePoset::antichain(40)), SizeLimit);
}
