#include "doctest.h"
#include "ordertop/classify.hpp"
#include "ordertop/errors.hpp"

using namespace ordertop;

namespace {

Bits of(std::size_t n, std::initializer_list<std::size_t> xs) {
  Bits b(n);
  for (auto x : xs) b.set(x);
  return b;
}

FinitePoset diamond() {
  return FinitePoset::from_covers({"b", "x", "y", "t"},
                                  {{"b", "x"}, {"b", "y"}, {"x", "t"}, {"y", "t"}});
}

// a, b < c < d with a, b incomparable
FinitePoset en() {
  return FinitePoset::from_covers({"a", "b", "c", "d"},
                                  {{"a", "c"}, {"b", "c"}, {"c", "d"}});
}

std::vector<FinitePoset> samples() {
  return {FinitePoset::chain(1), FinitePoset::chain(3), FinitePoset::antichain(3),
          diamond(), en()};
}

}  // namespace

TEST_CASE("down-linear elements") {
  auto c = FinitePoset::chain(4);
  for (std::size_t i = 0; i < 4; ++i) CHECK(is_down_linear(c, i));
  auto d = diamond();
  CHECK_FALSE(is_down_linear(d, d.index_of("t")));
  CHECK(is_down_linear(d, d.index_of("x")));
  // minimal elements always qualify
  for (const auto& p : samples())
    p.minimal_elements().for_each([&](std::size_t i) { CHECK(is_down_linear(p, i)); });
  CHECK_THROWS_AS(is_down_linear(c, 9), InvalidElement);
}

TEST_CASE("way-below on finite sets") {
  for (const auto& p : samples())
    for (std::size_t x = 0; x < p.size(); ++x)
      CHECK(way_below_fin(p, Bits::single(p.size(), x), x));

  auto two = FinitePoset::chain(2);
  CHECK(way_below_fin(two, of(2, {0}), 1));
  auto d = diamond();
  CHECK_FALSE(way_below_fin(d, of(4, {d.index_of("x")}), d.index_of("y")));
  CHECK(way_below_fin(d, of(4, {d.index_of("x")}), d.index_of("t")));
  CHECK_THROWS_AS(way_below_fin(d, Bits(4), 0), InvalidInput);

  // the reduction matches the directed-subset definition on every (F, x)
  for (const auto& p : samples()) {
    const std::size_t n = p.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      Bits f(n);
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::uint64_t{1} << i)) f.set(i);
      for (std::size_t x = 0; x < n; ++x)
        CHECK(way_below_fin(p, f, x) == way_below_fin_by_directed_scan(p, f, x));
    }
  }
}

TEST_CASE("fin(x) representatives") {
  auto d = diamond();
  auto reps = fin_minimal_upsets(d, d.index_of("t"));
  REQUIRE(reps.size() == 1);
  CHECK(reps[0] == of(4, {d.index_of("t")}));
  // each representative is an upper set that certifies way-below
  for (const auto& p : samples())
    for (std::size_t x = 0; x < p.size(); ++x)
      for (const auto& u : fin_minimal_upsets(p, x)) {
        CHECK(p.is_upper_set(u));
        CHECK(way_below_fin(p, p.minimal_of(u), x));
      }
}

TEST_CASE("quasicontinuity") {
  for (const auto& p : samples()) {
    auto c = quasicontinuity_report(p);
    CHECK(c.quasicontinuous);
    CHECK(quasicontinuous_by_subset_scan(p));
    for (std::size_t i = 0; i < p.size(); ++i) {
      CHECK(c.quasicontinuous_element[i]);
      if (c.down_linear[i]) CHECK(c.quasicontinuous_element[i]);
    }
  }
  CHECK(quasicontinuity_report(FinitePoset::chain(1)).quasicontinuous);
}

TEST_CASE("theorem hypotheses") {
  auto chain3 = hypothesis_check(FinitePoset::chain(3));
  CHECK(chain3.dl_sup);
  CHECK(chain3.cor16_hypotheses);
  CHECK(chain3.thm15_hypotheses);
  CHECK(chain3.thm22_hypotheses);
  for (std::size_t n = 1; n <= 5; ++n)
    CHECK(hypothesis_check(FinitePoset::chain(n)).dl_sup);

  auto r = hypothesis_check(en());
  CHECK_FALSE(r.dl_sup);
  CHECK(r.thm15_hypotheses);
  CHECK_FALSE(r.cor16_hypotheses);
  CHECK_FALSE(r.thm22_hypotheses);

  for (const auto& p : samples()) {
    auto c = hypothesis_check(p);
    if (c.cor16_hypotheses) CHECK(c.thm15_hypotheses);
  }
}

TEST_CASE("scott-closed restriction") {
  for (const auto& p : samples()) {
    for (std::size_t x = 0; x < p.size(); ++x) CHECK(restriction_check(p, p.down(x)));
    CHECK(restriction_check(p, Bits::full(p.size())));
    CHECK_THROWS_AS(restriction_check(p, Bits(p.size())), NotScottClosed);
  }
  auto d = diamond();
  CHECK_THROWS_AS(restriction_check(d, of(4, {d.index_of("t")})), NotScottClosed);
}
