#include "ordertop/lattice.hpp"

#include <algorithm>

#include "ordertop/errors.hpp"

namespace ordertop {

AbstractLattice AbstractLattice::from_order(std::vector<Bits> up_rows) {
  const std::size_t k = up_rows.size();
  if (k == 0) throw NotALattice("empty lattice");
  if (k > kLatticeSizeCap)
    throw SizeLimit("lattice size " + std::to_string(k) + " exceeds cap " +
                    std::to_string(kLatticeSizeCap));
  AbstractLattice l;
  l.up_ = std::move(up_rows);
  l.down_.assign(k, Bits(k));
  for (std::size_t i = 0; i < k; ++i) {
    if (l.up_[i].universe() != k) throw NotALattice("order row has wrong universe");
    if (!l.up_[i].test(i)) throw NotALattice("order is not reflexive");
  }
  for (std::size_t i = 0; i < k; ++i) {
    l.up_[i].for_each([&](std::size_t j) {
      if (i != j && l.up_[j].test(i)) throw NotALattice("order is not antisymmetric");
      if (!l.up_[j].subset_of(l.up_[i])) throw NotALattice("order is not transitive");
      l.down_[j].set(i);
    });
  }

  auto least_of = [&](const Bits& c) -> std::size_t {
    std::size_t cur = c.first();
    if (cur == Bits::npos) return Bits::npos;
    c.for_each([&](std::size_t x) {
      if (l.up_[x].test(cur)) cur = x;
    });
    return c.subset_of(l.up_[cur]) ? cur : Bits::npos;
  };
  auto greatest_of = [&](const Bits& c) -> std::size_t {
    std::size_t cur = c.first();
    if (cur == Bits::npos) return Bits::npos;
    c.for_each([&](std::size_t x) {
      if (l.up_[cur].test(x)) cur = x;
    });
    return c.subset_of(l.down_[cur]) ? cur : Bits::npos;
  };

  l.bottom_ = least_of(Bits::full(k));
  l.top_ = greatest_of(Bits::full(k));
  if (l.bottom_ == Bits::npos) throw NotALattice("no bottom element");
  if (l.top_ == Bits::npos) throw NotALattice("no top element");

  l.join_.assign(k * k, 0);
  l.meet_.assign(k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      std::size_t jo = least_of(l.up_[i] & l.up_[j]);
      if (jo == Bits::npos)
        throw NotALattice("pair without a least upper bound");
      std::size_t me = greatest_of(l.down_[i] & l.down_[j]);
      if (me == Bits::npos)
        throw NotALattice("pair without a greatest lower bound");
      l.join_[i * k + j] = l.join_[j * k + i] = static_cast<std::uint32_t>(jo);
      l.meet_[i * k + j] = l.meet_[j * k + i] = static_cast<std::uint32_t>(me);
    }
  return l;
}

AbstractLattice AbstractLattice::from_family(const SetFamily& fam) {
  const std::size_t k = fam.size();
  if (k > kLatticeSizeCap)
    throw SizeLimit("family size " + std::to_string(k) + " exceeds lattice cap");
  std::vector<Bits> up(k, Bits(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (fam.member(i).subset_of(fam.member(j))) up[i].set(j);
  return from_order(std::move(up));
}

std::size_t AbstractLattice::join_of(const Bits& s) const {
  std::size_t acc = bottom_;
  s.for_each([&](std::size_t i) { acc = join(acc, i); });
  return acc;
}

std::size_t AbstractLattice::meet_of(const Bits& s) const {
  std::size_t acc = top_;
  s.for_each([&](std::size_t i) { acc = meet(acc, i); });
  return acc;
}

FinitePoset AbstractLattice::as_poset() const {
  std::vector<std::string> labels;
  labels.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) labels.push_back("L" + std::to_string(i));
  return FinitePoset(std::move(labels), up_);
}

std::vector<IrredFlags> irreducibility_report(const AbstractLattice& l) {
  const std::size_t k = l.size();
  std::vector<IrredFlags> flags(k);
  for (std::size_t a = 0; a < k; ++a) flags[a].irreducible = true;
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = x; y < k; ++y) {
      std::size_t a = l.join(x, y);
      if (a != x && a != y) flags[a].irreducible = false;
    }
  for (std::size_t a = 0; a < k; ++a) {
    Bits strict = l.down(a);
    strict.reset(a);
    flags[a].strongly_irreducible = strict.none() || l.join_of(strict) != a;
  }
  return flags;
}

bool beneath(const AbstractLattice& l, std::size_t x, std::size_t y) {
  // The largest Scott-closed set avoiding the filter of x is its complement;
  // every witness against x-beneath-y sits inside it.
  Bits c = l.up(x).complement();
  if (c.none()) return true;
  return !l.leq(y, l.join_of(c));
}

bool beneath_by_subset_scan(const AbstractLattice& l, std::size_t x, std::size_t y,
                            std::size_t max_size) {
  // Quantifies over arbitrary nonempty subsets B, asking for x <= b instead
  // of membership: B and its lower closure have the same join, so this is
  // equivalent to the Scott-closed definition.
  const std::size_t k = l.size();
  if (k > max_size) throw SizeLimit("subset scan over 2^" + std::to_string(k) + " sets");
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    Bits s(k);
    for (std::size_t t = 0; t < k; ++t)
      if ((mask >> t) & 1) s.set(t);
    if (!l.leq(y, l.join_of(s))) continue;
    if (!s.intersects(l.up(x))) return false;
  }
  return true;
}

bool beneath_by_lower_set_scan(const AbstractLattice& l, std::size_t x, std::size_t y,
                               std::size_t budget) {
  // Definitional route: nonempty Scott-closed subsets are the nonempty lower
  // sets of a finite lattice, and the definition asks for literal membership.
  for (const auto& s : l.as_poset().lower_sets(budget)) {
    if (s.none()) continue;
    if (!l.leq(y, l.join_of(s))) continue;
    if (!s.test(x)) return false;
  }
  return true;
}

Bits c_compact_elements(const AbstractLattice& l) {
  Bits r(l.size());
  for (std::size_t x = 0; x < l.size(); ++x)
    if (beneath(l, x, x)) r.set(x);
  return r;
}

bool vee_irreducible(const AbstractLattice& l, std::size_t a) {
  if (a == l.bottom()) return false;
  for (std::size_t x = 0; x < l.size(); ++x)
    for (std::size_t y = x; y < l.size(); ++y)
      if (l.join(x, y) == a && x != a && y != a) return false;
  return true;
}

Bits vee_irreducible_elements(const AbstractLattice& l) {
  // Fast route: a is join-irreducible iff the join of its strict down-set
  // falls short of a (and a is not bottom).
  Bits r(l.size());
  for (std::size_t a = 0; a < l.size(); ++a) {
    if (a == l.bottom()) continue;
    Bits strict = l.down(a);
    strict.reset(a);
    if (l.join_of(strict) != a) r.set(a);
  }
  return r;
}

FinitePoset reconstruct_poset(const AbstractLattice& l) {
  auto gens = vee_irreducible_elements(l).to_indices();
  const std::size_t m = gens.size();
  std::vector<std::string> labels;
  std::vector<Bits> up(m, Bits(m));
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back("x" + std::to_string(a));
    for (std::size_t b = 0; b < m; ++b)
      if (l.leq(gens[a], gens[b])) up[a].set(b);
  }
  FinitePoset q(std::move(labels), std::move(up));

  // Birkhoff check: a |-> {generators below a} must be a bijection onto the
  // lower sets of q that reflects order.
  std::vector<Bits> image;
  image.reserve(l.size());
  for (std::size_t a = 0; a < l.size(); ++a) {
    Bits img(m);
    for (std::size_t t = 0; t < m; ++t)
      if (l.leq(gens[t], a)) img.set(t);
    image.push_back(std::move(img));
  }
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (a != b && image[a] == image[b])
        throw NotReconstructible("two elements share the same generator set");
      if (image[a].subset_of(image[b]) && !l.leq(a, b))
        throw NotReconstructible("generator sets do not reflect the order");
    }
  std::size_t lower_set_count;
  try {
    lower_set_count = q.lower_sets(l.size()).size();
  } catch (const SizeLimit&) {
    throw NotReconstructible("more lower sets of the generator poset than elements");
  }
  if (lower_set_count != l.size())
    throw NotReconstructible("generator poset has " + std::to_string(lower_set_count) +
                             " lower sets for " + std::to_string(l.size()) + " elements");
  return q;
}

}  // namespace ordertop
