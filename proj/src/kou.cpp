#include "ordertop/kou.hpp"

#include <cctype>
#include <random>

#include "ordertop/errors.hpp"

namespace ordertop {

KouElement kou_point(Rational x) {
  if (x <= 0 || x > 1) throw InvalidElement("point must satisfy 0 < x <= 1");
  return KouPoint{std::move(x)};
}

KouElement kou_triple(Rational k, Rational a, Rational b) {
  if (k <= 0 || k >= 1) throw InvalidElement("triple needs 0 < k < 1");
  if (b <= 0 || b > a || a > 1) throw InvalidElement("triple needs 0 < b <= a <= 1");
  return KouTriple{std::move(k), std::move(a), std::move(b)};
}

Rational parse_rational(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) throw InvalidInput("not a rational: " + s);
  if (i < s.size()) {
    if (s[i] != '/') throw InvalidInput("not a rational: " + s);
    ++i;
    digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
    if (digits == 0 || i != s.size()) throw InvalidInput("not a rational: " + s);
  }
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw InvalidInput("not a rational: " + s);
  }
}

std::string rational_string(const Rational& r) { return r.str(); }

std::string kou_label(const KouElement& e) {
  if (const auto* p = std::get_if<KouPoint>(&e)) return rational_string(p->x);
  const auto& t = std::get<KouTriple>(e);
  return "(" + rational_string(t.k) + "," + rational_string(t.a) + "," +
         rational_string(t.b) + ")";
}

bool kou_leq(const KouElement& u, const KouElement& v) {
  if (const auto* up = std::get_if<KouPoint>(&u)) {
    const auto* vp = std::get_if<KouPoint>(&v);
    return vp && up->x == vp->x;  // a point is never beneath a triple
  }
  const auto& ut = std::get<KouTriple>(u);
  if (const auto* vt = std::get_if<KouTriple>(&v))
    return ut.k <= vt->k && ut.a == vt->a && ut.b == vt->b;
  const auto& x = std::get<KouPoint>(v).x;
  return ut.a == x || (ut.k * ut.b <= x && x < ut.b);
}

namespace {

struct RationalSampler {
  std::mt19937_64 rng;
  std::uniform_int_distribution<std::uint64_t> den{1, 1000};

  explicit RationalSampler(std::uint64_t seed) : rng(seed) {}

  // uniform-ish over (0, 1] with denominator <= 1000
  Rational unit() {
    std::uint64_t q = den(rng);
    std::uniform_int_distribution<std::uint64_t> num(1, q);
    return Rational(num(rng), q);
  }
  // strictly inside (0, 1)
  Rational open_unit() {
    std::uint64_t q = 0;
    while (q < 2) q = den(rng);
    std::uniform_int_distribution<std::uint64_t> num(1, q - 1);
    return Rational(num(rng), q);
  }
  KouTriple triple() {
    Rational a = unit();
    Rational b = a * unit();  // 0 < b <= a
    return std::get<KouTriple>(kou_triple(open_unit(), std::move(a), std::move(b)));
  }
  KouElement element() {
    if (rng() % 4 == 0) return kou_point(unit());
    return triple();
  }
};

bool kou_same(const KouElement& u, const KouElement& v) {
  if (const auto* up = std::get_if<KouPoint>(&u)) {
    const auto* vp = std::get_if<KouPoint>(&v);
    return vp && up->x == vp->x;
  }
  const auto* vt = std::get_if<KouTriple>(&v);
  if (!vt) return false;
  const auto& ut = std::get<KouTriple>(u);
  return ut.k == vt->k && ut.a == vt->a && ut.b == vt->b;
}

}  // namespace

KouClaims kou_claims(std::uint64_t seed, std::uint64_t trials) {
  if (trials == 0) throw InvalidInput("at least one trial required");
  KouClaims r;
  r.down_sets_are_chains = true;
  r.upper_bounds_single_point = true;
  r.ladder_independent_of_k = true;

  RationalSampler s(seed);
  const Rational half(1, 2);
  for (std::uint64_t t = 0; t < trials; ++t) {
    KouTriple u = s.triple();
    KouElement target = kou_triple(u.k, u.a, u.b);

    // ↓(h,a,b) holds exactly the (k,a,b) with k ≤ h and no point: replay the
    // closed form on same-column probes, perturbed columns, and the point a.
    Rational below = u.k * half;            // k/2 < k
    Rational above = (u.k + 1) * half;      // (k+1)/2 in (k,1)
    bool ok = kou_leq(kou_triple(below, u.a, u.b), target) &&
              kou_leq(kou_triple(u.k, u.a, u.b), target) &&
              !kou_leq(kou_triple(above, u.a, u.b), target) &&
              !kou_leq(kou_triple(u.k, u.a, u.b * half), target) &&
              !kou_leq(kou_point(u.a), target) &&
              kou_leq(kou_triple(below, u.a, u.b), kou_triple(u.k, u.a, u.b));
    r.cases_checked += 6;
    if (u.a * half >= u.b) {  // shrunken first coordinate still a valid triple
      ok = ok && !kou_leq(kou_triple(u.k, u.a * half, u.b), target);
      r.cases_checked += 1;
    }
    if (!ok) r.down_sets_are_chains = false;

    // ub{(k,x,x)} = {x}: a triple bound (h,a,b) is refuted by the chain
    // member with k0 = (h+1)/2 > h; a point bound y < x by k1 = (y/x+1)/2
    // (then k1·x > y); a point bound y > x by any member; x itself absorbs
    // every member through the a = x clause, independent of k.
    Rational x = s.unit();
    KouTriple bound = s.triple();
    Rational k0 = (bound.k + 1) * half;
    r.cases_checked += 1;
    if (kou_leq(kou_triple(k0, x, x), kou_triple(bound.k, bound.a, bound.b)))
      r.upper_bounds_single_point = false;

    Rational y = s.unit();
    if (y != x) {
      Rational k1 = y < x ? (y / x + 1) * half : half;
      r.cases_checked += 1;
      if (kou_leq(kou_triple(k1, x, x), kou_point(y)))
        r.upper_bounds_single_point = false;
    }
    for (const Rational& k : {below, half, above}) {
      r.cases_checked += 1;
      if (!kou_leq(kou_triple(k, x, x), kou_point(x)))
        r.ladder_independent_of_k = false;
    }
  }

  r.axioms = kou_axioms_sample(seed + 1, trials);
  return r;
}

AxiomSampleReport kou_axioms_sample(std::uint64_t seed, std::uint64_t trials) {
  if (trials == 0) throw InvalidInput("at least one trial required");
  RationalSampler s(seed);
  AxiomSampleReport rep;
  rep.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    KouElement u = s.element(), v = s.element(), w = s.element();
    if (!kou_leq(u, u)) ++rep.violations;
    if (kou_leq(u, v) && kou_leq(v, u) && !kou_same(u, v)) ++rep.violations;
    if (kou_leq(u, v) && kou_leq(v, w) && !kou_leq(u, w)) ++rep.violations;
  }
  return rep;
}

}  // namespace ordertop
