#include "ordertop/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "ordertop/classify.hpp"
#include "ordertop/enumerate.hpp"
#include "ordertop/errors.hpp"
#include "ordertop/iso.hpp"
#include "ordertop/lattice.hpp"
#include "ordertop/sobriety.hpp"
#include "ordertop/space.hpp"

namespace ordertop {

namespace {

// Direct lattice-isomorphism search is run as a cross-check only below this
// lattice size; the reconstruction oracle covers every pair regardless.
constexpr std::size_t kDirectIsoCap = 40;
// Brute-force beneath routes cross-validate the closed form on small lattices.
constexpr std::size_t kBeneathScanCap = 12;
// The literal-subset quasicontinuity scan is exponential in |P|.
constexpr std::size_t kQuasiScanCap = 4;

struct Instance {
  FinitePoset poset;
  std::string canon;
};

std::vector<Instance> pool_up_to(std::size_t n) {
  std::vector<Instance> pool;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& p : enumerate_posets(k)) {
      std::string c = canonical_hex(p);
      pool.push_back(Instance{std::move(p), std::move(c)});
    }
  return pool;
}

// Deterministic parallel map: results land in per-item slots, so the merge
// order is the item order no matter how workers interleave.
void parallel_items(std::size_t count, std::size_t jobs,
                    const std::function<void(std::size_t)>& work) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  std::size_t spawn = std::min(jobs, count);
  workers.reserve(spawn);
  for (std::size_t w = 0; w < spawn; ++w)
    workers.emplace_back([&]() {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        work(i);
    });
  for (auto& t : workers) t.join();
}

using FailureSlots = std::vector<std::vector<VerificationFailure>>;

void collect(VerificationReport& report, FailureSlots& slots) {
  for (auto& s : slots)
    for (auto& f : s) report.failures.push_back(std::move(f));
}

AbstractLattice closed_lattice(const FinitePoset& p) {
  return AbstractLattice::from_family(SetFamily(p.size(), p.lower_sets()));
}

// ---- uniqueness ------------------------------------------------------------

void run_uniqueness(VerificationReport& report, const std::vector<Instance>& pool,
                    std::size_t jobs) {
  struct Prep {
    std::string canon_recon;
    FinitePoset lattice_poset;
    std::size_t lattice_size;
  };
  std::vector<Prep> prep;
  prep.reserve(pool.size());
  for (const auto& inst : pool) {
    auto lat = closed_lattice(inst.poset);
    FinitePoset recon = reconstruct_poset(lat);
    prep.push_back(Prep{canonical_hex(recon), lat.as_poset(), lat.size()});
  }
  // the reconstruction oracle itself: C_sigma determines P
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (prep[i].canon_recon != pool[i].canon)
      report.failures.push_back(
          {pool[i].canon, "uniqueness: reconstruction not isomorphic to the source"});

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j) pairs.emplace_back(i, j);

  FailureSlots slots(pairs.size());
  parallel_items(pairs.size(), jobs, [&](std::size_t t) {
    auto [i, j] = pairs[t];
    bool posets_iso = pool[i].canon == pool[j].canon;
    bool recon_iso = prep[i].canon_recon == prep[j].canon_recon;
    if (recon_iso != posets_iso)
      slots[t].push_back({pool[i].canon, "uniqueness: reconstruction route vs " +
                                             pool[j].canon + " disagrees"});
    if (prep[i].lattice_size <= kDirectIsoCap && prep[j].lattice_size <= kDirectIsoCap) {
      bool lattice_iso =
          poset_isomorphism(prep[i].lattice_poset, prep[j].lattice_poset).has_value();
      if (lattice_iso != posets_iso)
        slots[t].push_back({pool[i].canon, "uniqueness: lattice-isomorphism route vs " +
                                               pool[j].canon + " disagrees"});
    }
  });
  collect(report, slots);
  report.checked = pairs.size();

  // per-size pair counts
  for (std::size_t k = 1; k <= report.n; ++k) {
    std::uint64_t within = 0;
    for (auto [i, j] : pairs)
      if (pool[i].poset.size() == k && pool[j].poset.size() == k) ++within;
    report.slices.push_back({k, within});
  }
}

// ---- per-poset suites ------------------------------------------------------

void check_kappa(const Instance& inst, std::vector<VerificationFailure>& out) {
  const FinitePoset& p = inst.poset;
  auto lat = closed_lattice(p);
  const auto& family = p.lower_sets();
  Bits kappa = c_compact_elements(lat);

  Bits expected(lat.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    if (family[i].none()) expected.set(i);
  for (std::size_t x = 0; x < p.size(); ++x) {
    auto it = std::lower_bound(family.begin(), family.end(), p.down(x), Bits::family_less);
    expected.set(static_cast<std::size_t>(it - family.begin()));
  }
  if (kappa != expected)
    out.push_back({inst.canon, "kappa: C-compact elements differ from the principal "
                               "ideals plus the empty set"});

  if (lat.size() <= kBeneathScanCap)
    for (std::size_t x = 0; x < lat.size(); ++x)
      for (std::size_t y = 0; y < lat.size(); ++y) {
        bool closed_form = beneath(lat, x, y);
        if (closed_form != beneath_by_subset_scan(lat, x, y) ||
            closed_form != beneath_by_lower_set_scan(lat, x, y))
          out.push_back({inst.canon, "kappa: beneath routes disagree"});
      }
}

void check_fact2(const Instance& inst, std::vector<VerificationFailure>& out) {
  auto r = fact2_check(FiniteSpace::scott_space(inst.poset));
  if (!r.agree) out.push_back({inst.canon, "fact2: equivalence fails"});
  if (!r.lhs)
    out.push_back({inst.canon, "fact2: finite Scott space not sober+TD"});
}

void check_quasicontinuity(const Instance& inst,
                           std::vector<VerificationFailure>& out) {
  const FinitePoset& p = inst.poset;
  auto c = quasicontinuity_report(p);
  if (!c.quasicontinuous)
    out.push_back({inst.canon, "quasicontinuity: poset not quasicontinuous"});
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!c.quasicontinuous_element[i])
      out.push_back({inst.canon, "quasicontinuity: element fails"});
    if (c.down_linear[i] && !c.quasicontinuous_element[i])
      out.push_back({inst.canon, "quasicontinuity: down-linear element not "
                                 "quasicontinuous"});
  }
  if (p.size() <= kQuasiScanCap && !quasicontinuous_by_subset_scan(p))
    out.push_back({inst.canon, "quasicontinuity: subset scan disagrees"});
}

void check_restriction(const Instance& inst, std::vector<VerificationFailure>& out) {
  const FinitePoset& p = inst.poset;
  for (const auto& a : p.lower_sets()) {
    if (a.none()) continue;
    if (!restriction_check(p, a))
      out.push_back({inst.canon, "restriction: lower sets of the restriction differ "
                                 "from the filtered lower sets"});
  }
}

void check_top_extension(const Instance& inst, std::vector<VerificationFailure>& out) {
  const FinitePoset& p = inst.poset;
  FinitePoset star = p.with_top();
  if (star.size() != p.size() + 1) {
    out.push_back({inst.canon, "top-extension: size"});
    return;
  }
  Bits old = Bits::full(star.size());
  old.reset(star.size() - 1);
  if (!star.restricted(old).same_relation(p))
    out.push_back({inst.canon, "top-extension: restriction does not recover the base"});

  auto lat = closed_lattice(star);
  if (canonical_hex(reconstruct_poset(lat)) != canonical_hex(star))
    out.push_back({inst.canon, "top-extension: reconstruction mismatch"});

  for (std::size_t x = 0; x < p.size(); ++x)
    if (is_down_linear(star, x) != is_down_linear(p, x))
      out.push_back({inst.canon, "top-extension: down-linear flag changed"});
  if (!quasicontinuity_report(star).quasicontinuous)
    out.push_back({inst.canon, "top-extension: extension not quasicontinuous"});
}

void check_sobriety(const Instance& inst, std::vector<VerificationFailure>& out) {
  auto x = FiniteSpace::scott_space(inst.poset);
  auto rep = sobriety_report(x);
  if (!rep.is_sober) out.push_back({inst.canon, "sobriety: Scott space not sober"});
  if (!rep.is_bounded_sober)
    out.push_back({inst.canon, "sobriety: Scott space not bounded-sober"});

  auto s = hull_kernel_sobrification(x);
  if (!s.sober_validated || !s.closed_lattice_iso || !s.specialization_is_inclusion)
    out.push_back({inst.canon, "sobriety: sobrification structure checks failed"});
  if (!homeomorphism(x, s.space).has_value())
    out.push_back({inst.canon, "sobriety: sobrification not homeomorphic"});
  if (is_scott_sobrifiable(x) != rep.is_sober)
    out.push_back({inst.canon, "sobriety: sobrifiable flag diverges from soberness"});
}

using PerPosetCheck = void (*)(const Instance&, std::vector<VerificationFailure>&);

void run_per_poset(VerificationReport& report, const std::vector<Instance>& pool,
                   std::size_t jobs, PerPosetCheck check) {
  FailureSlots slots(pool.size());
  parallel_items(pool.size(), jobs,
                 [&](std::size_t i) { check(pool[i], slots[i]); });
  collect(report, slots);
  report.checked = pool.size();
  for (std::size_t k = 1; k <= report.n; ++k) {
    std::uint64_t within = 0;
    for (const auto& inst : pool)
      if (inst.poset.size() == k) ++within;
    report.slices.push_back({k, within});
  }
}

}  // namespace

const std::vector<std::string>& verification_suites() {
  static const std::vector<std::string> names = {
      "uniqueness", "kappa",         "fact2",    "quasicontinuity",
      "restriction", "top-extension", "sobriety", "all"};
  return names;
}

VerificationReport verify(const std::string& suite, std::size_t n,
                          std::size_t jobs) {
  const auto& names = verification_suites();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw UnknownSuite("unknown verification suite: " + suite);
  if (n == 0 || n > 7) throw SizeLimit("verification supports sizes 1..7");

  auto t0 = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = suite;
  report.n = n;

  if (suite == "all") {
    for (const auto& name : names) {
      if (name == "all") continue;
      VerificationReport sub = verify(name, n, jobs);
      report.checked += sub.checked;
      for (auto& f : sub.failures) {
        f.assertion = name + ": " + f.assertion;
        report.failures.push_back(std::move(f));
      }
      report.notes.push_back(name + ": checked " + std::to_string(sub.checked));
    }
  } else {
    auto pool = pool_up_to(n);
    if (suite == "uniqueness")
      run_uniqueness(report, pool, jobs);
    else if (suite == "kappa")
      run_per_poset(report, pool, jobs, check_kappa);
    else if (suite == "fact2")
      run_per_poset(report, pool, jobs, check_fact2);
    else if (suite == "quasicontinuity")
      run_per_poset(report, pool, jobs, check_quasicontinuity);
    else if (suite == "restriction")
      run_per_poset(report, pool, jobs, check_restriction);
    else if (suite == "top-extension")
      run_per_poset(report, pool, jobs, check_top_extension);
    else if (suite == "sobriety")
      run_per_poset(report, pool, jobs, check_sobriety);
  }

  report.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
  return report;
}

}  // namespace ordertop
