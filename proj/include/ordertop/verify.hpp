#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ordertop {

struct VerificationFailure {
  std::string canonical;  // canonical hex of the offending poset
  std::string assertion;  // which check broke, with details
};

struct SizeSlice {
  std::size_t n = 0;
  std::uint64_t checked = 0;
};

struct VerificationReport {
  std::string suite;
  std::size_t n = 0;
  std::uint64_t checked = 0;
  std::vector<VerificationFailure> failures;
  std::vector<SizeSlice> slices;    // work per poset size (pairs for `uniqueness`)
  std::vector<std::string> notes;
  std::uint64_t elapsed_ms = 0;
  bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& verification_suites();

// Runs the named suite over every poset class of size <= n.  `jobs` workers
// split the instance list; reports are identical for any worker count.
// Throws UnknownSuite / SizeLimit.
VerificationReport verify(const std::string& suite, std::size_t n,
                          std::size_t jobs = 1);

}  // namespace ordertop
