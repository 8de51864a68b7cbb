#pragma once

#include <stdexcept>
#include <string>

namespace ordertop {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction / input errors.
struct InvalidInput : Error { using Error::Error; };
struct UnknownLabel : Error { using Error::Error; };
struct CycleDetected : Error { using Error::Error; };
struct InvalidElement : Error { using Error::Error; };

// Order-theoretic contract violations.
struct NotDirected : Error { using Error::Error; };
struct NotAFamily : Error { using Error::Error; };
struct NotT0 : Error { using Error::Error; };
struct NotClosed : Error { using Error::Error; };
struct NotScottClosed : Error { using Error::Error; };
struct NotALattice : Error { using Error::Error; };
struct NotReconstructible : Error { using Error::Error; };

// Exact computation refused rather than approximated.
struct SizeLimit : Error { using Error::Error; };

struct UnknownSuite : Error { using Error::Error; };

}  // namespace ordertop
