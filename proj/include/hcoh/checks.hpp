#pragma once

// Property suites shared by the CLI and the acceptance runner. Each check
// reports pass/fail plus a short detail line; none of them throws on a
// mathematical failure.

#include <string>
#include <vector>

#include "hcoh/restricted.hpp"

namespace hcoh {

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// d^1 d^0, d^2 d^1, d^1_* d^0 and d^2_* d^1_* vanish as matrix products.
/// Needs no cohomology, so it also runs on algebras whose complex is broken.
std::vector<Check> complex_checks(const Heisenberg& h);

/// Closed-form differentials against the brute-force formula on every basis
/// cochain (q = 0, 1, 2) and the basic-equation solution spaces against the
/// kernels (q = 1 for m >= 1, q = 2 for m >= 2).
std::vector<Check> oracle_checks(const OrdinaryComplex& oc);

/// Star-extension compatibility, well-definedness over three summands and
/// semilinearity, plus Frobenius-homomorphism semilinearity, on `trials`
/// random inputs. For p = 3 phi is drawn from ker d^2.
std::vector<Check> compat_checks(const OrdinaryComplex& oc, unsigned seed, int trials = 100);

/// dim H^2_* = dim H^2 + n - dim H^[p]_0 and the exactness checks.
std::vector<Check> sixterm_checks(const RestrictedComplex& rc);

}  // namespace hcoh
