#pragma once

// Closed-form dimensions and generator lists for H^1, H^1_*, H^2, H^2_* and
// H^[p]_0, and the harness that checks them against the computed spaces.

#include <optional>
#include <string>
#include <vector>

#include "hcoh/restricted.hpp"

namespace hcoh {

enum class Space { H1, H1Star, H2, H2Star, Hp0 };

const char* to_string(Space s) noexcept;
/// "h1", "h1star", "h2", "h2star", "hp0" (also accepts the to_string names).
Space parse_space(const std::string& tag);

struct Generator {
  std::string label;
  Vec coords;  // C^1, C^2, C^2_* or F^n coordinates depending on the space
};

struct Prediction {
  Space space = Space::H1;
  bool applicable = true;
  std::string note;  // the theorem case used, or why there is none
  size_t dim = 0;
  std::vector<Generator> generators;  // a claimed basis of classes
  std::vector<Generator> excluded;    // cochains claimed not to be cocycles of the space
  std::optional<std::vector<Generator>> coboundary_basis;
  std::string reading;  // how ambiguous index ranges were read
};

struct Verdict {
  Space space = Space::H1;
  bool covered = true;
  std::optional<size_t> predicted_dim;
  size_t computed_dim = 0;
  bool pass = true;
  std::vector<std::string> diagnostics;
};

/// 2m^2 + m + 1.
size_t h1_formula(int m);
/// 5 for m = 1, 8/3 m^3 - 2/3 m for m >= 2.
size_t h2_formula(int m);

/// Closed-form generator lists; each is a vector of coordinates in C^q.
std::vector<Generator> h1_theorem_basis(const Heisenberg& h);
std::vector<Generator> h2_theorem_basis(const Heisenberg& h);  // m = 1 list or A_m
std::vector<Generator> im_d0_basis(const Heisenberg& h);
std::vector<Generator> im_d1_basis(const Heisenberg& h);

std::vector<Prediction> predicted(const Heisenberg& h);

std::vector<Verdict> verify(const RestrictedComplex& rc);
inline std::vector<Verdict> verify(const Heisenberg& h) { return verify(RestrictedComplex(h)); }

/// "e^{1,2}_3 + 2*ebar^1_5" style rendering of a C^2_* coordinate vector.
std::string format_pair(const Heisenberg& h, std::span<const Elem> coords);

}  // namespace hcoh
