#pragma once

// First-order restricted deformations over the dual numbers F[t]/(t^2).
//
// A restricted 2-cocycle (phi, omega) deforms h_m^lambda to
//   [x, y]_t   = [x, y] + t phi(x, y)
//   x^{[p],t}  = x^[p] + t omega(x)      (omega star-extended from its table)

#include <string>
#include <vector>

#include "hcoh/restricted.hpp"

namespace hcoh {

/// c0 + c1 t with t^2 = 0.
struct Dual {
  Elem c0 = 0, c1 = 0;
  friend bool operator==(const Dual&, const Dual&) = default;
};

/// Vector over F[t]/(t^2): a0 + t a1.
struct DualElement {
  Vec a0, a1;
  friend bool operator==(const DualElement&, const DualElement&) = default;
};

class DualDeformation {
 public:
  /// No cocycle check; used for negative controls.
  static DualDeformation unchecked(const Heisenberg& h, CompatiblePair pair);

  const Heisenberg& base() const noexcept { return h_; }
  const CompatiblePair& pair() const noexcept { return pair_; }

  DualElement lift(const AlgebraElement& x) const;
  DualElement bracket(const DualElement& x, const DualElement& y) const;
  /// p-map of a t-free element.
  DualElement p_map(const AlgebraElement& g) const;

  /// Coefficient of e_k in [e_i, e_j]_t.
  Dual bracket_coeff(int i, int j, int k) const;
  /// Coefficient of e_k in e_i^{[p],t}.
  Dual pmap_coeff(int i, int k) const;

 private:
  DualDeformation(const Heisenberg& h, CompatiblePair pair) : h_(h), pair_(std::move(pair)) {}
  Heisenberg h_;
  CompatiblePair pair_;
};

/// Throws Errc::not_a_cocycle unless the pair lies in ker d^2_*.
DualDeformation deform(const RestrictedComplex& rc, const CompatiblePair& pair);

struct AxiomReport {
  bool bracket_ok = true;    // antisymmetry and Jacobi on basis triples
  bool ad_ok = true;         // ad(g^{[p],t}) = (ad g)^p on basis pairs
  bool semilinear_ok = true; // (c g)^{[p],t} = c^p g^{[p],t}
  bool jacobson_checked = false;
  bool jacobson_ok = true;   // additivity with the s_i terms (p = 2, 3 only)
  std::vector<std::string> witnesses;

  bool ok() const noexcept { return bracket_ok && ad_ok && semilinear_ok && jacobson_ok; }
};

/// Random checks use a generator seeded from `seed`.
AxiomReport verify_axioms(const DualDeformation& d, unsigned seed = 1, int trials = 20);

struct Classification {
  bool trivial = false;           // class is zero in H^2_*
  bool ordinary_trivial = false;  // phi part lies in im d^1
  Vec normal_form;                // reduction modulo im d^1_*
  Vec class_coordinates;          // along the H^2_* representatives
};

/// Throws Errc::not_a_cocycle unless the pair lies in ker d^2_*.
Classification classify(const RestrictedComplex& rc, std::span<const Elem> pair_coords);

}  // namespace hcoh
