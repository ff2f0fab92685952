#pragma once

// Partial restricted cochain complex of h_m^lambda with adjoint coefficients.
//
// A restricted 2-cochain (phi, omega) is stored as the phi coordinates
// followed by the n x n table of omega(e_i) values, row i holding the
// coordinates of omega(e_i). The omega part of a coordinate vector therefore
// has coordinates along the Frobenius basis ebar^i_j. The full map omega is
// recovered from the table by star_extend.
//
// Restricted 3-cochains are only ever needed through d^2_*: an element is
// represented by its zeta part and the table of eta(e_i, e_j), which fixes
// eta when zeta = 0.

#include <string>
#include <vector>

#include "hcoh/cochain.hpp"

namespace hcoh {

/// Frobenius-semilinear map: sum a_i e_i -> sum_j (sum_i a_i^p T[i][j]) e_j.
class FrobeniusHom {
 public:
  FrobeniusHom(const Heisenberg& h, Matrix table);
  /// ebar^i_j: a -> a_i^p e_j.
  static FrobeniusHom unit(const Heisenberg& h, int i, int j);

  const Matrix& table() const noexcept { return table_; }
  AlgebraElement apply(const Heisenberg& h, const AlgebraElement& g) const;
  std::vector<AlgebraElement> values() const;

 private:
  Matrix table_;
};

struct CompatiblePair {
  Cochain phi;                        // degree 2
  std::vector<AlgebraElement> omega;  // omega(e_1) .. omega(e_n)
  friend bool operator==(const CompatiblePair&, const CompatiblePair&) = default;
};

/// Index of ebar^i_j inside a C^2_* coordinate vector.
size_t omega_position(const Heisenberg& h, int i, int j);
size_t restricted2_dim(const Heisenberg& h);
Vec pair_coords(const Heisenberg& h, const CompatiblePair& pair);
CompatiblePair pair_from_coords(const Heisenberg& h, std::span<const Elem> coords);

/// Extra term of omega(g + h) - omega(g) - omega(h) for a phi-compatible omega.
AlgebraElement compatibility_correction(const Heisenberg& h, const Cochain& phi, const AlgebraElement& g,
                                        const AlgebraElement& k);

/// Value at g of the phi-compatible map with omega(e_i) = omega_table[i-1],
/// accumulated one coordinate at a time. For p = 3 the result is order
/// independent exactly when phi is a 2-cocycle.
AlgebraElement star_extend(const Heisenberg& h, const Cochain& phi, std::span<const AlgebraElement> omega_table,
                           const AlgebraElement& g);

/// (phi, phi~) with phi~ vanishing on the basis.
CompatiblePair tilde_lift(const Heisenberg& h, const Cochain& phi);

/// ind^1(psi)(e_i) for every basis vector.
std::vector<AlgebraElement> ind1(const Heisenberg& h, const Cochain& psi);
/// ind^1(psi)(g) for arbitrary g.
AlgebraElement ind1_at(const Heisenberg& h, const Cochain& psi, const AlgebraElement& g);

/// ind^2(phi, omega)(e_i, e_j) at index (i-1)*n + (j-1).
std::vector<AlgebraElement> ind2(const Heisenberg& h, const CompatiblePair& pair);
/// ind^2(phi, omega)(g, k) with omega star-extended from the pair's table.
AlgebraElement ind2_at(const Heisenberg& h, const CompatiblePair& pair, const AlgebraElement& g,
                       const AlgebraElement& k);

/// Extra term subtracted in eta(g, k1 + k2) - eta(g, k1) - eta(g, k2) for a
/// zeta-compatible eta.
AlgebraElement zeta_correction(const Heisenberg& h, const Cochain& zeta, const AlgebraElement& g,
                               const AlgebraElement& k1, const AlgebraElement& k2);

/// psi -> (d^1 psi, -ind^1 psi table); dim C^2 + n^2 rows. The omega part is
/// the first-order change of the p-map under the gauge 1 + t psi.
Matrix d1_star_matrix(const Heisenberg& h);
/// (phi, omega table) -> (d^2 phi, ind^2 table); dim C^3 + n^3 rows.
Matrix d2_star_matrix(const Heisenberg& h);

/// Restricted complex with H^1_*, H^2_* and H^[p]_0. Built eagerly.
class RestrictedComplex {
 public:
  explicit RestrictedComplex(Heisenberg h);

  const Heisenberg& algebra() const noexcept { return ordinary_.algebra(); }
  const OrdinaryComplex& ordinary() const noexcept { return ordinary_; }
  const Matrix& d1_star() const noexcept { return d1s_; }
  const Matrix& d2_star() const noexcept { return d2s_; }
  /// ker d^1_* / im d^0.
  const CohomologySpace& h1_star() const noexcept { return h1s_; }
  /// ker d^2_* / im d^1_*.
  const CohomologySpace& h2_star() const noexcept { return h2s_; }
  /// H^[p]_0 inside Hom_Fr(h_m, F e_n) = F^n (coordinates along ebar^i_n).
  const Subspace& hp0() const noexcept { return hp0_; }
  /// Restricted 2-cocycles whose phi part is an ordinary coboundary.
  const Subspace& ordinary_trivial_cocycles() const noexcept { return ord_triv_; }

  bool is_restricted_cocycle(std::span<const Elem> pair_coords) const;

 private:
  OrdinaryComplex ordinary_;
  Matrix d1s_, d2s_;
  CohomologySpace h1s_, h2s_;
  Subspace hp0_, ord_triv_;
};

CohomologySpace h1_star_space(const Heisenberg& h);
CohomologySpace h2_star_space(const Heisenberg& h);
Subspace h_p0_space(const Heisenberg& h);

/// Cocycles psi with [psi(g), g, .., g] = psi(g^[p]) for all g, found by
/// matching coefficients of that polynomial identity in the coordinates of g.
/// Contains im d^0; as a subspace of C^1.
Subspace hochschild_h1_star(const OrdinaryComplex& c);

/// D_psi(e_i) = (ad e_i)^{p-1} psi(e_i) - psi(e_i^[p]). Throws Errc::not_a_cocycle.
std::vector<AlgebraElement> hochschild_D(const OrdinaryComplex& c, const Cochain& psi);

/// For each e_k, the 1-cochain h -> H_phi(e_k) h. Throws Errc::not_a_cocycle.
std::vector<Cochain> hochschild_H(const OrdinaryComplex& c, const Cochain& phi);

struct SixTermReport {
  size_t dim_h2 = 0, dim_h2_star = 0, dim_hp0 = 0, n = 0;
  size_t forget_image_dim = 0;   // dim of the image of H^2_* -> H^2
  size_t forget_kernel_dim = 0;  // classes of H^2_* with phi a coboundary
  size_t frobenius_classes_rank = 0;
  bool surjective = false;
  bool kernel_matches = false;
  bool h_vanishes = false;
  bool dimension_identity = false;
  bool frobenius_injects = false;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Exactness checks of 0 -> Hom_Fr/H^[p]_0 -> H^2_* -> H^2 -> Hom_Fr(h, H^1).
SixTermReport six_term_check(const RestrictedComplex& rc);

}  // namespace hcoh
