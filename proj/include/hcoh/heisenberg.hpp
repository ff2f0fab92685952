#pragma once

// The Heisenberg Lie algebra h_m over GF(p^k) with basis e_1..e_{2m+1}
// (1-based throughout), nonzero brackets [e_i, e_{m+i}] = e_{2m+1}, and the
// central restricted structure e_i^[p] = lambda_i e_{2m+1}.

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hcoh/field.hpp"

namespace hcoh {

using gf::Elem;
using gf::Field;
using Vec = std::vector<Elem>;

/// Coordinates a_1..a_n over e_1..e_n.
struct AlgebraElement {
  Vec coords;

  Elem operator[](int i) const { return coords[static_cast<size_t>(i - 1)]; }  // 1-based
  size_t size() const noexcept { return coords.size(); }
  bool is_zero() const noexcept;
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

class Heisenberg {
 public:
  /// lambda must have exactly 2m+1 entries.
  Heisenberg(Field field, int m, Vec lambda);

  const Field& field() const noexcept { return field_; }
  int m() const noexcept { return m_; }
  int dim() const noexcept { return 2 * m_ + 1; }
  int p() const noexcept { return field_.characteristic(); }
  const Vec& lambda() const noexcept { return lambda_; }
  Elem lambda(int i) const { return lambda_[static_cast<size_t>(i - 1)]; }

  /// i' and delta_i. Throws Errc::index_out_of_range.
  std::pair<int, int> conjugate_sign(int i) const;
  int conjugate(int i) const { return conjugate_sign(i).first; }
  int sign(int i) const { return conjugate_sign(i).second; }

  /// Coefficient of e_k in [e_i, e_j].
  Elem structure_constant(int i, int j, int k) const;

  AlgebraElement zero() const { return {Vec(static_cast<size_t>(dim()), 0)}; }
  AlgebraElement basis(int i) const;

  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;
  /// Left-nested [[..[g1,g2],..],gj]; needs at least two elements.
  AlgebraElement fold_bracket(std::span<const AlgebraElement> gs) const;
  AlgebraElement p_map(const AlgebraElement& g) const;

  AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement scale(Elem c, const AlgebraElement& x) const;

  /// Copy with the structure constant of [e_1, e_{m+1}] zeroed (both orders).
  /// Test hook: every downstream check that uses the bracket should notice.
  Heisenberg corrupted() const;
  bool is_corrupted() const noexcept { return corrupted_; }

  void check(const AlgebraElement& x) const;

 private:
  Field field_;
  int m_;
  Vec lambda_;
  Vec structure_;  // n*n*n, [e_i,e_j] = sum_k structure_[(i*n+j)*n+k] e_k (0-based)
  bool corrupted_ = false;
};

/// Lambda from a preset ("zero", "e<i>", "central") or a comma-separated list
/// of scalars ("1,0,2" or "1+t,0,t"). Throws Errc::parse_error / Errc::dimension_mismatch.
Vec parse_lambda(const Field& field, int m, const std::string& spec);

}  // namespace hcoh
