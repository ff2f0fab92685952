#pragma once

// Chevalley-Eilenberg complex of h_m with adjoint coefficients, degrees 0..3.
//
// C^q has basis e^{i_1..i_q}_k (i_1 < .. < i_q, 1 <= k <= n), enumerated
// lexicographically on (upper tuple, k). An upper tuple given out of order is
// normalized to increasing order with the permutation sign; repeated indices
// give zero.

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hcoh/heisenberg.hpp"
#include "hcoh/linalg.hpp"

namespace hcoh {

struct CochainIndex {
  int degree = 0;
  std::vector<int> upper;  // strictly increasing, 1-based
  int lower = 1;
  friend bool operator==(const CochainIndex&, const CochainIndex&) = default;
};

class CochainSpace {
 public:
  /// n = dim h_m, q in {0,1,2,3}; throws Errc::unsupported_degree otherwise.
  CochainSpace(int n, int q);

  int degree() const noexcept { return q_; }
  int algebra_dim() const noexcept { return n_; }
  size_t dim() const noexcept { return tuples_.size() * static_cast<size_t>(n_); }
  size_t tuple_count() const noexcept { return tuples_.size(); }
  const std::vector<int>& tuple(size_t t) const { return tuples_[t]; }

  /// Position of e^{upper}_lower with upper strictly increasing.
  size_t position(std::span<const int> upper, int lower) const;
  CochainIndex index(size_t pos) const;
  /// Normalizes an arbitrary upper tuple: (position, sign in {+1,-1}), or
  /// nullopt when an index repeats.
  std::optional<std::pair<size_t, int>> signed_position(std::vector<int> upper, int lower) const;
  /// coords += c * e^{upper}_lower after normalization.
  void accumulate(const Field& f, Vec& coords, std::vector<int> upper, int lower, Elem c) const;

 private:
  size_t tuple_rank(std::span<const int> upper) const;
  int n_, q_;
  std::vector<std::vector<int>> tuples_;
  std::vector<int> rank_of_;  // dense lookup on base-n code of the tuple
};

struct Cochain {
  int degree = 0;
  Vec coords;
  friend bool operator==(const Cochain&, const Cochain&) = default;
};

/// One summand c * e^{upper}_lower; upper may be unsorted (sign applied).
struct Term {
  std::vector<int> upper;
  int lower = 1;
  long long coeff = 1;
};

/// Coordinates of sum of terms in C^q. Indices are validated.
Vec make_cochain(const Heisenberg& h, int q, std::initializer_list<Term> terms);
Vec make_cochain(const Heisenberg& h, int q, std::span<const Term> terms);

/// Closed-form matrix of d^q (q in {0,1,2}) in the canonical bases.
Matrix differential_matrix(const Heisenberg& h, int q);

/// Multilinear alternating evaluation c(args...). Degree 0 returns c itself.
AlgebraElement evaluate(const Heisenberg& h, const Cochain& c, std::span<const AlgebraElement> args);

/// d^q c from the defining alternating sum over sorted basis tuples,
/// independent of differential_matrix.
Cochain brute_differential(const Heisenberg& h, const Cochain& c);

/// Solution space of the hand-derived cocycle equations in the coefficients
/// of a q-cochain (q = 1 for m >= 1, q = 2 for m >= 2). Throws Errc::out_of_range.
Subspace basic_equations(const Heisenberg& h, int q);

struct CohomologySpace {
  Subspace cocycles;
  Subspace coboundaries;
  Quotient quotient;

  size_t dim() const noexcept { return quotient.dim(); }
};

/// The ordinary complex of one algebra with its differentials and H^1, H^2.
/// Built eagerly; immutable afterwards.
class OrdinaryComplex {
 public:
  explicit OrdinaryComplex(Heisenberg h);

  const Heisenberg& algebra() const noexcept { return h_; }
  const CochainSpace& space(int q) const { return spaces_.at(static_cast<size_t>(q)); }
  const Matrix& differential(int q) const { return d_.at(static_cast<size_t>(q)); }
  const CohomologySpace& h1() const noexcept { return h1_; }
  const CohomologySpace& h2() const noexcept { return h2_; }

 private:
  Heisenberg h_;
  std::vector<CochainSpace> spaces_;
  std::vector<Matrix> d_;
  CohomologySpace h1_, h2_;
};

CohomologySpace h1_space(const Heisenberg& h);
CohomologySpace h2_space(const Heisenberg& h);

/// "e^{1,2}_3 + 2 e^{3}_1"-style rendering for diagnostics.
std::string format_cochain(const Field& f, const CochainSpace& s, std::span<const Elem> coords);

}  // namespace hcoh
