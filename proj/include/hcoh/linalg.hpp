#pragma once

// Dense exact linear algebra over GF(p^k).
//
// Pivoting is fixed (leftmost column, topmost nonzero row), so every basis and
// normal form produced here is a deterministic function of the input.

#include <cstddef>
#include <span>
#include <vector>

#include "hcoh/field.hpp"

namespace hcoh {

using gf::Elem;
using gf::Field;
using Vec = std::vector<Elem>;

class Matrix {
 public:
  Matrix(Field f, size_t rows, size_t cols) : f_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static Matrix identity(const Field& f, size_t n);
  /// Rows given as vectors of equal length `cols`.
  static Matrix from_rows(const Field& f, size_t cols, std::span<const Vec> rows);

  const Field& field() const noexcept { return f_; }
  size_t rows() const noexcept { return rows_; }
  size_t cols() const noexcept { return cols_; }

  Elem& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  Elem at(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  std::span<Elem> row(size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(size_t r) const { return Vec(row(r).begin(), row(r).end()); }
  Vec column(size_t c) const;

  Matrix transpose() const;
  Vec apply(std::span<const Elem> v) const;
  Matrix operator*(const Matrix& o) const;
  bool is_zero() const noexcept;
  /// Rows [0, n) only.
  Matrix top_rows(size_t n) const;
  /// Stack this on top of o (same column count).
  Matrix vstack(const Matrix& o) const;

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ && a.f_ == b.f_;
  }

 private:
  Field f_;
  size_t rows_, cols_;
  Vec data_;
};

struct RrefResult {
  Matrix reduced;
  size_t rank;
  std::vector<size_t> pivots;
};

RrefResult rref(const Matrix& m);
size_t rank(const Matrix& m);

/// Span of the rows of an RREF matrix with no zero rows.
class Subspace {
 public:
  Subspace(const Field& f, size_t ambient) : basis_(f, 0, ambient) {}
  /// Span of arbitrary (possibly dependent) vectors.
  static Subspace span(const Field& f, size_t ambient, std::span<const Vec> vectors);
  static Subspace span_rows(const Matrix& m);
  static Subspace full(const Field& f, size_t ambient);

  const Field& field() const noexcept { return basis_.field(); }
  size_t ambient_dim() const noexcept { return basis_.cols(); }
  size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its components along this basis; zero iff v is a member.
  Vec residual(std::span<const Elem> v) const;
  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) noexcept { return a.basis_ == b.basis_; }

 private:
  Matrix basis_;
  std::vector<size_t> pivots_;
};

Subspace kernel_basis(const Matrix& m);
Subspace image_basis(const Matrix& m);
/// Spec-facing alias of Subspace::contains with a dimension check.
bool member(const Subspace& s, std::span<const Elem> v);

/// K / I with a deterministic coset normal form.
class Quotient {
 public:
  /// Throws Errc::not_a_subspace when I is not inside K, Errc::dimension_mismatch
  /// when the ambient dimensions differ.
  Quotient(Subspace k, Subspace i);

  size_t dim() const noexcept { return reps_.dim(); }
  const Subspace& numerator() const noexcept { return k_; }
  const Subspace& denominator() const noexcept { return i_; }
  /// Coset representatives: zero on every pivot column of I, in RREF.
  const Subspace& representatives() const noexcept { return reps_; }
  Vec representative(size_t r) const { return reps_.basis().row_vec(r); }

  /// Unique normal form of v + I: the pivot coordinates of I are eliminated.
  Vec reduce(std::span<const Elem> v) const { return i_.residual(v); }
  /// Coordinates of the class of v (v in K) along representatives().
  Vec coordinates(std::span<const Elem> v) const;
  /// Rank of the given vectors modulo I.
  size_t rank_modulo(std::span<const Vec> vectors) const;

 private:
  Subspace k_, i_, reps_;
};

}  // namespace hcoh
