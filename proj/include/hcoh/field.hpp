#pragma once

// Exact arithmetic in GF(p^k).
//
// Elements are encoded as integers in [0, p^k): the polynomial
// c_0 + c_1 t + ... + c_{k-1} t^{k-1} maps to sum c_i p^i. Addition,
// multiplication, inversion and Frobenius are table lookups, so the hot loops
// in the linear algebra never touch polynomials.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hcoh/error.hpp"

namespace hcoh::gf {

using Elem = std::uint16_t;

/// Largest field order accepted by Field::make (tables are q x q).
inline constexpr int kMaxOrder = 1024;

class Field {
 public:
  /// GF(p^k) with the lexicographically least monic irreducible modulus.
  /// Throws Error with Errc::non_prime, Errc::bad_degree or Errc::field_too_large.
  static Field make(int p, int k);

  int characteristic() const noexcept;
  int degree() const noexcept;
  int order() const noexcept;
  /// Monic modulus, constant term first (length k+1). For k = 1 this is x.
  const std::vector<int>& modulus() const noexcept;

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  /// The class of t (k >= 2); equals one() for prime fields.
  Elem generator() const noexcept;

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  Elem frobenius(Elem a) const noexcept;

  /// Row of the multiplication table: mul_row(a)[b] == mul(a, b).
  const Elem* mul_row(Elem a) const noexcept;

  Elem from_int(long long v) const noexcept;
  Elem from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(Elem a) const;
  bool valid(Elem a) const noexcept { return a < order(); }

  /// "c0+c1*t" style rendering; plain integer for prime fields.
  std::string format(Elem a) const;
  /// Inverse of format(); also accepts a bare integer. Throws Errc::parse_error.
  Elem parse(const std::string& text) const;

  friend bool operator==(const Field& a, const Field& b) noexcept;

 private:
  struct Tables;
  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::shared_ptr<const Tables> t_;
};

/// True iff p is prime (trial division; p is always small here).
bool is_prime(int p) noexcept;

/// Value-semantic element bound to its field. Convenience layer for APIs and
/// tests; bulk code works on raw Elem codes with an explicit Field.
class Scalar {
 public:
  Scalar(Field f, Elem v);
  static Scalar from_coeffs(const Field& f, std::span<const int> c) { return {f, f.from_coeffs(c)}; }

  const Field& field() const noexcept { return f_; }
  Elem code() const noexcept { return v_; }
  std::vector<int> coeffs() const { return f_.coeffs(v_); }
  bool is_zero() const noexcept { return v_ == 0; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const { return {f_, f_.neg(v_)}; }
  Scalar inv() const { return {f_, f_.inv(v_)}; }
  Scalar pow(std::uint64_t e) const { return {f_, f_.pow(v_, e)}; }
  Scalar frobenius() const { return {f_, f_.frobenius(v_)}; }

  friend bool operator==(const Scalar& a, const Scalar& b) noexcept {
    return a.v_ == b.v_ && a.f_ == b.f_;
  }

 private:
  void check_same(const Scalar& o) const;
  Field f_;
  Elem v_;
};

}  // namespace hcoh::gf
