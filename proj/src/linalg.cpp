#include "hcoh/linalg.hpp"

#include <algorithm>

namespace hcoh {

Matrix Matrix::identity(const Field& f, size_t n) {
  Matrix m(f, n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const Field& f, size_t cols, std::span<const Vec> rows) {
  Matrix m(f, rows.size(), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(Errc::dimension_mismatch, "row length differs from column count");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Vec Matrix::column(size_t c) const {
  Vec v(rows_);
  for (size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(f_, cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Vec Matrix::apply(std::span<const Elem> v) const {
  if (v.size() != cols_) throw Error(Errc::dimension_mismatch, "matrix-vector size mismatch");
  Vec out(rows_, 0);
  for (size_t c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    const Elem* mrow = f_.mul_row(v[c]);
    for (size_t r = 0; r < rows_; ++r) {
      const Elem e = at(r, c);
      if (e != 0) out[r] = f_.add(out[r], mrow[e]);
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(Errc::dimension_mismatch, "matrix product size mismatch");
  if (!(f_ == o.f_)) throw Error(Errc::field_mismatch, "matrix product over different fields");
  Matrix out(f_, rows_, o.cols_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t k = 0; k < cols_; ++k) {
      const Elem a = at(r, k);
      if (a == 0) continue;
      const Elem* mrow = f_.mul_row(a);
      for (size_t c = 0; c < o.cols_; ++c) {
        const Elem b = o.at(k, c);
        if (b != 0) out.at(r, c) = f_.add(out.at(r, c), mrow[b]);
      }
    }
  return out;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

Matrix Matrix::top_rows(size_t n) const {
  Matrix out(f_, std::min(n, rows_), cols_);
  std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(out.rows_ * cols_), out.data_.begin());
  return out;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (cols_ != o.cols_) throw Error(Errc::dimension_mismatch, "vstack column mismatch");
  Matrix out(f_, rows_ + o.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(o.data_.begin(), o.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  const Field& f = a.field();
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t sel = r;
    while (sel < a.rows() && a.at(sel, c) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r) std::swap_ranges(a.row(sel).begin(), a.row(sel).end(), a.row(r).begin());
    auto prow = a.row(r);
    const Elem* scale = f.mul_row(f.inv(prow[c]));
    for (size_t j = c; j < a.cols(); ++j) prow[j] = scale[prow[j]];
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const Elem factor = a.at(i, c);
      if (factor == 0) continue;
      const Elem* mrow = f.mul_row(f.neg(factor));
      auto irow = a.row(i);
      for (size_t j = c; j < a.cols(); ++j)
        if (prow[j] != 0) irow[j] = f.add(irow[j], mrow[prow[j]]);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), r, std::move(pivots)};
}

size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace Subspace::span_rows(const Matrix& m) {
  auto res = rref(m);
  Subspace s(m.field(), m.cols());
  s.basis_ = res.reduced.top_rows(res.rank);
  s.pivots_ = std::move(res.pivots);
  return s;
}

Subspace Subspace::span(const Field& f, size_t ambient, std::span<const Vec> vectors) {
  return span_rows(Matrix::from_rows(f, ambient, vectors));
}

Subspace Subspace::full(const Field& f, size_t ambient) { return span_rows(Matrix::identity(f, ambient)); }

Vec Subspace::residual(std::span<const Elem> v) const {
  if (v.size() != ambient_dim()) throw Error(Errc::dimension_mismatch, "vector length differs from ambient dimension");
  const Field& f = field();
  Vec out(v.begin(), v.end());
  for (size_t r = 0; r < dim(); ++r) {
    const Elem c = out[pivots_[r]];
    if (c == 0) continue;
    const Elem* mrow = f.mul_row(f.neg(c));
    auto brow = basis_.row(r);
    for (size_t j = pivots_[r]; j < out.size(); ++j)
      if (brow[j] != 0) out[j] = f.add(out[j], mrow[brow[j]]);
  }
  return out;
}

bool Subspace::contains(std::span<const Elem> v) const {
  const Vec r = residual(v);
  return std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) return false;
  for (size_t r = 0; r < other.dim(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw Error(Errc::dimension_mismatch, "subspace ambient mismatch");
  return span_rows(basis_.vstack(other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw Error(Errc::dimension_mismatch, "subspace ambient mismatch");
  // x = sum a_r u_r = sum b_s w_s: kernel of [U^T | -W^T].
  const Field& f = field();
  const size_t n = ambient_dim(), du = dim(), dw = other.dim();
  Matrix sys(f, n, du + dw);
  for (size_t r = 0; r < du; ++r)
    for (size_t j = 0; j < n; ++j) sys.at(j, r) = basis_.at(r, j);
  for (size_t s = 0; s < dw; ++s)
    for (size_t j = 0; j < n; ++j) sys.at(j, du + s) = f.neg(other.basis_.at(s, j));
  const Subspace ker = kernel_basis(sys);
  std::vector<Vec> vecs;
  for (size_t r = 0; r < ker.dim(); ++r) {
    Vec x(n, 0);
    for (size_t i = 0; i < du; ++i) {
      const Elem c = ker.basis().at(r, i);
      if (c == 0) continue;
      for (size_t j = 0; j < n; ++j) x[j] = f.add(x[j], f.mul(c, basis_.at(i, j)));
    }
    vecs.push_back(std::move(x));
  }
  return span(f, n, vecs);
}

Subspace kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  const auto res = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : res.pivots) is_pivot[c] = true;
  std::vector<Vec> vecs;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (size_t r = 0; r < res.rank; ++r) v[res.pivots[r]] = f.neg(res.reduced.at(r, free));
    vecs.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), vecs);
}

Subspace image_basis(const Matrix& m) { return Subspace::span_rows(m.transpose()); }

bool member(const Subspace& s, std::span<const Elem> v) {
  if (v.size() != s.ambient_dim()) throw Error(Errc::dimension_mismatch, "member: dimension mismatch");
  return s.contains(v);
}

Quotient::Quotient(Subspace k, Subspace i) : k_(std::move(k)), i_(std::move(i)), reps_(k_.field(), k_.ambient_dim()) {
  if (k_.ambient_dim() != i_.ambient_dim())
    throw Error(Errc::dimension_mismatch, "quotient of subspaces in different ambient spaces");
  if (!k_.contains(i_)) throw Error(Errc::not_a_subspace, "denominator is not contained in numerator");
  std::vector<Vec> reduced;
  reduced.reserve(k_.dim());
  for (size_t r = 0; r < k_.dim(); ++r) reduced.push_back(i_.residual(k_.basis().row(r)));
  reps_ = Subspace::span(k_.field(), k_.ambient_dim(), reduced);
}

Vec Quotient::coordinates(std::span<const Elem> v) const {
  const Vec red = reduce(v);
  Vec coords(dim(), 0);
  for (size_t r = 0; r < dim(); ++r) coords[r] = red[reps_.pivots()[r]];
  return coords;
}

size_t Quotient::rank_modulo(std::span<const Vec> vectors) const {
  std::vector<Vec> reduced;
  reduced.reserve(vectors.size());
  for (const auto& v : vectors) reduced.push_back(reduce(v));
  return Subspace::span(k_.field(), k_.ambient_dim(), reduced).dim();
}

}  // namespace hcoh
