#include "hcoh/heisenberg.hpp"

#include <algorithm>
#include <sstream>

namespace hcoh {

bool AlgebraElement::is_zero() const noexcept {
  return std::all_of(coords.begin(), coords.end(), [](Elem c) { return c == 0; });
}

Heisenberg::Heisenberg(Field field, int m, Vec lambda) : field_(std::move(field)), m_(m), lambda_(std::move(lambda)) {
  if (m_ < 0) throw Error(Errc::out_of_range, "m must be non-negative");
  const int n = dim();
  if (static_cast<int>(lambda_.size()) != n)
    throw Error(Errc::dimension_mismatch,
                "lambda has " + std::to_string(lambda_.size()) + " entries, expected " + std::to_string(n));
  for (Elem c : lambda_)
    if (!field_.valid(c)) throw Error(Errc::out_of_range, "lambda entry is not a field element");
  structure_.assign(static_cast<size_t>(n) * n * n, 0);
  const Elem minus_one = field_.neg(1);
  for (int i = 1; i <= m_; ++i) {
    structure_[(static_cast<size_t>(i - 1) * n + (m_ + i - 1)) * n + (n - 1)] = 1;
    structure_[(static_cast<size_t>(m_ + i - 1) * n + (i - 1)) * n + (n - 1)] = minus_one;
  }
}

std::pair<int, int> Heisenberg::conjugate_sign(int i) const {
  if (i < 1 || i > dim())
    throw Error(Errc::index_out_of_range, "basis index " + std::to_string(i) + " outside [1, " +
                                              std::to_string(dim()) + "]");
  if (i <= m_) return {i + m_, 1};
  if (i <= 2 * m_) return {i - m_, -1};
  return {dim(), 0};
}

Elem Heisenberg::structure_constant(int i, int j, int k) const {
  const int n = dim();
  return structure_[(static_cast<size_t>(i - 1) * n + (j - 1)) * n + (k - 1)];
}

AlgebraElement Heisenberg::basis(int i) const {
  conjugate_sign(i);
  AlgebraElement e = zero();
  e.coords[static_cast<size_t>(i - 1)] = 1;
  return e;
}

void Heisenberg::check(const AlgebraElement& x) const {
  if (static_cast<int>(x.size()) != dim())
    throw Error(Errc::dimension_mismatch,
                "algebra element of length " + std::to_string(x.size()) + ", expected " + std::to_string(dim()));
}

AlgebraElement Heisenberg::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
  check(x);
  check(y);
  const int n = dim();
  AlgebraElement r = zero();
  for (int i = 0; i < n; ++i) {
    if (x.coords[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (y.coords[j] == 0) continue;
      const Elem xy = field_.mul(x.coords[i], y.coords[j]);
      const Elem* row = &structure_[(static_cast<size_t>(i) * n + j) * n];
      for (int k = 0; k < n; ++k)
        if (row[k] != 0) r.coords[k] = field_.add(r.coords[k], field_.mul(xy, row[k]));
    }
  }
  return r;
}

AlgebraElement Heisenberg::fold_bracket(std::span<const AlgebraElement> gs) const {
  if (gs.size() < 2) throw Error(Errc::invalid_argument, "fold_bracket needs at least two elements");
  AlgebraElement acc = bracket(gs[0], gs[1]);
  for (size_t i = 2; i < gs.size(); ++i) acc = bracket(acc, gs[i]);
  return acc;
}

AlgebraElement Heisenberg::p_map(const AlgebraElement& g) const {
  check(g);
  const int n = dim();
  Elem c = 0;
  for (int i = 0; i < n; ++i) c = field_.add(c, field_.mul(field_.pow(g.coords[i], p()), lambda_[i]));
  if (p() == 2)
    for (int j = 0; j < m_; ++j) c = field_.add(c, field_.mul(g.coords[j], g.coords[m_ + j]));
  AlgebraElement r = zero();
  r.coords[n - 1] = c;
  return r;
}

AlgebraElement Heisenberg::add(const AlgebraElement& x, const AlgebraElement& y) const {
  check(x);
  check(y);
  AlgebraElement r = x;
  for (size_t i = 0; i < r.size(); ++i) r.coords[i] = field_.add(r.coords[i], y.coords[i]);
  return r;
}

AlgebraElement Heisenberg::sub(const AlgebraElement& x, const AlgebraElement& y) const {
  check(x);
  check(y);
  AlgebraElement r = x;
  for (size_t i = 0; i < r.size(); ++i) r.coords[i] = field_.sub(r.coords[i], y.coords[i]);
  return r;
}

AlgebraElement Heisenberg::scale(Elem c, const AlgebraElement& x) const {
  check(x);
  AlgebraElement r = x;
  for (auto& v : r.coords) v = field_.mul(c, v);
  return r;
}

Heisenberg Heisenberg::corrupted() const {
  Heisenberg h = *this;
  if (m_ >= 1) {
    const int n = dim();
    h.structure_[(static_cast<size_t>(0) * n + m_) * n + (n - 1)] = 0;
    h.structure_[(static_cast<size_t>(m_) * n + 0) * n + (n - 1)] = 0;
  }
  h.corrupted_ = true;
  return h;
}

Vec parse_lambda(const Field& field, int m, const std::string& spec) {
  const int n = 2 * m + 1;
  Vec lambda(static_cast<size_t>(n), 0);
  if (spec == "zero") return lambda;
  if (spec == "central") {
    lambda[n - 1] = 1;
    return lambda;
  }
  if (spec.size() >= 2 && spec[0] == 'e' && std::all_of(spec.begin() + 1, spec.end(), ::isdigit)) {
    const int i = std::stoi(spec.substr(1));
    if (i < 1 || i > n)
      throw Error(Errc::index_out_of_range, "lambda preset " + spec + " outside [1, " + std::to_string(n) + "]");
    lambda[static_cast<size_t>(i - 1)] = 1;
    return lambda;
  }
  std::string body = spec;
  if (!body.empty() && body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
  Vec out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(field.parse(item));
  if (static_cast<int>(out.size()) != n)
    throw Error(Errc::dimension_mismatch,
                "lambda has " + std::to_string(out.size()) + " entries, expected " + std::to_string(n));
  return out;
}

}  // namespace hcoh
