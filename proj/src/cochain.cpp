#include "hcoh/cochain.hpp"

#include <algorithm>
#include <sstream>

namespace hcoh {

namespace {

void gen_tuples(int n, int q, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == q) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n; ++i) {
    cur.push_back(i);
    gen_tuples(n, q, i + 1, cur, out);
    cur.pop_back();
  }
}

Elem signed_unit(const Field& f, int s) { return s >= 0 ? f.from_int(s) : f.neg(f.from_int(-s)); }

}  // namespace

CochainSpace::CochainSpace(int n, int q) : n_(n), q_(q) {
  if (q < 0 || q > 3) throw Error(Errc::unsupported_degree, "cochain degree " + std::to_string(q) + " not in 0..3");
  std::vector<int> cur;
  gen_tuples(n, q, 1, cur, tuples_);
  size_t codes = 1;
  for (int i = 0; i < q; ++i) codes *= static_cast<size_t>(n);
  rank_of_.assign(codes, -1);
  for (size_t t = 0; t < tuples_.size(); ++t) {
    size_t code = 0;
    for (int u : tuples_[t]) code = code * static_cast<size_t>(n) + static_cast<size_t>(u - 1);
    rank_of_[code] = static_cast<int>(t);
  }
}

size_t CochainSpace::tuple_rank(std::span<const int> upper) const {
  if (static_cast<int>(upper.size()) != q_) throw Error(Errc::dimension_mismatch, "upper tuple has wrong length");
  size_t code = 0;
  for (int u : upper) {
    if (u < 1 || u > n_) throw Error(Errc::index_out_of_range, "upper index " + std::to_string(u) + " out of range");
    code = code * static_cast<size_t>(n_) + static_cast<size_t>(u - 1);
  }
  const int r = rank_of_[code];
  if (r < 0) throw Error(Errc::invalid_argument, "upper tuple is not strictly increasing");
  return static_cast<size_t>(r);
}

size_t CochainSpace::position(std::span<const int> upper, int lower) const {
  if (lower < 1 || lower > n_)
    throw Error(Errc::index_out_of_range, "lower index " + std::to_string(lower) + " out of range");
  return tuple_rank(upper) * static_cast<size_t>(n_) + static_cast<size_t>(lower - 1);
}

CochainIndex CochainSpace::index(size_t pos) const {
  if (pos >= dim()) throw Error(Errc::index_out_of_range, "cochain position out of range");
  return {q_, tuples_[pos / static_cast<size_t>(n_)], static_cast<int>(pos % static_cast<size_t>(n_)) + 1};
}

std::optional<std::pair<size_t, int>> CochainSpace::signed_position(std::vector<int> upper, int lower) const {
  int sign = 1;
  for (size_t i = 0; i < upper.size(); ++i)
    for (size_t j = 0; j + 1 < upper.size() - i; ++j)
      if (upper[j] > upper[j + 1]) {
        std::swap(upper[j], upper[j + 1]);
        sign = -sign;
      }
  for (size_t i = 0; i + 1 < upper.size(); ++i)
    if (upper[i] == upper[i + 1]) return std::nullopt;
  return std::make_pair(position(upper, lower), sign);
}

void CochainSpace::accumulate(const Field& f, Vec& coords, std::vector<int> upper, int lower, Elem c) const {
  if (c == 0) return;
  const auto sp = signed_position(std::move(upper), lower);
  if (!sp) return;
  const Elem v = sp->second > 0 ? c : f.neg(c);
  coords[sp->first] = f.add(coords[sp->first], v);
}

Matrix differential_matrix(const Heisenberg& h, int q) {
  if (q < 0 || q > 2) throw Error(Errc::unsupported_degree, "differential degree must be 0, 1 or 2");
  const Field& f = h.field();
  const int n = h.dim(), m = h.m();
  const CochainSpace src(n, q), dst(n, q + 1);
  Matrix d(f, dst.dim(), src.dim());
  Vec col(dst.dim());
  auto put = [&](size_t c) {
    for (size_t r = 0; r < col.size(); ++r) d.at(r, c) = col[r];
  };
  for (size_t c = 0; c < src.dim(); ++c) {
    std::fill(col.begin(), col.end(), 0);
    const CochainIndex ix = src.index(c);
    if (q == 0) {
      // d0(e_i) = delta_i e^{i'}_{n}
      const int i = ix.lower;
      const auto [ic, di] = h.conjugate_sign(i);
      dst.accumulate(f, col, {ic}, n, signed_unit(f, di));
    } else if (q == 1) {
      const int i = ix.upper[0], j = ix.lower;
      const auto [jc, dj] = h.conjugate_sign(j);
      if (i <= 2 * m) {
        dst.accumulate(f, col, {i, jc}, n, signed_unit(f, dj));
      } else {
        dst.accumulate(f, col, {jc, n}, n, signed_unit(f, h.sign(jc)));
        for (int r = 1; r <= m; ++r) dst.accumulate(f, col, {r, m + r}, j, f.neg(1));
      }
    } else {
      const int i = ix.upper[0], j = ix.upper[1], k = ix.lower;
      const int kc = h.conjugate(k);
      const Elem dkc = signed_unit(f, h.sign(kc));
      if (j <= 2 * m) {
        dst.accumulate(f, col, {kc, i, j}, n, dkc);
      } else {
        dst.accumulate(f, col, {kc, i, n}, n, dkc);
        for (int r = 1; r <= m; ++r) dst.accumulate(f, col, {i, r, m + r}, k, 1);
      }
    }
    put(c);
  }
  return d;
}

AlgebraElement evaluate(const Heisenberg& h, const Cochain& c, std::span<const AlgebraElement> args) {
  const Field& f = h.field();
  const int n = h.dim();
  if (static_cast<int>(args.size()) != c.degree)
    throw Error(Errc::invalid_argument, "cochain of degree " + std::to_string(c.degree) + " evaluated on " +
                                            std::to_string(args.size()) + " arguments");
  for (const auto& a : args) h.check(a);
  const CochainSpace s(n, c.degree);
  if (c.coords.size() != s.dim()) throw Error(Errc::dimension_mismatch, "cochain length mismatch");
  if (c.degree == 0) return {c.coords};
  AlgebraElement out = h.zero();
  for (size_t t = 0; t < s.tuple_count(); ++t) {
    const auto& u = s.tuple(t);
    // determinant of the q x q minor args[a][u[b]]
    Elem det = 0;
    auto x = [&](int a, int b) { return args[a].coords[static_cast<size_t>(u[b] - 1)]; };
    if (c.degree == 1) {
      det = x(0, 0);
    } else if (c.degree == 2) {
      det = f.sub(f.mul(x(0, 0), x(1, 1)), f.mul(x(0, 1), x(1, 0)));
    } else {
      static constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
      for (int pi = 0; pi < 6; ++pi) {
        const Elem term = f.mul(f.mul(x(0, perms[pi][0]), x(1, perms[pi][1])), x(2, perms[pi][2]));
        det = pi < 3 ? f.add(det, term) : f.sub(det, term);
      }
    }
    if (det == 0) continue;
    for (int k = 0; k < n; ++k) {
      const Elem v = c.coords[t * static_cast<size_t>(n) + static_cast<size_t>(k)];
      if (v != 0) out.coords[k] = f.add(out.coords[k], f.mul(det, v));
    }
  }
  return out;
}

Cochain brute_differential(const Heisenberg& h, const Cochain& c) {
  const int q = c.degree;
  if (q < 0 || q > 2) throw Error(Errc::unsupported_degree, "brute differential degree must be 0, 1 or 2");
  const int n = h.dim();
  const CochainSpace dst(n, q + 1);
  Cochain out{q + 1, Vec(dst.dim(), 0)};
  auto ev = [&](std::initializer_list<AlgebraElement> a) {
    return evaluate(h, c, std::span<const AlgebraElement>(a.begin(), a.size()));
  };
  for (size_t t = 0; t < dst.tuple_count(); ++t) {
    const auto& u = dst.tuple(t);
    AlgebraElement val = h.zero();
    if (q == 0) {
      val = h.bracket(AlgebraElement{c.coords}, h.basis(u[0]));
    } else if (q == 1) {
      const auto x = h.basis(u[0]), y = h.basis(u[1]);
      val = h.sub(h.sub(h.bracket(x, ev({y})), h.bracket(y, ev({x}))), ev({h.bracket(x, y)}));
    } else {
      const auto x = h.basis(u[0]), y = h.basis(u[1]), z = h.basis(u[2]);
      val = h.bracket(x, ev({y, z}));
      val = h.sub(val, h.bracket(y, ev({x, z})));
      val = h.add(val, h.bracket(z, ev({x, y})));
      val = h.sub(val, ev({h.bracket(x, y), z}));
      val = h.add(val, ev({h.bracket(x, z), y}));
      val = h.sub(val, ev({h.bracket(y, z), x}));
    }
    for (int k = 0; k < n; ++k) out.coords[t * static_cast<size_t>(n) + static_cast<size_t>(k)] = val.coords[k];
  }
  return out;
}

Subspace basic_equations(const Heisenberg& h, int q) {
  const Field& f = h.field();
  const int m = h.m(), n = h.dim();
  if (q == 1 && m < 1) throw Error(Errc::out_of_range, "degree-1 basic equations need m >= 1");
  if (q == 2 && m < 2) throw Error(Errc::out_of_range, "degree-2 basic equations need m >= 2");
  if (q != 1 && q != 2) throw Error(Errc::unsupported_degree, "basic equations exist in degrees 1 and 2");
  const CochainSpace s(n, q);
  std::vector<Vec> rows;
  auto new_row = [&] { return Vec(s.dim(), 0); };
  auto cj = [&](int i) { return h.conjugate(i); };
  auto sg = [&](int i) { return h.sign(i); };

  if (q == 1) {
    // alpha_{ij} is the coefficient of e^i_j
    auto alpha = [&](Vec& row, int i, int j, int c) { s.accumulate(f, row, {i}, j, signed_unit(f, c)); };
    for (int j = 1; j <= 2 * m; ++j) {
      Vec r = new_row();
      alpha(r, n, j, 1);
      rows.push_back(std::move(r));
    }
    for (int i = 1; i <= 2 * m; ++i)
      for (int j = 1; j <= 2 * m; ++j) {
        Vec r = new_row();
        if (i != j && i != cj(j)) {
          alpha(r, i, j, 1);
          alpha(r, cj(j), cj(i), sg(i) * sg(j));
        } else if (i == j) {
          alpha(r, i, i, 1);
          alpha(r, cj(i), cj(i), 1);
          alpha(r, n, n, -1);
        } else {
          continue;
        }
        rows.push_back(std::move(r));
      }
  } else {
    // alpha^{ab}_k with alpha^{ba} = -alpha^{ab}
    auto alpha = [&](Vec& row, int a, int b, int k, int c) { s.accumulate(f, row, {a, b}, k, signed_unit(f, c)); };
    auto same_half = [&](std::initializer_list<int> idx) {
      const bool lower = *idx.begin() <= m;
      for (int i : idx)
        if ((i <= m) != lower || i > 2 * m) return false;
      return true;
    };
    for (int i = 1; i <= 2 * m; ++i)
      for (int k = 1; k <= 2 * m; ++k) {
        Vec r = new_row();
        alpha(r, i, n, k, 1);
        rows.push_back(std::move(r));
      }
    // alpha^{ij}_{k'} = alpha^{kj}_{i'} - alpha^{ki}_{j'}
    for (int k = 1; k <= 2 * m; ++k)
      for (int i = 1; i <= 2 * m; ++i)
        for (int j = i + 1; j <= 2 * m; ++j) {
          const bool lower = k < i && j <= m;
          const bool upper = i >= m + 1 && j < k;
          if (!(lower || upper)) continue;
          Vec r = new_row();
          alpha(r, i, j, cj(k), 1);
          alpha(r, k, j, cj(i), -1);
          alpha(r, k, i, cj(j), 1);
          rows.push_back(std::move(r));
        }
    // alpha^{j,j'}_{i'} = alpha^{i,j'}_{j'} + alpha^{ij}_j - alpha^{i,n}_n
    for (int i = 1; i <= 2 * m; ++i)
      for (int j = 1; j <= 2 * m; ++j) {
        if (i == j || !same_half({i, j})) continue;
        Vec r = new_row();
        alpha(r, j, cj(j), cj(i), 1);
        alpha(r, i, cj(j), cj(j), -1);
        alpha(r, i, j, j, -1);
        alpha(r, i, n, n, 1);
        rows.push_back(std::move(r));
      }
    // alpha^{ij}_k = alpha^{j,k'}_{i'} - alpha^{i,k'}_{j'}, k != i,j, all three in one half
    for (int i = 1; i <= 2 * m; ++i)
      for (int j = i + 1; j <= 2 * m; ++j)
        for (int k = 1; k <= 2 * m; ++k) {
          if (k == i || k == j || !same_half({i, j, k})) continue;
          Vec r = new_row();
          alpha(r, i, j, k, 1);
          alpha(r, j, cj(k), cj(i), -1);
          alpha(r, i, cj(k), cj(j), 1);
          rows.push_back(std::move(r));
        }
  }
  if (rows.empty()) return Subspace::full(f, s.dim());
  return kernel_basis(Matrix::from_rows(f, s.dim(), rows));
}

OrdinaryComplex::OrdinaryComplex(Heisenberg h)
    : h_(std::move(h)),
      h1_{Subspace(h_.field(), 0), Subspace(h_.field(), 0),
          Quotient(Subspace(h_.field(), 0), Subspace(h_.field(), 0))},
      h2_{h1_} {
  for (int q = 0; q <= 3; ++q) spaces_.emplace_back(h_.dim(), q);
  for (int q = 0; q <= 2; ++q) d_.push_back(differential_matrix(h_, q));
  auto build = [&](int q) {
    Subspace z = kernel_basis(d_[static_cast<size_t>(q)]);
    Subspace b = image_basis(d_[static_cast<size_t>(q - 1)]);
    Quotient quo(z, b);
    return CohomologySpace{std::move(z), std::move(b), std::move(quo)};
  };
  h1_ = build(1);
  h2_ = build(2);
}

CohomologySpace h1_space(const Heisenberg& h) { return OrdinaryComplex(h).h1(); }
CohomologySpace h2_space(const Heisenberg& h) { return OrdinaryComplex(h).h2(); }

Vec make_cochain(const Heisenberg& h, int q, std::initializer_list<Term> terms) {
  return make_cochain(h, q, std::span<const Term>(terms.begin(), terms.size()));
}

Vec make_cochain(const Heisenberg& h, int q, std::span<const Term> terms) {
  const CochainSpace s(h.dim(), q);
  Vec v(s.dim(), 0);
  for (const auto& t : terms) {
    if (static_cast<int>(t.upper.size()) != q) throw Error(Errc::invalid_argument, "term has wrong number of upper indices");
    for (int i : t.upper) h.conjugate_sign(i);
    h.conjugate_sign(t.lower);
    s.accumulate(h.field(), v, t.upper, t.lower, h.field().from_int(t.coeff));
  }
  return v;
}

std::string format_cochain(const Field& f, const CochainSpace& s, std::span<const Elem> coords) {
  std::ostringstream os;
  bool first = true;
  for (size_t pos = 0; pos < coords.size(); ++pos) {
    if (coords[pos] == 0) continue;
    const auto ix = s.index(pos);
    if (!first) os << " + ";
    first = false;
    if (coords[pos] != 1) os << f.format(coords[pos]) << "*";
    os << "e^{";
    for (size_t u = 0; u < ix.upper.size(); ++u) os << (u ? "," : "") << ix.upper[u];
    os << "}_" << ix.lower;
  }
  return first ? "0" : os.str();
}

}  // namespace hcoh
