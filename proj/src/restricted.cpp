#include "hcoh/restricted.hpp"

namespace hcoh {

namespace {

AlgebraElement phi2(const Heisenberg& h, const Cochain& phi, const AlgebraElement& x, const AlgebraElement& y) {
  const AlgebraElement args[2] = {x, y};
  return evaluate(h, phi, args);
}

AlgebraElement psi1(const Heisenberg& h, const Cochain& psi, const AlgebraElement& x) {
  const AlgebraElement args[1] = {x};
  return evaluate(h, psi, args);
}

// (ad g)^r x = [g, [g, .. [g, x]]]
AlgebraElement ad_power(const Heisenberg& h, const AlgebraElement& g, AlgebraElement x, int r) {
  for (int i = 0; i < r && !x.is_zero(); ++i) x = h.bracket(g, x);
  return x;
}

void check_degree(const Cochain& c, int q, const char* what) {
  if (c.degree != q) throw Error(Errc::invalid_argument, std::string(what) + ": wrong cochain degree");
}

Vec flatten(const std::vector<AlgebraElement>& table) {
  Vec out;
  for (const auto& v : table) out.insert(out.end(), v.coords.begin(), v.coords.end());
  return out;
}

Cochain unit_cochain(size_t dim, int q, size_t pos) {
  Cochain c{q, Vec(dim, 0)};
  c.coords[pos] = 1;
  return c;
}

}  // namespace

FrobeniusHom::FrobeniusHom(const Heisenberg& h, Matrix table) : table_(std::move(table)) {
  const auto n = static_cast<size_t>(h.dim());
  if (table_.rows() != n || table_.cols() != n) throw Error(Errc::dimension_mismatch, "Frobenius table must be n x n");
}

FrobeniusHom FrobeniusHom::unit(const Heisenberg& h, int i, int j) {
  h.conjugate_sign(i);
  h.conjugate_sign(j);
  Matrix t(h.field(), static_cast<size_t>(h.dim()), static_cast<size_t>(h.dim()));
  t.at(static_cast<size_t>(i - 1), static_cast<size_t>(j - 1)) = 1;
  return FrobeniusHom(h, std::move(t));
}

AlgebraElement FrobeniusHom::apply(const Heisenberg& h, const AlgebraElement& g) const {
  h.check(g);
  const Field& f = h.field();
  Vec twisted(g.coords.size());
  for (size_t i = 0; i < twisted.size(); ++i) twisted[i] = f.frobenius(g.coords[i]);
  return {table_.transpose().apply(twisted)};
}

std::vector<AlgebraElement> FrobeniusHom::values() const {
  std::vector<AlgebraElement> out;
  for (size_t i = 0; i < table_.rows(); ++i) out.push_back({table_.row_vec(i)});
  return out;
}

size_t restricted2_dim(const Heisenberg& h) {
  const auto n = static_cast<size_t>(h.dim());
  return CochainSpace(h.dim(), 2).dim() + n * n;
}

size_t omega_position(const Heisenberg& h, int i, int j) {
  h.conjugate_sign(i);
  h.conjugate_sign(j);
  const auto n = static_cast<size_t>(h.dim());
  return CochainSpace(h.dim(), 2).dim() + static_cast<size_t>(i - 1) * n + static_cast<size_t>(j - 1);
}

Vec pair_coords(const Heisenberg& h, const CompatiblePair& pair) {
  check_degree(pair.phi, 2, "pair_coords");
  if (static_cast<int>(pair.omega.size()) != h.dim())
    throw Error(Errc::dimension_mismatch, "omega table must have n entries");
  Vec out = pair.phi.coords;
  if (out.size() != CochainSpace(h.dim(), 2).dim()) throw Error(Errc::dimension_mismatch, "phi length mismatch");
  for (const auto& v : pair.omega) {
    h.check(v);
    out.insert(out.end(), v.coords.begin(), v.coords.end());
  }
  return out;
}

CompatiblePair pair_from_coords(const Heisenberg& h, std::span<const Elem> coords) {
  const size_t c2 = CochainSpace(h.dim(), 2).dim();
  const auto n = static_cast<size_t>(h.dim());
  if (coords.size() != c2 + n * n) throw Error(Errc::dimension_mismatch, "restricted 2-cochain length mismatch");
  CompatiblePair pair{{2, Vec(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(c2))}, {}};
  for (size_t i = 0; i < n; ++i) {
    const auto* b = coords.data() + c2 + i * n;
    pair.omega.push_back({Vec(b, b + n)});
  }
  return pair;
}

AlgebraElement compatibility_correction(const Heisenberg& h, const Cochain& phi, const AlgebraElement& g,
                                        const AlgebraElement& k) {
  check_degree(phi, 2, "compatibility_correction");
  const int p = h.p();
  if (p > 3) return h.zero();
  if (p == 2) return phi2(h, phi, g, k);
  // p = 3: sum over g_3 in {g, k} of (1/#g) (phi([g,k] ^ g_3) - [g_3, phi(g ^ k)])
  const Field& f = h.field();
  const AlgebraElement gk = h.bracket(g, k);
  const AlgebraElement pgk = phi2(h, phi, g, k);
  const AlgebraElement with_g = h.sub(phi2(h, phi, gk, g), h.bracket(g, pgk));
  const AlgebraElement with_k = h.sub(phi2(h, phi, gk, k), h.bracket(k, pgk));
  return h.add(h.scale(f.inv(f.from_int(2)), with_g), with_k);
}

AlgebraElement star_extend(const Heisenberg& h, const Cochain& phi, std::span<const AlgebraElement> omega_table,
                           const AlgebraElement& g) {
  check_degree(phi, 2, "star_extend");
  h.check(g);
  if (static_cast<int>(omega_table.size()) != h.dim())
    throw Error(Errc::dimension_mismatch, "omega table must have n entries");
  const Field& f = h.field();
  AlgebraElement partial = h.zero();
  AlgebraElement value = h.zero();
  for (int i = 1; i <= h.dim(); ++i) {
    const Elem a = g[i];
    if (a == 0) continue;
    const AlgebraElement term = h.scale(a, h.basis(i));
    value = h.add(value, h.scale(f.frobenius(a), omega_table[static_cast<size_t>(i - 1)]));
    if (!partial.is_zero()) value = h.add(value, compatibility_correction(h, phi, partial, term));
    partial = h.add(partial, term);
  }
  return value;
}

CompatiblePair tilde_lift(const Heisenberg& h, const Cochain& phi) {
  check_degree(phi, 2, "tilde_lift");
  return {phi, std::vector<AlgebraElement>(static_cast<size_t>(h.dim()), h.zero())};
}

AlgebraElement ind1_at(const Heisenberg& h, const Cochain& psi, const AlgebraElement& g) {
  check_degree(psi, 1, "ind1");
  AlgebraElement v = psi1(h, psi, h.p_map(g));
  if (h.p() == 2) v = h.sub(v, h.bracket(g, psi1(h, psi, g)));
  return v;
}

std::vector<AlgebraElement> ind1(const Heisenberg& h, const Cochain& psi) {
  std::vector<AlgebraElement> out;
  for (int i = 1; i <= h.dim(); ++i) out.push_back(ind1_at(h, psi, h.basis(i)));
  return out;
}

namespace {

AlgebraElement ind2_with(const Heisenberg& h, const Cochain& phi, const AlgebraElement& g, const AlgebraElement& k,
                         const AlgebraElement& omega_k) {
  AlgebraElement v = h.add(phi2(h, phi, g, h.p_map(k)), h.bracket(g, omega_k));
  const int p = h.p();
  if (p == 3) {
    v = h.add(v, h.bracket(k, phi2(h, phi, h.bracket(g, k), k)));
  } else if (p == 2) {
    v = h.sub(v, phi2(h, phi, h.bracket(g, k), k));
    v = h.add(v, h.bracket(k, phi2(h, phi, g, k)));
  }
  return v;
}

}  // namespace

std::vector<AlgebraElement> ind2(const Heisenberg& h, const CompatiblePair& pair) {
  check_degree(pair.phi, 2, "ind2");
  const int n = h.dim();
  std::vector<AlgebraElement> out;
  out.reserve(static_cast<size_t>(n) * n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      out.push_back(ind2_with(h, pair.phi, h.basis(a), h.basis(b), pair.omega[static_cast<size_t>(b - 1)]));
  return out;
}

AlgebraElement ind2_at(const Heisenberg& h, const CompatiblePair& pair, const AlgebraElement& g,
                       const AlgebraElement& k) {
  return ind2_with(h, pair.phi, g, k, star_extend(h, pair.phi, pair.omega, k));
}

AlgebraElement zeta_correction(const Heisenberg& h, const Cochain& zeta, const AlgebraElement& g,
                               const AlgebraElement& k1, const AlgebraElement& k2) {
  check_degree(zeta, 3, "zeta_correction");
  const int p = h.p();
  if (p > 3) return h.zero();
  auto z = [&](const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c) {
    const AlgebraElement args[3] = {a, b, c};
    return evaluate(h, zeta, args);
  };
  if (p == 2) return z(g, k1, k2);
  const Field& f = h.field();
  const AlgebraElement kk = h.bracket(k1, k2);
  const AlgebraElement zk = z(g, k1, k2);
  const AlgebraElement last1 = h.sub(z(g, kk, k1), h.bracket(k1, zk));
  const AlgebraElement last2 = h.sub(z(g, kk, k2), h.bracket(k2, zk));
  return h.add(h.scale(f.inv(f.from_int(2)), last1), last2);
}

Matrix d1_star_matrix(const Heisenberg& h) {
  const int n = h.dim();
  const CochainSpace c1(n, 1), c2(n, 2);
  const Matrix d1 = differential_matrix(h, 1);
  const size_t nn = static_cast<size_t>(n) * n;
  Matrix out(h.field(), c2.dim() + nn, c1.dim());
  for (size_t col = 0; col < c1.dim(); ++col) {
    for (size_t r = 0; r < c2.dim(); ++r) out.at(r, col) = d1.at(r, col);
    // omega part is -ind^1 psi (= D_psi): the sign that makes d^2_* d^1_* = 0
    // with d^1 as defined and ind^2 as displayed
    const Vec table = flatten(ind1(h, unit_cochain(c1.dim(), 1, col)));
    for (size_t r = 0; r < nn; ++r) out.at(c2.dim() + r, col) = h.field().neg(table[r]);
  }
  return out;
}

Matrix d2_star_matrix(const Heisenberg& h) {
  const int n = h.dim();
  const CochainSpace c2(n, 2), c3(n, 3);
  const Matrix d2 = differential_matrix(h, 2);
  const size_t nn = static_cast<size_t>(n) * n;
  const size_t cols = c2.dim() + nn;
  Matrix out(h.field(), c3.dim() + nn * static_cast<size_t>(n), cols);
  for (size_t col = 0; col < cols; ++col) {
    Vec unit(cols, 0);
    unit[col] = 1;
    const CompatiblePair pair = pair_from_coords(h, unit);
    if (col < c2.dim())
      for (size_t r = 0; r < c3.dim(); ++r) out.at(r, col) = d2.at(r, col);
    const Vec table = flatten(ind2(h, pair));
    for (size_t r = 0; r < table.size(); ++r) out.at(c3.dim() + r, col) = table[r];
  }
  return out;
}

RestrictedComplex::RestrictedComplex(Heisenberg h)
    : ordinary_(std::move(h)),
      d1s_(d1_star_matrix(ordinary_.algebra())),
      d2s_(d2_star_matrix(ordinary_.algebra())),
      h1s_(ordinary_.h1()),
      h2s_(ordinary_.h2()),
      hp0_(ordinary_.algebra().field(), static_cast<size_t>(ordinary_.algebra().dim())),
      ord_triv_(hp0_) {
  const Heisenberg& alg = algebra();
  const Field& f = alg.field();
  const int n = alg.dim();
  {
    Subspace z = kernel_basis(d1s_);
    Subspace b = image_basis(ordinary_.differential(0));
    Quotient q(z, b);
    h1s_ = CohomologySpace{std::move(z), std::move(b), std::move(q)};
  }
  {
    Subspace z = kernel_basis(d2s_);
    Subspace b = image_basis(d1s_);
    Quotient q(z, b);
    h2s_ = CohomologySpace{std::move(z), std::move(b), std::move(q)};
  }
  {
    const Subspace& z1 = ordinary_.h1().cocycles;
    std::vector<Vec> vals;
    for (size_t r = 0; r < z1.dim(); ++r) {
      const auto table = ind1(alg, Cochain{1, z1.basis().row_vec(r)});
      Vec v(static_cast<size_t>(n), 0);
      for (int i = 0; i < n; ++i) {
        const auto& e = table[static_cast<size_t>(i)];
        for (int j = 0; j + 1 < n; ++j)
          if (e.coords[static_cast<size_t>(j)] != 0)
            throw Error(Errc::invalid_argument, "ind1 of a cocycle is not central-valued");
        v[static_cast<size_t>(i)] = e.coords[static_cast<size_t>(n - 1)];
      }
      vals.push_back(std::move(v));
    }
    hp0_ = Subspace::span(f, static_cast<size_t>(n), vals);
  }
  {
    // restricted cocycles whose phi part lies in im d^1
    const size_t c2 = ordinary_.space(2).dim();
    const size_t total = restricted2_dim(alg);
    std::vector<Vec> gens;
    const Subspace& b1 = ordinary_.h2().coboundaries;
    for (size_t r = 0; r < b1.dim(); ++r) {
      Vec v(total, 0);
      const auto row = b1.basis().row(r);
      std::copy(row.begin(), row.end(), v.begin());
      gens.push_back(std::move(v));
    }
    for (size_t t = c2; t < total; ++t) {
      Vec v(total, 0);
      v[t] = 1;
      gens.push_back(std::move(v));
    }
    ord_triv_ = h2s_.cocycles.intersect(Subspace::span(f, total, gens));
  }
}

bool RestrictedComplex::is_restricted_cocycle(std::span<const Elem> pair_coords) const {
  return d2s_.apply(pair_coords) == Vec(d2s_.rows(), 0);
}

CohomologySpace h1_star_space(const Heisenberg& h) { return RestrictedComplex(h).h1_star(); }
CohomologySpace h2_star_space(const Heisenberg& h) { return RestrictedComplex(h).h2_star(); }
Subspace h_p0_space(const Heisenberg& h) { return RestrictedComplex(h).hp0(); }

Subspace hochschild_h1_star(const OrdinaryComplex& c) {
  const Heisenberg& h = c.algebra();
  const int n = h.dim(), p = h.p();
  const size_t c1 = c.space(1).dim();
  // F(g) = psi(g^[p]) - [psi(g), g, .., g] with p-1 copies of g
  auto F = [&](const Cochain& psi, const AlgebraElement& g) {
    std::vector<AlgebraElement> chain{psi1(h, psi, g)};
    for (int i = 0; i < p - 1; ++i) chain.push_back(g);
    return h.sub(psi1(h, psi, h.p_map(g)), h.fold_bracket(chain));
  };
  // Coefficient extraction: F is p-semilinear for p > 2 (values on the basis
  // determine it); for p = 2 it is quadratic and the cross terms come from
  // polarization at e_i + e_j.
  std::vector<AlgebraElement> probes;
  for (int i = 1; i <= n; ++i) probes.push_back(h.basis(i));
  const size_t single = probes.size();
  std::vector<std::pair<int, int>> pairs;
  if (p == 2)
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  const size_t rows = (single + pairs.size()) * static_cast<size_t>(n);
  Matrix cond(h.field(), rows, c1);
  for (size_t col = 0; col < c1; ++col) {
    const Cochain psi = unit_cochain(c1, 1, col);
    size_t r = 0;
    std::vector<AlgebraElement> at_basis;
    for (const auto& g : probes) {
      at_basis.push_back(F(psi, g));
      for (int k = 0; k < n; ++k) cond.at(r++, col) = at_basis.back().coords[static_cast<size_t>(k)];
    }
    for (const auto& [i, j] : pairs) {
      const AlgebraElement both = F(psi, h.add(h.basis(i), h.basis(j)));
      const AlgebraElement cross =
          h.sub(h.sub(both, at_basis[static_cast<size_t>(i - 1)]), at_basis[static_cast<size_t>(j - 1)]);
      for (int k = 0; k < n; ++k) cond.at(r++, col) = cross.coords[static_cast<size_t>(k)];
    }
  }
  return kernel_basis(c.differential(1).vstack(cond));
}

std::vector<AlgebraElement> hochschild_D(const OrdinaryComplex& c, const Cochain& psi) {
  check_degree(psi, 1, "hochschild_D");
  if (!c.h1().cocycles.contains(psi.coords)) throw Error(Errc::not_a_cocycle, "D is defined on 1-cocycles");
  const Heisenberg& h = c.algebra();
  std::vector<AlgebraElement> out;
  for (int i = 1; i <= h.dim(); ++i) {
    const AlgebraElement g = h.basis(i);
    out.push_back(h.sub(ad_power(h, g, psi1(h, psi, g), h.p() - 1), psi1(h, psi, h.p_map(g))));
  }
  return out;
}

std::vector<Cochain> hochschild_H(const OrdinaryComplex& c, const Cochain& phi) {
  check_degree(phi, 2, "hochschild_H");
  if (!c.h2().cocycles.contains(phi.coords)) throw Error(Errc::not_a_cocycle, "H is defined on 2-cocycles");
  const Heisenberg& h = c.algebra();
  const Field& f = h.field();
  const int n = h.dim(), p = h.p();
  const CochainSpace& c1 = c.space(1);
  std::vector<Cochain> out;
  for (int k = 1; k <= n; ++k) {
    const AlgebraElement g = h.basis(k);
    const AlgebraElement gp = h.p_map(g);
    Cochain val{1, Vec(c1.dim(), 0)};
    for (int l = 1; l <= n; ++l) {
      const AlgebraElement x = h.basis(l);
      AlgebraElement v = h.zero();
      for (int i = 0; i <= p - 1; ++i)
        v = h.add(v, ad_power(h, g, phi2(h, phi, g, ad_power(h, g, x, p - 1 - i)), i));
      v = h.sub(v, phi2(h, phi, gp, x));
      for (int j = 1; j <= n; ++j) c1.accumulate(f, val.coords, {l}, j, v[j]);
    }
    out.push_back(std::move(val));
  }
  return out;
}

SixTermReport six_term_check(const RestrictedComplex& rc) {
  const Heisenberg& h = rc.algebra();
  const OrdinaryComplex& oc = rc.ordinary();
  const auto n = static_cast<size_t>(h.dim());
  const size_t c2 = oc.space(2).dim();
  SixTermReport r;
  r.n = n;
  r.dim_h2 = oc.h2().dim();
  r.dim_h2_star = rc.h2_star().dim();
  r.dim_hp0 = rc.hp0().dim();

  // (a) forget omega: H^2_* -> H^2
  std::vector<Vec> phis;
  const Subspace& z2s = rc.h2_star().cocycles;
  for (size_t i = 0; i < z2s.dim(); ++i) {
    const auto row = z2s.basis().row(i);
    phis.push_back(Vec(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(c2)));
  }
  for (const auto& v : phis)
    if (!oc.h2().cocycles.contains(v)) r.failures.push_back("forget: phi part of a restricted cocycle is not a cocycle");
  r.forget_image_dim = oc.h2().quotient.rank_modulo(phis);
  r.surjective = r.forget_image_dim == r.dim_h2;
  if (!r.surjective)
    r.failures.push_back("forget: image has dim " + std::to_string(r.forget_image_dim) + ", H^2 has dim " +
                         std::to_string(r.dim_h2));
  r.forget_kernel_dim = rc.ordinary_trivial_cocycles().dim() - rc.h2_star().coboundaries.dim();
  r.kernel_matches = r.forget_kernel_dim == n - r.dim_hp0;
  if (!r.kernel_matches)
    r.failures.push_back("forget: kernel dim " + std::to_string(r.forget_kernel_dim) + " != (2m+1) - dim H^[p]_0 = " +
                         std::to_string(n - r.dim_hp0));

  // (b) H vanishes on H^2, i.e. each H_phi(e_k) lies in im d^0
  r.h_vanishes = true;
  const Quotient& q2 = oc.h2().quotient;
  for (size_t i = 0; i < q2.dim() && r.h_vanishes; ++i) {
    const auto values = hochschild_H(oc, Cochain{2, q2.representative(i)});
    for (size_t k = 0; k < values.size(); ++k)
      if (!oc.h1().coboundaries.contains(values[k].coords)) {
        r.h_vanishes = false;
        r.failures.push_back("H: H_phi(e_" + std::to_string(k + 1) + ") is not a coboundary for H^2 representative " +
                             std::to_string(i));
        break;
      }
  }

  // (c) dimension identity
  r.dimension_identity = r.dim_h2_star + r.dim_hp0 == r.dim_h2 + n;
  if (!r.dimension_identity)
    r.failures.push_back("dimension: " + std::to_string(r.dim_h2_star) + " != " + std::to_string(r.dim_h2) + " + " +
                         std::to_string(n) + " - " + std::to_string(r.dim_hp0));

  // (d) Hom_Fr(h, F e_n) / H^[p]_0 injects via f -> (0, f)
  const size_t total = restricted2_dim(h);
  std::vector<Vec> frob;
  for (size_t i = 1; i <= n; ++i) {
    Vec v(total, 0);
    v[omega_position(h, static_cast<int>(i), static_cast<int>(n))] = 1;
    if (!rc.is_restricted_cocycle(v)) r.failures.push_back("(0, ebar^" + std::to_string(i) + "_n) is not a cocycle");
    frob.push_back(std::move(v));
  }
  r.frobenius_classes_rank = rc.h2_star().quotient.rank_modulo(frob);
  bool hp0_dies = true;
  for (size_t i = 0; i < rc.hp0().dim(); ++i) {
    Vec v(total, 0);
    for (size_t j = 0; j < n; ++j)
      v[omega_position(h, static_cast<int>(j + 1), static_cast<int>(n))] = rc.hp0().basis().at(i, j);
    if (!rc.h2_star().coboundaries.contains(v)) hp0_dies = false;
  }
  r.frobenius_injects = hp0_dies && r.frobenius_classes_rank == n - r.dim_hp0;
  if (!r.frobenius_injects)
    r.failures.push_back("frobenius: classes (0, ebar^i_n) have rank " + std::to_string(r.frobenius_classes_rank) +
                         ", expected " + std::to_string(n - r.dim_hp0));
  return r;
}

}  // namespace hcoh
