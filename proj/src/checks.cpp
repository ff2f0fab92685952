#include "hcoh/checks.hpp"

#include <random>

namespace hcoh {

namespace {

Elem random_scalar(const Field& f, std::mt19937& rng) {
  return static_cast<Elem>(std::uniform_int_distribution<int>(0, f.order() - 1)(rng));
}

AlgebraElement random_element(const Heisenberg& h, std::mt19937& rng) {
  AlgebraElement x = h.zero();
  for (auto& c : x.coords) c = random_scalar(h.field(), rng);
  return x;
}

Vec random_combination(const Subspace& s, std::mt19937& rng) {
  Vec v(s.ambient_dim(), 0);
  const Field& f = s.field();
  for (size_t r = 0; r < s.dim(); ++r) {
    const Elem c = random_scalar(f, rng);
    if (!c) continue;
    for (size_t j = 0; j < v.size(); ++j) v[j] = f.add(v[j], f.mul(c, s.basis().at(r, j)));
  }
  return v;
}

Check zero_product(std::string name, const Matrix& a, const Matrix& b) {
  const bool ok = (a * b).is_zero();
  return {std::move(name), ok, ok ? "zero" : "nonzero product"};
}

Check counted(std::string name, int failures, int trials) {
  return {std::move(name), failures == 0, std::to_string(failures) + " failures in " + std::to_string(trials)};
}

}  // namespace

std::vector<Check> complex_checks(const Heisenberg& h) {
  const Matrix d0 = differential_matrix(h, 0), d1 = differential_matrix(h, 1), d2 = differential_matrix(h, 2);
  const Matrix d1s = d1_star_matrix(h);
  return {zero_product("d1d0", d1, d0), zero_product("d2d1", d2, d1), zero_product("d1*d0", d1s, d0),
          zero_product("d2*d1*", d2_star_matrix(h), d1s)};
}

std::vector<Check> oracle_checks(const OrdinaryComplex& oc) {
  const Heisenberg& h = oc.algebra();
  std::vector<Check> out;
  for (int q = 0; q <= 2; ++q) {
    const Matrix& d = oc.differential(q);
    const size_t dim = oc.space(q).dim();
    size_t bad = 0;
    for (size_t c = 0; c < dim; ++c) {
      Vec unit(dim, 0);
      unit[c] = 1;
      if (brute_differential(h, Cochain{q, unit}).coords != d.column(c)) ++bad;
    }
    out.push_back({"oracle_d" + std::to_string(q), bad == 0,
                   std::to_string(bad) + " of " + std::to_string(dim) + " basis cochains differ"});
  }
  if (h.m() >= 1) {
    const bool ok = basic_equations(h, 1) == oc.h1().cocycles;
    out.push_back({"basic_equations_1", ok, ok ? "equal to ker d1" : "differs from ker d1"});
  }
  if (h.m() >= 2) {
    const bool ok = basic_equations(h, 2) == oc.h2().cocycles;
    out.push_back({"basic_equations_2", ok, ok ? "equal to ker d2" : "differs from ker d2"});
  }
  return out;
}

std::vector<Check> compat_checks(const OrdinaryComplex& oc, unsigned seed, int trials) {
  const Heisenberg& h = oc.algebra();
  const Field& f = h.field();
  const int n = h.dim();
  std::mt19937 rng(seed);
  int compat = 0, assoc = 0, semi = 0, frob = 0;
  for (int t = 0; t < trials; ++t) {
    Vec coords;
    if (h.p() == 3) {
      coords = random_combination(oc.h2().cocycles, rng);
    } else {
      coords.resize(oc.space(2).dim());
      for (auto& c : coords) c = random_scalar(f, rng);
    }
    const Cochain phi{2, coords};
    std::vector<AlgebraElement> table;
    for (int i = 0; i < n; ++i) table.push_back(random_element(h, rng));
    const auto g = random_element(h, rng), k = random_element(h, rng), l = random_element(h, rng);
    auto w = [&](const AlgebraElement& x) { return star_extend(h, phi, table, x); };
    if (!(w(h.add(g, k)) == h.add(h.add(w(g), w(k)), compatibility_correction(h, phi, g, k)))) ++compat;
    const auto left = h.add(h.add(w(h.add(g, k)), w(l)), compatibility_correction(h, phi, h.add(g, k), l));
    const auto right = h.add(h.add(w(g), w(h.add(k, l))), compatibility_correction(h, phi, g, h.add(k, l)));
    if (!(left == right)) ++assoc;
    const Elem c = random_scalar(f, rng);
    if (!(w(h.scale(c, g)) == h.scale(f.frobenius(c), w(g)))) ++semi;

    Matrix tab(f, static_cast<size_t>(n), static_cast<size_t>(n));
    for (size_t i = 0; i < tab.rows(); ++i)
      for (size_t j = 0; j < tab.cols(); ++j) tab.at(i, j) = random_scalar(f, rng);
    const FrobeniusHom fr(h, tab);
    const Elem a = random_scalar(f, rng), b = random_scalar(f, rng);
    const auto lhs = fr.apply(h, h.add(h.scale(a, g), h.scale(b, k)));
    const auto rhs = h.add(h.scale(f.frobenius(a), fr.apply(h, g)), h.scale(f.frobenius(b), fr.apply(h, k)));
    if (!(lhs == rhs)) ++frob;
  }
  return {counted("star_compatibility", compat, trials), counted("star_well_defined", assoc, trials),
          counted("star_semilinear", semi, trials), counted("frobenius_semilinear", frob, trials)};
}

std::vector<Check> sixterm_checks(const RestrictedComplex& rc) {
  const auto r = six_term_check(rc);
  std::vector<Check> out;
  out.push_back({"splitting", r.dimension_identity,
                 "H2* " + std::to_string(r.dim_h2_star) + " = H2 " + std::to_string(r.dim_h2) + " + " +
                     std::to_string(r.n) + " - Hp0 " + std::to_string(r.dim_hp0)});
  out.push_back({"forget_surjective", r.surjective, "image dim " + std::to_string(r.forget_image_dim)});
  out.push_back({"forget_kernel", r.kernel_matches, "kernel dim " + std::to_string(r.forget_kernel_dim)});
  out.push_back({"h_vanishes", r.h_vanishes, r.h_vanishes ? "H vanishes on H2 representatives" : "H nonzero"});
  out.push_back({"frobenius_injects", r.frobenius_injects,
                 "Frobenius classes rank " + std::to_string(r.frobenius_classes_rank)});
  for (const auto& msg : r.failures) out.push_back({"sixterm", false, msg});
  return out;
}

}  // namespace hcoh
