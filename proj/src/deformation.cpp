#include "hcoh/deformation.hpp"

#include <random>

namespace hcoh {

namespace {

std::string basis_name(int i) { return "e_" + std::to_string(i); }

Vec vadd(const Field& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec vscale(const Field& f, Elem c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

DualElement dadd(const Field& f, const DualElement& x, const DualElement& y) {
  return {vadd(f, x.a0, y.a0), vadd(f, x.a1, y.a1)};
}

DualElement dscale(const Field& f, Elem c, const DualElement& x) { return {vscale(f, c, x.a0), vscale(f, c, x.a1)}; }

bool is_zero(const DualElement& x) {
  for (Elem e : x.a0)
    if (e) return false;
  for (Elem e : x.a1)
    if (e) return false;
  return true;
}

AlgebraElement random_element(const Heisenberg& h, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, h.field().order() - 1);
  AlgebraElement x = h.zero();
  for (auto& c : x.coords) c = static_cast<Elem>(d(rng));
  return x;
}

}  // namespace

DualDeformation DualDeformation::unchecked(const Heisenberg& h, CompatiblePair pair) {
  pair_coords(h, pair);  // validates shapes
  return DualDeformation(h, std::move(pair));
}

DualDeformation deform(const RestrictedComplex& rc, const CompatiblePair& pair) {
  const Vec v = pair_coords(rc.algebra(), pair);
  if (!rc.is_restricted_cocycle(v)) throw Error(Errc::not_a_cocycle, "pair is not a restricted 2-cocycle");
  return DualDeformation::unchecked(rc.algebra(), pair);
}

DualElement DualDeformation::lift(const AlgebraElement& x) const {
  h_.check(x);
  return {x.coords, Vec(x.size(), 0)};
}

DualElement DualDeformation::bracket(const DualElement& x, const DualElement& y) const {
  const AlgebraElement x0{x.a0}, x1{x.a1}, y0{y.a0}, y1{y.a1};
  const AlgebraElement args[2] = {x0, y0};
  AlgebraElement first = h_.add(h_.bracket(x0, y1), h_.bracket(x1, y0));
  first = h_.add(first, evaluate(h_, pair_.phi, args));
  return {h_.bracket(x0, y0).coords, first.coords};
}

DualElement DualDeformation::p_map(const AlgebraElement& g) const {
  return {h_.p_map(g).coords, star_extend(h_, pair_.phi, pair_.omega, g).coords};
}

Dual DualDeformation::bracket_coeff(int i, int j, int k) const {
  const auto b = bracket(lift(h_.basis(i)), lift(h_.basis(j)));
  return {b.a0[static_cast<size_t>(k - 1)], b.a1[static_cast<size_t>(k - 1)]};
}

Dual DualDeformation::pmap_coeff(int i, int k) const {
  const auto v = p_map(h_.basis(i));
  return {v.a0[static_cast<size_t>(k - 1)], v.a1[static_cast<size_t>(k - 1)]};
}

AxiomReport verify_axioms(const DualDeformation& d, unsigned seed, int trials) {
  const Heisenberg& h = d.base();
  const Field& f = h.field();
  const int n = h.dim(), p = h.p();
  AxiomReport r;
  auto witness = [&](bool& flag, std::string msg) {
    if (flag) r.witnesses.push_back(std::move(msg));
    flag = false;
  };
  auto e = [&](int i) { return d.lift(h.basis(i)); };

  // (a)
  for (int i = 1; i <= n && r.bracket_ok; ++i)
    for (int j = i; j <= n && r.bracket_ok; ++j) {
      if (!is_zero(dadd(f, d.bracket(e(i), e(j)), d.bracket(e(j), e(i)))))
        witness(r.bracket_ok, "antisymmetry fails on (" + basis_name(i) + ", " + basis_name(j) + ")");
      for (int k = j + 1; k <= n && r.bracket_ok; ++k) {
        const auto jac = dadd(f, dadd(f, d.bracket(e(i), d.bracket(e(j), e(k))), d.bracket(e(j), d.bracket(e(k), e(i)))),
                              d.bracket(e(k), d.bracket(e(i), e(j))));
        if (!is_zero(jac))
          witness(r.bracket_ok,
                  "Jacobi fails on (" + basis_name(i) + ", " + basis_name(j) + ", " + basis_name(k) + ")");
      }
    }

  std::mt19937 rng(seed);
  // (b): [g^{[p],t}, x]_t = (ad_t g)^p x
  auto ad_check = [&](const AlgebraElement& g, const AlgebraElement& x, const std::string& where) {
    const auto lhs = d.bracket(d.p_map(g), d.lift(x));
    DualElement rhs = d.lift(x);
    for (int s = 0; s < p; ++s) rhs = d.bracket(d.lift(g), rhs);
    if (!(lhs == rhs)) witness(r.ad_ok, "ad condition fails on " + where);
  };
  for (int i = 1; i <= n && r.ad_ok; ++i)
    for (int j = 1; j <= n && r.ad_ok; ++j) ad_check(h.basis(i), h.basis(j), "(" + basis_name(i) + ", " + basis_name(j) + ")");
  for (int t = 0; t < trials && r.ad_ok; ++t) ad_check(random_element(h, rng), random_element(h, rng), "a random pair");

  // (c)
  std::uniform_int_distribution<int> sd(0, f.order() - 1);
  for (int t = 0; t < trials && r.semilinear_ok; ++t) {
    const Elem c = static_cast<Elem>(sd(rng));
    const auto g = random_element(h, rng);
    if (!(d.p_map(h.scale(c, g)) == dscale(f, f.frobenius(c), d.p_map(g))))
      witness(r.semilinear_ok, "semilinearity fails for c = " + f.format(c));
  }

  // (d): (g+k)^{[p],t} = g^{[p],t} + k^{[p],t} + sum_i s_i(g, k), where
  // ad_t(X g + k)^{p-1}(g) = sum_i i s_i X^{i-1}
  if (p == 2 || p == 3) {
    r.jacobson_checked = true;
    for (int t = 0; t < trials && r.jacobson_ok; ++t) {
      const auto g = random_element(h, rng), k = random_element(h, rng);
      const DualElement zero{Vec(static_cast<size_t>(n), 0), Vec(static_cast<size_t>(n), 0)};
      std::vector<DualElement> poly{d.lift(g)};
      for (int s = 0; s < p - 1; ++s) {
        std::vector<DualElement> next(poly.size() + 1, zero);
        for (size_t c = 0; c < poly.size(); ++c) {
          next[c] = dadd(f, next[c], d.bracket(d.lift(k), poly[c]));
          next[c + 1] = dadd(f, next[c + 1], d.bracket(d.lift(g), poly[c]));
        }
        poly = std::move(next);
      }
      DualElement rhs = dadd(f, d.p_map(g), d.p_map(k));
      for (int i = 1; i < p; ++i) rhs = dadd(f, rhs, dscale(f, f.inv(f.from_int(i)), poly[static_cast<size_t>(i - 1)]));
      if (!(d.p_map(h.add(g, k)) == rhs)) witness(r.jacobson_ok, "Jacobson additivity fails on a random pair");
    }
  }
  return r;
}

Classification classify(const RestrictedComplex& rc, std::span<const Elem> pair_coords) {
  if (pair_coords.size() != restricted2_dim(rc.algebra()))
    throw Error(Errc::dimension_mismatch, "pair coordinates length mismatch");
  if (!rc.is_restricted_cocycle(pair_coords)) throw Error(Errc::not_a_cocycle, "pair is not a restricted 2-cocycle");
  Classification c;
  const auto& q = rc.h2_star().quotient;
  c.normal_form = q.reduce(pair_coords);
  c.trivial = std::all_of(c.normal_form.begin(), c.normal_form.end(), [](Elem e) { return e == 0; });
  c.class_coordinates = q.coordinates(pair_coords);
  const size_t c2 = rc.ordinary().space(2).dim();
  c.ordinary_trivial = rc.ordinary().h2().coboundaries.contains(pair_coords.subspan(0, c2));
  return c;
}

}  // namespace hcoh
