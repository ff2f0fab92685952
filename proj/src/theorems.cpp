#include "hcoh/theorems.hpp"

#include <algorithm>
#include <sstream>

namespace hcoh {

namespace {

bool all_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

Generator cochain_gen(const Heisenberg& h, int q, std::initializer_list<Term> terms) {
  Vec v = make_cochain(h, q, terms);
  return {format_cochain(h.field(), CochainSpace(h.dim(), q), v), std::move(v)};
}

// (phi, phi~) with optional Frobenius part ebar^a_b added.
Generator pair_gen(const Heisenberg& h, const Vec& phi, int a = 0, int b = 0) {
  Vec v = phi;
  v.resize(restricted2_dim(h), 0);
  if (a > 0) v[omega_position(h, a, b)] = 1;
  return {format_pair(h, v), std::move(v)};
}

Generator frob_gen(const Heisenberg& h, int a, int b) { return pair_gen(h, Vec(CochainSpace(h.dim(), 2).dim(), 0), a, b); }

bool lambda_zero(const Heisenberg& h) { return all_zero(h.lambda()); }

// e^n_n + sum_{i<=m} e^i_i
Generator alpha_class(const Heisenberg& h) {
  const int m = h.m(), n = h.dim();
  std::vector<Term> t{{{n}, n, 1}};
  for (int i = 1; i <= m; ++i) t.push_back({{i}, i, 1});
  Vec v = make_cochain(h, 1, t);
  return {format_cochain(h.field(), CochainSpace(n, 1), v), std::move(v)};
}

const char* kReadingA =
    "A_m families read with the printed ranges: i<j over 1..2m (j = i' included); ordered i != j in one half; "
    "k<i<j or i<j<k in one half; k != i,j in one half";

}  // namespace

const char* to_string(Space s) noexcept {
  switch (s) {
    case Space::H1: return "H1";
    case Space::H1Star: return "H1*";
    case Space::H2: return "H2";
    case Space::H2Star: return "H2*";
    case Space::Hp0: return "Hp0";
  }
  return "?";
}

Space parse_space(const std::string& tag) {
  if (tag == "h1" || tag == "H1") return Space::H1;
  if (tag == "h1star" || tag == "H1*") return Space::H1Star;
  if (tag == "h2" || tag == "H2") return Space::H2;
  if (tag == "h2star" || tag == "H2*") return Space::H2Star;
  if (tag == "hp0" || tag == "Hp0") return Space::Hp0;
  throw Error(Errc::parse_error, "unknown space '" + tag + "' (expected h1, h2, h1star, h2star or hp0)");
}

size_t h1_formula(int m) {
  if (m < 1) throw Error(Errc::out_of_range, "formula needs m >= 1");
  return static_cast<size_t>(2 * m * m + m + 1);
}

size_t h2_formula(int m) {
  if (m < 1) throw Error(Errc::out_of_range, "formula needs m >= 1");
  if (m == 1) return 5;
  const long long num = 8LL * m * m * m - 2LL * m;
  if (num % 3 != 0) throw Error(Errc::invalid_argument, "8m^3 - 2m not divisible by 3");
  return static_cast<size_t>(num / 3);
}

std::vector<Generator> h1_theorem_basis(const Heisenberg& h) {
  const int m = h.m();
  std::vector<Generator> out{alpha_class(h)};
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) out.push_back(cochain_gen(h, 1, {{{i}, j, 1}, {{m + j}, m + i, -1}}));
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      out.push_back(cochain_gen(h, 1, {{{m + i}, j, 1}, {{m + j}, i, 1}}));
      out.push_back(cochain_gen(h, 1, {{{i}, m + j, 1}, {{j}, m + i, 1}}));
    }
  for (int i = 1; i <= m; ++i) {
    out.push_back(cochain_gen(h, 1, {{{m + i}, i, 1}}));
    out.push_back(cochain_gen(h, 1, {{{i}, m + i, 1}}));
  }
  return out;
}

std::vector<Generator> h2_theorem_basis(const Heisenberg& h) {
  const int m = h.m();
  std::vector<Generator> out;
  if (m == 1) {
    for (auto t : {Term{{1, 2}, 1, 1}, Term{{1, 2}, 2, 1}, Term{{1, 3}, 2, 1}, Term{{2, 3}, 1, 1}})
      out.push_back(cochain_gen(h, 2, {t}));
    out.push_back(cochain_gen(h, 2, {{{1, 3}, 1, 1}, {{2, 3}, 2, -1}}));
    return out;
  }
  auto c = [&](int i) { return h.conjugate(i); };
  for (int i = 1; i <= 2 * m; ++i)
    for (int j = i + 1; j <= 2 * m; ++j) {
      out.push_back(cochain_gen(h, 2, {{{i, j}, c(i), 1}}));
      out.push_back(cochain_gen(h, 2, {{{i, j}, c(j), 1}}));
    }
  for (int half = 0; half < 2; ++half) {
    const int lo = half * m + 1, hi = half * m + m;
    for (int i = lo; i <= hi; ++i)
      for (int j = lo; j <= hi; ++j) {
        if (i == j) continue;
        out.push_back(cochain_gen(h, 2, {{{i, c(j)}, c(j), 1}, {{j, c(j)}, c(i), 1}}));
        out.push_back(cochain_gen(h, 2, {{{i, j}, j, 1}, {{j, c(j)}, c(i), 1}}));
      }
  }
  auto triple = [&](int k, int i, int j) {
    out.push_back(cochain_gen(h, 2, {{{k, j}, c(i), 1}, {{i, j}, c(k), 1}}));
    out.push_back(cochain_gen(h, 2, {{{k, i}, c(j), 1}, {{i, j}, c(k), -1}}));
  };
  for (int k = 1; k <= m; ++k)
    for (int i = k + 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) triple(k, i, j);
  for (int i = m + 1; i <= 2 * m; ++i)
    for (int j = i + 1; j <= 2 * m; ++j)
      for (int k = j + 1; k <= 2 * m; ++k) triple(k, i, j);
  for (int half = 0; half < 2; ++half) {
    const int lo = half * m + 1, hi = half * m + m;
    for (int i = lo; i <= hi; ++i)
      for (int j = i + 1; j <= hi; ++j)
        for (int k = lo; k <= hi; ++k) {
          if (k == i || k == j) continue;
          out.push_back(cochain_gen(h, 2, {{{i, c(k)}, c(j), 1}, {{i, j}, k, -1}}));
          out.push_back(cochain_gen(h, 2, {{{j, c(k)}, c(i), 1}, {{i, j}, k, 1}}));
        }
  }
  return out;
}

std::vector<Generator> im_d0_basis(const Heisenberg& h) {
  std::vector<Generator> out;
  for (int i = 1; i <= 2 * h.m(); ++i) out.push_back(cochain_gen(h, 1, {{{i}, h.dim(), 1}}));
  return out;
}

std::vector<Generator> im_d1_basis(const Heisenberg& h) {
  const int m = h.m(), n = h.dim();
  std::vector<Generator> out;
  for (int i = 1; i <= 2 * m; ++i) {
    std::vector<Term> t{{{i, n}, n, 1}};
    for (int j = 1; j <= m; ++j) t.push_back({{j, j + m}, h.conjugate(i), -h.sign(i)});
    Vec v = make_cochain(h, 2, t);
    out.push_back({format_cochain(h.field(), CochainSpace(n, 2), v), std::move(v)});
  }
  for (int i = 1; i <= 2 * m; ++i)
    for (int j = i + 1; j <= 2 * m; ++j) out.push_back(cochain_gen(h, 2, {{{i, j}, n, 1}}));
  return out;
}

std::string format_pair(const Heisenberg& h, std::span<const Elem> coords) {
  const size_t c2 = CochainSpace(h.dim(), 2).dim();
  if (coords.size() != restricted2_dim(h)) throw Error(Errc::dimension_mismatch, "pair coordinates length mismatch");
  const Field& f = h.field();
  std::ostringstream os;
  const bool phi_zero = all_zero(coords.subspan(0, c2));
  os << "(" << (phi_zero ? "0" : format_cochain(f, CochainSpace(h.dim(), 2), coords.subspan(0, c2))) << ", ";
  bool first = true;
  if (!phi_zero) {
    os << "phi~";
    first = false;
  }
  const auto n = static_cast<size_t>(h.dim());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const Elem c = coords[c2 + i * n + j];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (c != 1) os << f.format(c) << "*";
      os << "ebar^" << i + 1 << "_" << j + 1;
    }
  if (first) os << "0";
  os << ")";
  return os.str();
}

std::vector<Prediction> predicted(const Heisenberg& h) {
  const int m = h.m(), n = h.dim(), p = h.p();
  const Field& f = h.field();
  std::vector<Prediction> out;
  if (m < 1) {
    for (Space s : {Space::H1, Space::H1Star, Space::H2, Space::H2Star, Space::Hp0})
      out.push_back({s, false, "no theorem for m = 0", 0, {}, {}, std::nullopt, ""});
    return out;
  }
  const auto h1 = h1_theorem_basis(h);

  {
    Prediction pr{Space::H1, true, "2m^2+m+1", h1_formula(m), h1, {}, im_d0_basis(h), "beta/gamma families with i < j"};
    out.push_back(std::move(pr));
  }

  {
    Prediction pr{Space::H1Star, true, "", 0, {}, {}, im_d0_basis(h), "beta/gamma families with i < j"};
    const Generator alpha = alpha_class(h);
    if (p > 2) {
      if (lambda_zero(h)) {
        pr.note = "p>2, lambda=0: equals H1";
        pr.generators = h1;
      } else {
        pr.note = "p>2, lambda!=0: H1 modulo the class e^n_n + sum e^i_i";
        pr.generators.assign(h1.begin() + 1, h1.end());
        pr.excluded.push_back(alpha);
      }
    } else {
      // drop the alpha class and the e^{m+i}_i, e^i_{m+i} classes (the last 2m entries)
      pr.generators.assign(h1.begin() + 1, h1.end() - 2 * m);
      for (auto it = h1.end() - 2 * m; it != h1.end(); ++it) pr.excluded.push_back(*it);
      const bool low_zero = std::all_of(h.lambda().begin(), h.lambda().end() - 1, [](Elem e) { return e == 0; });
      if (h.lambda(n) == 0) {
        pr.note = "p=2, lambda_n=0: quotient plus the twisted alpha class";
        Vec v = alpha.coords;
        const CochainSpace c1(n, 1);
        for (int i = 1; i <= m; ++i) {
          c1.accumulate(f, v, {i}, m + i, h.lambda(i));
          c1.accumulate(f, v, {m + i}, i, h.lambda(m + i));
        }
        pr.generators.push_back({format_cochain(f, c1, v), v});
        if (!low_zero) pr.excluded.push_back(alpha);
      } else {
        pr.note = "p=2, lambda_n!=0: quotient of H1";
        pr.excluded.push_back(alpha);
      }
    }
    pr.dim = pr.generators.size();
    out.push_back(std::move(pr));
  }

  {
    Prediction pr{Space::H2, true, m == 1 ? "m=1 list" : "8/3 m^3 - 2/3 m", h2_formula(m), h2_theorem_basis(h), {},
                  im_d1_basis(h), m == 1 ? "" : kReadingA};
    out.push_back(std::move(pr));
  }

  {
    Prediction pr{Space::H2Star, m >= 2, "", 0, {}, {}, std::nullopt, kReadingA};
    if (m < 2) {
      pr.note = "m=1 not covered by theorem";
    } else {
      const auto am = h2_theorem_basis(h);
      const size_t base = h2_formula(m);
      if (p > 2) {
        for (const auto& g : am) pr.generators.push_back(pair_gen(h, g.coords));
        int skip = 0;
        for (int i = 1; i <= n && skip == 0; ++i)
          if (h.lambda(i) != 0) skip = i;
        for (int j = 1; j <= n; ++j)
          if (j != skip) pr.generators.push_back(frob_gen(h, j, n));
        pr.note = skip == 0 ? "p>2, lambda=0: A_m^[p] plus (0, ebar^i_n)" : "p>2, lambda!=0: A_m^[p] plus (0, ebar^j_n), j != " + std::to_string(skip);
        pr.dim = base + static_cast<size_t>(n) - (skip == 0 ? 0 : 1);
      } else {
        // A_m lists e^{ij}_{i'}, e^{ij}_{j'} first, in pairs over i < j
        size_t idx = 0;
        for (int i = 1; i <= 2 * m; ++i)
          for (int j = i + 1; j <= 2 * m; ++j) {
            pr.generators.push_back(pair_gen(h, am[idx++].coords, i, h.conjugate(j)));
            pr.generators.push_back(pair_gen(h, am[idx++].coords, j, h.conjugate(i)));
          }
        for (; idx < am.size(); ++idx) pr.generators.push_back(pair_gen(h, am[idx].coords));
        if (h.lambda(n) == 0) {
          pr.generators.push_back(frob_gen(h, n, n));
          pr.note = "p=2, lambda_n=0: A_m^[2] plus (0, ebar^n_n)";
          pr.dim = base + 1;
        } else {
          pr.note = "p=2, lambda_n!=0: A_m^[2]";
          pr.dim = base;
        }
      }
    }
    out.push_back(std::move(pr));
  }

  {
    Prediction pr{Space::Hp0, true, "", 0, {}, {}, std::nullopt, ""};
    auto unit = [&](int i) {
      Vec v(static_cast<size_t>(n), 0);
      v[static_cast<size_t>(i - 1)] = 1;
      return Generator{"ebar^" + std::to_string(i) + "_" + std::to_string(n), v};
    };
    if (p > 2) {
      pr.note = "p>2: span of sum lambda_i ebar^i_n";
      if (!lambda_zero(h)) {
        std::ostringstream os;
        bool first = true;
        for (int i = 1; i <= n; ++i)
          if (h.lambda(i) != 0) {
            os << (first ? "" : " + ") << (h.lambda(i) == 1 ? "" : f.format(h.lambda(i)) + "*") << "ebar^" << i << "_" << n;
            first = false;
          }
        pr.generators.push_back({os.str(), h.lambda()});
      }
    } else {
      pr.note = "p=2: ebar^i_n (i <= 2m) and lambda_n ebar^n_n";
      for (int i = 1; i <= 2 * m; ++i) pr.generators.push_back(unit(i));
      if (h.lambda(n) != 0) pr.generators.push_back(unit(n));
    }
    pr.dim = pr.generators.size();
    out.push_back(std::move(pr));
  }
  return out;
}

std::vector<Verdict> verify(const RestrictedComplex& rc) {
  const Heisenberg& h = rc.algebra();
  const OrdinaryComplex& oc = rc.ordinary();
  std::vector<Verdict> out;
  for (const auto& pr : predicted(h)) {
    Verdict v;
    v.space = pr.space;
    const CohomologySpace* cs = nullptr;
    switch (pr.space) {
      case Space::H1: cs = &oc.h1(); break;
      case Space::H2: cs = &oc.h2(); break;
      case Space::H1Star: cs = &rc.h1_star(); break;
      case Space::H2Star: cs = &rc.h2_star(); break;
      case Space::Hp0: break;
    }
    v.computed_dim = cs ? cs->dim() : rc.hp0().dim();
    if (!pr.applicable) {
      v.covered = false;
      v.diagnostics.push_back(pr.note);
      out.push_back(std::move(v));
      continue;
    }
    v.predicted_dim = pr.dim;
    auto fail = [&](std::string msg) {
      v.pass = false;
      v.diagnostics.push_back(std::move(msg));
    };
    if (v.computed_dim != pr.dim)
      fail("dimension: computed " + std::to_string(v.computed_dim) + ", predicted " + std::to_string(pr.dim));
    if (pr.generators.size() != pr.dim)
      fail("cardinality: " + std::to_string(pr.generators.size()) + " generators for predicted dimension " +
           std::to_string(pr.dim));

    std::vector<Vec> gens;
    for (const auto& g : pr.generators) gens.push_back(g.coords);
    if (cs) {
      for (const auto& g : pr.generators)
        if (!cs->cocycles.contains(g.coords)) {
          fail("not a cocycle: " + g.label);
          break;
        }
      for (const auto& g : pr.excluded)
        if (cs->cocycles.contains(g.coords)) {
          fail("unexpected cocycle: " + g.label);
          break;
        }
      if (v.pass) {
        const size_t r = cs->quotient.rank_modulo(gens);
        if (r != gens.size())
          fail("independence: generators have rank " + std::to_string(r) + " modulo coboundaries, expected " +
               std::to_string(gens.size()));
      }
      if (pr.coboundary_basis) {
        std::vector<Vec> b;
        for (const auto& g : *pr.coboundary_basis) b.push_back(g.coords);
        const auto span = Subspace::span(h.field(), cs->coboundaries.ambient_dim(), b);
        if (!(span == cs->coboundaries) || span.dim() != b.size())
          fail("coboundary basis: listed set spans dim " + std::to_string(span.dim()) + " of " + std::to_string(b.size()) +
               " vectors, image has dim " + std::to_string(cs->coboundaries.dim()));
      }
    } else {
      const auto span = Subspace::span(h.field(), static_cast<size_t>(h.dim()), gens);
      if (!(span == rc.hp0())) fail("H^[p]_0: listed generators do not span the computed subspace");
    }
    if (v.pass) {
      v.diagnostics.push_back(pr.note);
      if (!pr.reading.empty()) v.diagnostics.push_back("reading: " + pr.reading);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace hcoh
