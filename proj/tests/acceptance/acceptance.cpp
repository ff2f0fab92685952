// Acceptance runner: one PASS/FAIL line per criterion, exit 1 if any fails.
// Expected values are written out literally rather than taken from the
// library's own formulas.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hcoh/checks.hpp"
#include "hcoh/deformation.hpp"
#include "hcoh/theorems.hpp"

using namespace hcoh;

namespace {

Heisenberg algebra(int p, int k, int m, const std::string& lambda) {
  const Field f = Field::make(p, k);
  return Heisenberg(f, m, parse_lambda(f, m, lambda));
}

std::string where(int p, int k, int m, const std::string& lambda) {
  std::ostringstream os;
  os << "p=" << p << " k=" << k << " m=" << m << " lambda=" << lambda;
  return os.str();
}

// Collects the first few failures of a criterion.
struct Tally {
  size_t checks = 0, failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
  void expect_eq(size_t got, size_t want, const std::string& what) {
    expect(got == want, what + ": got " + std::to_string(got) + ", want " + std::to_string(want));
  }
};

struct Criterion {
  int id;
  const char* title;
  double limit_s;  // 0 = no time limit
  std::function<void(Tally&)> body;
};

const std::vector<std::string> kPresets{"zero", "e1", "central"};
std::string nonzero_preset(int p) { return p == 2 ? "central" : "e1"; }

void h1_dims(Tally& t) {
  const std::map<int, size_t> want{{1, 4}, {2, 11}, {3, 22}, {4, 37}};
  for (int p : {2, 3, 5})
    for (int k : {1, 2})
      for (auto [m, d] : want) t.expect_eq(h1_space(algebra(p, k, m, "zero")).dim(), d, where(p, k, m, "zero") + " H1");
}

void h2_dims(Tally& t) {
  const std::map<int, size_t> want{{1, 5}, {2, 20}, {3, 70}, {4, 168}};
  for (int p : {2, 3, 5})
    for (int k : {1, 2})
      for (auto [m, d] : want) t.expect_eq(h2_space(algebra(p, k, m, "zero")).dim(), d, where(p, k, m, "zero") + " H2");
}

void h1_star(Tally& t) {
  for (int p : {2, 3, 5})
    for (int k : {1, 2})
      for (int m : {1, 2, 3})
        for (const std::string lam : {std::string("zero"), nonzero_preset(p)}) {
          const auto w = where(p, k, m, lam);
          const auto h = algebra(p, k, m, lam);
          const RestrictedComplex rc(h);
          size_t want;
          if (p == 2)
            want = static_cast<size_t>(lam == "zero" ? 2 * m * m - m + 1 : 2 * m * m - m);
          else
            want = static_cast<size_t>(lam == "zero" ? 2 * m * m + m + 1 : 2 * m * m + m);
          t.expect_eq(rc.h1_star().dim(), want, w + " H1*");
          t.expect(hochschild_h1_star(rc.ordinary()) == rc.h1_star().cocycles,
                   w + " Hochschild criterion differs from ker d1*");
        }
}

void h2_star(Tally& t) {
  // p odd: zero 25, 77 and e1 24, 76; p = 2: zero 21, 71 and central 20, 70
  const std::map<std::pair<bool, std::string>, std::map<int, size_t>> want{
      {{false, "zero"}, {{2, 25}, {3, 77}}},
      {{false, "e1"}, {{2, 24}, {3, 76}}},
      {{true, "zero"}, {{2, 21}, {3, 71}}},
      {{true, "central"}, {{2, 20}, {3, 70}}}};
  for (int p : {2, 3, 5})
    for (int k : {1, 2})
      for (int m : {2, 3})
        for (const std::string lam : {std::string("zero"), nonzero_preset(p)})
          t.expect_eq(h2_star_space(algebra(p, k, m, lam)).dim(), want.at({p == 2, lam}).at(m), where(p, k, m, lam) + " H2*");
}

template <class F>
void grid(F&& f, int m_lo = 1, int m_hi = 3) {
  for (int p : {2, 3, 5})
    for (int k : {1, 2})
      for (int m = m_lo; m <= m_hi; ++m)
        for (const auto& lam : kPresets) f(p, k, m, lam);
}

void record(Tally& t, const std::vector<Check>& cs, const std::string& w) {
  for (const auto& c : cs) t.expect(c.pass, w + " " + c.name + ": " + c.detail);
}

void complex_suite(Tally& t) {
  grid([&](int p, int k, int m, const std::string& lam) { record(t, complex_checks(algebra(p, k, m, lam)), where(p, k, m, lam)); });
}

void oracle_suite(Tally& t) {
  grid([&](int p, int k, int m, const std::string& lam) {
    record(t, oracle_checks(OrdinaryComplex(algebra(p, k, m, lam))), where(p, k, m, lam));
  });
}

void basis_fidelity(Tally& t) {
  grid([&](int p, int k, int m, const std::string& lam) {
    const auto w = where(p, k, m, lam);
    for (const auto& v : verify(algebra(p, k, m, lam))) {
      if (!v.covered) continue;
      t.expect(v.pass, w + " " + to_string(v.space) + ": " + (v.diagnostics.empty() ? "" : v.diagnostics.front()));
    }
  });
}

void six_term(Tally& t) {
  grid([&](int p, int k, int m, const std::string& lam) {
    const RestrictedComplex rc(algebra(p, k, m, lam));
    const auto w = where(p, k, m, lam);
    record(t, sixterm_checks(rc), w);
    // dim H2* = dim H2 + (2m+1) - dim Hp0, recomputed here
    t.expect_eq(rc.h2_star().dim() + rc.hp0().dim(), rc.ordinary().h2().dim() + static_cast<size_t>(2 * m + 1),
                w + " splitting");
  }, 2, 3);
}

void compatibility(Tally& t) {
  unsigned seed = 100;
  for (int p : {2, 3})
    for (int m : {1, 2})
      for (const auto& lam : kPresets) record(t, compat_checks(OrdinaryComplex(algebra(p, 2, m, lam)), seed++, 100), where(p, 2, m, lam));
}

void deformations(Tally& t) {
  for (int p : {2, 3, 5})
    for (int k : {1, 2})
      for (const auto& lam : kPresets) {
        const auto h = algebra(p, k, 2, lam);
        const RestrictedComplex rc(h);
        const auto& q = rc.h2_star().quotient;
        for (size_t r = 0; r < q.dim(); ++r) {
          const auto rep = verify_axioms(deform(rc, pair_from_coords(h, q.representative(r))), static_cast<unsigned>(r));
          t.expect(rep.ok(), where(p, k, 2, lam) + " class " + std::to_string(r) + ": " +
                                 (rep.witnesses.empty() ? "" : rep.witnesses.front()));
        }
      }

  {
    const auto h = algebra(3, 1, 2, "zero");
    const RestrictedComplex rc(h);
    t.expect_eq(rc.h2_star().dim(), 25, "p=3 m=2 lambda=0 nontrivial classes");
    t.expect_eq(rc.ordinary_trivial_cocycles().dim() - rc.h2_star().coboundaries.dim(), 5,
                "p=3 m=2 lambda=0 ordinary-trivial classes");
  }

  // 2m+1 (p odd, lambda=0), 2m (p odd, lambda!=0), 1 (p=2, lambda_n=0), 0 (p=2, lambda_n!=0)
  for (int p : {2, 3, 5})
    for (int m : {2, 3})
      for (const std::string lam : {std::string("zero"), nonzero_preset(p)}) {
        const RestrictedComplex rc(algebra(p, 1, m, lam));
        size_t want = p == 2 ? (lam == "zero" ? 1 : 0) : static_cast<size_t>(lam == "zero" ? 2 * m + 1 : 2 * m);
        t.expect_eq(rc.ordinary_trivial_cocycles().dim() - rc.h2_star().coboundaries.dim(), want,
                    where(p, 1, m, lam) + " ordinary-trivial classes");
      }

  // negative control: a 2-cochain outside ker d^2
  const auto h = algebra(3, 1, 2, "zero");
  const OrdinaryComplex oc(h);
  const size_t c2 = oc.space(2).dim();
  Cochain phi{2, Vec(c2, 0)};
  for (size_t pos = 0; pos < c2; ++pos) {
    phi.coords.assign(c2, 0);
    phi.coords[pos] = 1;
    if (!oc.h2().cocycles.contains(phi.coords)) break;
  }
  const auto rep = verify_axioms(DualDeformation::unchecked(h, tilde_lift(h, phi)));
  t.expect(!rep.bracket_ok && !rep.witnesses.empty() && rep.witnesses.front().rfind("Jacobi fails on", 0) == 0,
           "non-cocycle was not rejected with a Jacobi witness");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "dim H1 = 4, 11, 22, 37 for m = 1..4", 10, h1_dims},
      {2, "dim H2 = 5, 20, 70, 168 for m = 1..4", 60, h2_dims},
      {3, "dim H1* by case, Hochschild criterion agrees", 0, h1_star},
      {4, "dim H2* by case for m = 2, 3", 300, h2_star},
      {5, "d1d0, d2d1, d1*d0, d2*d1* vanish", 0, complex_suite},
      {6, "brute-force differentials and basic equations", 0, oracle_suite},
      {7, "listed generators are independent cocycles", 0, basis_fidelity},
      {8, "six-term splitting and H vanishing", 0, six_term},
      {9, "star extension and Frobenius semilinearity over GF(4), GF(9)", 0, compatibility},
      {10, "deformation axioms, class counts, negative control", 0, deformations},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body(t);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool slow = c.limit_s > 0 && secs >= c.limit_s;
    const bool ok = t.failures == 0 && error.empty() && !slow;
    failed += ok ? 0 : 1;
    std::printf("%s criterion %d: %s (%zu checks, %zu failed, %.2f s%s)\n", ok ? "PASS" : "FAIL", c.id, c.title, t.checks,
                t.failures, secs, c.limit_s > 0 ? (" of " + std::to_string(static_cast<int>(c.limit_s)) + " s").c_str() : "");
    for (const auto& n : t.notes) std::printf("    %s\n", n.c_str());
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    if (slow) std::printf("    over the time limit\n");
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
