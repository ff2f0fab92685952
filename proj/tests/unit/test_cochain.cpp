#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcoh/cochain.hpp"

using namespace hcoh;

namespace {

Heisenberg algebra(int p, int k, int m) { return Heisenberg(Field::make(p, k), m, Vec(static_cast<size_t>(2 * m + 1), 0)); }

// Counts vectors of F^dim (F prime) killed by brute-force d^q.
size_t enumerate_kernel(const Heisenberg& h, int q) {
  const size_t dim = CochainSpace(h.dim(), q).dim();
  const int p = h.field().order();
  size_t total = 1, count = 0;
  for (size_t i = 0; i < dim; ++i) total *= static_cast<size_t>(p);
  Vec v(dim, 0);
  for (size_t code = 0; code < total; ++code) {
    size_t c = code;
    for (size_t i = 0; i < dim; ++i, c /= static_cast<size_t>(p)) v[i] = static_cast<Elem>(c % static_cast<size_t>(p));
    const auto d = brute_differential(h, Cochain{q, v});
    if (std::all_of(d.coords.begin(), d.coords.end(), [](Elem e) { return e == 0; })) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("cochain space indexing") {
  const CochainSpace s(5, 2);
  CHECK(s.dim() == 50);
  const std::vector<int> up{2, 4};
  const auto pos = s.position(up, 3);
  CHECK(s.index(pos) == CochainIndex{2, {2, 4}, 3});
  CHECK(s.signed_position({4, 2}, 3) == std::pair<size_t, int>{pos, -1});
  CHECK_FALSE(s.signed_position({2, 2}, 3).has_value());
  CHECK_THROWS_AS(CochainSpace(5, 4), Error);
}

TEST_CASE("evaluation is alternating") {
  const auto h = algebra(5, 1, 1);
  const Cochain c{2, make_cochain(h, 2, {{{1, 2}, 3, 1}})};
  const AlgebraElement a[2] = {h.basis(1), h.basis(2)}, b[2] = {h.basis(2), h.basis(1)};
  CHECK(evaluate(h, c, a) == h.basis(3));
  CHECK(evaluate(h, c, b) == h.scale(4, h.basis(3)));
}

TEST_CASE("closed-form differentials equal the brute-force formula on every basis cochain") {
  for (auto [p, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{5, 1}, std::pair{3, 2}})
    for (int m = 1; m <= 3; ++m) {
      const auto h = algebra(p, k, m);
      for (int q = 0; q <= 2; ++q) {
        const auto d = differential_matrix(h, q);
        bool same = true;
        for (size_t c = 0; c < d.cols() && same; ++c) {
          Vec unit(d.cols(), 0);
          unit[c] = 1;
          same = brute_differential(h, Cochain{q, unit}).coords == d.column(c);
        }
        CHECK_MESSAGE(same, "p=" << p << " k=" << k << " m=" << m << " q=" << q);
      }
    }
}

TEST_CASE("d composed with d vanishes") {
  for (int p : {2, 3, 5})
    for (int m = 0; m <= 3; ++m) {
      const auto h = algebra(p, 1, m);
      CHECK((differential_matrix(h, 1) * differential_matrix(h, 0)).is_zero());
      CHECK((differential_matrix(h, 2) * differential_matrix(h, 1)).is_zero());
    }
}

TEST_CASE("kernel of d^1 at m = 1 by enumeration over GF(3)^9") {
  const auto h = algebra(3, 1, 1);
  CHECK(enumerate_kernel(h, 1) == 729);  // 3^6
  CHECK(kernel_basis(differential_matrix(h, 1)).dim() == 6);
}

TEST_CASE("kernel of d^2 at m = 1 by enumeration over GF(2)^9") {
  const auto h = algebra(2, 1, 1);
  CHECK(enumerate_kernel(h, 2) == 256);  // 2^8
  CHECK(kernel_basis(differential_matrix(h, 2)).dim() == 8);
}

TEST_CASE("ranks over several fields match the rational ranks") {
  // rational ranks computed independently: m=1 (3, 1), m=2 (10, 20)
  for (auto [p, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{5, 1}, std::pair{2, 2}}) {
    CHECK(rank(differential_matrix(algebra(p, k, 1), 1)) == 3);
    CHECK(rank(differential_matrix(algebra(p, k, 1), 2)) == 1);
    CHECK(rank(differential_matrix(algebra(p, k, 2), 1)) == 10);
    CHECK(rank(differential_matrix(algebra(p, k, 2), 2)) == 20);
    CHECK(kernel_basis(differential_matrix(algebra(p, k, 2), 2)).dim() == 30);
  }
}

TEST_CASE("cohomology dimensions for small m") {
  const int h1[] = {4, 11, 22}, h2[] = {5, 20, 70};
  for (int p : {2, 3, 5})
    for (int m = 1; m <= 3; ++m) {
      const OrdinaryComplex c(algebra(p, 1, m));
      CHECK(c.h1().dim() == static_cast<size_t>(h1[m - 1]));
      CHECK(c.h2().dim() == static_cast<size_t>(h2[m - 1]));
    }
}

TEST_CASE("listed kernel and image bases at m = 1") {
  const auto h = algebra(3, 1, 1);
  const OrdinaryComplex c(h);
  const std::vector<Vec> ker{
      make_cochain(h, 2, {{{1, 2}, 1, 1}}), make_cochain(h, 2, {{{1, 2}, 2, 1}}), make_cochain(h, 2, {{{1, 2}, 3, 1}}),
      make_cochain(h, 2, {{{1, 3}, 2, 1}}), make_cochain(h, 2, {{{1, 3}, 3, 1}}), make_cochain(h, 2, {{{2, 3}, 1, 1}}),
      make_cochain(h, 2, {{{2, 3}, 3, 1}}), make_cochain(h, 2, {{{1, 3}, 1, 1}, {{2, 3}, 2, -1}})};
  CHECK(Subspace::span(h.field(), 9, ker) == c.h2().cocycles);
  // the image generator pairs e^{12}_1 with +e^{23}_3 (d^1 of e^3_1 up to sign)
  const std::vector<Vec> im{make_cochain(h, 2, {{{1, 2}, 3, 1}}), make_cochain(h, 2, {{{1, 2}, 1, 1}, {{2, 3}, 3, 1}}),
                            make_cochain(h, 2, {{{1, 2}, 2, 1}, {{1, 3}, 3, -1}})};
  CHECK(Subspace::span(h.field(), 9, im) == c.h2().coboundaries);
  const std::vector<Vec> typo{make_cochain(h, 2, {{{1, 2}, 1, 1}, {{2, 3}, 3, -1}})};
  CHECK_FALSE(c.h2().coboundaries.contains(typo[0]));
}

TEST_CASE("basic equations reproduce the kernels") {
  for (int p : {2, 3, 5})
    for (int m = 1; m <= 3; ++m) {
      const auto h = algebra(p, 1, m);
      CHECK(basic_equations(h, 1) == kernel_basis(differential_matrix(h, 1)));
      if (m >= 2) CHECK(basic_equations(h, 2) == kernel_basis(differential_matrix(h, 2)));
    }
  CHECK_THROWS_AS(basic_equations(algebra(3, 1, 1), 2), Error);
  CHECK_THROWS_AS(basic_equations(algebra(3, 1, 0), 1), Error);
}

TEST_CASE("abelian case m = 0 has every 1-cochain as a cocycle") {
  const OrdinaryComplex c(algebra(3, 1, 0));
  CHECK(c.h1().dim() == 1);
  CHECK(c.h2().dim() == 0);
}

TEST_CASE("format_cochain") {
  const auto h = algebra(3, 1, 1);
  const CochainSpace s(3, 2);
  CHECK(format_cochain(h.field(), s, make_cochain(h, 2, {{{2, 1}, 3, 1}})) == "2*e^{1,2}_3");
  CHECK(format_cochain(h.field(), s, Vec(9, 0)) == "0");
}

TEST_CASE("make_cochain validates indices") {
  const auto h = algebra(3, 1, 1);
  CHECK_THROWS_AS(make_cochain(h, 2, {{{1, 4}, 3, 1}}), Error);
  CHECK_THROWS_AS(make_cochain(h, 2, {{{1}, 3, 1}}), Error);
}
