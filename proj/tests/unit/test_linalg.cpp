#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hcoh/linalg.hpp"

using namespace hcoh;

namespace {

Matrix random_matrix(const Field& f, size_t r, size_t c, std::mt19937& rng, int zero_bias = 0) {
  std::uniform_int_distribution<int> d(-zero_bias, f.order() - 1);
  Matrix m(f, r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m.at(i, j) = static_cast<Elem>(std::max(0, d(rng)));
  return m;
}

// Rank over GF(2) by counting the vectors in the row space.
size_t brute_rank_gf2(const Matrix& m) {
  std::vector<Vec> seen{Vec(m.cols(), 0)};
  for (size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row_vec(r);
    std::vector<Vec> next = seen;
    for (const auto& v : seen) {
      Vec w(v.size());
      for (size_t j = 0; j < v.size(); ++j) w[j] = static_cast<Elem>(v[j] ^ row[j]);
      if (std::find(next.begin(), next.end(), w) == next.end()) next.push_back(w);
    }
    seen = std::move(next);
  }
  size_t r = 0;
  while ((size_t{1} << r) < seen.size()) ++r;
  return r;
}

}  // namespace

TEST_CASE("rank agrees with row-space enumeration over GF(2)") {
  std::mt19937 rng(1);
  const Field f = Field::make(2, 1);
  for (int t = 0; t < 40; ++t) {
    const auto m = random_matrix(f, 1 + t % 6, 1 + (t * 7) % 6, rng, 1);
    CHECK(rank(m) == brute_rank_gf2(m));
  }
}

TEST_CASE("rref is reduced and deterministic") {
  std::mt19937 rng(2);
  const Field f = Field::make(3, 2);
  const auto m = random_matrix(f, 6, 9, rng, 4);
  const auto a = rref(m), b = rref(m);
  CHECK(a.reduced == b.reduced);
  for (size_t r = 0; r < a.rank; ++r) {
    CHECK(a.reduced.at(r, a.pivots[r]) == 1);
    for (size_t s = 0; s < a.reduced.rows(); ++s)
      if (s != r) CHECK(a.reduced.at(s, a.pivots[r]) == 0);
  }
  for (size_t r = a.rank; r < a.reduced.rows(); ++r) CHECK(a.reduced.top_rows(r + 1).row_vec(r) == Vec(9, 0));
}

TEST_CASE("rank-nullity and kernel membership") {
  std::mt19937 rng(5);
  for (auto [p, k] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{5, 1}, std::pair{2, 2}, std::pair{3, 2}}) {
    const Field f = Field::make(p, k);
    for (int t = 0; t < 10; ++t) {
      const auto m = random_matrix(f, 7, 10, rng, 3);
      const auto ker = kernel_basis(m);
      CHECK(ker.dim() + rank(m) == 10);
      for (size_t r = 0; r < ker.dim(); ++r) CHECK(m.apply(ker.basis().row(r)) == Vec(7, 0));
      CHECK(image_basis(m).dim() == rank(m));
      CHECK(rank(m * kernel_basis(m).basis().transpose()) == 0);
    }
  }
}

TEST_CASE("subspace sum and intersection satisfy the dimension formula") {
  std::mt19937 rng(9);
  const Field f = Field::make(5, 1);
  for (int t = 0; t < 20; ++t) {
    const auto a = Subspace::span_rows(random_matrix(f, 4, 8, rng, 3));
    const auto b = Subspace::span_rows(random_matrix(f, 5, 8, rng, 3));
    const auto s = a.sum(b), i = a.intersect(b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(s.contains(a));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
  }
}

TEST_CASE("quotient normal form is a class invariant") {
  std::mt19937 rng(4);
  const Field f = Field::make(3, 1);
  const auto big = Subspace::span_rows(random_matrix(f, 6, 8, rng));
  std::vector<Vec> sub_vecs{big.basis().row_vec(0), big.basis().row_vec(2)};
  const auto small = Subspace::span(f, 8, sub_vecs);
  const Quotient q(big, small);
  CHECK(q.dim() == big.dim() - 2);
  Vec v = big.basis().row_vec(1);
  Vec w = v;
  for (size_t j = 0; j < 8; ++j) w[j] = f.add(w[j], f.mul(2, sub_vecs[0][j]));
  CHECK(q.reduce(v) == q.reduce(w));
  CHECK(q.rank_modulo(sub_vecs) == 0);
  std::vector<Vec> all;
  for (size_t r = 0; r < big.dim(); ++r) all.push_back(big.basis().row_vec(r));
  CHECK(q.rank_modulo(all) == q.dim());
  CHECK_THROWS_AS(Quotient(small, big), Error);
  CHECK_THROWS_AS(Quotient(small, Subspace(f, 3)), Error);
}

TEST_CASE("member checks dimensions") {
  const Field f = Field::make(2, 1);
  const auto s = Subspace::full(f, 3);
  CHECK(member(s, Vec{1, 0, 1}));
  CHECK_THROWS_AS(member(s, Vec{1, 0}), Error);
}
