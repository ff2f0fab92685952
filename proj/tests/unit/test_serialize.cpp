#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hcoh/serialize.hpp"

using namespace hcoh;
using nlohmann::json;

namespace {

Heisenberg algebra(int p, int k, int m, const std::string& lambda = "zero") {
  const Field f = Field::make(p, k);
  return Heisenberg(f, m, parse_lambda(f, m, lambda));
}

}  // namespace

TEST_CASE("scalars") {
  const Field f = Field::make(3, 2);
  for (Elem a = 0; a < static_cast<Elem>(f.order()); ++a) {
    const json j = io::scalar_to_json(f, a);
    CHECK(j.size() == 2);
    CHECK(io::scalar_from_json(f, json::parse(j.dump())) == a);
  }
  CHECK(io::scalar_from_json(f, json(4)) == f.from_int(1));
  CHECK_THROWS_AS(io::scalar_from_json(f, json("not a scalar")), Error);
  CHECK_THROWS_AS(io::scalar_from_json(f, json::object()), Error);
}

TEST_CASE("cochains round trip") {
  std::mt19937 rng(3);
  const auto h = algebra(5, 2, 2, "e1");
  for (int q : {1, 2}) {
    const CochainSpace s(h.dim(), q);
    for (int t = 0; t < 10; ++t) {
      Cochain c{q, Vec(s.dim())};
      for (auto& e : c.coords) e = static_cast<Elem>(rng() % static_cast<unsigned>(h.field().order()));
      const json j = json::parse(io::cochain_to_json(h, c).dump());
      CHECK(io::cochain_from_json(h, q, j) == c);
    }
  }
}

TEST_CASE("cochain parsing") {
  const auto h = algebra(3, 1, 2);
  const auto c = io::cochain_from_json(h, 2, json::parse("[[[2,1],3,1]]"));
  CHECK(c.coords == make_cochain(h, 2, {{{1, 2}, 3, -1}}));
  CHECK(io::cochain_to_json(h, Cochain{2, make_cochain(h, 2, {{{1, 2}, 3, 2}})}).dump() == "[[[1,2],3,[2]]]");
  CHECK_THROWS_AS(io::cochain_from_json(h, 2, json::parse("[[[1],3,1]]")), Error);
  CHECK_THROWS_AS(io::cochain_from_json(h, 2, json::parse("[[[1,9],3,1]]")), Error);
  CHECK_THROWS_AS(io::cochain_from_json(h, 2, json::parse("{}")), Error);
}

TEST_CASE("pairs round trip") {
  const auto h = algebra(2, 2, 2, "central");
  const RestrictedComplex rc(h);
  const auto& q = rc.h2_star().quotient;
  for (size_t r = 0; r < q.dim(); ++r) {
    const auto pair = pair_from_coords(h, q.representative(r));
    CHECK(io::pair_from_json(h, json::parse(io::pair_to_json(h, pair).dump())) == pair);
  }
  CHECK_THROWS_AS(io::pair_from_json(h, json::parse(R"({"phi": []})")), Error);
  CHECK_THROWS_AS(io::pair_from_json(h, json::parse(R"({"phi": [], "omega": [[0]]})")), Error);
}

TEST_CASE("deformation dump") {
  const auto h = algebra(3, 1, 2);
  const RestrictedComplex rc(h);
  Vec v(restricted2_dim(h), 0);
  v[omega_position(h, 1, 5)] = 1;
  const json j = io::deformation_to_json(deform(rc, pair_from_coords(h, v)));
  // undeformed brackets [e_i, e_{i+2}] = e_5 plus the single t term of the p-map
  CHECK(j["bracket"].size() == 2);
  CHECK(j["bracket"][0] == json::parse("[1,3,5,[1],[0]]"));
  CHECK(j["pmap"] == json::parse("[[1,5,[0],[1]]]"));
}

TEST_CASE("verdicts") {
  Verdict v{Space::H2Star, false, std::nullopt, 5, true, {}};
  const json j = io::verdict_to_json(v);
  CHECK(j["space"] == "H2*");
  CHECK(j["predicted_dim"].is_null());
  CHECK(j["computed_dim"] == 5);
  CHECK(j["covered"] == false);
}
