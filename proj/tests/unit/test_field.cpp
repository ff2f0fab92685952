#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcoh/field.hpp"

using hcoh::Errc;
using hcoh::Error;
using hcoh::gf::Field;
using hcoh::gf::Scalar;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return Errc::invalid_argument;
}

}  // namespace

TEST_CASE("prime fields reduce integers") {
  const Field f = Field::make(5, 1);
  CHECK(f.order() == 5);
  CHECK(f.from_int(7) == 2);
  CHECK(f.from_int(-1) == 4);
  CHECK(f.mul(3, 4) == 2);
  CHECK(f.inv(2) == 3);
  CHECK(f.modulus() == std::vector<int>{0, 1});
}

TEST_CASE("least monic irreducible moduli") {
  // enumerated by hand: x^2, x^2+1, x^2+x are reducible over GF(2)
  CHECK(Field::make(2, 2).modulus() == std::vector<int>{1, 1, 1});
  // -1 is a non-square mod 3, x^2 is reducible
  CHECK(Field::make(3, 2).modulus() == std::vector<int>{1, 0, 1});
  // -1 = 4 is a square mod 5, -2 = 3 is not
  CHECK(Field::make(5, 2).modulus() == std::vector<int>{2, 0, 1});
}

TEST_CASE("field axioms hold exhaustively on small extensions") {
  for (auto [p, k] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}, std::pair{5, 1}}) {
    const Field f = Field::make(p, k);
    const int q = f.order();
    for (int a = 0; a < q; ++a) {
      const auto ea = static_cast<hcoh::gf::Elem>(a);
      if (a != 0) CHECK(f.mul(ea, f.inv(ea)) == 1);
      CHECK(f.add(ea, f.neg(ea)) == 0);
      CHECK(f.frobenius(ea) == f.pow(ea, static_cast<unsigned>(p)));
      if (a != 0) CHECK(f.pow(ea, static_cast<unsigned>(q - 1)) == 1);
      for (int b = 0; b < q; ++b) {
        const auto eb = static_cast<hcoh::gf::Elem>(b);
        CHECK(f.frobenius(f.add(ea, eb)) == f.add(f.frobenius(ea), f.frobenius(eb)));
        CHECK(f.frobenius(f.mul(ea, eb)) == f.mul(f.frobenius(ea), f.frobenius(eb)));
        CHECK(f.sub(f.add(ea, eb), eb) == ea);
        for (int c = 0; c < q; c += 3) {
          const auto ec = static_cast<hcoh::gf::Elem>(c);
          CHECK(f.mul(ea, f.add(eb, ec)) == f.add(f.mul(ea, eb), f.mul(ea, ec)));
        }
      }
    }
  }
}

TEST_CASE("generator of GF(4) satisfies t^2 = t + 1") {
  const Field f = Field::make(2, 2);
  const auto t = f.generator();
  CHECK(f.mul(t, t) == f.add(t, 1));
  CHECK(f.frobenius(t) == f.add(t, 1));
}

TEST_CASE("format and parse round trip") {
  const Field f = Field::make(3, 2);
  for (int a = 0; a < f.order(); ++a) {
    const auto e = static_cast<hcoh::gf::Elem>(a);
    CHECK(f.parse(f.format(e)) == e);
  }
  CHECK(f.parse("1+2*t") == f.from_coeffs(std::vector<int>{1, 2}));
  CHECK(f.parse("2") == 2);
  CHECK(code_of([&] { f.parse("1+q"); }) == Errc::parse_error);
}

TEST_CASE("construction errors") {
  CHECK(code_of([] { Field::make(4, 1); }) == Errc::non_prime);
  CHECK(code_of([] { Field::make(3, 0); }) == Errc::bad_degree);
  CHECK(code_of([] { Field::make(2, 11); }) == Errc::field_too_large);
  CHECK(code_of([] { Field::make(5, 1).inv(0); }) == Errc::zero_inverse);
  CHECK(code_of([] { Field::make(3, 2).from_coeffs(std::vector<int>{3, 0}); }) != Errc::non_prime);
}

TEST_CASE("scalars refuse mixed fields") {
  const Scalar a(Field::make(3, 1), 1), b(Field::make(5, 1), 1);
  CHECK(code_of([&] { (void)(a + b); }) == Errc::field_mismatch);
  const Scalar c(Field::make(3, 2), 4);
  CHECK((c * c.inv()).code() == 1);
  CHECK(c.frobenius() == c.pow(3));
}
