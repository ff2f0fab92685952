#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcoh/checks.hpp"

using namespace hcoh;

namespace {

Heisenberg algebra(int p, int k, int m, const std::string& lambda = "zero") {
  const Field f = Field::make(p, k);
  return Heisenberg(f, m, parse_lambda(f, m, lambda));
}

bool all_pass(const std::vector<Check>& cs) {
  for (const auto& c : cs)
    if (!c.pass) return false;
  return !cs.empty();
}

bool any_fail(const std::vector<Check>& cs) { return !all_pass(cs); }

}  // namespace

TEST_CASE("suites pass on a sound algebra") {
  const auto h = algebra(3, 2, 2, "e1");
  const RestrictedComplex rc(h);
  CHECK(all_pass(complex_checks(h)));
  CHECK(all_pass(oracle_checks(rc.ordinary())));
  CHECK(oracle_checks(rc.ordinary()).size() == 5);
  CHECK(all_pass(compat_checks(rc.ordinary(), 4, 30)));
  const auto six = sixterm_checks(rc);
  CHECK(all_pass(six));
  CHECK(six.front().detail == "H2* 24 = H2 20 + 5 - Hp0 1");
}

TEST_CASE("m = 1 skips the degree-two basic equations") {
  const OrdinaryComplex oc(algebra(2, 1, 1));
  const auto cs = oracle_checks(oc);
  CHECK(cs.size() == 4);
  CHECK(all_pass(cs));
}

TEST_CASE("the corrupted algebra is caught") {
  const auto h = algebra(3, 1, 2).corrupted();
  const OrdinaryComplex oc(h);
  CHECK(any_fail(oracle_checks(oc)));
  CHECK(any_fail(compat_checks(oc, 1, 30)));
}
