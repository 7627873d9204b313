#include "doctest.h"
#include "hecke/lattice_algebra.hpp"
#include "hecke/sampling.hpp"
#include "oracles.hpp"

using namespace hecke;

namespace {

GroupAlgebraElement th(std::vector<int> x, const LaurentScalar& c = 1) {
  return GroupAlgebraElement::theta(Weight(std::move(x)), c);
}

const LaurentScalar v = LaurentScalar::v_power(1);
const LaurentScalar v2 = LaurentScalar::v_power(2);

}  // namespace

TEST_CASE("Laurent scalars") {
  CHECK((v2 - 1).to_string() == "v^2 - 1");
  CHECK(v * LaurentScalar::v_power(-1) == LaurentScalar(1));
  CHECK((v2 - 1).at_one() == 0);
  CHECK((v + 1) * (v - 1) == v2 - 1);
  CHECK(v.substitute(-1, 1) == -v);
  CHECK(v2.substitute(-1, 1) == v2);
  CHECK(v2.substitute(1, -1) == LaurentScalar::v_power(-2));
  CHECK((v - v).is_zero());
}

TEST_CASE("ga_mul examples") {
  CHECK(ga_mul(th({1}), th({3})) == th({4}));
  const GroupAlgebraElement a = th({2}, v) + th({-1}, 3);
  CHECK(ga_mul(th({0}), a) == a);
  CHECK(ga_mul(th({1}) + th({-1}), th({1}) - th({-1})) == th({2}) - th({-2}));
}

TEST_CASE("demazure_quotient examples") {
  const RootDatum d = root_datum_of_type('A', 1);
  CHECK(demazure_quotient(d, Weight({1}), 0) == th({1}));
  CHECK(demazure_quotient(d, Weight({0}), 0).is_zero());
  CHECK(demazure_quotient(d, Weight({2}), 0) == th({2}) + th({0}));
  // Multiply back: (theta_2 + theta_0)(1 - theta_-2) = theta_2 - theta_-2.
  CHECK(ga_mul(th({2}) + th({0}), th({0}) - th({-2})) == th({2}) - th({-2}));
  const RootDatum a2 = root_datum_of_type('A', 2);
  CHECK(demazure_quotient(a2, Weight({0, 5}), 0).is_zero());
}

TEST_CASE("demazure_quotient agrees with the geometric-sum closed form") {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'B', 2}, {'G', 2}, {'C', 3}}) {
    const RootDatum d = root_datum_of_type(t, n);
    Sampler s(d, 7);
    for (int k = 0; k < 200; ++k) {
      const Weight x = s.weight();
      const int i = s.simple_index();
      CAPTURE(to_string(x));
      CHECK(demazure_quotient(d, x, i) == oracle::demazure_closed_form(d.cartan(), x, i));
    }
  }
}

TEST_CASE("demazure_quotient multiplies back") {
  const RootDatum d = root_datum_of_type('B', 3);
  Sampler s(d, 11);
  for (int k = 0; k < 200; ++k) {
    const Weight x = s.weight();
    const int i = s.simple_index();
    const GroupAlgebraElement q = demazure_quotient(d, x, i);
    const GroupAlgebraElement one_minus = th({0, 0, 0}) - GroupAlgebraElement::theta(-d.simple_root(i));
    CHECK(ga_mul(q, one_minus) ==
          GroupAlgebraElement::theta(x) - GroupAlgebraElement::theta(d.reflect(i, x)));
  }
}

TEST_CASE("demazure_quotient extends linearly") {
  const RootDatum d = root_datum_of_type('A', 2);
  const GroupAlgebraElement a = th({2, -1}, v) + th({-1, 3}, 4);
  CHECK(demazure_quotient(d, a, 0) ==
        v * demazure_quotient(d, Weight({2, -1}), 0) +
            LaurentScalar(4) * demazure_quotient(d, Weight({-1, 3}), 0));
}

TEST_CASE("mul_by_scriptG examples") {
  const RootDatum d = root_datum_of_type('A', 1);
  CHECK(mul_by_scriptG(d, Weight({1}), 0) == th({1}, v2) - th({-1}));
  CHECK(mul_by_scriptG(d, Weight({0}), 0).is_zero());
  CHECK(mul_by_scriptG(d, Weight({2}), 0) == th({2}, v2) + th({0}, v2) - th({0}) - th({-2}));
}

TEST_CASE("mul_by_scriptG times (theta_alpha - 1) is (theta_x - theta_sx)(v^2 theta_alpha - 1)") {
  const RootDatum d = root_datum_of_type('G', 2);
  Sampler s(d, 3);
  for (int k = 0; k < 100; ++k) {
    const Weight x = s.weight();
    const int i = s.simple_index();
    const Weight alpha = d.simple_root(i);
    const GroupAlgebraElement diff_x =
        GroupAlgebraElement::theta(x) - GroupAlgebraElement::theta(d.reflect(i, x));
    const GroupAlgebraElement lhs =
        ga_mul(mul_by_scriptG(d, x, i), GroupAlgebraElement::theta(alpha) - th({0, 0}));
    const GroupAlgebraElement rhs =
        ga_mul(diff_x, GroupAlgebraElement::theta(alpha, v2) - th({0, 0}));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("ga_substitute examples and involution laws") {
  const GroupAlgebraElement a = th({3}, v);
  CHECK(ga_substitute(a, {-1, 1}, false) == th({3}, -v));
  CHECK(ga_substitute(th({0}, v2), {-1, 1}, false) == th({0}, v2));
  const RootDatum d = root_datum_of_type('A', 2);
  Sampler s(d, 5);
  for (int k = 0; k < 50; ++k) {
    const GroupAlgebraElement b = s.group_algebra();
    CHECK(ga_substitute(ga_substitute(b, {1, -1}, true), {1, -1}, true) == b);
    CHECK(ga_substitute(ga_substitute(b, {-1, 1}, false), {-1, 1}, false) == b);
  }
}

TEST_CASE("group algebra is a commutative ring") {
  const RootDatum d = root_datum_of_type('B', 2);
  Sampler s(d, 9);
  for (int k = 0; k < 50; ++k) {
    const auto a = s.group_algebra(), b = s.group_algebra(), c = s.group_algebra();
    CHECK(ga_mul(a, b) == ga_mul(b, a));
    CHECK(ga_mul(ga_mul(a, b), c) == ga_mul(a, ga_mul(b, c)));
    CHECK(ga_mul(a, b + c) == ga_mul(a, b) + ga_mul(a, c));
  }
}

TEST_CASE("ga_reflect is an involution that respects products") {
  const RootDatum d = root_datum_of_type('A', 3);
  Sampler s(d, 13);
  for (int k = 0; k < 50; ++k) {
    const auto a = s.group_algebra(), b = s.group_algebra();
    const int i = s.simple_index();
    CHECK(ga_reflect(d, ga_reflect(d, a, i), i) == a);
    CHECK(ga_reflect(d, ga_mul(a, b), i) == ga_mul(ga_reflect(d, a, i), ga_reflect(d, b, i)));
    CHECK(ga_reflect(d, a, i) == oracle::reflect_ga(d.cartan(), a, i));
  }
}
