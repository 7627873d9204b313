#include "doctest.h"
#include "hecke/lusztig.hpp"
#include "hecke/sampling.hpp"
#include "oracles.hpp"

using namespace hecke;

namespace {

GradedElement ser(const FormalSeries& f) { return GradedElement::series(f); }

const LaurentScalar v = LaurentScalar::v_power(1);

}  // namespace

TEST_CASE("generator images under both maps") {
  const RootDatum d = root_datum_of_type('A', 1);
  const AffineHecke H(d);
  const GradedHecke G(d);
  const Precision p{6, 2};
  const FormalSeries er = exp_linear(G.r_form(1), 6);
  const Weight x({3});
  const FormalSeries ex = exp_linear(diff(x), 6);
  for (auto f : {lusztig_r, lusztig_l}) {
    CHECK(f(G, H.scalar(v), p) == ser(er));
    CHECK(f(G, H.theta(x), p) == ser(ex));
    CHECK(f(G, H.one(), p) == G.one(6));
  }
}

TEST_CASE("image of T_s + 1 to first order is (t_s + 1)(1 + r)") {
  const RootDatum d = root_datum_of_type('A', 1);
  const AffineHecke H(d);
  const GradedHecke G(d);
  const FormalSeries twist =
      FormalSeries::constant(2, 1, 1) + FormalSeries::variable(2, 1, 1);
  const GradedElement expected = G.mul(G.t_simple(0, 1) + G.one(1), ser(twist));
  CHECK(lusztig_r(G, H.T_simple(0) + H.one(), {1, 2}) == expected);
}

TEST_CASE("twist series matches its closed form") {
  const RootDatum d = root_datum_of_type('A', 2);
  const GradedHecke G(d);
  const int N = 7;
  for (int i = 0; i < 2; ++i) {
    const LinearForm a = G.root_form(i);
    const LinearForm a2r = a + G.r_form(2);
    // (exp(a+2r) - 1)/(a+2r) * a/(exp(a) - 1), with exp(a) - 1 = a * sum a^k/(k+1)!.
    const FormalSeries num = fs_div_linear(exp_linear(a2r, N + 1) - FormalSeries::constant(3, N + 1, 1), a2r);
    FormalSeries den(3, N);
    FormalSeries pw = FormalSeries::constant(3, N, 1);
    for (int k = 0; k <= N; ++k) {
      den += oracle::inv_factorial(k + 1) * pw;
      pw = pw * FormalSeries::from_linear(a, N);
    }
    CHECK(lusztig_twist(G, i, N) == num * fs_inv(den));
  }
}

TEST_CASE("left and right images differ by the twist commutator") {
  const RootDatum d = root_datum_of_type('A', 1);
  const AffineHecke H(d);
  const GradedHecke G(d);
  const int N = 6;
  const HeckeElement h = H.T_simple(0) + H.one();
  const GradedElement u = ser(lusztig_twist(G, 0, N + 2));
  const GradedElement tp1 = G.t_simple(0, N + 2) + G.one(N + 2);
  const GradedElement commutator = G.mul(u, tp1) - G.mul(tp1, u);
  const Precision p{N, 2};
  CHECK(lusztig_l(G, h, p) - lusztig_r(G, h, p) == commutator.truncated(N));
  CHECK(!commutator.truncated(N).is_zero());
}

TEST_CASE("both maps are multiplicative on sampled products") {
  for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}}) {
    const RootDatum d = root_datum_of_type(t, n);
    const AffineHecke H(d);
    const GradedHecke G(d);
    Sampler s(d, 53);
    for (Side side : {Side::Right, Side::Left}) {
      const LusztigMap L(G, side, 7);
      for (int k = 0; k < 10; ++k) {
        const NamedElement a = s.generator_product(H), b = s.generator_product(H);
        CAPTURE(a.label);
        CAPTURE(b.label);
        CHECK(agree_to_degree(L(H.mul(a.element, b.element)), G.mul(L(a.element), L(b.element)), 6));
      }
    }
  }
}

TEST_CASE("pipeline examples") {
  const RootDatum d = root_datum_of_type('A', 1);
  const AffineHecke H(d);
  const GradedHecke G(d);
  const Precision p{8, 2};
  const FormalSeries emr = exp_linear(G.r_form(-1), 8);
  CHECK(pipeline_K(H, G, H.scalar(v), p) == ser(emr));
  CHECK(pipeline_H(H, G, H.scalar(v), p) == ser(emr));
  const Weight x({-2});
  const FormalSeries ex = exp_linear(diff(x), 8);
  CHECK(pipeline_K(H, G, H.theta(x), p) == ser(ex));
  CHECK(pipeline_H(H, G, H.theta(x), p) == ser(ex));
  CHECK(pipeline_K(H, G, H.one(), p) == G.one(8));
  CHECK(pipeline_H(H, G, H.one(), p) == G.one(8));
}

TEST_CASE("the square commutes on generators") {
  for (auto [t, n, order] : std::vector<std::tuple<char, int, int>>{{'A', 1, 8}, {'B', 2, 4}}) {
    const RootDatum d = root_datum_of_type(t, n);
    const AffineHecke H(d);
    const GradedHecke G(d);
    const DiagramRoutes routes(H, G, {order, 2});
    for (const auto& g : hecke_generators(H)) {
      CAPTURE(g.label);
      CHECK(routes.koszul_route(g.element) == routes.fourier_route(g.element));
    }
  }
}

TEST_CASE("transport examples") {
  const RootDatum d = root_datum_of_type('A', 1);
  const GradedHecke G(d);
  const int N = 5;
  CHECK(transport(G, {GroupAlgebraElement::theta(Weight({1}))}, N).coords ==
        exp_linear(diff(Weight({1})), N));
  CHECK(transport(G, {GroupAlgebraElement::theta(Weight({0}))}, N).coords ==
        FormalSeries::constant(2, N, 1));
  const AsphElement m{GroupAlgebraElement::theta(Weight({1}), LaurentScalar::v_power(2)) -
                      GroupAlgebraElement::theta(Weight({-1}))};
  const LinearForm y = diff(Weight({1}));
  CHECK(transport(G, m, N).coords == exp_linear(G.r_form(2) + y, N) - exp_linear(-y, N));
}
