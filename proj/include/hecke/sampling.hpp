#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hecke/affine_hecke.hpp"
#include "hecke/graded_hecke.hpp"

namespace hecke {

/// A generator of the affine Hecke algebra together with a printable name.
struct NamedElement {
  std::string label;
  HeckeElement element;
};

/// v, theta_{+-varpi_i} and T_{s_i} for every simple index.
std::vector<NamedElement> hecke_generators(const AffineHecke& h);

/// Seeded sampler for verification batteries.
///
/// Distribution: weight coordinates uniform in -3..3, v-exponents in -2..2,
/// rationals p/q with |p| <= 8 and 1 <= q <= 8. Bounded integers are drawn
/// from mt19937_64 by rejection, so a seed reproduces the same stream on
/// every platform.
class Sampler {
 public:
  Sampler(const RootDatum& d, std::uint64_t seed) : datum_(&d), engine_(seed) {}

  /// Uniform in [lo, hi].
  int uniform(int lo, int hi);
  int simple_index() { return uniform(0, datum_->rank() - 1); }
  WeylId weyl_element() {
    return static_cast<WeylId>(uniform(0, static_cast<int>(datum_->weyl_order()) - 1));
  }
  Weight weight();
  int v_exponent() { return uniform(-2, 2); }
  Rational rational();

  /// Sum of one or two terms +-c v^k with |c| <= 3.
  LaurentScalar laurent();
  GroupAlgebraElement group_algebra(int max_terms = 3);
  HeckeElement hecke(int max_terms = 3);
  /// Product of one or two generators.
  NamedElement generator_product(const AffineHecke& h, int max_factors = 2);

  /// Random polynomial of degree <= max_degree viewed as a series of the given order.
  FormalSeries polynomial(int nvars, int order, int max_degree, int max_terms = 5);
  GradedElement graded(const GradedHecke& g, int order, int max_degree, int max_terms = 3);

 private:
  const RootDatum* datum_;
  std::mt19937_64 engine_;
};

}  // namespace hecke
