#include "hecke/sampling.hpp"

namespace hecke {

std::vector<NamedElement> hecke_generators(const AffineHecke& h) {
  const int n = h.rank();
  std::vector<NamedElement> out;
  out.push_back({"v", h.scalar(LaurentScalar::v_power(1))});
  for (int i = 0; i < n; ++i) {
    const Weight w = Weight::fundamental(n, i);
    const std::string idx = std::to_string(i + 1);
    out.push_back({"theta(+w" + idx + ")", h.theta(w)});
    out.push_back({"theta(-w" + idx + ")", h.theta(-w)});
    out.push_back({"T(s" + idx + ")", h.T_simple(i)});
  }
  return out;
}

int Sampler::uniform(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % span);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<int>(x % span);
}

Weight Sampler::weight() {
  std::vector<int> c(datum_->rank());
  for (auto& k : c) k = uniform(-3, 3);
  return Weight(std::move(c));
}

Rational Sampler::rational() {
  const int p = uniform(-8, 8);
  const int q = uniform(1, 8);
  Rational r(p, q);
  r.canonicalize();
  return r;
}

LaurentScalar Sampler::laurent() {
  LaurentScalar s;
  const int terms = uniform(1, 2);
  for (int k = 0; k < terms; ++k) {
    int c = uniform(-3, 3);
    if (c == 0) c = 1;
    s.add_term(v_exponent(), c);
  }
  if (s.is_zero()) s = LaurentScalar(1);
  return s;
}

GroupAlgebraElement Sampler::group_algebra(int max_terms) {
  GroupAlgebraElement a;
  const int terms = uniform(1, max_terms);
  for (int k = 0; k < terms; ++k) a.add_term(weight(), laurent());
  return a;
}

HeckeElement Sampler::hecke(int max_terms) {
  HeckeElement out;
  const int terms = uniform(1, max_terms);
  for (int k = 0; k < terms; ++k) out.add_term(weyl_element(), group_algebra(2));
  return out;
}

NamedElement Sampler::generator_product(const AffineHecke& h, int max_factors) {
  const auto gens = hecke_generators(h);
  const int factors = uniform(1, max_factors);
  NamedElement out{"", h.one()};
  for (int k = 0; k < factors; ++k) {
    const auto& g = gens[uniform(0, static_cast<int>(gens.size()) - 1)];
    out.label += (k ? "*" : "") + g.label;
    out.element = h.mul(out.element, g.element);
  }
  return out;
}

FormalSeries Sampler::polynomial(int nvars, int order, int max_degree, int max_terms) {
  FormalSeries f(nvars, order);
  const int terms = uniform(1, max_terms);
  for (int k = 0; k < terms; ++k) {
    Monomial m(nvars);
    int budget = uniform(0, max_degree);
    for (int j = 0; j < nvars && budget > 0; ++j) {
      const int e = uniform(0, budget);
      m.set(j, e);
      budget -= e;
    }
    f.add_term(m, rational());
  }
  return f;
}

GradedElement Sampler::graded(const GradedHecke& g, int order, int max_degree, int max_terms) {
  GradedElement a(g.nvars(), order);
  const int terms = uniform(1, max_terms);
  for (int k = 0; k < terms; ++k)
    a.add_term(weyl_element(), polynomial(g.nvars(), order, max_degree, 3));
  return a;
}

}  // namespace hecke
