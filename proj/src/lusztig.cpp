#include "hecke/lusztig.hpp"

#include <stdexcept>

namespace hecke {

FormalSeries lusztig_twist(const GradedHecke& g, int i, int order, int r_sign) {
  const LinearForm a = g.root_form(i);
  const LinearForm shifted = a + g.r_form(2 * r_sign);
  return expm1_over_linear(shifted, order) * fs_inv(expm1_over_linear(a, order));
}

FormalSeries exponential_image(const GroupAlgebraElement& a, int nvars, int order) {
  FormalSeries out(nvars, order);
  for (const auto& [x, c] : a.terms()) {
    LinearForm base = diff(x);
    for (const auto& [k, coeff] : c.terms()) {
      LinearForm l = base;
      l[nvars - 1] += k;
      out += Rational(coeff) * exp_linear(l, order);
    }
  }
  return out;
}

// ------------------------------------------------------------------ LusztigMap

LusztigMap::LusztigMap(const GradedHecke& g, Side side, int order)
    : LusztigMap(g, side, order, [&] {
        std::vector<FormalSeries> twists;
        for (int i = 0; i < g.rank(); ++i) twists.push_back(lusztig_twist(g, i, order));
        return twists;
      }()) {}

LusztigMap::LusztigMap(const GradedHecke& g, Side side, int order,
                       std::vector<FormalSeries> twists)
    : graded_(&g), side_(side), order_(order) {
  if (static_cast<int>(twists.size()) != g.rank())
    throw std::invalid_argument("LusztigMap: need one twist per simple root");
  for (int i = 0; i < g.rank(); ++i) {
    const GradedElement ts_plus_one = g.t_simple(i, order) + g.one(order);
    const GradedElement twist = GradedElement::series(twists[i].truncated(order));
    GradedElement img = side == Side::Right ? g.mul(ts_plus_one, twist)
                                            : g.mul(twist, ts_plus_one);
    simple_images_.push_back(img - g.one(order));
  }
}

FormalSeries LusztigMap::scalar_image(const GroupAlgebraElement& a) const {
  return exponential_image(a, graded_->nvars(), order_);
}

GradedElement LusztigMap::t_image(WeylId w) const {
  const RootDatum& d = graded_->datum();
  std::lock_guard lock(cache_mutex_);
  if (auto it = t_cache_.find(w); it != t_cache_.end()) return it->second;
  // Suffixes of the reduced word, shortest first.
  const auto& word = d.element(w).reduced_word;
  std::vector<WeylId> suffix(word.size() + 1);
  suffix[word.size()] = d.identity();
  for (std::size_t k = word.size(); k-- > 0;) suffix[k] = d.left_multiply(word[k], suffix[k + 1]);
  if (!t_cache_.count(d.identity())) t_cache_.emplace(d.identity(), graded_->one(order_));
  for (std::size_t k = word.size(); k-- > 0;) {
    if (t_cache_.count(suffix[k])) continue;
    GradedElement img = graded_->mul(simple_images_[word[k]], t_cache_.at(suffix[k + 1]));
    t_cache_.emplace(suffix[k], std::move(img));
  }
  return t_cache_.at(w);
}

GradedElement LusztigMap::operator()(const HeckeElement& h) const {
  GradedElement out(graded_->nvars(), order_);
  for (const auto& [w, a] : h.terms()) out += scalar_image(a) * t_image(w);
  return out;
}

// --------------------------------------------------------------- DiagramRoutes

DiagramRoutes::DiagramRoutes(const AffineHecke& h, const GradedHecke& g, Precision p)
    : affine_(&h),
      graded_(&g),
      precision_(p),
      right_(g, Side::Right, p.working()),
      left_(g, Side::Left, p.working()) {}

GradedElement DiagramRoutes::koszul_route(const HeckeElement& h) const {
  const GradedElement image = right_(affine_->involution_composite(h));
  return graded_->conj_eB(image).truncated(precision_.order);
}

GradedElement DiagramRoutes::fourier_route(const HeckeElement& h) const {
  return graded_->fourier(left_(h)).truncated(precision_.order);
}

GradedElement lusztig_r(const GradedHecke& g, const HeckeElement& h, Precision p) {
  return LusztigMap(g, Side::Right, p.working())(h).truncated(p.order);
}

GradedElement lusztig_l(const GradedHecke& g, const HeckeElement& h, Precision p) {
  return LusztigMap(g, Side::Left, p.working())(h).truncated(p.order);
}

GradedElement pipeline_K(const AffineHecke& a, const GradedHecke& g, const HeckeElement& h,
                         Precision p) {
  return DiagramRoutes(a, g, p).koszul_route(h);
}

GradedElement pipeline_H(const AffineHecke& a, const GradedHecke& g, const HeckeElement& h,
                         Precision p) {
  return DiagramRoutes(a, g, p).fourier_route(h);
}

GradedAsphElement transport(const GradedHecke& g, const AsphElement& m, int order) {
  return {exponential_image(m.coords, g.nvars(), order)};
}

}  // namespace hecke
