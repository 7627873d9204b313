#include "hecke/graded_hecke.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hecke/errors.hpp"

namespace hecke {

// --------------------------------------------------------------- GradedElement

GradedElement GradedElement::series(const FormalSeries& f) {
  GradedElement a(f.nvars(), f.order());
  a.add_term(0, f);
  return a;
}

FormalSeries GradedElement::coefficient(WeylId w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? FormalSeries(nvars_, order_) : it->second;
}

void GradedElement::lower_order(int new_order) {
  if (new_order >= order_) return;
  order_ = new_order;
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second = it->second.truncated(new_order);
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

void GradedElement::add_term(WeylId w, const FormalSeries& f) {
  if (f.nvars() != nvars_) throw std::invalid_argument("graded element: variable mismatch");
  lower_order(f.order());
  if (f.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    auto g = f.order() > order_ ? f.truncated(order_) : f;
    if (!g.is_zero()) terms_.emplace(w, std::move(g));
    return;
  }
  it->second += f;
  if (it->second.is_zero()) terms_.erase(it);
}

GradedElement GradedElement::truncated(int new_order) const {
  if (new_order > order_) throw PrecisionExhausted("cannot raise the order of a graded element");
  GradedElement out = *this;
  out.lower_order(new_order);
  return out;
}

GradedElement& GradedElement::operator+=(const GradedElement& other) {
  lower_order(other.order_);
  for (const auto& [w, f] : other.terms_) add_term(w, f);
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& other) {
  lower_order(other.order_);
  for (const auto& [w, f] : other.terms_) add_term(w, -f);
  return *this;
}

GradedElement operator-(const GradedElement& a) {
  GradedElement out(a.nvars_, a.order_);
  for (const auto& [w, f] : a.terms_) out.terms_.emplace(w, -f);
  return out;
}

GradedElement operator*(const FormalSeries& f, const GradedElement& a) {
  GradedElement out(a.nvars_, std::min(a.order_, f.order()));
  for (const auto& [w, g] : a.terms_) out.add_term(w, f * g);
  return out;
}

GradedElement operator*(const Rational& c, const GradedElement& a) {
  GradedElement out(a.nvars_, a.order_);
  for (const auto& [w, g] : a.terms_) out.add_term(w, c * g);
  return out;
}

std::string GradedElement::to_string(const RootDatum& d, std::size_t max_terms) const {
  if (terms_.empty()) return "0 + O(deg>" + std::to_string(order_) + ")";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, f] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '[' << f.to_string(max_terms) << "]*t[";
    const auto& word = d.element(w).reduced_word;
    if (word.empty()) os << 'e';
    for (std::size_t k = 0; k < word.size(); ++k) os << (k ? " s" : "s") << word[k] + 1;
    os << ']';
  }
  return os.str();
}

bool agree_to_degree(const GradedElement& a, const GradedElement& b, int degree) {
  if (a.order() < degree || b.order() < degree)
    throw PrecisionExhausted("comparison at degree " + std::to_string(degree) +
                             " exceeds element precision");
  return a.truncated(degree) == b.truncated(degree);
}

// ----------------------------------------------------------------- GradedHecke

GradedElement GradedHecke::one(int order) const { return t(datum_->identity(), order); }

GradedElement GradedHecke::t(WeylId w, int order) const {
  GradedElement a(nvars(), order);
  a.add_term(w, FormalSeries::constant(nvars(), order, 1));
  return a;
}

FormalSeries GradedHecke::demazure(int i, const FormalSeries& f) const {
  return fs_div_linear(f - fs_reflect(*datum_, i, f), root_form(i));
}

GradedElement GradedHecke::left_mul_simple(int i, const GradedElement& a) const {
  GradedElement out(nvars(), a.order());
  const LinearForm two_r = r_form(2);
  for (const auto& [w, f] : a.terms()) {
    FormalSeries sf = fs_reflect(*datum_, i, f);
    // 2r * (f - s f)/alpha-dot: the division loses a degree, 2r restores it.
    FormalSeries correction = fs_mul_linear(fs_div_linear(f - sf, root_form(i)), two_r);
    out.add_term(datum_->left_multiply(i, w), sf);
    out.add_term(w, correction);
  }
  return out;
}

GradedElement GradedHecke::mul(const GradedElement& a, const GradedElement& b) const {
  GradedElement out(nvars(), std::min(a.order(), b.order()));
  for (const auto& [u, f] : a.terms()) {
    GradedElement acc = b;
    const auto& word = datum_->element(u).reduced_word;
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = left_mul_simple(*it, acc);
    out += f * acc;
  }
  return out;
}

GradedElement GradedHecke::fourier(const GradedElement& a) const {
  GradedElement out(a.nvars(), a.order());
  for (const auto& [w, f] : a.terms()) {
    FormalSeries g = fs_negate_r(f);
    out.add_term(w, datum_->element(w).length % 2 == 0 ? g : -g);
  }
  return out;
}

FormalSeries GradedHecke::todd_eB(int order) const {
  const int n = nvars();
  FormalSeries e = FormalSeries::constant(n, order, 1);
  for (const Weight& alpha : datum_->positive_roots()) {
    const LinearForm a = diff(alpha);
    // (1 - exp(-a)) / a is a unit; its inverse is the factor.
    FormalSeries numerator = FormalSeries::constant(n, order + 1, 1) - exp_linear(-a, order + 1);
    e = e * fs_inv(fs_div_linear(numerator, a));
  }
  return e;
}

GradedElement GradedHecke::conj_eB(const GradedElement& a) const {
  const FormalSeries e = todd_eB(a.order());
  const FormalSeries e_inv = fs_inv(e);
  return e * mul(a, GradedElement::series(e_inv));
}

GradedAsphElement GradedHecke::act(const GradedElement& a, const GradedAsphElement& m) const {
  const GradedElement prod = mul(a, GradedElement::series(m.coords));
  FormalSeries out(nvars(), prod.order());
  for (const auto& [w, f] : prod.terms()) {
    if (datum_->element(w).length % 2 == 0)
      out += f;
    else
      out -= f;
  }
  return {out};
}

}  // namespace hecke
