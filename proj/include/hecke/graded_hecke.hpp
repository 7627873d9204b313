#pragma once

#include <map>
#include <string>

#include "hecke/formal_series.hpp"
#include "hecke/root_datum.hpp"

namespace hecke {

/// Element sum_w f_w t_w of the completed graded affine Hecke algebra, with
/// series coefficients on the left. All coefficients share one order.
class GradedElement {
 public:
  GradedElement() = default;
  GradedElement(int nvars, int order) : nvars_(nvars), order_(order) {}
  /// f . t_e
  static GradedElement series(const FormalSeries& f);

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  const std::map<WeylId, FormalSeries>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  FormalSeries coefficient(WeylId w) const;
  /// Adds f . t_w. A coefficient of lower order lowers the order of the
  /// whole element.
  void add_term(WeylId w, const FormalSeries& f);

  GradedElement truncated(int new_order) const;

  GradedElement& operator+=(const GradedElement& other);
  GradedElement& operator-=(const GradedElement& other);
  friend GradedElement operator+(GradedElement a, const GradedElement& b) { return a += b; }
  friend GradedElement operator-(GradedElement a, const GradedElement& b) { return a -= b; }
  friend GradedElement operator-(const GradedElement& a);
  /// Left multiplication by a series (no rewriting needed).
  friend GradedElement operator*(const FormalSeries& f, const GradedElement& a);
  friend GradedElement operator*(const Rational& c, const GradedElement& a);
  bool operator==(const GradedElement&) const = default;

  std::string to_string(const RootDatum& d, std::size_t max_terms = 12) const;

 private:
  void lower_order(int new_order);

  int nvars_ = 0;
  int order_ = 0;
  std::map<WeylId, FormalSeries> terms_;
};

bool agree_to_degree(const GradedElement& a, const GradedElement& b, int degree);

/// Element f . 1 of the graded antispherical module.
struct GradedAsphElement {
  FormalSeries coords;
  bool operator==(const GradedAsphElement&) const = default;
};

/// Arithmetic of the completed graded affine Hecke algebra.
///
/// Products use the denominator-free commutation rule
///   t_s f = s(f) t_s + 2r (f - s(f)) / alpha-dot
/// and t_v t_w = t_{vw}. The datum must outlive this object.
class GradedHecke {
 public:
  explicit GradedHecke(const RootDatum& d) : datum_(&d) {}
  explicit GradedHecke(RootDatum&&) = delete;

  const RootDatum& datum() const { return *datum_; }
  int rank() const { return datum_->rank(); }
  /// y_1..y_n and r
  int nvars() const { return datum_->rank() + 1; }

  GradedElement one(int order) const;
  GradedElement t(WeylId w, int order) const;
  GradedElement t_simple(int i, int order) const { return t(datum_->simple_reflection(i), order); }

  LinearForm root_form(int i) const { return diff(datum_->simple_root(i)); }
  LinearForm r_form(const Rational& c = 1) const { return LinearForm::r_form(nvars(), c); }
  /// (f - s_i f) / alpha_i-dot; one degree of precision is consumed.
  FormalSeries demazure(int i, const FormalSeries& f) const;

  /// t_{s_i} * a
  GradedElement left_mul_simple(int i, const GradedElement& a) const;
  GradedElement mul(const GradedElement& a, const GradedElement& b) const;

  /// t_w -> (-1)^l(w) t_w, r -> -r, polynomials in y fixed.
  GradedElement fourier(const GradedElement& a) const;

  /// prod over positive roots of alpha-dot / (1 - exp(-alpha-dot)).
  FormalSeries todd_eB(int order) const;
  /// e_B a e_B^-1
  GradedElement conj_eB(const GradedElement& a) const;

  /// a . m, where t_s acts on the base point by -1.
  GradedAsphElement act(const GradedElement& a, const GradedAsphElement& m) const;

 private:
  const RootDatum* datum_;
};

}  // namespace hecke
