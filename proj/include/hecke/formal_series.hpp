#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hecke/root_datum.hpp"

namespace hecke {

using Rational = mpq_class;

inline constexpr int kMaxVariables = 12;

/// Exponent vector over variables y_1..y_n, r (r is the last slot).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {}
  static Monomial variable(int nvars, int k, int power = 1);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  int operator[](int k) const { return exps_[k]; }
  void set(int k, int e);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial&) const = default;

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint16_t degree_ = 0;
};

/// Graded order; within a degree, compare exponents of r, then y_n, ..., y_1.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Degree-one form c_1 y_1 + ... + c_n y_n + c_r r.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(int nvars) : coeffs_(nvars) {}
  explicit LinearForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
  static LinearForm r_form(int nvars, const Rational& c = 1);

  int nvars() const { return static_cast<int>(coeffs_.size()); }
  const Rational& operator[](int k) const { return coeffs_[k]; }
  Rational& operator[](int k) { return coeffs_[k]; }
  bool is_zero() const;

  LinearForm& operator+=(const LinearForm& other);
  LinearForm& operator-=(const LinearForm& other);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  friend LinearForm operator-(LinearForm a);
  friend LinearForm operator*(const Rational& c, LinearForm a);
  bool operator==(const LinearForm&) const = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Differential of a weight: y-coefficients are its coordinates, r-coefficient 0.
LinearForm diff(const Weight& x);

/// Truncated power series in y_1..y_n, r over the rationals.
///
/// Coefficients are trusted for total degree <= order(); nothing above it is
/// stored. Sums and products carry the minimum order of their operands.
class FormalSeries {
 public:
  using Terms = std::map<Monomial, Rational, GradedLex>;

  FormalSeries() = default;
  FormalSeries(int nvars, int order) : nvars_(nvars), order_(order) {}

  static FormalSeries constant(int nvars, int order, const Rational& c);
  static FormalSeries variable(int nvars, int order, int k);
  static FormalSeries from_linear(const LinearForm& l, int order);

  int nvars() const { return nvars_; }
  int order() const { return order_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial(nvars_)); }
  /// Smallest degree carrying a nonzero coefficient; order()+1 when zero.
  int valuation() const;

  /// Adds c * m; ignored when m exceeds the order.
  void add_term(const Monomial& m, const Rational& c);

  /// Drops every degree above new_order (which must not exceed order()).
  FormalSeries truncated(int new_order) const;

  FormalSeries& operator+=(const FormalSeries& other);
  FormalSeries& operator-=(const FormalSeries& other);
  friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
  friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }
  friend FormalSeries operator-(FormalSeries a);
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
  friend FormalSeries operator*(const Rational& c, FormalSeries a);
  bool operator==(const FormalSeries&) const = default;

  /// Terms in ascending graded order, at most max_terms of them.
  std::string to_string(std::size_t max_terms = 24) const;

 private:
  friend FormalSeries fs_mul_linear(const FormalSeries& f, const LinearForm& l);
  friend FormalSeries fs_negate_r(const FormalSeries& f);
  Terms& terms_ref() { return terms_; }

  int nvars_ = 0;
  int order_ = 0;
  Terms terms_;
};

/// True when a and b agree in every degree <= degree (both must carry it).
bool agree_to_degree(const FormalSeries& a, const FormalSeries& b, int degree);

/// sum_{k <= order} f^k / k!
FormalSeries fs_exp(const FormalSeries& f);
/// exp of a linear form, written out monomial by monomial.
FormalSeries exp_linear(const LinearForm& l, int order);
/// Multiplicative inverse of a unit.
FormalSeries fs_inv(const FormalSeries& f);
/// q with q * l = f; q.order() == f.order() - 1.
FormalSeries fs_div_linear(const FormalSeries& f, const LinearForm& l);
/// f * l; the result order is f.order() + 1.
FormalSeries fs_mul_linear(const FormalSeries& f, const LinearForm& l);
/// (exp(l) - 1) / l to the given order.
FormalSeries expm1_over_linear(const LinearForm& l, int order);

/// s_i acting on y_1..y_n (r fixed).
FormalSeries fs_reflect(const RootDatum& d, int i, const FormalSeries& f);
/// w acting on y_1..y_n (r fixed), as a composite of simple reflections.
FormalSeries fs_weyl(const RootDatum& d, WeylId w, const FormalSeries& f);
/// r -> -r
FormalSeries fs_negate_r(const FormalSeries& f);

}  // namespace hecke
