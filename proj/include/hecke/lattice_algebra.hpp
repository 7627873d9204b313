#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "hecke/root_datum.hpp"

namespace hecke {

/// Element of Z[v, v^-1], stored as exponent -> nonzero integer.
class LaurentScalar {
 public:
  LaurentScalar() = default;
  LaurentScalar(long constant);  // NOLINT: implicit from integers is the point
  static LaurentScalar monomial(const mpz_class& coeff, int exponent);
  static LaurentScalar v_power(int exponent) { return monomial(1, exponent); }

  const std::map<int, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coefficient(int exponent) const;
  void add_term(int exponent, const mpz_class& coeff);

  /// Ring endomorphism v -> sign * v^exponent_sign.
  LaurentScalar substitute(int sign, int exponent_sign) const;
  /// Value at v = 1.
  mpz_class at_one() const;

  LaurentScalar& operator+=(const LaurentScalar& other);
  LaurentScalar& operator-=(const LaurentScalar& other);
  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator-(const LaurentScalar& a);
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  bool operator==(const LaurentScalar&) const = default;

  std::string to_string() const;

 private:
  std::map<int, mpz_class> terms_;
};

/// Element of Z[v, v^-1][X]: sum of c_x theta_x with finite support.
class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;
  static GroupAlgebraElement theta(const Weight& x, const LaurentScalar& c = 1);
  static GroupAlgebraElement scalar(int rank, const LaurentScalar& c);

  const std::map<Weight, LaurentScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentScalar coefficient(const Weight& x) const;
  void add_term(const Weight& x, const LaurentScalar& c);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    return a += b;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
    return a -= b;
  }
  friend GroupAlgebraElement operator-(const GroupAlgebraElement& a);
  friend GroupAlgebraElement operator*(const LaurentScalar& c, const GroupAlgebraElement& a);
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a,
                                       const GroupAlgebraElement& b);
  bool operator==(const GroupAlgebraElement&) const = default;

  std::string to_string() const;

 private:
  std::map<Weight, LaurentScalar> terms_;
};

GroupAlgebraElement ga_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

/// (theta_x - theta_{s_i x}) / (1 - theta_{-alpha_i}) as a telescoping sum.
/// The result is multiplied back and compared before returning.
GroupAlgebraElement demazure_quotient(const RootDatum& d, const Weight& x, int i);

/// (theta_x - theta_{s_i x}) * (v^2 theta_alpha - 1) / (theta_alpha - 1), integral.
GroupAlgebraElement mul_by_scriptG(const RootDatum& d, const Weight& x, int i);

/// Linear extension of demazure_quotient to a whole element.
GroupAlgebraElement demazure_quotient(const RootDatum& d, const GroupAlgebraElement& a, int i);

/// theta_x -> theta_{s_i x}
GroupAlgebraElement ga_reflect(const RootDatum& d, const GroupAlgebraElement& a, int i);

/// v -> sign * v^exponent, where sign and exponent are each +1 or -1.
struct VImage {
  int sign = 1;
  int exponent = 1;
};

/// Ring endomorphism given by v -> v_image and optionally theta_x -> theta_{-x}.
GroupAlgebraElement ga_substitute(const GroupAlgebraElement& a, VImage v_image,
                                  bool negate_weights);

}  // namespace hecke
