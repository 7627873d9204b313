#pragma once

#include <map>
#include <string>

#include "hecke/lattice_algebra.hpp"
#include "hecke/root_datum.hpp"

namespace hecke {

/// Element of the affine Hecke algebra in Bernstein normal form
/// sum_w a_w T_w, with group-algebra coefficients on the left.
class HeckeElement {
 public:
  HeckeElement() = default;

  const std::map<WeylId, GroupAlgebraElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GroupAlgebraElement coefficient(WeylId w) const;
  void add_term(WeylId w, const GroupAlgebraElement& a);

  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement& operator-=(const HeckeElement& other);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator-(const HeckeElement& a);
  /// Left multiplication by a group-algebra element (no rewriting needed).
  friend HeckeElement operator*(const GroupAlgebraElement& c, const HeckeElement& h);
  friend HeckeElement operator*(const LaurentScalar& c, const HeckeElement& h);
  bool operator==(const HeckeElement&) const = default;

  std::string to_string(const RootDatum& d) const;

 private:
  std::map<WeylId, GroupAlgebraElement> terms_;
};

/// Element sum c_x theta_x . 1 of the left antispherical module.
struct AsphElement {
  GroupAlgebraElement coords;
  bool operator==(const AsphElement&) const = default;
};

/// Arithmetic of the affine Hecke algebra attached to a root datum.
///
/// Products are computed by rewriting with
///   T_s theta_x = theta_{sx} T_s + (v^2 - 1)(theta_x - theta_{sx}) / (1 - theta_{-alpha})
///   T_s T_w     = T_{sw}                          if l(sw) > l(w)
///               = (v^2 - 1) T_w + v^2 T_{sw}      otherwise
/// with T_w expanded along its stored reduced word. The datum must outlive
/// this object.
class AffineHecke {
 public:
  explicit AffineHecke(const RootDatum& d) : datum_(&d) {}
  explicit AffineHecke(RootDatum&&) = delete;

  const RootDatum& datum() const { return *datum_; }
  int rank() const { return datum_->rank(); }

  HeckeElement one() const { return scalar(1); }
  HeckeElement scalar(const LaurentScalar& c) const;
  HeckeElement theta(const Weight& x, const LaurentScalar& c = 1) const;
  HeckeElement from_group_algebra(const GroupAlgebraElement& a) const;
  HeckeElement T(WeylId w) const;
  HeckeElement T_simple(int i) const { return T(datum_->simple_reflection(i)); }

  HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const;
  /// T_{s_i} * h
  HeckeElement left_mul_simple(int i, const HeckeElement& h) const;

  /// v^-2 T_s + (v^-2 - 1)
  HeckeElement ts_inverse(int i) const;

  /// T_s -> theta_rho (-v^2 T_s^-1) theta_-rho, theta_x -> theta_-x, v -> -v.
  HeckeElement koszul(const HeckeElement& h) const;
  /// T_s -> T_s^-1, theta_x -> theta_-x, v -> v^-1.
  HeckeElement duality(const HeckeElement& h) const;
  /// v -> -v.
  HeckeElement parity(const HeckeElement& h) const;
  /// parity(duality(koszul(h))), in that order.
  HeckeElement involution_composite(const HeckeElement& h) const;

  HeckeElement koszul_image_simple(int i) const;
  HeckeElement duality_image_simple(int i) const { return ts_inverse(i); }

  /// Anti-involution fixing every T_s and theta_x.
  HeckeElement anti_involution(const HeckeElement& h) const;

  /// h . m in H (x)_{H_W} sgn, where T_s acts on the base point by -1.
  AsphElement asph_act_left(const HeckeElement& h, const AsphElement& m) const;
  /// m . h in the right antispherical module, transported through the
  /// anti-involution.
  AsphElement asph_act_right(const AsphElement& m, const HeckeElement& h) const;

 private:
  template <class CoeffMap>
  HeckeElement apply_morphism(const HeckeElement& h, CoeffMap&& coeff,
                              const std::vector<HeckeElement>& simple_images) const;

  const RootDatum* datum_;
};

}  // namespace hecke
