#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "hecke/affine_hecke.hpp"
#include "hecke/formal_series.hpp"
#include "hecke/graded_hecke.hpp"

namespace hecke {

/// Requested truncation order plus extra working degrees.
struct Precision {
  int order = 6;
  int guard = 2;
  int working() const { return order + guard; }
};

/// Which side of (t_s + 1) the twist series sits on.
enum class Side { Right, Left };

/// (exp(a + 2cr) - 1)/(a + 2cr) * a/(exp(a) - 1) for a = alpha_i-dot and
/// c = r_sign. With c = 1 this is g(alpha)^-1 times the image of G(alpha).
FormalSeries lusztig_twist(const GradedHecke& g, int i, int order, int r_sign = 1);

/// theta_x -> exp(x-dot), v -> exp(r) on the group algebra.
FormalSeries exponential_image(const GroupAlgebraElement& a, int nvars, int order);

/// Lusztig morphism from the affine Hecke algebra to the completed graded
/// algebra, evaluated at a fixed order.
///
/// Side::Right sends T_s + 1 to (t_s + 1) * twist, Side::Left to
/// twist * (t_s + 1). Images of T_w are products of generator images along
/// the reduced word and are cached; the cache is guarded so one map can be
/// shared between threads.
class LusztigMap {
 public:
  LusztigMap(const GradedHecke& g, Side side, int order);
  LusztigMap(GradedHecke&&, Side, int) = delete;
  /// Explicit twist series, one per simple root.
  LusztigMap(const GradedHecke& g, Side side, int order, std::vector<FormalSeries> twists);

  int order() const { return order_; }
  Side side() const { return side_; }

  FormalSeries scalar_image(const GroupAlgebraElement& a) const;
  /// Image of T_{s_i}.
  const GradedElement& simple_image(int i) const { return simple_images_[i]; }
  GradedElement t_image(WeylId w) const;
  GradedElement operator()(const HeckeElement& h) const;

 private:
  const GradedHecke* graded_;
  Side side_;
  int order_;
  std::vector<GradedElement> simple_images_;
  mutable std::mutex cache_mutex_;
  mutable std::map<WeylId, GradedElement> t_cache_;
};

/// Both routes around the square relating the K-side maps and the graded side:
///   koszul_route(h)  = e_B * L_r(i(D(Koszul(h)))) * e_B^-1
///   fourier_route(h) = Fourier(L_l(h))
/// Evaluated at the working order and truncated to the requested one.
class DiagramRoutes {
 public:
  DiagramRoutes(const AffineHecke& h, const GradedHecke& g, Precision p);

  const Precision& precision() const { return precision_; }
  const LusztigMap& right_map() const { return right_; }
  const LusztigMap& left_map() const { return left_; }

  GradedElement koszul_route(const HeckeElement& h) const;
  GradedElement fourier_route(const HeckeElement& h) const;

 private:
  const AffineHecke* affine_;
  const GradedHecke* graded_;
  Precision precision_;
  LusztigMap right_;
  LusztigMap left_;
};

GradedElement lusztig_r(const GradedHecke& g, const HeckeElement& h, Precision p);
GradedElement lusztig_l(const GradedHecke& g, const HeckeElement& h, Precision p);
GradedElement pipeline_K(const AffineHecke& a, const GradedHecke& g, const HeckeElement& h,
                         Precision p);
GradedElement pipeline_H(const AffineHecke& a, const GradedHecke& g, const HeckeElement& h,
                         Precision p);

/// theta_x . 1 -> exp(x-dot) . 1, v -> exp(r).
GradedAsphElement transport(const GradedHecke& g, const AsphElement& m, int order);

}  // namespace hecke
