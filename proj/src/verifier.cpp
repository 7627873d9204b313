#include "hecke/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <utility>

#include "fault_plan.hpp"
#include "hecke/affine_hecke.hpp"
#include "hecke/graded_hecke.hpp"
#include "hecke/lusztig.hpp"
#include "hecke/sampling.hpp"

namespace hecke {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

DatumDescriptor describe(const RootDatum& d) { return {d.type_label(), d.rank(), d.cartan()}; }

std::optional<Suite> parse_suite(const std::string& s) {
  static const std::map<std::string, Suite> names = {
      {"presentation", Suite::Presentation}, {"morphisms", Suite::Morphisms},
      {"diagram", Suite::Diagram},           {"display", Suite::Display},
      {"modules", Suite::Modules},           {"all", Suite::All}};
  auto it = names.find(s);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

bool RunReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckReport& c) { return c.status == Status::Pass; });
}

namespace {

using Diff = std::optional<std::string>;

struct CaseFailed {
  std::size_t index;
  std::string text;
};

// Numbered sequence of cases; the first nonzero difference aborts the check.
class Battery {
 public:
  explicit Battery(std::optional<std::size_t> only) : only_(only) {}

  template <class F>
  void run(const std::string& label, F&& diff) {
    const std::size_t k = next_++;
    if (only_ && *only_ != k) return;
    if (Diff d = diff()) throw CaseFailed{k, "case " + std::to_string(k) + " [" + label + "]: difference = " + *d};
  }

 private:
  std::optional<std::size_t> only_;
  std::size_t next_ = 0;
};

template <class Body>
CheckReport run_check(std::string name, const RootDatum& d, const CheckOptions& opts,
                      std::optional<std::size_t> only_case, Body&& body) {
  CheckReport r;
  r.name = std::move(name);
  r.datum = describe(d);
  r.order = opts.order;
  r.guard = opts.guard;
  r.seed = opts.seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    Battery battery(only_case);
    body(battery);
    r.status = Status::Pass;
  } catch (const CaseFailed& f) {
    r.status = Status::Fail;
    r.witness = f.text;
    r.witness_case = f.index;
  } catch (const std::exception& e) {
    r.status = Status::Error;
    r.witness = e.what();
  }
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string s_label(int i) { return "s" + std::to_string(i + 1); }

std::string weight_label(const Weight& x) { return hecke::to_string(x); }

Diff hecke_diff(const RootDatum& d, const HeckeElement& a, const HeckeElement& b) {
  if (a == b) return std::nullopt;
  return (a - b).to_string(d);
}

Diff ga_diff(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a == b) return std::nullopt;
  return (a - b).to_string();
}

Diff graded_diff(const RootDatum& d, const GradedElement& a, const GradedElement& b, int n) {
  const GradedElement x = a.truncated(n);
  const GradedElement y = b.truncated(n);
  if (x == y) return std::nullopt;
  return (x - y).to_string(d);
}

Diff series_diff(const FormalSeries& a, const FormalSeries& b, int n) {
  const FormalSeries x = a.truncated(n);
  const FormalSeries y = b.truncated(n);
  if (x == y) return std::nullopt;
  return (x - y).to_string();
}

// Product x_i x_j x_i ... with m factors.
template <class T, class Mul>
T alternating(const T& xi, const T& xj, int m, Mul&& mul) {
  T out = xi;
  for (int k = 1; k < m; ++k) out = mul(out, k % 2 ? xj : xi);
  return out;
}

// (exp(l) - 1)/l at the given order.
FormalSeries expm1_ratio(const LinearForm& l, int order) {
  const FormalSeries e =
      exp_linear(l, order + 1) - FormalSeries::constant(l.nvars(), order + 1, 1);
  return fs_div_linear(e, l);
}

}  // namespace

// ----------------------------------------------------------------- presentation

CheckReport detail::check_presentation(const RootDatum& d, const CheckOptions& opts,
                                       const FaultPlan& faults,
                                       std::optional<std::size_t> only_case) {
  return run_check("check_presentation", d, opts, only_case, [&](Battery& b) {
    const AffineHecke H(d);
    const GradedHecke G(d);
    Sampler S(d, opts.seed);
    const int n = d.rank();
    const int N = opts.order;
    const int W = opts.order + opts.guard;
    const HeckeElement one = H.one();
    const LaurentScalar v2 = LaurentScalar::v_power(2);
    auto hmul = [&](const HeckeElement& x, const HeckeElement& y) { return H.mul(x, y); };
    auto gmul = [&](const GradedElement& x, const GradedElement& y) { return G.mul(x, y); };

    for (int i = 0; i < n; ++i) {
      const HeckeElement T = H.T_simple(i);
      b.run("quadratic " + s_label(i), [&] {
        return hecke_diff(d, H.mul(T + one, T - H.scalar(v2)), HeckeElement{});
      });
      b.run("inverse " + s_label(i), [&] {
        if (auto e = hecke_diff(d, H.mul(T, H.ts_inverse(i)), one)) return e;
        return hecke_diff(d, H.mul(H.ts_inverse(i), T), one);
      });
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int m = d.braid_order(i, j);
        if (m == 0) continue;
        b.run("braid " + s_label(i) + " " + s_label(j), [&] {
          return hecke_diff(d, alternating(H.T_simple(i), H.T_simple(j), m, hmul),
                            alternating(H.T_simple(j), H.T_simple(i), m, hmul));
        });
      }
    for (int k = 0; k < opts.relation_samples; ++k) {
      const Weight x = S.weight();
      const int i = S.simple_index();
      const Weight sx = d.reflect(i, x);
      const std::string tag = "x=" + weight_label(x) + " " + s_label(i);
      b.run("bernstein " + tag, [&] {
        const HeckeElement T = H.T_simple(i);
        const HeckeElement lhs = H.mul(T, H.theta(x)) - H.mul(H.theta(sx), T);
        HeckeElement rhs =
            (v2 - LaurentScalar(1)) * H.from_group_algebra(demazure_quotient(d, x, i));
        if (faults.flip_relation_sign) rhs = -rhs;
        return hecke_diff(d, lhs, rhs);
      });
      b.run("commutation " + tag, [&] {
        const HeckeElement T1 = H.T_simple(i) + one;
        const HeckeElement lhs = H.mul(T1, H.theta(x)) - H.mul(H.theta(sx), T1);
        return hecke_diff(d, lhs, H.from_group_algebra(mul_by_scriptG(d, x, i)));
      });
    }

    const GradedElement gone = G.one(W);
    for (int i = 0; i < n; ++i) {
      b.run("graded involution " + s_label(i), [&] {
        const GradedElement t = G.t_simple(i, W);
        return graded_diff(d, G.mul(t, t), gone, N);
      });
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int m = d.braid_order(i, j);
        if (m == 0) continue;
        b.run("graded braid " + s_label(i) + " " + s_label(j), [&] {
          return graded_diff(d, alternating(G.t_simple(i, W), G.t_simple(j, W), m, gmul),
                             alternating(G.t_simple(j, W), G.t_simple(i, W), m, gmul), N);
        });
      }
    const LinearForm two_r = G.r_form(2);
    for (int k = 0; k < opts.relation_samples; ++k) {
      const FormalSeries phi = S.polynomial(G.nvars(), W, 4);
      const int i = S.simple_index();
      const std::string tag = "phi=" + phi.to_string() + " " + s_label(i);
      b.run("graded relation " + tag, [&] {
        const GradedElement t = G.t_simple(i, W);
        const FormalSeries sphi = fs_reflect(d, i, phi);
        const GradedElement lhs = G.mul(t, GradedElement::series(phi)) -
                                  G.mul(GradedElement::series(sphi), t);
        const GradedElement rhs =
            GradedElement::series(fs_mul_linear(G.demazure(i, phi), two_r));
        return graded_diff(d, lhs, rhs, N);
      });
      b.run("graded commutation " + tag, [&] {
        const GradedElement t1 = G.t_simple(i, W) + gone;
        const FormalSeries sphi = fs_reflect(d, i, phi);
        const GradedElement lhs = G.mul(t1, GradedElement::series(phi)) -
                                  G.mul(GradedElement::series(sphi), t1);
        const FormalSeries rhs = (phi - sphi) + fs_mul_linear(G.demazure(i, phi), two_r);
        return graded_diff(d, lhs, GradedElement::series(rhs), N);
      });
      b.run("divided difference " + tag, [&] {
        const FormalSeries back = fs_mul_linear(G.demazure(i, phi), G.root_form(i));
        return series_diff(back, phi - fs_reflect(d, i, phi), N);
      });
    }
  });
}

// -------------------------------------------------------------------- morphisms

CheckReport detail::check_morphisms(const RootDatum& d, const CheckOptions& opts,
                                    const FaultPlan& faults,
                                    std::optional<std::size_t> only_case) {
  return run_check("check_morphisms", d, opts, only_case, [&](Battery& b) {
    const AffineHecke H(d);
    const GradedHecke G(d);
    Sampler S(d, opts.seed);
    const int n = d.rank();
    const int N = opts.order;
    const int W = opts.order + opts.guard;
    const HeckeElement one = H.one();
    const LaurentScalar v2 = LaurentScalar::v_power(2);
    auto hmul = [&](const HeckeElement& x, const HeckeElement& y) { return H.mul(x, y); };
    auto gmul = [&](const GradedElement& x, const GradedElement& y) { return G.mul(x, y); };
    const GradedElement gone = G.one(W);
    const GradedElement gzero(G.nvars(), W);

    for (Side side : {Side::Right, Side::Left}) {
      std::vector<FormalSeries> twists;
      for (int i = 0; i < n; ++i)
        twists.push_back(lusztig_twist(G, i, W, faults.corrupt_twist ? -1 : 1));
      const LusztigMap L(G, side, W, std::move(twists));
      const std::string name = side == Side::Right ? "L_r" : "L_l";
      const GradedElement e2r =
          GradedElement::series(L.scalar_image(GroupAlgebraElement::scalar(n, v2)));

      b.run(name + " unit", [&] { return graded_diff(d, L(one), gone, N); });
      for (int i = 0; i < n; ++i) {
        b.run(name + " quadratic " + s_label(i), [&] {
          const GradedElement& t = L.simple_image(i);
          return graded_diff(d, G.mul(t + gone, t - e2r), gzero, N);
        });
      }
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const int m = d.braid_order(i, j);
          if (m == 0) continue;
          b.run(name + " braid " + s_label(i) + " " + s_label(j), [&] {
            return graded_diff(d, alternating(L.simple_image(i), L.simple_image(j), m, gmul),
                               alternating(L.simple_image(j), L.simple_image(i), m, gmul), N);
          });
        }
      for (int k = 0; k < opts.morphism_samples; ++k) {
        const Weight x = S.weight();
        const int i = S.simple_index();
        b.run(name + " bernstein x=" + weight_label(x) + " " + s_label(i), [&] {
          const GradedElement& t = L.simple_image(i);
          const GradedElement ex =
              GradedElement::series(L.scalar_image(GroupAlgebraElement::theta(x)));
          const GradedElement esx =
              GradedElement::series(L.scalar_image(GroupAlgebraElement::theta(d.reflect(i, x))));
          const HeckeElement rhs =
              (v2 - LaurentScalar(1)) * H.from_group_algebra(demazure_quotient(d, x, i));
          return graded_diff(d, G.mul(t, ex) - G.mul(esx, t), L(rhs), N);
        });
      }
    }

    // i o D o Koszul respects the relations exactly.
    auto f = [&](const HeckeElement& h) { return H.involution_composite(h); };
    for (int i = 0; i < n; ++i) {
      b.run("composite quadratic " + s_label(i), [&] {
        const HeckeElement t = f(H.T_simple(i));
        return hecke_diff(d, H.mul(t + one, t - f(H.scalar(v2))), HeckeElement{});
      });
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const int m = d.braid_order(i, j);
        if (m == 0) continue;
        b.run("composite braid " + s_label(i) + " " + s_label(j), [&] {
          const HeckeElement ti = f(H.T_simple(i));
          const HeckeElement tj = f(H.T_simple(j));
          return hecke_diff(d, alternating(ti, tj, m, hmul), alternating(tj, ti, m, hmul));
        });
      }
    for (int k = 0; k < opts.morphism_samples; ++k) {
      const Weight x = S.weight();
      const int i = S.simple_index();
      b.run("composite bernstein x=" + weight_label(x) + " " + s_label(i), [&] {
        const HeckeElement t = f(H.T_simple(i));
        const HeckeElement lhs =
            H.mul(t, f(H.theta(x))) - H.mul(f(H.theta(d.reflect(i, x))), t);
        const HeckeElement rhs =
            (v2 - LaurentScalar(1)) * H.from_group_algebra(demazure_quotient(d, x, i));
        return hecke_diff(d, lhs, f(rhs));
      });
    }

    // Multiplicativity and involution laws on random pairs.
    for (int k = 0; k < opts.morphism_samples; ++k) {
      const HeckeElement a = S.hecke(2);
      const HeckeElement c = S.hecke(2);
      const std::string tag = "pair " + std::to_string(k);
      b.run("koszul multiplicative " + tag, [&] {
        return hecke_diff(d, H.koszul(H.mul(a, c)), H.mul(H.koszul(a), H.koszul(c)));
      });
      b.run("duality multiplicative " + tag, [&] {
        return hecke_diff(d, H.duality(H.mul(a, c)), H.mul(H.duality(a), H.duality(c)));
      });
      b.run("parity multiplicative " + tag, [&] {
        return hecke_diff(d, H.parity(H.mul(a, c)), H.mul(H.parity(a), H.parity(c)));
      });
      b.run("duality involutive " + tag, [&] { return hecke_diff(d, H.duality(H.duality(a)), a); });
      b.run("parity involutive " + tag, [&] { return hecke_diff(d, H.parity(H.parity(a)), a); });
    }
    for (int k = 0; k < opts.morphism_samples; ++k) {
      const GradedElement a = S.graded(G, W, 3);
      const GradedElement c = S.graded(G, W, 3);
      const std::string tag = "pair " + std::to_string(k);
      b.run("fourier multiplicative " + tag, [&] {
        return graded_diff(d, G.fourier(G.mul(a, c)), G.mul(G.fourier(a), G.fourier(c)), N);
      });
      b.run("fourier involutive " + tag,
            [&] { return graded_diff(d, G.fourier(G.fourier(a)), a, N); });
    }
  });
}

// ---------------------------------------------------------------------- diagram

CheckReport detail::check_diagram(const RootDatum& d, const CheckOptions& opts,
                                  const FaultPlan& faults, std::optional<std::size_t> only_case) {
  return run_check("check_diagram", d, opts, only_case, [&](Battery& b) {
    const AffineHecke H(d);
    const GradedHecke G(d);
    Sampler S(d, opts.seed);
    const Precision p{opts.order, opts.guard};
    const DiagramRoutes routes(H, G, p);
    auto koszul_route = [&](const HeckeElement& h) {
      if (faults.drop_eb_conjugation)
        return routes.right_map()(H.involution_composite(h)).truncated(p.order);
      return routes.koszul_route(h);
    };
    auto compare = [&](const NamedElement& g) {
      b.run("diagram " + g.label, [&] {
        return graded_diff(d, koszul_route(g.element), routes.fourier_route(g.element), p.order);
      });
    };
    for (const auto& g : hecke_generators(H)) compare(g);
    for (int k = 0; k < opts.diagram_samples; ++k) compare(S.generator_product(H, 2));
  });
}

// --------------------------------------------------------------------- display

CheckReport detail::check_display_identity(const RootDatum& d, const CheckOptions& opts, int i,
                                           const FaultPlan& faults,
                                           std::optional<std::size_t> only_case) {
  if (i < 0 || i >= d.rank()) throw std::out_of_range("check_display_identity: bad simple index");
  return run_check("check_display_identity[" + s_label(i) + "]", d, opts, only_case,
                   [&](Battery& b) {
    b.run("display " + s_label(i), [&] {
      const GradedHecke G(d);
      const int W = opts.order + opts.guard;
      const LinearForm a = G.root_form(i);
      const LinearForm two_r = G.r_form(2);
      const FormalSeries u_inv = fs_inv(expm1_ratio(a, W));
      const FormalSeries f_minus = expm1_ratio(a - two_r, W) * u_inv;
      const FormalSeries f_plus = expm1_ratio(a + two_r, W) * u_inv;
      // alpha/(1 - exp(-alpha)) = exp(alpha) (alpha/(exp(alpha) - 1)), and the
      // positive roots sum to 2 rho.
      const LinearForm rho_true = diff(d.rho());
      FormalSeries e_b = exp_linear(Rational(2) * rho_true, W);
      for (const Weight& alpha : d.positive_roots()) e_b = e_b * fs_inv(expm1_ratio(diff(alpha), W));
      const LinearForm rho = faults.flip_rho_sign ? -rho_true : rho_true;

      const GradedElement one = G.one(W);
      const GradedElement t = G.t_simple(i, W);
      const GradedElement lhs = G.mul(GradedElement::series(f_minus), one - t);
      const GradedElement inner = G.mul(t + one, GradedElement::series(f_plus)) - one;
      const FormalSeries left_factor = exp_linear(-rho - two_r, W) * e_b;
      const FormalSeries right_factor = fs_inv(e_b) * exp_linear(rho, W);
      const GradedElement rhs =
          one - G.mul(G.mul(GradedElement::series(left_factor), inner),
                      GradedElement::series(right_factor));
      return graded_diff(d, lhs, rhs, opts.order);
    });
  });
}

// ---------------------------------------------------------------------- modules

CheckReport detail::check_modules(const RootDatum& d, const CheckOptions& opts,
                                  const FaultPlan& faults, std::optional<std::size_t> only_case) {
  return run_check("check_modules", d, opts, only_case, [&](Battery& b) {
    const AffineHecke H(d);
    const GradedHecke G(d);
    Sampler S(d, opts.seed);
    const int n = d.rank();
    const int nv = G.nvars();
    const int N = opts.order;
    const int W = opts.order + opts.guard;
    const HeckeElement one = H.one();
    const GradedElement gone = G.one(W);
    const LinearForm two_r = G.r_form(2);
    const LusztigMap L(G, Side::Left, W);
    const AsphElement base{GroupAlgebraElement::scalar(n, 1)};
    const GradedAsphElement gbase{FormalSeries::constant(nv, W, 1)};

    auto act = [&](const GradedElement& a, const GradedAsphElement& m) -> GradedAsphElement {
      if (!faults.sign_module_plus) return G.act(a, m);
      const GradedElement prod = G.mul(a, GradedElement::series(m.coords));
      FormalSeries out(nv, prod.order());
      for (const auto& [w, f] : prod.terms()) out += f;
      return {out};
    };
    auto tr = [&](const AsphElement& m) { return transport(G, m, W); };

    b.run("unit acts trivially", [&] {
      if (auto e = ga_diff(H.asph_act_left(one, base).coords, base.coords)) return e;
      return series_diff(act(gone, gbase).coords, gbase.coords, N);
    });
    for (int i = 0; i < n; ++i) {
      b.run("T(" + s_label(i) + ") on base point", [&] {
        return ga_diff(H.asph_act_left(H.T_simple(i), base).coords, -base.coords);
      });
      b.run("t(" + s_label(i) + ") on base point", [&] {
        return series_diff(act(G.t_simple(i, W), gbase).coords, -gbase.coords, N);
      });
    }

    const auto gens = hecke_generators(H);
    for (int k = 0; k < opts.module_samples; ++k) {
      const AsphElement m{S.group_algebra(2)};
      for (const auto& g : gens) {
        b.run("transport " + g.label + " on m=" + m.coords.to_string(), [&] {
          return series_diff(tr(H.asph_act_left(g.element, m)).coords,
                             act(L(g.element), tr(m)).coords, N);
        });
      }
    }

    for (int k = 0; k < opts.relation_samples; ++k) {
      const Weight x = S.weight();
      const int i = S.simple_index();
      b.run("affine action x=" + weight_label(x) + " " + s_label(i), [&] {
        const AsphElement lhs =
            H.asph_act_left(H.T_simple(i) + one, {GroupAlgebraElement::theta(x)});
        return ga_diff(lhs.coords, mul_by_scriptG(d, x, i));
      });
    }

    for (int k = 0; k < opts.module_samples; ++k) {
      const FormalSeries phi = S.polynomial(nv, W, 4);
      const int i = S.simple_index();
      b.run("graded action phi=" + phi.to_string() + " " + s_label(i), [&] {
        const FormalSeries sphi = fs_reflect(d, i, phi);
        const FormalSeries rhs = (phi - sphi) + fs_mul_linear(G.demazure(i, phi), two_r);
        return series_diff(act(G.t_simple(i, W) + gone, {phi}).coords, rhs, N);
      });
    }

    for (int k = 0; k < opts.module_samples; ++k) {
      const Weight x = S.weight();
      const int i = S.simple_index();
      b.run("twisted action x=" + weight_label(x) + " " + s_label(i), [&] {
        const LinearForm a = G.root_form(i);
        const FormalSeries ex = exp_linear(diff(x), W);
        const FormalSeries lhs = act(L(H.T_simple(i) + one), {ex}).coords;
        const FormalSeries numerator =
            exp_linear(diff(x), W + 1) - exp_linear(diff(d.reflect(i, x)), W + 1);
        const FormalSeries q = fs_div_linear(numerator, a);
        const FormalSeries scale =
            exp_linear(a + two_r, W) - FormalSeries::constant(nv, W, 1);
        return series_diff(lhs, q * scale * fs_inv(expm1_ratio(a, W)), N);
      });
    }

    for (int k = 0; k < opts.module_samples; ++k) {
      const HeckeElement a = S.hecke(2);
      const HeckeElement c = S.hecke(2);
      const AsphElement m{S.group_algebra(2)};
      const std::string tag = "triple " + std::to_string(k);
      b.run("left module law " + tag, [&] {
        return ga_diff(H.asph_act_left(H.mul(a, c), m).coords,
                       H.asph_act_left(a, H.asph_act_left(c, m)).coords);
      });
      b.run("right module law " + tag, [&] {
        return ga_diff(H.asph_act_right(m, H.mul(a, c)).coords,
                       H.asph_act_right(H.asph_act_right(m, a), c).coords);
      });
      const GradedElement ga = S.graded(G, W, 2);
      const GradedElement gc = S.graded(G, W, 2);
      const GradedAsphElement gm{S.polynomial(nv, W, 3)};
      b.run("graded module law " + tag, [&] {
        return series_diff(act(G.mul(ga, gc), gm).coords, act(ga, act(gc, gm)).coords, N);
      });
    }
  });
}

// ------------------------------------------------------------------ public API

CheckReport check_presentation(const RootDatum& d, const CheckOptions& opts) {
  return detail::check_presentation(d, opts, {});
}
CheckReport check_morphisms(const RootDatum& d, const CheckOptions& opts) {
  return detail::check_morphisms(d, opts, {});
}
CheckReport check_diagram(const RootDatum& d, const CheckOptions& opts) {
  return detail::check_diagram(d, opts, {});
}
CheckReport check_display_identity(const RootDatum& d, const CheckOptions& opts, int i) {
  return detail::check_display_identity(d, opts, i, {});
}
CheckReport check_modules(const RootDatum& d, const CheckOptions& opts) {
  return detail::check_modules(d, opts, {});
}

std::vector<CheckReport> run_suites(const RootDatum& d, const std::vector<Suite>& suites,
                                    const CheckOptions& opts, bool concurrent) {
  auto wants = [&](Suite s) {
    return std::find(suites.begin(), suites.end(), s) != suites.end() ||
           std::find(suites.begin(), suites.end(), Suite::All) != suites.end();
  };
  std::vector<std::function<CheckReport()>> jobs;
  if (wants(Suite::Presentation)) jobs.push_back([&] { return check_presentation(d, opts); });
  if (wants(Suite::Morphisms)) jobs.push_back([&] { return check_morphisms(d, opts); });
  if (wants(Suite::Diagram)) jobs.push_back([&] { return check_diagram(d, opts); });
  if (wants(Suite::Display))
    for (int i = 0; i < d.rank(); ++i)
      jobs.push_back([&, i] { return check_display_identity(d, opts, i); });
  if (wants(Suite::Modules)) jobs.push_back([&] { return check_modules(d, opts); });

  std::vector<CheckReport> out;
  if (concurrent) {
    std::vector<std::future<CheckReport>> futures;
    for (auto& job : jobs) futures.push_back(std::async(std::launch::async, job));
    for (auto& fut : futures) out.push_back(fut.get());
  } else {
    for (auto& job : jobs) out.push_back(job());
  }
  std::sort(out.begin(), out.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
  return out;
}

}  // namespace hecke
