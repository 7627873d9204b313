#include "hecke/affine_hecke.hpp"

#include <sstream>

namespace hecke {

namespace {

std::string word_label(const RootDatum& d, WeylId w) {
  const auto& word = d.element(w).reduced_word;
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) os << ' ';
    os << 's' << word[k] + 1;
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------- HeckeElement

GroupAlgebraElement HeckeElement::coefficient(WeylId w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? GroupAlgebraElement() : it->second;
}

void HeckeElement::add_term(WeylId w, const GroupAlgebraElement& a) {
  if (a.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, a);
  if (!inserted) {
    it->second += a;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  for (const auto& [w, a] : other.terms_) add_term(w, a);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& other) {
  for (const auto& [w, a] : other.terms_) add_term(w, -a);
  return *this;
}

HeckeElement operator-(const HeckeElement& a) {
  HeckeElement out;
  for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, -c);
  return out;
}

HeckeElement operator*(const GroupAlgebraElement& c, const HeckeElement& h) {
  HeckeElement out;
  for (const auto& [w, a] : h.terms_) out.add_term(w, c * a);
  return out;
}

HeckeElement operator*(const LaurentScalar& c, const HeckeElement& h) {
  HeckeElement out;
  for (const auto& [w, a] : h.terms_) out.add_term(w, c * a);
  return out;
}

std::string HeckeElement::to_string(const RootDatum& d) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, a] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '[' << a.to_string() << "]*T[" << word_label(d, w) << ']';
  }
  return os.str();
}

// ----------------------------------------------------------------- AffineHecke

HeckeElement AffineHecke::scalar(const LaurentScalar& c) const {
  return theta(Weight::zero(rank()), c);
}

HeckeElement AffineHecke::theta(const Weight& x, const LaurentScalar& c) const {
  HeckeElement h;
  h.add_term(datum_->identity(), GroupAlgebraElement::theta(x, c));
  return h;
}

HeckeElement AffineHecke::from_group_algebra(const GroupAlgebraElement& a) const {
  HeckeElement h;
  h.add_term(datum_->identity(), a);
  return h;
}

HeckeElement AffineHecke::T(WeylId w) const {
  HeckeElement h;
  h.add_term(w, GroupAlgebraElement::scalar(rank(), 1));
  return h;
}

HeckeElement AffineHecke::left_mul_simple(int i, const HeckeElement& h) const {
  const RootDatum& d = *datum_;
  const LaurentScalar v2 = LaurentScalar::v_power(2);
  const LaurentScalar v2_minus_one = v2 - LaurentScalar(1);
  HeckeElement out;
  for (const auto& [w, a] : h.terms()) {
    // T_s a = s(a) T_s + (v^2 - 1) q(a)
    auto q = demazure_quotient(d, a, i);
    if (!q.is_zero()) out.add_term(w, v2_minus_one * q);
    auto sa = ga_reflect(d, a, i);
    const WeylId sw = d.left_multiply(i, w);
    if (d.element(sw).length > d.element(w).length) {
      out.add_term(sw, sa);
    } else {
      out.add_term(w, v2_minus_one * sa);
      out.add_term(sw, v2 * sa);
    }
  }
  return out;
}

HeckeElement AffineHecke::mul(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement out;
  for (const auto& [u, coeff] : a.terms()) {
    HeckeElement acc = b;
    const auto& word = datum_->element(u).reduced_word;
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = left_mul_simple(*it, acc);
    out += coeff * acc;
  }
  return out;
}

HeckeElement AffineHecke::ts_inverse(int i) const {
  const LaurentScalar vm2 = LaurentScalar::v_power(-2);
  return vm2 * T_simple(i) + scalar(vm2 - LaurentScalar(1));
}

template <class CoeffMap>
HeckeElement AffineHecke::apply_morphism(const HeckeElement& h, CoeffMap&& coeff,
                                         const std::vector<HeckeElement>& simple_images) const {
  std::map<WeylId, HeckeElement> image_of_T;
  image_of_T.emplace(datum_->identity(), one());
  // Image of T_w, built along the reduced word: T_w = T_{s_i} T_{s_i w}.
  auto image = [&](auto&& self, WeylId w) -> const HeckeElement& {
    if (auto it = image_of_T.find(w); it != image_of_T.end()) return it->second;
    const int i = datum_->element(w).reduced_word.front();
    const WeylId rest = datum_->left_multiply(i, w);
    HeckeElement img = mul(simple_images[i], self(self, rest));
    return image_of_T.emplace(w, std::move(img)).first->second;
  };
  HeckeElement out;
  for (const auto& [w, a] : h.terms()) out += coeff(a) * image(image, w);
  return out;
}

HeckeElement AffineHecke::koszul_image_simple(int i) const {
  const Weight& rho = datum_->rho();
  const HeckeElement minus_v2_inv = LaurentScalar::monomial(-1, 2) * ts_inverse(i);
  return mul(theta(rho), mul(minus_v2_inv, theta(-rho)));
}

HeckeElement AffineHecke::koszul(const HeckeElement& h) const {
  std::vector<HeckeElement> images;
  for (int i = 0; i < rank(); ++i) images.push_back(koszul_image_simple(i));
  return apply_morphism(
      h, [](const GroupAlgebraElement& a) { return ga_substitute(a, {-1, 1}, true); }, images);
}

HeckeElement AffineHecke::duality(const HeckeElement& h) const {
  std::vector<HeckeElement> images;
  for (int i = 0; i < rank(); ++i) images.push_back(duality_image_simple(i));
  return apply_morphism(
      h, [](const GroupAlgebraElement& a) { return ga_substitute(a, {1, -1}, true); }, images);
}

HeckeElement AffineHecke::parity(const HeckeElement& h) const {
  HeckeElement out;
  for (const auto& [w, a] : h.terms()) out.add_term(w, ga_substitute(a, {-1, 1}, false));
  return out;
}

HeckeElement AffineHecke::involution_composite(const HeckeElement& h) const {
  return parity(duality(koszul(h)));
}

HeckeElement AffineHecke::anti_involution(const HeckeElement& h) const {
  // tau(a T_w) = T_{w^-1} a
  HeckeElement out;
  for (const auto& [w, a] : h.terms())
    out += mul(T(datum_->inverse(w)), from_group_algebra(a));
  return out;
}

AsphElement AffineHecke::asph_act_left(const HeckeElement& h, const AsphElement& m) const {
  const HeckeElement prod = mul(h, from_group_algebra(m.coords));
  AsphElement out;
  for (const auto& [w, a] : prod.terms()) {
    if (datum_->element(w).length % 2 == 0)
      out.coords += a;
    else
      out.coords -= a;
  }
  return out;
}

AsphElement AffineHecke::asph_act_right(const AsphElement& m, const HeckeElement& h) const {
  return asph_act_left(anti_involution(h), m);
}

}  // namespace hecke
