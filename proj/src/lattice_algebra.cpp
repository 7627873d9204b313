#include "hecke/lattice_algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke {

// ---------------------------------------------------------------- LaurentScalar

LaurentScalar::LaurentScalar(long constant) {
  if (constant != 0) terms_.emplace(0, constant);
}

LaurentScalar LaurentScalar::monomial(const mpz_class& coeff, int exponent) {
  LaurentScalar s;
  s.add_term(exponent, coeff);
  return s;
}

mpz_class LaurentScalar::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentScalar::add_term(int exponent, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentScalar LaurentScalar::substitute(int sign, int exponent_sign) const {
  LaurentScalar out;
  for (const auto& [e, c] : terms_) {
    const bool flip = sign < 0 && (e % 2 != 0);
    out.add_term(e * exponent_sign, flip ? mpz_class(-c) : c);
  }
  return out;
}

mpz_class LaurentScalar::at_one() const {
  mpz_class sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentScalar operator-(const LaurentScalar& a) {
  LaurentScalar out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  LaurentScalar out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

std::string LaurentScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'v';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

// ---------------------------------------------------------- GroupAlgebraElement

GroupAlgebraElement GroupAlgebraElement::theta(const Weight& x, const LaurentScalar& c) {
  GroupAlgebraElement a;
  a.add_term(x, c);
  return a;
}

GroupAlgebraElement GroupAlgebraElement::scalar(int rank, const LaurentScalar& c) {
  return theta(Weight::zero(rank), c);
}

LaurentScalar GroupAlgebraElement::coefficient(const Weight& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? LaurentScalar() : it->second;
}

void GroupAlgebraElement::add_term(const Weight& x, const LaurentScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  for (const auto& [x, c] : other.terms_) add_term(x, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
  for (const auto& [x, c] : other.terms_) add_term(x, -c);
  return *this;
}

GroupAlgebraElement operator-(const GroupAlgebraElement& a) {
  GroupAlgebraElement out;
  for (const auto& [x, c] : a.terms_) out.terms_.emplace(x, -c);
  return out;
}

GroupAlgebraElement operator*(const LaurentScalar& c, const GroupAlgebraElement& a) {
  GroupAlgebraElement out;
  if (c.is_zero()) return out;
  for (const auto& [x, k] : a.terms_) out.add_term(x, c * k);
  return out;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  GroupAlgebraElement out;
  for (const auto& [x, cx] : a.terms_)
    for (const auto& [y, cy] : b.terms_) out.add_term(x + y, cx * cy);
  return out;
}

std::string GroupAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ")*theta" << x;
  }
  return os.str();
}

GroupAlgebraElement ga_mul(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return a * b;
}

// ------------------------------------------------------------------ quotients

namespace {

GroupAlgebraElement demazure_unchecked(const RootDatum& d, const Weight& x, int i) {
  GroupAlgebraElement out;
  const int m = x[i];
  const Weight& alpha = d.simple_root(i);
  if (m > 0) {
    Weight y = x;
    for (int k = 0; k < m; ++k, y -= alpha) out.add_term(y, 1);
  } else if (m < 0) {
    Weight y = x;
    for (int k = 1; k <= -m; ++k) {
      y += alpha;
      out.add_term(y, -1);
    }
  }
  return out;
}

}  // namespace

GroupAlgebraElement demazure_quotient(const RootDatum& d, const Weight& x, int i) {
  GroupAlgebraElement q = demazure_unchecked(d, x, i);
  const int n = d.rank();
  const auto numerator = GroupAlgebraElement::theta(x) - GroupAlgebraElement::theta(d.reflect(i, x));
  const auto denominator =
      GroupAlgebraElement::scalar(n, 1) - GroupAlgebraElement::theta(-d.simple_root(i));
  if (q * denominator != numerator)
    throw std::logic_error("demazure_quotient: multiply-back failed at x=" + to_string(x));
  return q;
}

GroupAlgebraElement demazure_quotient(const RootDatum& d, const GroupAlgebraElement& a, int i) {
  GroupAlgebraElement out;
  for (const auto& [x, c] : a.terms()) {
    if (x[i] == 0) continue;
    out += c * demazure_unchecked(d, x, i);
  }
  return out;
}

GroupAlgebraElement mul_by_scriptG(const RootDatum& d, const Weight& x, int i) {
  const int n = d.rank();
  const Weight& alpha = d.simple_root(i);
  const auto q = demazure_quotient(d, x, i);
  const auto factor =
      GroupAlgebraElement::theta(alpha, LaurentScalar::v_power(2)) - GroupAlgebraElement::scalar(n, 1);
  auto result = factor * GroupAlgebraElement::theta(-alpha) * q;

  const auto numerator = GroupAlgebraElement::theta(x) - GroupAlgebraElement::theta(d.reflect(i, x));
  const auto theta_alpha_minus_one =
      GroupAlgebraElement::theta(alpha) - GroupAlgebraElement::scalar(n, 1);
  if (result * theta_alpha_minus_one != numerator * factor)
    throw std::logic_error("mul_by_scriptG: multiply-back failed at x=" + to_string(x));
  return result;
}

GroupAlgebraElement ga_reflect(const RootDatum& d, const GroupAlgebraElement& a, int i) {
  GroupAlgebraElement out;
  for (const auto& [x, c] : a.terms()) out.add_term(d.reflect(i, x), c);
  return out;
}

GroupAlgebraElement ga_substitute(const GroupAlgebraElement& a, VImage v_image,
                                  bool negate_weights) {
  GroupAlgebraElement out;
  for (const auto& [x, c] : a.terms())
    out.add_term(negate_weights ? -x : x, c.substitute(v_image.sign, v_image.exponent));
  return out;
}

}  // namespace hecke
