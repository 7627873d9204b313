#include "hecke/formal_series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hecke/errors.hpp"

namespace hecke {

// -------------------------------------------------------------------- Monomial

Monomial Monomial::variable(int nvars, int k, int power) {
  Monomial m(nvars);
  m.set(k, power);
  return m;
}

void Monomial::set(int k, int e) {
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[k] + e);
  exps_[k] = static_cast<std::uint8_t>(e);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.nvars_);
  for (int k = 0; k < a.nvars_; ++k) m.exps_[k] = static_cast<std::uint8_t>(a.exps_[k] + b.exps_[k]);
  m.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  return m;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int k = a.nvars() - 1; k >= 0; --k)
    if (a[k] != b[k]) return a[k] < b[k];
  return false;
}

// ------------------------------------------------------------------ LinearForm

LinearForm LinearForm::r_form(int nvars, const Rational& c) {
  LinearForm l(nvars);
  l[nvars - 1] = c;
  return l;
}

bool LinearForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

LinearForm& LinearForm::operator+=(const LinearForm& other) {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& other) {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

LinearForm operator-(LinearForm a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

LinearForm operator*(const Rational& c, LinearForm a) {
  for (auto& k : a.coeffs_) k *= c;
  return a;
}

LinearForm diff(const Weight& x) {
  LinearForm l(x.rank() + 1);
  for (int i = 0; i < x.rank(); ++i) l[i] = x[i];
  return l;
}

// ---------------------------------------------------------------- FormalSeries

namespace {

void accumulate(FormalSeries::Terms& terms, const Monomial& m, const Rational& c) {
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void prune(FormalSeries::Terms& terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
}

void require_compatible(const FormalSeries& a, const FormalSeries& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("series over different variable sets");
}

}  // namespace

FormalSeries FormalSeries::constant(int nvars, int order, const Rational& c) {
  FormalSeries f(nvars, order);
  f.add_term(Monomial(nvars), c);
  return f;
}

FormalSeries FormalSeries::variable(int nvars, int order, int k) {
  FormalSeries f(nvars, order);
  f.add_term(Monomial::variable(nvars, k), 1);
  return f;
}

FormalSeries FormalSeries::from_linear(const LinearForm& l, int order) {
  FormalSeries f(l.nvars(), order);
  for (int k = 0; k < l.nvars(); ++k) f.add_term(Monomial::variable(l.nvars(), k), l[k]);
  return f;
}

Rational FormalSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int FormalSeries::valuation() const {
  return terms_.empty() ? order_ + 1 : terms_.begin()->first.degree();
}

void FormalSeries::add_term(const Monomial& m, const Rational& c) {
  if (m.degree() > order_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FormalSeries FormalSeries::truncated(int new_order) const {
  if (new_order > order_)
    throw PrecisionExhausted("cannot raise order " + std::to_string(order_) + " to " +
                             std::to_string(new_order));
  FormalSeries out(nvars_, new_order);
  for (const auto& [m, c] : terms_) {
    if (m.degree() > new_order) break;
    out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& other) {
  require_compatible(*this, other);
  if (other.order_ < order_) *this = truncated(other.order_);
  for (const auto& [m, c] : other.terms_) {
    if (m.degree() > order_) break;
    add_term(m, c);
  }
  return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& other) {
  require_compatible(*this, other);
  if (other.order_ < order_) *this = truncated(other.order_);
  for (const auto& [m, c] : other.terms_) {
    if (m.degree() > order_) break;
    add_term(m, -c);
  }
  return *this;
}

FormalSeries operator-(FormalSeries a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

FormalSeries operator*(const Rational& c, FormalSeries a) {
  if (c == 0) {
    a.terms_.clear();
    return a;
  }
  for (auto& [m, k] : a.terms_) k *= c;
  return a;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  require_compatible(a, b);
  const int order = std::min(a.order_, b.order_);
  FormalSeries out(a.nvars_, order);
  Rational prod;
  for (const auto& [ma, ca] : a.terms_) {
    const int room = order - ma.degree();
    if (room < 0) break;
    for (const auto& [mb, cb] : b.terms_) {
      if (mb.degree() > room) break;
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      accumulate(out.terms_, ma * mb, prod);
    }
  }
  prune(out.terms_);
  return out;
}

std::string FormalSeries::to_string(std::size_t max_terms) const {
  std::ostringstream os;
  std::size_t shown = 0;
  for (const auto& [m, c] : terms_) {
    if (shown == max_terms) {
      os << " + ...";
      break;
    }
    if (shown) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    ++shown;
    Rational mag = abs(c);
    bool need_star = false;
    if (m.degree() == 0 || mag != 1) {
      os << mag;
      need_star = true;
    }
    for (int k = 0; k < nvars_; ++k) {
      if (m[k] == 0) continue;
      if (need_star) os << '*';
      need_star = true;
      if (k == nvars_ - 1)
        os << 'r';
      else
        os << 'y' << k + 1;
      if (m[k] > 1) os << '^' << m[k];
    }
  }
  if (shown == 0) os << '0';
  os << " + O(deg>" << order_ << ')';
  return os.str();
}

bool agree_to_degree(const FormalSeries& a, const FormalSeries& b, int degree) {
  if (a.order() < degree || b.order() < degree)
    throw PrecisionExhausted("comparison at degree " + std::to_string(degree) +
                             " exceeds series precision");
  return a.truncated(degree) == b.truncated(degree);
}

// ------------------------------------------------------------------ operations

FormalSeries fs_exp(const FormalSeries& f) {
  if (f.constant_term() != 0) throw NonzeroConstantTerm("fs_exp: constant term is nonzero");
  const int n = f.nvars();
  FormalSeries result = FormalSeries::constant(n, f.order(), 1);
  FormalSeries power = result;
  for (int k = 1; k <= f.order(); ++k) {
    power = Rational(1, k) * (power * f);
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

FormalSeries exp_linear(const LinearForm& l, int order) {
  const int n = l.nvars();
  FormalSeries out(n, order);
  std::vector<int> active;
  for (int k = 0; k < n; ++k)
    if (l[k] != 0) active.push_back(k);
  // coefficient of prod y_k^{e_k} is prod l_k^{e_k} / e_k!
  Monomial m(n);
  auto rec = [&](auto&& self, std::size_t idx, int budget, const Rational& coeff) -> void {
    if (idx == active.size()) {
      out.add_term(m, coeff);
      return;
    }
    const int k = active[idx];
    Rational c = coeff;
    for (int e = 0; e <= budget; ++e) {
      if (e > 0) c = c * l[k] / e;
      m.set(k, e);
      self(self, idx + 1, budget - e, c);
    }
    m.set(k, 0);
  };
  rec(rec, 0, order, Rational(1));
  return out;
}

FormalSeries fs_inv(const FormalSeries& f) {
  const Rational c = f.constant_term();
  if (c == 0) throw NonUnit("fs_inv: constant term is zero");
  const int n = f.nvars();
  // f = c (1 - g), 1/f = (1/c) sum g^k
  const FormalSeries one = FormalSeries::constant(n, f.order(), 1);
  const FormalSeries g = one - Rational(1 / c) * f;
  FormalSeries result = one;
  for (int k = 1; k <= f.order(); ++k) result = one + g * result;
  return Rational(1 / c) * result;
}

FormalSeries fs_div_linear(const FormalSeries& f, const LinearForm& l) {
  if (l.nvars() != f.nvars()) throw std::invalid_argument("fs_div_linear: variable mismatch");
  if (l.is_zero()) throw std::invalid_argument("fs_div_linear: division by the zero form");
  if (f.order() < 1) throw PrecisionExhausted("fs_div_linear: no precision left to divide");
  const int n = f.nvars();
  int pivot = 0;
  while (l[pivot] == 0) ++pivot;

  FormalSeries q(n, f.order() - 1);
  FormalSeries::Terms rest = f.terms();
  int top = 0;
  for (const auto& [m, c] : rest) top = std::max(top, m[pivot]);

  // Eliminate the pivot variable one power at a time; each step only
  // creates terms with a strictly smaller pivot exponent.
  std::vector<std::pair<Monomial, Rational>> layer;
  for (int k = top; k >= 1; --k) {
    layer.clear();
    for (const auto& [m, c] : rest)
      if (m[pivot] == k && c != 0) layer.emplace_back(m, c);
    for (const auto& [m, c] : layer) {
      Monomial base = m;
      base.set(pivot, k - 1);
      const Rational qc = c / l[pivot];
      q.add_term(base, qc);
      for (int j = 0; j < n; ++j) {
        if (l[j] == 0) continue;
        accumulate(rest, base * Monomial::variable(n, j), -qc * l[j]);
      }
    }
  }
  for (const auto& [m, c] : rest) {
    if (c != 0)
      throw NotDivisible("fs_div_linear: nonzero remainder at degree " +
                         std::to_string(m.degree()));
  }
  return q;
}

FormalSeries fs_mul_linear(const FormalSeries& f, const LinearForm& l) {
  if (l.nvars() != f.nvars()) throw std::invalid_argument("fs_mul_linear: variable mismatch");
  const int n = f.nvars();
  FormalSeries out(n, f.order() + 1);
  for (const auto& [m, c] : f.terms())
    for (int j = 0; j < n; ++j)
      if (l[j] != 0) accumulate(out.terms_ref(), m * Monomial::variable(n, j), c * l[j]);
  prune(out.terms_ref());
  return out;
}

FormalSeries expm1_over_linear(const LinearForm& l, int order) {
  FormalSeries e = exp_linear(l, order + 1);
  e -= FormalSeries::constant(l.nvars(), order + 1, 1);
  return fs_div_linear(e, l);
}

FormalSeries fs_reflect(const RootDatum& d, int i, const FormalSeries& f) {
  const int n = f.nvars();
  if (n != d.rank() + 1) throw std::invalid_argument("fs_reflect: series/datum rank mismatch");
  // y_i -> y_i - alpha_i-dot; every other variable is fixed.
  LinearForm image = -diff(d.simple_root(i));
  image[i] += 1;

  int top = 0;
  for (const auto& [m, c] : f.terms()) top = std::max(top, m[i]);
  std::vector<FormalSeries::Terms> powers(top + 1);
  powers[0].emplace(Monomial(n), 1);
  for (int k = 1; k <= top; ++k) {
    for (const auto& [m, c] : powers[k - 1])
      for (int j = 0; j < n; ++j)
        if (image[j] != 0) accumulate(powers[k], m * Monomial::variable(n, j), c * image[j]);
    prune(powers[k]);
  }

  FormalSeries out(n, f.order());
  for (const auto& [m, c] : f.terms()) {
    const int k = m[i];
    if (k == 0) {
      out.add_term(m, c);
      continue;
    }
    Monomial base = m;
    base.set(i, 0);
    for (const auto& [pm, pc] : powers[k]) out.add_term(base * pm, c * pc);
  }
  return out;
}

FormalSeries fs_weyl(const RootDatum& d, WeylId w, const FormalSeries& f) {
  const auto& word = d.element(w).reduced_word;
  FormalSeries out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = fs_reflect(d, *it, out);
  return out;
}

FormalSeries fs_negate_r(const FormalSeries& f) {
  const int r = f.nvars() - 1;
  FormalSeries out = f;
  for (auto& [m, c] : out.terms_ref())
    if (m[r] % 2 != 0) c = -c;
  return out;
}

}  // namespace hecke
