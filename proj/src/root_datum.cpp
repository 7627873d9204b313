#include "hecke/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

Weight Weight::fundamental(int rank, int i) {
  std::vector<int> c(rank, 0);
  c[i] = 1;
  return Weight(std::move(c));
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Weight operator-(Weight a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

Weight operator*(int k, Weight a) {
  for (auto& c : a.coords_) c *= k;
  return a;
}

std::ostream& operator<<(std::ostream& os, const Weight& x) {
  os << '(';
  for (int i = 0; i < x.rank(); ++i) {
    if (i) os << ',';
    os << x[i];
  }
  return os << ')';
}

std::string to_string(const Weight& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

RootDatum::RootDatum(IntMatrix cartan, std::size_t weyl_bound, std::string type_label)
    : rank_(static_cast<int>(cartan.size())),
      cartan_(std::move(cartan)),
      type_label_(std::move(type_label)) {
  validate();
  for (int j = 0; j < rank_; ++j) {
    std::vector<int> col(rank_);
    for (int i = 0; i < rank_; ++i) col[i] = cartan_[i][j];
    simple_roots_.emplace_back(std::move(col));
  }
  rho_ = Weight(std::vector<int>(rank_, 1));
  enumerate_weyl(weyl_bound);
  compute_positive_roots();
}

void RootDatum::validate() const {
  if (rank_ == 0) throw InvalidCartan("Cartan matrix is empty");
  for (int i = 0; i < rank_; ++i) {
    if (static_cast<int>(cartan_[i].size()) != rank_)
      throw InvalidCartan("Cartan matrix is not square");
  }
  for (int i = 0; i < rank_; ++i) {
    if (cartan_[i][i] != 2)
      throw InvalidCartan("diagonal entry A[" + std::to_string(i) + "][" +
                          std::to_string(i) + "] is not 2");
    for (int j = 0; j < rank_; ++j) {
      if (i == j) continue;
      if (cartan_[i][j] > 0)
        throw InvalidCartan("off-diagonal entry A[" + std::to_string(i) + "][" +
                            std::to_string(j) + "] is positive");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
        throw InvalidCartan("A[" + std::to_string(i) + "][" + std::to_string(j) +
                            "] and its transpose disagree on vanishing");
    }
  }
}

Weight RootDatum::reflect(int i, const Weight& x) const {
  const int m = x[i];
  if (m == 0) return x;
  return x - m * simple_roots_[i];
}

void RootDatum::enumerate_weyl(std::size_t bound) {
  left_table_.assign(rank_, {});
  WeylElement id;
  id.id = 0;
  id.key = rho_;
  id.action.assign(rank_, std::vector<int>(rank_, 0));
  for (int i = 0; i < rank_; ++i) id.action[i][i] = 1;
  weyl_.push_back(id);
  by_key_.emplace(rho_, 0);

  // Breadth-first on s_i * w gives lengths and reduced words directly.
  for (WeylId cur = 0; cur < weyl_.size(); ++cur) {
    for (int i = 0; i < rank_; ++i) {
      Weight key = reflect(i, weyl_[cur].key);
      auto it = by_key_.find(key);
      WeylId next;
      if (it != by_key_.end()) {
        next = it->second;
      } else {
        if (weyl_.size() >= bound)
          throw WeylTooLarge("Weyl group enumeration exceeded " + std::to_string(bound) +
                             " elements");
        WeylElement e;
        e.id = weyl_.size();
        e.key = key;
        e.length = weyl_[cur].length + 1;
        e.reduced_word.reserve(e.length);
        e.reduced_word.push_back(i);
        e.reduced_word.insert(e.reduced_word.end(), weyl_[cur].reduced_word.begin(),
                              weyl_[cur].reduced_word.end());
        e.action = weyl_[cur].action;
        for (int j = 0; j < rank_; ++j) {
          std::vector<int> col(rank_);
          for (int k = 0; k < rank_; ++k) col[k] = e.action[k][j];
          Weight img = reflect(i, Weight(std::move(col)));
          for (int k = 0; k < rank_; ++k) e.action[k][j] = img[k];
        }
        next = e.id;
        by_key_.emplace(key, next);
        weyl_.push_back(std::move(e));
      }
      auto& row = left_table_[i];
      if (row.size() <= cur) row.resize(cur + 1);
      row[cur] = next;
    }
  }
  for (auto& row : left_table_) row.resize(weyl_.size());

  inverse_.resize(weyl_.size());
  for (const auto& e : weyl_) {
    WeylId acc = 0;
    for (int s : e.reduced_word) acc = left_table_[s][acc];  // reversed word
    inverse_[e.id] = acc;
    if (e.length > weyl_[longest_].length) longest_ = e.id;
  }
}

void RootDatum::compute_positive_roots() {
  // Orbit of the simple roots, tracked in simple-root coordinates.
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int j = 0; j < rank_; ++j) {
    std::vector<int> c(rank_, 0);
    c[j] = 1;
    if (seen.insert(c).second) queue.push_back(c);
  }
  while (!queue.empty()) {
    auto c = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      int pairing = 0;
      for (int j = 0; j < rank_; ++j) pairing += c[j] * cartan_[i][j];
      auto d = c;
      d[i] -= pairing;
      if (seen.insert(d).second) queue.push_back(std::move(d));
    }
  }
  // Positive cone only, sorted by height.
  std::vector<std::pair<int, Weight>> keyed;
  for (const auto& c : seen) {
    if (std::any_of(c.begin(), c.end(), [](int k) { return k < 0; })) continue;
    int height = 0;
    for (int k : c) height += k;
    std::vector<int> w(rank_, 0);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) w[i] += cartan_[i][j] * c[j];
    keyed.emplace_back(height, Weight(std::move(w)));
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [h, w] : keyed) positive_roots_.push_back(std::move(w));
}

std::optional<WeylId> RootDatum::find(const Weight& key) const {
  auto it = by_key_.find(key);
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

WeylId RootDatum::multiply(WeylId a, WeylId b) const {
  const auto& word = weyl_[a].reduced_word;
  WeylId acc = b;
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = left_table_[*it][acc];
  return acc;
}

int RootDatum::braid_order(int i, int j) const {
  if (i == j) return 1;
  switch (cartan_[i][j] * cartan_[j][i]) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;  // infinite
  }
}

Weight RootDatum::apply(WeylId w, const Weight& x) const { return hecke::apply(weyl_[w], x); }

Weight apply(const WeylElement& w, const Weight& x) {
  const int n = x.rank();
  std::vector<int> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += w.action[i][j] * x[j];
  return Weight(std::move(out));
}

RootDatum build_root_datum(const IntMatrix& cartan, std::size_t weyl_bound) {
  return RootDatum(cartan, weyl_bound);
}

IntMatrix cartan_matrix(char type, int rank) {
  if (rank < 1) throw InvalidCartan("rank must be positive");
  IntMatrix a(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) a[i][i + 1] = a[i + 1][i] = -1;
  };
  switch (type) {
    case 'A':
      chain(rank);
      break;
    case 'B':
      if (rank < 2) throw InvalidCartan("type B needs rank >= 2");
      chain(rank);
      a[rank - 1][rank - 2] = -2;
      break;
    case 'C':
      if (rank < 2) throw InvalidCartan("type C needs rank >= 2");
      chain(rank);
      a[rank - 2][rank - 1] = -2;
      break;
    case 'D':
      if (rank < 4) throw InvalidCartan("type D needs rank >= 4");
      chain(rank - 1);
      a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1;
      break;
    case 'G':
      if (rank != 2) throw InvalidCartan("type G exists only in rank 2");
      a[0][1] = -1;
      a[1][0] = -3;
      break;
    case 'F':
      if (rank != 4) throw InvalidCartan("type F exists only in rank 4");
      chain(4);
      a[1][2] = -2;
      break;
    default:
      throw InvalidCartan(std::string("unknown Cartan type '") + type + "'");
  }
  return a;
}

RootDatum root_datum_of_type(char type, int rank) {
  return RootDatum(cartan_matrix(type, rank), RootDatum::kDefaultWeylBound,
                   std::string(1, type));
}

IntMatrix parse_cartan(std::istream& in) {
  long n = 0;
  if (!(in >> n) || n < 1 || n > 64) throw InvalidCartan("bad Cartan header: expected rank n");
  IntMatrix a(n, std::vector<int>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      if (!(in >> a[i][j])) throw InvalidCartan("Cartan matrix truncated or non-integer entry");
  std::string extra;
  if (in >> extra) throw InvalidCartan("trailing data after Cartan matrix");
  return a;
}

IntMatrix read_cartan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidCartan("cannot open Cartan file " + path);
  return parse_cartan(in);
}

}  // namespace hecke
