#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

using IntMatrix = std::vector<std::vector<int>>;

/// Element of the weight lattice, in the fundamental-weight basis.
///
/// Coordinate i is the pairing with the i-th simple coroot.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> coords) : coords_(std::move(coords)) {}

  static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }
  static Weight fundamental(int rank, int i);

  int rank() const { return static_cast<int>(coords_.size()); }
  int operator[](int i) const { return coords_[i]; }
  const std::vector<int>& coords() const { return coords_; }
  bool is_zero() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a);
  friend Weight operator*(int k, Weight a);

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;

 private:
  std::vector<int> coords_;
};

std::ostream& operator<<(std::ostream& os, const Weight& x);
std::string to_string(const Weight& x);

/// Index of an element in RootDatum::weyl().
using WeylId = std::size_t;

struct WeylElement {
  WeylId id = 0;
  /// Image of rho; rho is regular so this determines the element.
  Weight key;
  /// Simple indices, 0-based, leftmost factor first.
  std::vector<int> reduced_word;
  int length = 0;
  /// Column j is the image of the j-th fundamental weight.
  IntMatrix action;
};

/// Finite root datum of a semisimple simply connected group.
///
/// Built from a Cartan matrix with A[i][j] = <alpha_j, alpha_i^vee>; the
/// simple root alpha_j is column j of A. The Weyl group is enumerated by
/// breadth-first search on left multiplication, so stored reduced words are
/// minimal and element 0 is the identity. Immutable once constructed.
class RootDatum {
 public:
  static constexpr std::size_t kDefaultWeylBound = 1'000'000;

  explicit RootDatum(IntMatrix cartan,
                     std::size_t weyl_bound = kDefaultWeylBound,
                     std::string type_label = "custom");

  int rank() const { return rank_; }
  const IntMatrix& cartan() const { return cartan_; }
  const std::string& type_label() const { return type_label_; }

  const Weight& simple_root(int i) const { return simple_roots_[i]; }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }
  const Weight& rho() const { return rho_; }

  const std::vector<WeylElement>& weyl() const { return weyl_; }
  std::size_t weyl_order() const { return weyl_.size(); }
  const WeylElement& element(WeylId w) const { return weyl_[w]; }
  WeylId identity() const { return 0; }
  WeylId simple_reflection(int i) const { return left_table_[i][0]; }
  WeylId longest() const { return longest_; }
  std::optional<WeylId> find(const Weight& key) const;

  /// s_i * w
  WeylId left_multiply(int i, WeylId w) const { return left_table_[i][w]; }
  WeylId multiply(WeylId a, WeylId b) const;
  WeylId inverse(WeylId w) const { return inverse_[w]; }

  /// Order of s_i s_j.
  int braid_order(int i, int j) const;

  /// s_i(x) = x - <x, alpha_i^vee> alpha_i
  Weight reflect(int i, const Weight& x) const;
  Weight apply(WeylId w, const Weight& x) const;

 private:
  void validate() const;
  void enumerate_weyl(std::size_t bound);
  void compute_positive_roots();

  int rank_;
  IntMatrix cartan_;
  std::string type_label_;
  std::vector<Weight> simple_roots_;
  std::vector<Weight> positive_roots_;
  Weight rho_;
  std::vector<WeylElement> weyl_;
  std::map<Weight, WeylId> by_key_;
  std::vector<std::vector<WeylId>> left_table_;
  std::vector<WeylId> inverse_;
  WeylId longest_ = 0;
};

RootDatum build_root_datum(const IntMatrix& cartan,
                           std::size_t weyl_bound = RootDatum::kDefaultWeylBound);

Weight apply(const WeylElement& w, const Weight& x);

/// Cartan matrix of type A, B, C, D, G (rank 2) or F (rank 4).
IntMatrix cartan_matrix(char type, int rank);
RootDatum root_datum_of_type(char type, int rank);

/// Plain text: first line n, then n rows of n integers.
IntMatrix parse_cartan(std::istream& in);
IntMatrix read_cartan_file(const std::string& path);

}  // namespace hecke
