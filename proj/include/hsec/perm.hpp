#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hsec {

// One-line permutation in bottom-row convention: a tuple such as (3142)
// lists, left to right, which interval sits at each position of the bottom
// row while the top row is 1..m. In the gluing formula below the symbol
// pi(i) is the bottom position of interval i, so the tuple itself is the
// inverse map. The convention is fixed by requiring sigma(4321) = j+3 mod 5
// and sigma(3142) = (2,3,4,0,1).
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidPermutation unless the row is a bijection of 1..m and
  // irreducible.
  explicit Permutation(std::vector<int> bottom_row);

  // "4321", "(3142)" or "[4,3,2,1]".
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(row_.size()); }
  const std::vector<int>& bottom_row() const { return row_; }

  // Interval occupying bottom position p (1-based).
  int interval_at(int position) const { return row_[position - 1]; }
  // Bottom position of interval i (1-based).
  int position_of(int interval) const { return pos_[interval - 1]; }

  std::string to_string() const;

  friend auto operator<=>(const Permutation& x, const Permutation& y) { return x.row_ <=> y.row_; }
  friend bool operator==(const Permutation& x, const Permutation& y) { return x.row_ == y.row_; }

 private:
  std::vector<int> row_;
  std::vector<int> pos_;
};

bool is_irreducible(const std::vector<int>& bottom_row);

// sigma on {0..m}.
struct GluingMap {
  std::vector<int> values;

  int operator()(int j) const { return values[j]; }
  int inverse(int v) const;
  int size() const { return static_cast<int>(values.size()); }
};

GluingMap compute_sigma(const Permutation& pi);

// First is the top move (the bottom row's last letter loses), second the
// bottom move, both renormalized so the top row is the identity.
std::pair<Permutation, Permutation> rauzy_neighbors(const Permutation& pi);

enum class Traversal { BreadthFirst, DepthFirst };

std::set<Permutation> rauzy_class(const Permutation& pi, Traversal order = Traversal::BreadthFirst);

// The seven permutations whose polytopes make up the section for H(2).
const std::vector<Permutation>& h2_class();

struct StratumSignature {
  std::vector<int> alpha;
  int genus = 0;
  int intervals = 0;

  static StratumSignature from_alpha(std::vector<int> alpha);
  bool consistent() const;
};

}  // namespace hsec
