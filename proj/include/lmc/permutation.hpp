#pragma once

#include <string>
#include <vector>

#include "lmc/bin_matrix.hpp"

namespace lmc {

/// Bijection on {0, ..., n-1}, stored as its image array.
/// Text forms (one-line and cycle notation) use 1-based labels.
class Permutation {
 public:
  Permutation() = default;
  /// Throws PreconditionError unless `image` is a bijection.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  /// Swap of i and j (0-based).
  static Permutation transposition(int n, int i, int j);
  /// 1-based cycles, e.g. {{1, 3, 5}, {2, 4}}. Unlisted points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;
  /// (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  /// Disjoint cycles in 1-based labels, each starting at its smallest
  /// element, ordered by that element. Fixed points are included.
  std::vector<std::vector<int>> cycles() const;
  int cycle_count() const;

  /// One-line notation such as "15342" (labels separated by spaces when n > 9).
  std::string one_line() const;
  /// Cycle notation such as "(1 3 5)(2 4)"; fixed points omitted, "()" for e.
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// P_sigma with (P_sigma)_{i, sigma(i)} = 1.
BinMatrix permutation_matrix(const Permutation& sigma);

/// Recovers sigma from a permutation matrix; throws PreconditionError otherwise.
Permutation permutation_of(const BinMatrix& m);
bool is_permutation_matrix(const BinMatrix& m);

/// Parses "(1 3 5)(2 4)" (commas also accepted as separators). When n is 0,
/// the largest label mentioned is used. Throws ParseError.
Permutation parse_cycle_notation(const std::string& text, int n = 0);

}  // namespace lmc
