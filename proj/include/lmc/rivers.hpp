#pragma once

#include <span>
#include <string>
#include <vector>

#include "lmc/bin_matrix.hpp"
#include "lmc/permutation.hpp"

namespace lmc {

/// Rivers of a matrix: permutations sigma with M_{i, sigma(i)} = 1 for all i.
struct RiverSet {
  int n = 0;
  std::vector<Permutation> rivers;  // lexicographic by image

  bool contains(const Permutation& sigma) const;
  std::size_t size() const { return rivers.size(); }
  friend bool operator==(const RiverSet&, const RiverSet&) = default;
};

inline constexpr int kMaxRiverOracleDim = 8;

/// Exhaustive enumeration; a test oracle, not used by the bound. n <= 8.
RiverSet enumerate_rivers(const BinMatrix& m);

/// I + sum over rivers of P_sigma, computed from the enumeration (n <= 8).
BinMatrix river_parity_matrix(const BinMatrix& m);

/// M AND M^{-T} XOR I. Throws SingularMatrixError.
BinMatrix mprime(const BinMatrix& m);

struct EmpDup {
  int emp = 0;
  int dup = 0;
  friend bool operator==(const EmpDup&, const EmpDup&) = default;
};

/// emp: all-zero rows. dup: sum over distinct nonzero row values of
/// floor(multiplicity / 2).
EmpDup emp_dup(const BinMatrix& m);

struct CperfectReport {
  BinMatrix mprime;
  int emp = 0;
  int dup = 0;
  /// c_perfect = numerator / 3 with numerator = n + 2 emp + dup.
  int numerator = 0;
  int cperfect = 0;  // floor(numerator / 3)
  int middle_lower_bound = 0;  // n - cperfect
  /// n - rank(mprime). Middle-gate components have linearly independent
  /// indicator vectors in the left null space, so this also caps their number.
  int nullity = 0;

  double rational() const { return numerator / 3.0; }
  /// "7/3" or "2" when integral.
  std::string rational_string() const;
};

/// Throws SingularMatrixError.
CperfectReport cperfect(const BinMatrix& m);
/// Same report from an already computed mprime.
CperfectReport cperfect_from_mprime(const BinMatrix& mp);

/// True iff mprime(M) is all-zero and M is not the identity.
bool glitch_detect(const BinMatrix& m);

/// GF(2) sum of mprime(M)'s rows listed in `component` (0-based) is zero.
bool check_component_nullspace(const BinMatrix& m, std::span<const int> component);

}  // namespace lmc
