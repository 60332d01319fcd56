#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lmc/bin_matrix.hpp"
#include "lmc/permutation.hpp"
#include "lmc/rivers.hpp"

namespace lmc {

/// How the possibly fractional c_perfect enters the middle-gate bound.
enum class CperfectMode {
  /// m = n - floor(c_perfect).
  Floor,
  /// m kept as the rational n - c_perfect; the integer bound is the ceiling
  /// of the rational total.
  Rational,
};

/// Which of c_perfect(M), c_perfect(M^T) the middle-gate bound uses.
enum class CperfectCombine {
  /// min of the two: the strongest sound choice.
  Min,
  /// max of the two. Reproduces the reference n = 5 census table.
  Max,
  /// c_perfect(M) alone. Reproduces the reference n = 4 census table.
  Matrix,
};

struct BoundOptions {
  CperfectMode mode = CperfectMode::Floor;
  CperfectCombine combine = CperfectCombine::Min;
  /// Cap the component count by n - rank(mprime) as well.
  bool rank_cap = true;
  /// Also take the maximum over the bounds of M^T, M^{-1} and M^{-T}.
  bool strengthen = false;
};

struct LmcReport {
  int n = 0;
  int ell = 0;    // n - v(M)
  int c = 0;      // e(M) - v(M)
  int m = 0;      // integer middle-gate bound
  int z = 0;      // zeros on the diagonal of M
  int z_inv = 0;  // zeros on the diagonal of M^{-1}
  int bound = 0;
  int depth_lb = 0;
  CperfectReport cperfect_m;
  CperfectReport cperfect_mt;
  /// 3 * (ell + max{m + c, z, z_inv}) with m rational.
  int bound_thirds = 0;
  /// 3 * (component cap) actually used, after combining and capping.
  int cperfect_thirds = 0;
  CperfectMode mode = CperfectMode::Floor;
  CperfectCombine combine = CperfectCombine::Min;
  bool rank_cap = true;
  bool strengthened = false;

  /// n - c_perfect as used, "a/3" or an integer.
  std::string m_rational() const;
};

/// s(M) >= ell + max{m + c, #0(M), #0(M^{-1})}. Throws SingularMatrixError.
LmcReport lmc_bound(const BinMatrix& m, const BoundOptions& options = {});

/// Just the integer bound; the census hot path.
int lmc_bound_value(const BinMatrix& m, const BoundOptions& options = {});

std::string_view combine_name(CperfectCombine c);
/// "min", "max" or "matrix". Throws ParseError.
CperfectCombine parse_combine(std::string_view text);

/// M, M^{-1}, M^T, M^{-T}, then P^{-1} M P for each supplied permutation.
std::vector<BinMatrix> equivalent_forms(const BinMatrix& m,
                                        const std::vector<Permutation>& conjugators = {});

/// ceil(size_lb / floor(n / 2)). Throws PreconditionError when n < 2.
int depth_lower_bound(int size_lb, int n);

}  // namespace lmc
