#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lmc/errors.hpp"

namespace lmc {

inline constexpr int kMaxDim = 32;

/// One matrix row; bit j holds the entry in column j (0-indexed).
using Row = std::uint32_t;

/// Square matrix over GF(2) with n <= 32, one machine word per row.
///
/// Indices passed to `at`, `row` and `set` are 0-based. Qubit labels that
/// leave the library (gates, files, CLI output) are 1-based.
class BinMatrix {
 public:
  BinMatrix() = default;

  static BinMatrix identity(int n);
  static BinMatrix zero(int n);

  /// Builds from row words. With `validate` set, a singular input throws
  /// SingularMatrixError.
  static BinMatrix from_rows(int n, std::span<const Row> rows, bool validate = true);

  /// Builds from strings of '0'/'1', one per row, column 1 first.
  /// Never validates invertibility (test fixtures use singular matrices too).
  static BinMatrix from_strings(std::initializer_list<std::string_view> rows);

  int dim() const { return n_; }
  Row row(int i) const { return rows_[i]; }
  std::span<const Row> rows() const { return {rows_.data(), static_cast<std::size_t>(n_)}; }
  bool at(int i, int j) const { return (rows_[i] >> j) & 1u; }

  void set(int i, int j, bool value);
  void set_row(int i, Row value) { rows_[i] = value & full_row_mask(); }
  void xor_row(int target, int source) { rows_[target] ^= rows_[source]; }

  Row full_row_mask() const { return n_ == 32 ? ~Row{0} : (Row{1} << n_) - 1; }
  bool is_zero() const;
  bool is_identity() const;
  bool is_invertible() const;

  /// Rows joined by '\n', each written column 1 first.
  std::string to_string() const;

  friend bool operator==(const BinMatrix& a, const BinMatrix& b);

 private:
  explicit BinMatrix(int n);

  int n_ = 0;
  std::array<Row, kMaxDim> rows_{};
};

/// CNOT(control, target): adds row `control` to row `target`.
/// Both labels are 1-based qubit labels.
struct CnotGate {
  int control = 0;
  int target = 0;

  friend bool operator==(const CnotGate&, const CnotGate&) = default;
  friend auto operator<=>(const CnotGate&, const CnotGate&) = default;
};

/// Throws GateError unless both labels are in [1, n] and distinct.
void validate_gate(const CnotGate& g, int n);

/// Ordered gate list applied left to right to the identity.
struct Synthesis {
  int n = 0;
  std::vector<CnotGate> gates;

  std::size_t size() const { return gates.size(); }
  /// Throws GateError on the first invalid gate.
  void validate() const;
  BinMatrix replay() const;

  friend bool operator==(const Synthesis&, const Synthesis&) = default;
};

BinMatrix apply_cnot(const BinMatrix& m, const CnotGate& g);
/// In-place variant; the gate is assumed valid for m.
inline void apply_cnot_inplace(BinMatrix& m, const CnotGate& g) {
  m.xor_row(g.target - 1, g.control - 1);
}

BinMatrix multiply(const BinMatrix& a, const BinMatrix& b);
BinMatrix transpose(const BinMatrix& m);
/// Gauss-Jordan inverse. Throws SingularMatrixError.
BinMatrix inverse(const BinMatrix& m);
/// Rank over GF(2).
int rank(const BinMatrix& m);

BinMatrix elementwise_xor(const BinMatrix& a, const BinMatrix& b);
BinMatrix elementwise_and(const BinMatrix& a, const BinMatrix& b);
inline BinMatrix operator^(const BinMatrix& a, const BinMatrix& b) { return elementwise_xor(a, b); }
inline BinMatrix operator&(const BinMatrix& a, const BinMatrix& b) { return elementwise_and(a, b); }

int diag_zero_count(const BinMatrix& m);

/// Dense key: row i occupies bits [n*i, n*i + n). Requires n <= 8.
std::uint64_t encode(const BinMatrix& m);
BinMatrix decode(std::uint64_t key, int n);

}  // namespace lmc
