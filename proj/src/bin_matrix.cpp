#include "lmc/bin_matrix.hpp"

#include <bit>
#include <utility>

namespace lmc {

namespace {

void check_dim(int n) {
  if (n < 1 || n > kMaxDim) {
    throw DimensionError("dimension " + std::to_string(n) + " outside [1, 32]");
  }
}

void check_same_dim(const BinMatrix& a, const BinMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()));
  }
}

}  // namespace

BinMatrix::BinMatrix(int n) : n_(n) {}

BinMatrix BinMatrix::identity(int n) {
  check_dim(n);
  BinMatrix m(n);
  for (int i = 0; i < n; ++i) m.rows_[i] = Row{1} << i;
  return m;
}

BinMatrix BinMatrix::zero(int n) {
  check_dim(n);
  return BinMatrix(n);
}

BinMatrix BinMatrix::from_rows(int n, std::span<const Row> rows, bool validate) {
  check_dim(n);
  if (rows.size() != static_cast<std::size_t>(n)) {
    throw DimensionError("expected " + std::to_string(n) + " rows, got " +
                         std::to_string(rows.size()));
  }
  BinMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (rows[i] & ~m.full_row_mask()) {
      throw DimensionError("row " + std::to_string(i + 1) + " has bits beyond column n");
    }
    m.rows_[i] = rows[i];
  }
  if (validate && !m.is_invertible()) throw SingularMatrixError();
  return m;
}

BinMatrix BinMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  const int n = static_cast<int>(rows.size());
  check_dim(n);
  BinMatrix m(n);
  int i = 0;
  for (std::string_view r : rows) {
    if (r.size() != static_cast<std::size_t>(n)) {
      throw DimensionError("row " + std::to_string(i + 1) + " has wrong length");
    }
    for (int j = 0; j < n; ++j) {
      if (r[j] == '1') {
        m.rows_[i] |= Row{1} << j;
      } else if (r[j] != '0') {
        throw DimensionError("row " + std::to_string(i + 1) + " has non-binary character");
      }
    }
    ++i;
  }
  return m;
}

void BinMatrix::set(int i, int j, bool value) {
  if (value) {
    rows_[i] |= Row{1} << j;
  } else {
    rows_[i] &= ~(Row{1} << j);
  }
}

bool BinMatrix::is_zero() const {
  for (int i = 0; i < n_; ++i) {
    if (rows_[i]) return false;
  }
  return true;
}

bool BinMatrix::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (rows_[i] != (Row{1} << i)) return false;
  }
  return true;
}

bool BinMatrix::is_invertible() const { return n_ > 0 && rank(*this) == n_; }

std::string BinMatrix::to_string() const {
  std::string s;
  s.reserve(static_cast<std::size_t>(n_) * (n_ + 1));
  for (int i = 0; i < n_; ++i) {
    if (i) s.push_back('\n');
    for (int j = 0; j < n_; ++j) s.push_back(at(i, j) ? '1' : '0');
  }
  return s;
}

bool operator==(const BinMatrix& a, const BinMatrix& b) {
  return a.n_ == b.n_ && a.rows_ == b.rows_;
}

void validate_gate(const CnotGate& g, int n) {
  if (g.control < 1 || g.control > n || g.target < 1 || g.target > n) {
    throw GateError("gate (" + std::to_string(g.control) + "," + std::to_string(g.target) +
                    ") has a label outside [1, " + std::to_string(n) + "]");
  }
  if (g.control == g.target) {
    throw GateError("gate control equals target (" + std::to_string(g.control) + ")");
  }
}

void Synthesis::validate() const {
  check_dim(n);
  for (const CnotGate& g : gates) validate_gate(g, n);
}

BinMatrix Synthesis::replay() const {
  validate();
  BinMatrix m = BinMatrix::identity(n);
  for (const CnotGate& g : gates) apply_cnot_inplace(m, g);
  return m;
}

BinMatrix apply_cnot(const BinMatrix& m, const CnotGate& g) {
  validate_gate(g, m.dim());
  BinMatrix out = m;
  apply_cnot_inplace(out, g);
  return out;
}

BinMatrix multiply(const BinMatrix& a, const BinMatrix& b) {
  check_same_dim(a, b);
  const int n = a.dim();
  std::array<Row, kMaxDim> rows{};
  for (int i = 0; i < n; ++i) {
    Row acc = 0;
    Row bits = a.row(i);
    while (bits) {
      const int k = std::countr_zero(bits);
      acc ^= b.row(k);
      bits &= bits - 1;
    }
    rows[i] = acc;
  }
  return BinMatrix::from_rows(n, std::span<const Row>(rows.data(), n), false);
}

BinMatrix transpose(const BinMatrix& m) {
  const int n = m.dim();
  std::array<Row, kMaxDim> rows{};
  for (int i = 0; i < n; ++i) {
    Row bits = m.row(i);
    while (bits) {
      const int j = std::countr_zero(bits);
      rows[j] |= Row{1} << i;
      bits &= bits - 1;
    }
  }
  return BinMatrix::from_rows(n, std::span<const Row>(rows.data(), n), false);
}

BinMatrix inverse(const BinMatrix& m) {
  const int n = m.dim();
  if (n == 0) throw SingularMatrixError();
  std::array<Row, kMaxDim> work{};
  std::array<Row, kMaxDim> inv{};
  for (int i = 0; i < n; ++i) {
    work[i] = m.row(i);
    inv[i] = Row{1} << i;
  }
  for (int col = 0; col < n; ++col) {
    const Row bit = Row{1} << col;
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (work[r] & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw SingularMatrixError();
    std::swap(work[col], work[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r != col && (work[r] & bit)) {
        work[r] ^= work[col];
        inv[r] ^= inv[col];
      }
    }
  }
  return BinMatrix::from_rows(n, std::span<const Row>(inv.data(), n), false);
}

int rank(const BinMatrix& m) {
  const int n = m.dim();
  std::array<Row, kMaxDim> work{};
  for (int i = 0; i < n; ++i) work[i] = m.row(i);
  int r = 0;
  for (int col = 0; col < n && r < n; ++col) {
    const Row bit = Row{1} << col;
    int pivot = -1;
    for (int i = r; i < n; ++i) {
      if (work[i] & bit) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(work[r], work[pivot]);
    for (int i = r + 1; i < n; ++i) {
      if (work[i] & bit) work[i] ^= work[r];
    }
    ++r;
  }
  return r;
}

BinMatrix elementwise_xor(const BinMatrix& a, const BinMatrix& b) {
  check_same_dim(a, b);
  BinMatrix out = a;
  for (int i = 0; i < a.dim(); ++i) out.set_row(i, a.row(i) ^ b.row(i));
  return out;
}

BinMatrix elementwise_and(const BinMatrix& a, const BinMatrix& b) {
  check_same_dim(a, b);
  BinMatrix out = a;
  for (int i = 0; i < a.dim(); ++i) out.set_row(i, a.row(i) & b.row(i));
  return out;
}

int diag_zero_count(const BinMatrix& m) {
  int count = 0;
  for (int i = 0; i < m.dim(); ++i) count += !m.at(i, i);
  return count;
}

std::uint64_t encode(const BinMatrix& m) {
  const int n = m.dim();
  if (n > 8) throw DimensionError("dense encoding needs n <= 8");
  std::uint64_t key = 0;
  for (int i = 0; i < n; ++i) key |= static_cast<std::uint64_t>(m.row(i)) << (n * i);
  return key;
}

BinMatrix decode(std::uint64_t key, int n) {
  if (n < 1 || n > 8) throw DimensionError("dense encoding needs 1 <= n <= 8");
  std::array<Row, kMaxDim> rows{};
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  for (int i = 0; i < n; ++i) rows[i] = static_cast<Row>((key >> (n * i)) & mask);
  return BinMatrix::from_rows(n, std::span<const Row>(rows.data(), n), false);
}

}  // namespace lmc
