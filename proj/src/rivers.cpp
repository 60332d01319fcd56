#include "lmc/rivers.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace lmc {

namespace {

void collect_rivers(const BinMatrix& m, int row, Row free_cols, std::vector<int>& image,
                    std::vector<Permutation>& out) {
  if (row == m.dim()) {
    out.emplace_back(image);
    return;
  }
  for (Row options = m.row(row) & free_cols; options; options &= options - 1) {
    const int col = std::countr_zero(options);
    image[row] = col;
    collect_rivers(m, row + 1, free_cols & ~(Row{1} << col), image, out);
  }
}

}  // namespace

bool RiverSet::contains(const Permutation& sigma) const {
  return std::binary_search(rivers.begin(), rivers.end(), sigma);
}

RiverSet enumerate_rivers(const BinMatrix& m) {
  if (m.dim() > kMaxRiverOracleDim) {
    throw DimensionError("river enumeration is limited to n <= 8");
  }
  RiverSet set{m.dim(), {}};
  std::vector<int> image(m.dim());
  // Rows in order, columns ascending: output is already lexicographic.
  collect_rivers(m, 0, m.full_row_mask(), image, set.rivers);
  return set;
}

BinMatrix river_parity_matrix(const BinMatrix& m) {
  BinMatrix acc = BinMatrix::identity(m.dim());
  for (const Permutation& sigma : enumerate_rivers(m).rivers) {
    for (int i = 0; i < m.dim(); ++i) acc.set(i, sigma(i), !acc.at(i, sigma(i)));
  }
  return acc;
}

BinMatrix mprime(const BinMatrix& m) {
  return (m & transpose(inverse(m))) ^ BinMatrix::identity(m.dim());
}

EmpDup emp_dup(const BinMatrix& m) {
  std::array<Row, kMaxDim> nonzero{};
  std::size_t count = 0;
  EmpDup out;
  for (Row r : m.rows()) {
    if (r == 0) {
      ++out.emp;
    } else {
      nonzero[count++] = r;
    }
  }
  std::sort(nonzero.begin(), nonzero.begin() + count);
  for (std::size_t i = 0; i < count;) {
    std::size_t j = i;
    while (j < count && nonzero[j] == nonzero[i]) ++j;
    out.dup += static_cast<int>((j - i) / 2);
    i = j;
  }
  return out;
}

std::string CperfectReport::rational_string() const {
  if (numerator % 3 == 0) return std::to_string(numerator / 3);
  return std::to_string(numerator) + "/3";
}

CperfectReport cperfect_from_mprime(const BinMatrix& mp) {
  CperfectReport r;
  r.mprime = mp;
  const EmpDup ed = emp_dup(mp);
  r.emp = ed.emp;
  r.dup = ed.dup;
  r.numerator = mp.dim() + 2 * ed.emp + ed.dup;
  r.cperfect = r.numerator / 3;
  r.middle_lower_bound = mp.dim() - r.cperfect;
  r.nullity = mp.dim() - rank(mp);
  return r;
}

CperfectReport cperfect(const BinMatrix& m) { return cperfect_from_mprime(mprime(m)); }

bool glitch_detect(const BinMatrix& m) { return !m.is_identity() && mprime(m).is_zero(); }

bool check_component_nullspace(const BinMatrix& m, std::span<const int> component) {
  const BinMatrix mp = mprime(m);
  Row sum = 0;
  for (int i : component) sum ^= mp.row(i);
  return sum == 0;
}

}  // namespace lmc
