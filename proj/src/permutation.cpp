#include "lmc/permutation.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace lmc {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= size() || seen[v]) throw PreconditionError("image is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i;
  return Permutation(std::move(image));
}

Permutation Permutation::transposition(int n, int i, int j) {
  Permutation p = identity(n);
  std::swap(p.image_[i], p.image_[j]);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i;
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      const int to = cycle[(k + 1) % cycle.size()];
      if (from < 1 || from > n) {
        throw PreconditionError("cycle label " + std::to_string(from) + " outside [1, n]");
      }
      if (used[from - 1]) {
        throw PreconditionError("label " + std::to_string(from) + " appears twice");
      }
      used[from - 1] = true;
      image[from - 1] = to - 1;
    }
  }
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw DimensionError("permutation sizes differ");
  std::vector<int> image(a.size());
  for (int i = 0; i < a.size(); ++i) image[i] = a.image_[b.image_[i]];
  return Permutation(std::move(image));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(image_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int x = start; !seen[x]; x = image_[x]) {
      seen[x] = true;
      cycle.push_back(x + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

int Permutation::cycle_count() const { return static_cast<int>(cycles().size()); }

std::string Permutation::one_line() const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (size() > 9 && i) s.push_back(' ');
    s += std::to_string(image_[i] + 1);
  }
  return s;
}

std::string Permutation::cycle_string() const {
  std::string s;
  for (const auto& cycle : cycles()) {
    if (cycle.size() < 2) continue;
    s.push_back('(');
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) s.push_back(' ');
      s += std::to_string(cycle[k]);
    }
    s.push_back(')');
  }
  return s.empty() ? "()" : s;
}

BinMatrix permutation_matrix(const Permutation& sigma) {
  const int n = sigma.size();
  std::vector<Row> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = Row{1} << sigma(i);
  return BinMatrix::from_rows(n, rows, false);
}

bool is_permutation_matrix(const BinMatrix& m) {
  Row cols = 0;
  for (int i = 0; i < m.dim(); ++i) {
    if (std::popcount(m.row(i)) != 1) return false;
    cols |= m.row(i);
  }
  return cols == m.full_row_mask();
}

Permutation permutation_of(const BinMatrix& m) {
  if (!is_permutation_matrix(m)) throw PreconditionError("not a permutation matrix");
  std::vector<int> image(m.dim());
  for (int i = 0; i < m.dim(); ++i) image[i] = std::countr_zero(m.row(i));
  return Permutation(std::move(image));
}

Permutation parse_cycle_notation(const std::string& text, int n) {
  std::vector<std::vector<int>> cycles;
  std::vector<int>* current = nullptr;
  int max_label = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '(') {
      if (current) throw ParseError(0, "nested '(' in cycle notation");
      cycles.emplace_back();
      current = &cycles.back();
      ++i;
    } else if (c == ')') {
      if (!current) throw ParseError(0, "unmatched ')' in cycle notation");
      current = nullptr;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!current) throw ParseError(0, "label outside parentheses in cycle notation");
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      const int label = std::stoi(text.substr(i, j - i));
      if (label < 1) throw ParseError(0, "cycle labels are 1-based");
      current->push_back(label);
      max_label = std::max(max_label, label);
      i = j;
    } else if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
    } else {
      throw ParseError(0, std::string("unexpected character '") + c + "' in cycle notation");
    }
  }
  if (current) throw ParseError(0, "unterminated cycle in cycle notation");
  if (n == 0) n = std::max(max_label, 1);
  if (max_label > n) throw ParseError(0, "cycle label exceeds n");
  try {
    return Permutation::from_cycles(n, cycles);
  } catch (const PreconditionError& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace lmc
