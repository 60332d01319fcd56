#pragma once

#include <string>
#include <vector>

#include "lmc/bin_matrix.hpp"

namespace lmc {

/// Disjoint-set forest with path compression and union by size.
class UnionFind {
 public:
  explicit UnionFind(int count);

  int find(int x);
  /// Returns true when x and y were in different sets.
  bool unite(int x, int y);
  int set_count() const { return sets_; }
  int element_count() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int sets_;
};

/// Partition of {0, ..., element_count - 1}. Every element's representative
/// is the smallest member of its part.
struct ComponentPartition {
  std::vector<int> representative;
  int component_count = 0;

  int element_count() const { return static_cast<int>(representative.size()); }
  bool same(int a, int b) const { return representative[a] == representative[b]; }
  /// Parts in order of their smallest member; members ascending.
  std::vector<std::vector<int>> groups() const;

  static ComponentPartition from(UnionFind& uf);
};

/// Components of G_v(M) over the qubits (element i is qubit i + 1).
ComponentPartition vertex_components(const BinMatrix& m);

/// Components of G_e(M); element i < n is row R_{i+1}, element n + j is
/// column C_{j+1}.
ComponentPartition edge_components(const BinMatrix& m);

/// v(M) and e(M) without building the partitions.
int vertex_component_count(const BinMatrix& m);
int edge_component_count(const BinMatrix& m);

/// "1,3|2,4,5" style rendering with 1-based labels; `labels` overrides them.
std::string format_groups(const ComponentPartition& p, const std::vector<std::string>& labels = {});

}  // namespace lmc
