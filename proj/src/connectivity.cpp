#include "lmc/connectivity.hpp"

#include <bit>
#include <numeric>

namespace lmc {

UnionFind::UnionFind(int count) : parent_(count), size_(count, 1), sets_(count) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
  int root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    const int next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool UnionFind::unite(int x, int y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (size_[x] < size_[y]) std::swap(x, y);
  parent_[y] = x;
  size_[x] += size_[y];
  --sets_;
  return true;
}

ComponentPartition ComponentPartition::from(UnionFind& uf) {
  const int count = uf.element_count();
  ComponentPartition p;
  p.representative.assign(count, -1);
  std::vector<int> min_of_root(count, -1);
  for (int x = 0; x < count; ++x) {
    const int root = uf.find(x);
    if (min_of_root[root] < 0) min_of_root[root] = x;
    p.representative[x] = min_of_root[root];
  }
  p.component_count = uf.set_count();
  return p;
}

std::vector<std::vector<int>> ComponentPartition::groups() const {
  std::vector<std::vector<int>> out;
  std::vector<int> slot(representative.size(), -1);
  for (int x = 0; x < element_count(); ++x) {
    const int rep = representative[x];
    if (slot[rep] < 0) {
      slot[rep] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[rep]].push_back(x);
  }
  return out;
}

ComponentPartition vertex_components(const BinMatrix& m) {
  const int n = m.dim();
  UnionFind uf(n);
  for (int i = 0; i < n; ++i) {
    Row bits = m.row(i) & ~(Row{1} << i);
    while (bits) {
      uf.unite(i, std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return ComponentPartition::from(uf);
}

ComponentPartition edge_components(const BinMatrix& m) {
  const int n = m.dim();
  UnionFind uf(2 * n);
  for (int i = 0; i < n; ++i) {
    Row bits = m.row(i);
    while (bits) {
      uf.unite(i, n + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return ComponentPartition::from(uf);
}

int vertex_component_count(const BinMatrix& m) {
  const int n = m.dim();
  // Symmetric adjacency: i ~ j when M_ij or M_ji is set.
  std::array<Row, kMaxDim> adj{};
  for (int i = 0; i < n; ++i) {
    Row bits = m.row(i);
    adj[i] |= bits;
    while (bits) {
      adj[std::countr_zero(bits)] |= Row{1} << i;
      bits &= bits - 1;
    }
  }
  Row unvisited = m.full_row_mask();
  int components = 0;
  while (unvisited) {
    Row reached = unvisited & (~unvisited + 1);
    Row frontier = reached;
    while (frontier) {
      Row next = 0;
      while (frontier) {
        next |= adj[std::countr_zero(frontier)];
        frontier &= frontier - 1;
      }
      frontier = next & ~reached;
      reached |= next;
    }
    unvisited &= ~reached;
    ++components;
  }
  return components;
}

int edge_component_count(const BinMatrix& m) {
  const int n = m.dim();
  Row rows_left = m.full_row_mask();
  Row columns_seen = 0;
  int components = 0;
  while (rows_left) {
    const int start = std::countr_zero(rows_left);
    Row group = Row{1} << start;
    Row cols = m.row(start);
    bool grew = true;
    while (grew) {
      grew = false;
      for (Row bits = rows_left & ~group; bits; bits &= bits - 1) {
        const int r = std::countr_zero(bits);
        if (m.row(r) & cols) {
          group |= Row{1} << r;
          cols |= m.row(r);
          grew = true;
        }
      }
    }
    rows_left &= ~group;
    columns_seen |= cols;
    ++components;
  }
  return components + (n - std::popcount(columns_seen));
}

std::string format_groups(const ComponentPartition& p, const std::vector<std::string>& labels) {
  std::string s;
  bool first_group = true;
  for (const auto& group : p.groups()) {
    if (!first_group) s.push_back('|');
    first_group = false;
    for (std::size_t k = 0; k < group.size(); ++k) {
      if (k) s.push_back(',');
      s += labels.empty() ? std::to_string(group[k] + 1) : labels[group[k]];
    }
  }
  return s;
}

}  // namespace lmc
