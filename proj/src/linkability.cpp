#include "lmc/linkability.hpp"

#include <bit>
#include <functional>
#include <queue>

#include "lmc/connectivity.hpp"

namespace lmc {

int InfluenceGraph::arc_count() const {
  int count = 0;
  for (int i = 0; i < n; ++i) count += std::popcount(out[i]);
  return count;
}

std::vector<std::array<int, 2>> InfluenceGraph::arcs() const {
  std::vector<std::array<int, 2>> result;
  for (int i = 0; i < n; ++i) {
    for (Row bits = out[i]; bits; bits &= bits - 1) {
      result.push_back({i + 1, std::countr_zero(bits) + 1});
    }
  }
  return result;
}

std::array<Row, kMaxDim> InfluenceGraph::reachability() const {
  std::array<Row, kMaxDim> reach = out;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if ((reach[i] >> k) & 1u) reach[i] |= reach[k];
    }
  }
  return reach;
}

bool operator==(const InfluenceGraph& a, const InfluenceGraph& b) {
  return a.n == b.n && a.out == b.out;
}

InfluenceGraph influence_graph(const BinMatrix& m) {
  InfluenceGraph g;
  g.n = m.dim();
  for (int j = 0; j < g.n; ++j) {
    // Row j lists every i with M_{j,i} = 1, i.e. every arc i -> j.
    for (Row bits = m.row(j) & ~(Row{1} << j); bits; bits &= bits - 1) {
      g.out[std::countr_zero(bits)] |= Row{1} << j;
    }
  }
  return g;
}

InfluenceGraph make_graph(int n, const std::vector<std::array<int, 2>>& arcs) {
  if (n < 1 || n > kMaxDim) throw DimensionError("graph size outside [1, 32]");
  InfluenceGraph g;
  g.n = n;
  for (const auto& [from, to] : arcs) {
    if (from < 1 || from > n || to < 1 || to > n || from == to) {
      throw PreconditionError("arc (" + std::to_string(from) + "," + std::to_string(to) +
                              ") is invalid");
    }
    g.out[from - 1] |= Row{1} << (to - 1);
  }
  return g;
}

bool has_cycle(const InfluenceGraph& g) {
  const auto reach = g.reachability();
  for (int i = 0; i < g.n; ++i) {
    if ((reach[i] >> i) & 1u) return true;
  }
  return false;
}

InfluenceGraph transitive_reduction(const InfluenceGraph& g) {
  const auto reach = g.reachability();
  for (int i = 0; i < g.n; ++i) {
    if ((reach[i] >> i) & 1u) throw PreconditionError("transitive reduction needs an acyclic graph");
  }
  InfluenceGraph reduced;
  reduced.n = g.n;
  for (int u = 0; u < g.n; ++u) {
    Row implied = 0;
    for (Row bits = g.out[u]; bits; bits &= bits - 1) implied |= reach[std::countr_zero(bits)];
    reduced.out[u] = g.out[u] & ~implied;
  }
  return reduced;
}

std::string reason_name(NotLinkableReason r) {
  switch (r) {
    case NotLinkableReason::HasCycle: return "HasCycle";
    case NotLinkableReason::ReductionNotSpanningTree: return "ReductionNotSpanningTree";
    case NotLinkableReason::OrderConstraintsInconsistent: return "OrderConstraintsInconsistent";
    case NotLinkableReason::ReplayMismatch: return "ReplayMismatch";
  }
  return "?";
}

LinkabilityResult decide_linkable(const BinMatrix& m) {
  if (!m.is_invertible()) throw SingularMatrixError();
  if (vertex_component_count(m) != 1) {
    throw PreconditionError("linkability is defined for matrices with v(M) = 1");
  }
  const int n = m.dim();
  auto refuse = [](NotLinkableReason r) { return LinkabilityResult{false, std::nullopt, r}; };

  const InfluenceGraph graph = influence_graph(m);
  if (has_cycle(graph)) return refuse(NotLinkableReason::HasCycle);

  const InfluenceGraph reduced = transitive_reduction(graph);
  const auto arcs = reduced.arcs();
  if (static_cast<int>(arcs.size()) != n - 1) {
    return refuse(NotLinkableReason::ReductionNotSpanningTree);
  }
  UnionFind uf(n);
  for (const auto& [u, v] : arcs) uf.unite(u - 1, v - 1);
  if (uf.set_count() != 1) return refuse(NotLinkableReason::ReductionNotSpanningTree);

  // after[a] lists the arcs that must follow arc a.
  const int count = static_cast<int>(arcs.size());
  std::vector<std::vector<int>> after(count);
  std::vector<int> indegree(count, 0);
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      // Arc a = (u, v) feeding arc b = (v, w).
      if (arcs[a][1] != arcs[b][0]) continue;
      const int u = arcs[a][0] - 1;
      const int w = arcs[b][1] - 1;
      if (m.at(w, u)) {
        after[a].push_back(b);
        ++indegree[b];
      } else {
        after[b].push_back(a);
        ++indegree[a];
      }
    }
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int a = 0; a < count; ++a) {
    if (indegree[a] == 0) ready.push(a);
  }
  Synthesis witness{n, {}};
  while (!ready.empty()) {
    const int a = ready.top();
    ready.pop();
    witness.gates.push_back({arcs[a][0], arcs[a][1]});
    for (int b : after[a]) {
      if (--indegree[b] == 0) ready.push(b);
    }
  }
  if (static_cast<int>(witness.gates.size()) != count) {
    return refuse(NotLinkableReason::OrderConstraintsInconsistent);
  }
  if (witness.replay() != m) return refuse(NotLinkableReason::ReplayMismatch);
  return LinkabilityResult{true, std::move(witness), std::nullopt};
}

}  // namespace lmc
