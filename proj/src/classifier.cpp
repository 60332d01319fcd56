#include "lmc/classifier.hpp"

#include <algorithm>
#include <bit>

#include "lmc/connectivity.hpp"

namespace lmc {

namespace {

bool augment(std::span<const Row> allowed, int row, Row& visited, std::array<int, kMaxDim>& owner) {
  for (Row options = allowed[row] & ~visited; options; options &= options - 1) {
    const int col = std::countr_zero(options);
    visited |= Row{1} << col;
    if (owner[col] < 0 || augment(allowed, owner[col], visited, owner)) {
      owner[col] = row;
      return true;
    }
  }
  return false;
}

}  // namespace

char class_letter(GateClass c) {
  switch (c) {
    case GateClass::Link: return 'L';
    case GateClass::Middle: return 'M';
    case GateClass::Cut: return 'C';
    case GateClass::Neither: return 'N';
  }
  return '?';
}

std::string class_name(GateClass c) {
  switch (c) {
    case GateClass::Link: return "link";
    case GateClass::Middle: return "middle";
    case GateClass::Cut: return "cut";
    case GateClass::Neither: return "neither";
  }
  return "?";
}

bool has_perfect_matching(std::span<const Row> allowed) {
  std::array<int, kMaxDim> owner;
  owner.fill(-1);
  for (int row = 0; row < static_cast<int>(allowed.size()); ++row) {
    Row visited = 0;
    if (!augment(allowed, row, visited, owner)) return false;
  }
  return true;
}

bool is_middle_fast(const BinMatrix& m, const CnotGate& g) {
  validate_gate(g, m.dim());
  std::array<Row, kMaxDim> allowed{};
  for (int i = 0; i < m.dim(); ++i) allowed[i] = m.row(i);
  allowed[g.target - 1] = m.row(g.control - 1);
  return has_perfect_matching(std::span<const Row>(allowed.data(), m.dim()));
}

GateClass classify_gate(const BinMatrix& m, const CnotGate& g) {
  const BinMatrix next = apply_cnot(m, g);
  if (vertex_component_count(next) < vertex_component_count(m)) return GateClass::Link;
  if (edge_component_count(next) > edge_component_count(m)) return GateClass::Cut;
  if (is_middle_fast(m, g)) return GateClass::Middle;
  return GateClass::Neither;
}

std::uint64_t state_digest(const BinMatrix& m) {
  // FNV-1a over the row words.
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint32_t w) {
    for (int b = 0; b < 4; ++b) {
      h ^= (w >> (8 * b)) & 0xffu;
      h *= 0x100000001b3ull;
    }
  };
  mix(static_cast<std::uint32_t>(m.dim()));
  for (Row r : m.rows()) mix(r);
  return h;
}

std::string ClassifiedSynthesis::pattern() const {
  std::string s;
  s.reserve(classes.size());
  for (GateClass c : classes) s.push_back(class_letter(c));
  return s;
}

int ClassifiedSynthesis::count(GateClass c) const {
  switch (c) {
    case GateClass::Link: return links;
    case GateClass::Middle: return middles;
    case GateClass::Cut: return cuts;
    case GateClass::Neither: return neithers;
  }
  return 0;
}

ClassifiedSynthesis classify_synthesis(const Synthesis& s) {
  s.validate();
  ClassifiedSynthesis out;
  out.n = s.n;
  out.gates = s.gates;
  BinMatrix state = BinMatrix::identity(s.n);
  for (const CnotGate& g : s.gates) {
    const GateClass c = classify_gate(state, g);
    out.classes.push_back(c);
    switch (c) {
      case GateClass::Link: ++out.links; break;
      case GateClass::Middle: ++out.middles; break;
      case GateClass::Cut: ++out.cuts; break;
      case GateClass::Neither: ++out.neithers; break;
    }
    apply_cnot_inplace(state, g);
    out.state_digests.push_back(state_digest(state));
  }
  return out;
}

GateGraph gate_graph(const ClassifiedSynthesis& s, GateClass c) {
  GateGraph graph{s.n, {}};
  for (std::size_t k = 0; k < s.gates.size(); ++k) {
    if (s.classes[k] != c) continue;
    const int a = std::min(s.gates[k].control, s.gates[k].target);
    const int b = std::max(s.gates[k].control, s.gates[k].target);
    graph.edges.push_back({a, b});
  }
  std::sort(graph.edges.begin(), graph.edges.end());
  graph.edges.erase(std::unique(graph.edges.begin(), graph.edges.end()), graph.edges.end());
  return graph;
}

bool GateGraph::is_spanning_tree() const {
  if (static_cast<int>(edges.size()) != n - 1) return false;
  UnionFind uf(n);
  for (const auto& e : edges) {
    if (!uf.unite(e[0] - 1, e[1] - 1)) return false;
  }
  return uf.set_count() == 1;
}

bool GateGraph::is_star() const {
  if (!is_spanning_tree()) return false;
  if (n <= 2) return true;
  std::vector<int> degree(n, 0);
  for (const auto& e : edges) {
    ++degree[e[0] - 1];
    ++degree[e[1] - 1];
  }
  return std::count(degree.begin(), degree.end(), n - 1) == 1 &&
         std::count(degree.begin(), degree.end(), 1) == n - 1;
}

bool GateGraph::is_path() const {
  if (!is_spanning_tree()) return false;
  std::vector<int> degree(n, 0);
  for (const auto& e : edges) {
    ++degree[e[0] - 1];
    ++degree[e[1] - 1];
  }
  return std::all_of(degree.begin(), degree.end(), [](int d) { return d <= 2; });
}

std::string GateGraph::shape() const {
  const bool star = is_star();
  const bool path = is_path();
  if (star && path) return "star+path";
  if (star) return "star";
  if (path) return "path";
  if (is_spanning_tree()) return "tree";
  return "other";
}

}  // namespace lmc
