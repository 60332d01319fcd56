#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lmc/bin_matrix.hpp"

namespace lmc {

/// Directed graph on qubits with arc i -> j iff M_{j,i} = 1 and i != j.
/// Adjacency is stored 0-based as out-neighbour bitsets.
struct InfluenceGraph {
  int n = 0;
  std::array<Row, kMaxDim> out{};

  bool has_arc(int from, int to) const { return (out[from] >> to) & 1u; }
  int arc_count() const;
  /// Arcs as 1-based (from, to) pairs, lexicographic.
  std::vector<std::array<int, 2>> arcs() const;
  /// Bit j of the result's row i is set iff j is reachable from i by a
  /// path of length >= 1.
  std::array<Row, kMaxDim> reachability() const;

  friend bool operator==(const InfluenceGraph& a, const InfluenceGraph& b);
};

InfluenceGraph influence_graph(const BinMatrix& m);

/// Builds a graph from 1-based arcs.
InfluenceGraph make_graph(int n, const std::vector<std::array<int, 2>>& arcs);

bool has_cycle(const InfluenceGraph& g);

/// Keeps arc (u, v) iff no path u -> v of length >= 2 exists.
/// Throws PreconditionError on cyclic input.
InfluenceGraph transitive_reduction(const InfluenceGraph& g);

enum class NotLinkableReason {
  HasCycle,
  ReductionNotSpanningTree,
  OrderConstraintsInconsistent,
  ReplayMismatch,
};

std::string reason_name(NotLinkableReason r);

struct LinkabilityResult {
  bool linkable = false;
  /// n - 1 link gates replaying to M; present iff linkable.
  std::optional<Synthesis> witness;
  /// Present iff not linkable.
  std::optional<NotLinkableReason> reason;
};

/// Decides s(M) <= n - 1 for invertible M with v(M) = 1.
/// Throws PreconditionError when v(M) != 1, SingularMatrixError when singular.
LinkabilityResult decide_linkable(const BinMatrix& m);

}  // namespace lmc
