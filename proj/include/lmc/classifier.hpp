#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lmc/bin_matrix.hpp"

namespace lmc {

enum class GateClass { Link, Middle, Cut, Neither };

/// 'L', 'M', 'C' or 'N'.
char class_letter(GateClass c);
std::string class_name(GateClass c);

/// Class of CNOT g applied at state M. Checks, in order: v drops (Link),
/// e rises (Cut), river set changes (Middle); otherwise Neither.
GateClass classify_gate(const BinMatrix& m, const CnotGate& g);

/// True iff S(M) != S(apply_cnot(M, g)), decided by bipartite matching:
/// a river gained or lost by the gate is a perfect matching in which the
/// target row uses the control row's support and every other row its own.
bool is_middle_fast(const BinMatrix& m, const CnotGate& g);

/// True iff the bipartite graph (row i may take column j when bit j of
/// allowed[i] is set) has a perfect matching.
bool has_perfect_matching(std::span<const Row> allowed);

struct ClassifiedSynthesis {
  int n = 0;
  std::vector<CnotGate> gates;
  std::vector<GateClass> classes;
  /// Hash of the state after each gate.
  std::vector<std::uint64_t> state_digests;
  int links = 0;
  int middles = 0;
  int cuts = 0;
  int neithers = 0;

  /// One letter per gate, e.g. "LMCLMC".
  std::string pattern() const;
  int count(GateClass c) const;
};

ClassifiedSynthesis classify_synthesis(const Synthesis& s);

/// Undirected graph on the qubits with one edge per gate of a class.
struct GateGraph {
  int n = 0;
  std::vector<std::array<int, 2>> edges;  // 1-based, smaller label first, deduplicated

  bool is_spanning_tree() const;
  bool is_star() const;
  bool is_path() const;
  /// "star", "path", "star+path", "tree" or "other".
  std::string shape() const;
};

GateGraph gate_graph(const ClassifiedSynthesis& s, GateClass c);

std::uint64_t state_digest(const BinMatrix& m);

}  // namespace lmc
