#include "lmc/permsynth.hpp"

#include <algorithm>
#include <stdexcept>

namespace lmc {

std::string construction_name(ConstructionId id) {
  return "row" + std::to_string(static_cast<int>(id) + 1);
}

std::optional<ConstructionId> parse_construction(const std::string& name) {
  for (ConstructionId id : kAllConstructions) {
    if (construction_name(id) == name) return id;
  }
  return std::nullopt;
}

Synthesis canonical_cycle_construction(int length, ConstructionId id) {
  if (length < 2) throw PreconditionError("a cycle needs at least two qubits");
  const int n = length;
  Synthesis s{n, {}};
  auto cnot = [&s](int c, int t) { s.gates.push_back({c, t}); };
  switch (id) {
    case ConstructionId::StarStarStar:
      for (int i = 2; i <= n; ++i) {
        cnot(1, i);
        cnot(i, 1);
        cnot(1, i);
      }
      break;
    case ConstructionId::PathPathPath:
      for (int i = 1; i <= n - 1; ++i) {
        cnot(n - i, n - i + 1);
        cnot(n - i + 1, n - i);
        cnot(n - i, n - i + 1);
      }
      break;
    case ConstructionId::StarPathStar:
      for (int i = 1; i <= n - 1; ++i) cnot(i, i + 1);
      for (int i = 1; i <= n - 1; ++i) cnot(i + 1, i);
      for (int i = 1; i <= n - 1; ++i) cnot(i, n);
      break;
    case ConstructionId::StarStarPath:
      for (int i = 1; i <= n - 1; ++i) {
        cnot(n - i, n);
        cnot(n, n - i);
      }
      cnot(1, n);
      for (int i = 1; i <= n - 2; ++i) cnot(i + 1, i);
      break;
    case ConstructionId::StarPathPath:
      for (int i = 2; i <= n; ++i) cnot(1, i);
      for (int i = 1; i <= n - 1; ++i) {
        cnot(i + 1, i);
        cnot(i, i + 1);
      }
      break;
  }
  return s;
}

Synthesis synth_cycle(int n, std::span<const int> cycle_qubits, ConstructionId id) {
  const int length = static_cast<int>(cycle_qubits.size());
  if (length < 2) throw PreconditionError("a cycle needs at least two qubits");
  std::vector<bool> used(n + 1, false);
  for (int q : cycle_qubits) {
    if (q < 1 || q > n) throw PreconditionError("cycle qubit " + std::to_string(q) + " outside [1, n]");
    if (used[q]) throw PreconditionError("cycle qubit " + std::to_string(q) + " repeated");
    used[q] = true;
  }

  // The canonical blocks do not all share an orientation, so read the cycle
  // each one produces off its replay and map that cycle onto cycle_qubits.
  const Synthesis canonical = canonical_cycle_construction(length, id);
  const Permutation tau = permutation_of(canonical.replay());
  std::vector<int> relabel(length + 1, 0);
  int x = 0;
  for (int k = 0; k < length; ++k) {
    if (k > 0 && x == 0) throw std::logic_error("construction is not a single cycle");
    relabel[x + 1] = cycle_qubits[k];
    x = tau(x);
  }
  if (x != 0) throw std::logic_error("construction is not a single cycle");

  Synthesis s{n, {}};
  s.gates.reserve(canonical.gates.size());
  for (const CnotGate& g : canonical.gates) s.gates.push_back({relabel[g.control], relabel[g.target]});
  return s;
}

Synthesis synth_permutation(const Permutation& sigma, ConstructionId id) {
  Synthesis s{sigma.size(), {}};
  for (const auto& cycle : sigma.cycles()) {
    if (cycle.size() < 2) continue;
    const Synthesis part = synth_cycle(sigma.size(), cycle, id);
    s.gates.insert(s.gates.end(), part.gates.begin(), part.gates.end());
  }
  return s;
}

Synthesis join_cycles(const Synthesis& s, int i, int j) {
  if (i == j) throw PreconditionError("join_cycles needs two distinct qubits");
  Synthesis out = s;
  for (const CnotGate g : {CnotGate{i, j}, CnotGate{j, i}, CnotGate{i, j}}) {
    validate_gate(g, s.n);
    out.gates.push_back(g);
  }
  return out;
}

}  // namespace lmc
