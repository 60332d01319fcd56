#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>

#include "lmc/bin_matrix.hpp"
#include "lmc/permutation.hpp"

namespace lmc {

/// The five 3(n-1)-gate n-cycle constructions, named by the shapes of their
/// link, middle and cut gate graphs as originally labelled. The row3 link
/// gates actually form a path once n >= 4.
enum class ConstructionId {
  StarStarStar,  // row1: swap qubit 1 with each other qubit
  PathPathPath,  // row2: swap neighbours from the far end inwards
  StarPathStar,  // row3: forward chain, backward chain, fan into n
  StarStarPath,  // row4: interleaved pairs with n, then a descending chain
  StarPathPath,  // row5: fan out of 1, then neighbour pairs
};

inline constexpr std::array<ConstructionId, 5> kAllConstructions = {
    ConstructionId::StarStarStar, ConstructionId::PathPathPath, ConstructionId::StarPathStar,
    ConstructionId::StarStarPath, ConstructionId::StarPathPath};

/// "row1" ... "row5".
std::string construction_name(ConstructionId id);
std::optional<ConstructionId> parse_construction(const std::string& name);

/// The reference gate sequence on labels 1..length, without relabeling.
Synthesis canonical_cycle_construction(int length, ConstructionId id);

/// 3(len - 1) gates whose replay on I_n is the permutation matrix of the
/// cycle cycle_qubits[0] -> cycle_qubits[1] -> ... -> cycle_qubits[0].
/// Labels are 1-based. Throws PreconditionError on duplicates, labels
/// outside [1, n], or fewer than two qubits.
Synthesis synth_cycle(int n, std::span<const int> cycle_qubits,
                      ConstructionId id = ConstructionId::StarStarStar);

/// 3(n - k) gates synthesizing P_sigma, k the number of cycles of sigma.
Synthesis synth_permutation(const Permutation& sigma,
                            ConstructionId id = ConstructionId::StarStarStar);

/// Appends CNOT(i, j), CNOT(j, i), CNOT(i, j) (1-based), which swaps rows i
/// and j. Joins two cycles into one when i and j lie in disjoint cycles.
Synthesis join_cycles(const Synthesis& s, int i, int j);

}  // namespace lmc
