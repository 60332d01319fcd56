#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "lmc/bin_matrix.hpp"
#include "lmc/bound.hpp"

namespace lmc {

inline constexpr int kMaxOracleDim = 5;

/// Exact sizes s(M) for every invertible n x n matrix, indexed by encode(M).
class SizeTable {
 public:
  static constexpr std::uint8_t kUnreached = 0xFF;

  SizeTable() = default;
  SizeTable(int n, std::vector<std::uint8_t> sizes);

  int n() const { return n_; }
  std::uint8_t at(std::uint64_t key) const { return sizes_[key]; }
  std::span<const std::uint8_t> raw() const { return sizes_; }
  std::uint64_t reachable_count() const { return reachable_; }
  int max_size() const { return max_size_; }
  /// histogram()[s] = number of matrices of size s.
  std::vector<std::uint64_t> histogram() const;

  /// Throws DimensionError on a dimension mismatch, SingularMatrixError for
  /// matrices outside GL(n, 2).
  int exact_size(const BinMatrix& m) const;

  /// A synthesis with exactly s(M) gates, built by stepping to the first
  /// size-decreasing neighbour in (control, target) order.
  Synthesis witness_synthesis(const BinMatrix& m) const;

  /// File layout: "LMC1", one byte n, then the raw size bytes.
  void save(const std::filesystem::path& path) const;
  static SizeTable load(const std::filesystem::path& path);

 private:
  int n_ = 0;
  std::vector<std::uint8_t> sizes_;
  std::uint64_t reachable_ = 0;
  int max_size_ = 0;
};

/// Breadth-first search over GL(n, 2) from the identity, n <= 5.
/// The result does not depend on `threads`.
SizeTable bfs_sizes(int n, int threads = 1);

/// counts[bound][size] over every invertible matrix.
struct ConfusionMatrix {
  int n = 0;
  std::vector<std::vector<std::uint64_t>> counts;

  int dim() const { return static_cast<int>(counts.size()); }
  std::uint64_t total() const;
  /// counts normalised so that each size column sums to one.
  std::vector<std::vector<double>> column_fractions() const;
};

ConfusionMatrix confusion(const SizeTable& table, const BoundOptions& options = {},
                          int threads = 1);

/// Builds a matrix from explicit cells; used for reference tables.
ConfusionMatrix make_confusion(int n, const std::vector<std::array<std::uint64_t, 3>>& cells);

/// Accuracy of the bound against exact sizes; delta = size - bound.
struct Metrics {
  std::uint64_t total = 0;
  double delta0 = 0;    // fraction with delta = 0
  double delta_le1 = 0;
  double delta_le2 = 0;
  double sigma = 0;     // sqrt(mean(delta^2))
  double mad = 0;       // mean(|delta|)
  double pcc = 0;       // Pearson correlation of bound and size; NaN if undefined
  double r2 = 0;        // pcc^2
};

Metrics metrics(const ConfusionMatrix& cm);

}  // namespace lmc
