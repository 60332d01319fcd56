#include "lmc/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <thread>

namespace lmc {

namespace {

constexpr char kMagic[4] = {'L', 'M', 'C', '1'};

void check_oracle_dim(int n) {
  if (n < 1 || n > kMaxOracleDim) {
    throw DimensionError("exhaustive search supports 1 <= n <= 5, got " + std::to_string(n));
  }
}

/// Applies CNOT(control, target) (0-based) to a dense key.
inline std::uint32_t apply_to_key(std::uint32_t key, int n, int control, int target,
                                  std::uint32_t row_mask) {
  return key ^ (((key >> (n * control)) & row_mask) << (n * target));
}

template <class Fn>
void run_sharded(int threads, std::size_t items, Fn&& fn) {
  threads = std::max(1, threads);
  if (threads == 1 || items < 4096) {
    fn(0, std::size_t{0}, items);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (items + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const std::size_t begin = std::min(items, chunk * t);
    const std::size_t end = std::min(items, begin + chunk);
    pool.emplace_back([&fn, t, begin, end] { fn(t, begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

SizeTable::SizeTable(int n, std::vector<std::uint8_t> sizes) : n_(n), sizes_(std::move(sizes)) {
  check_oracle_dim(n);
  if (sizes_.size() != (std::size_t{1} << (n * n))) {
    throw DimensionError("size table has the wrong length for n = " + std::to_string(n));
  }
  for (std::uint8_t s : sizes_) {
    if (s != kUnreached) {
      ++reachable_;
      max_size_ = std::max<int>(max_size_, s);
    }
  }
}

std::vector<std::uint64_t> SizeTable::histogram() const {
  std::vector<std::uint64_t> h(max_size_ + 1, 0);
  for (std::uint8_t s : sizes_) {
    if (s != kUnreached) ++h[s];
  }
  return h;
}

int SizeTable::exact_size(const BinMatrix& m) const {
  if (m.dim() != n_) throw DimensionError("matrix dimension does not match the size table");
  const std::uint8_t s = sizes_[encode(m)];
  if (s == kUnreached) throw SingularMatrixError();
  return s;
}

Synthesis SizeTable::witness_synthesis(const BinMatrix& m) const {
  int remaining = exact_size(m);
  Synthesis s{n_, {}};
  BinMatrix state = m;
  while (remaining > 0) {
    bool stepped = false;
    for (int c = 1; c <= n_ && !stepped; ++c) {
      for (int t = 1; t <= n_ && !stepped; ++t) {
        if (c == t) continue;
        const BinMatrix next = apply_cnot(state, {c, t});
        if (sizes_[encode(next)] == remaining - 1) {
          s.gates.push_back({c, t});
          state = next;
          stepped = true;
        }
      }
    }
    if (!stepped) throw std::logic_error("size table has no descending neighbour");
    --remaining;
  }
  // The descent walks M back to I; the synthesis runs the same gates forward.
  std::reverse(s.gates.begin(), s.gates.end());
  return s;
}

void SizeTable::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(kMagic, sizeof kMagic);
  const char n = static_cast<char>(n_);
  out.write(&n, 1);
  out.write(reinterpret_cast<const char*>(sizes_.data()), static_cast<std::streamsize>(sizes_.size()));
  if (!out) throw Error("failed writing " + path.string());
}

SizeTable SizeTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  char header[5];
  if (!in.read(header, 5) || !std::equal(kMagic, kMagic + 4, header)) {
    throw Error(path.string() + " is not a size table cache");
  }
  const int n = header[4];
  check_oracle_dim(n);
  std::vector<std::uint8_t> sizes(std::size_t{1} << (n * n));
  if (!in.read(reinterpret_cast<char*>(sizes.data()), static_cast<std::streamsize>(sizes.size())) ||
      in.peek() != std::char_traits<char>::eof()) {
    throw Error(path.string() + " has the wrong length");
  }
  return SizeTable(n, std::move(sizes));
}

SizeTable bfs_sizes(int n, int threads) {
  check_oracle_dim(n);
  std::vector<std::uint8_t> sizes(std::size_t{1} << (n * n), SizeTable::kUnreached);
  const std::uint32_t row_mask = (1u << n) - 1;
  const auto identity_key = static_cast<std::uint32_t>(encode(BinMatrix::identity(n)));
  sizes[identity_key] = 0;
  std::vector<std::uint32_t> frontier{identity_key};
  std::vector<std::pair<int, int>> gates;
  for (int c = 0; c < n; ++c) {
    for (int t = 0; t < n; ++t) {
      if (c != t) gates.emplace_back(c, t);
    }
  }
  threads = std::max(1, threads);
  std::vector<std::vector<std::uint32_t>> next_parts(threads);

  for (std::uint8_t level = 1; !frontier.empty(); ++level) {
    for (auto& part : next_parts) part.clear();
    run_sharded(threads, frontier.size(), [&](int worker, std::size_t begin, std::size_t end) {
      auto& out = next_parts[worker];
      const bool shared = threads > 1 && frontier.size() >= 4096;
      for (std::size_t i = begin; i < end; ++i) {
        for (const auto& [c, t] : gates) {
          const std::uint32_t key = apply_to_key(frontier[i], n, c, t, row_mask);
          if (shared) {
            // Claim the cell exactly once across workers.
            std::atomic_ref<std::uint8_t> cell(sizes[key]);
            std::uint8_t expected = SizeTable::kUnreached;
            if (cell.load(std::memory_order_relaxed) == expected &&
                cell.compare_exchange_strong(expected, level, std::memory_order_relaxed)) {
              out.push_back(key);
            }
          } else if (sizes[key] == SizeTable::kUnreached) {
            sizes[key] = level;
            out.push_back(key);
          }
        }
      }
    });
    frontier.clear();
    for (auto& part : next_parts) frontier.insert(frontier.end(), part.begin(), part.end());
  }
  return SizeTable(n, std::move(sizes));
}

std::uint64_t ConfusionMatrix::total() const {
  std::uint64_t sum = 0;
  for (const auto& row : counts) {
    for (std::uint64_t c : row) sum += c;
  }
  return sum;
}

std::vector<std::vector<double>> ConfusionMatrix::column_fractions() const {
  std::vector<std::vector<double>> out(dim(), std::vector<double>(dim(), 0.0));
  for (int s = 0; s < dim(); ++s) {
    std::uint64_t column = 0;
    for (int b = 0; b < dim(); ++b) column += counts[b][s];
    if (column == 0) continue;
    for (int b = 0; b < dim(); ++b) out[b][s] = static_cast<double>(counts[b][s]) / column;
  }
  return out;
}

ConfusionMatrix confusion(const SizeTable& table, const BoundOptions& options, int threads) {
  const int n = table.n();
  const int dim = 3 * (n - 1) + 1;
  threads = std::max(1, threads);
  using Counts = std::vector<std::vector<std::uint64_t>>;
  std::vector<Counts> partial(threads, Counts(dim, std::vector<std::uint64_t>(dim, 0)));
  const auto raw = table.raw();
  std::atomic<bool> overflow{false};
  run_sharded(threads, raw.size(), [&](int worker, std::size_t begin, std::size_t end) {
    auto& counts = partial[worker];
    for (std::size_t key = begin; key < end; ++key) {
      const std::uint8_t size = raw[key];
      if (size == SizeTable::kUnreached) continue;
      const int bound = lmc_bound_value(decode(key, n), options);
      if (bound >= dim || size >= dim) {
        overflow = true;
        continue;
      }
      ++counts[bound][size];
    }
  });
  if (overflow) throw std::logic_error("bound or size exceeds 3(n-1)");
  ConfusionMatrix cm{n, Counts(dim, std::vector<std::uint64_t>(dim, 0))};
  for (const auto& counts : partial) {
    for (int b = 0; b < dim; ++b) {
      for (int s = 0; s < dim; ++s) cm.counts[b][s] += counts[b][s];
    }
  }
  return cm;
}

ConfusionMatrix make_confusion(int n, const std::vector<std::array<std::uint64_t, 3>>& cells) {
  const int dim = 3 * (n - 1) + 1;
  ConfusionMatrix cm{n, std::vector<std::vector<std::uint64_t>>(dim, std::vector<std::uint64_t>(dim, 0))};
  for (const auto& [b, s, count] : cells) cm.counts.at(b).at(s) += count;
  return cm;
}

Metrics metrics(const ConfusionMatrix& cm) {
  Metrics r;
  double sum_b = 0, sum_s = 0, sum_d = 0, sum_d2 = 0;
  std::uint64_t d0 = 0, d1 = 0, d2 = 0;
  for (int b = 0; b < cm.dim(); ++b) {
    for (int s = 0; s < cm.dim(); ++s) {
      const std::uint64_t c = cm.counts[b][s];
      if (c == 0) continue;
      const int delta = s - b;
      r.total += c;
      sum_b += static_cast<double>(b) * c;
      sum_s += static_cast<double>(s) * c;
      sum_d += static_cast<double>(std::abs(delta)) * c;
      sum_d2 += static_cast<double>(delta) * delta * c;
      if (delta == 0) d0 += c;
      if (std::abs(delta) <= 1) d1 += c;
      if (std::abs(delta) <= 2) d2 += c;
    }
  }
  if (r.total == 0) {
    r.pcc = r.r2 = std::numeric_limits<double>::quiet_NaN();
    return r;
  }
  const double total = static_cast<double>(r.total);
  r.delta0 = d0 / total;
  r.delta_le1 = d1 / total;
  r.delta_le2 = d2 / total;
  r.mad = sum_d / total;
  r.sigma = std::sqrt(sum_d2 / total);
  const double mean_b = sum_b / total;
  const double mean_s = sum_s / total;
  double cov = 0, var_b = 0, var_s = 0;
  for (int b = 0; b < cm.dim(); ++b) {
    for (int s = 0; s < cm.dim(); ++s) {
      const std::uint64_t c = cm.counts[b][s];
      if (c == 0) continue;
      cov += (b - mean_b) * (s - mean_s) * c;
      var_b += (b - mean_b) * (b - mean_b) * c;
      var_s += (s - mean_s) * (s - mean_s) * c;
    }
  }
  if (var_b > 0 && var_s > 0) {
    r.pcc = cov / std::sqrt(var_b * var_s);
    r.r2 = r.pcc * r.pcc;
  } else {
    r.pcc = r.r2 = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

}  // namespace lmc
