#include "testkit.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "lmc/classifier.hpp"
#include "lmc/connectivity.hpp"
#include "lmc/rivers.hpp"

namespace lmc::testkit {

namespace {

std::string describe(const BinMatrix& m) {
  std::string s = m.to_string();
  std::replace(s.begin(), s.end(), '\n', '/');
  return s;
}

std::string describe(const BinMatrix& m, const CnotGate& g) {
  return describe(m) + " gate (" + std::to_string(g.control) + "," + std::to_string(g.target) + ")";
}

int count_components(int nodes, const std::vector<std::vector<int>>& adj) {
  std::vector<bool> seen(nodes, false);
  int count = 0;
  for (int s = 0; s < nodes; ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : adj[u]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

std::set<std::vector<int>> river_images(const BinMatrix& m) {
  std::set<std::vector<int>> out;
  for (const Permutation& p : naive_rivers(m)) out.insert(p.image());
  return out;
}

int pick_dim(int n_max, Rng& rng) {
  return std::uniform_int_distribution<int>(2, n_max)(rng);
}

}  // namespace

void Check::fail(const std::string& what) {
  if (failures++ == 0) first_failure = what;
}

BinMatrix random_matrix(int n, Rng& rng) {
  std::vector<Row> rows(n);
  const Row mask = n == 32 ? ~Row{0} : (Row{1} << n) - 1;
  for (Row& r : rows) r = static_cast<Row>(rng()) & mask;
  return BinMatrix::from_rows(n, rows, false);
}

BinMatrix random_invertible(int n, Rng& rng) {
  for (;;) {
    BinMatrix m = random_matrix(n, rng);
    if (m.is_invertible()) return m;
  }
}

CnotGate random_gate(int n, Rng& rng) {
  std::uniform_int_distribution<int> pick(1, n);
  const int c = pick(rng);
  int t = pick(rng);
  while (t == c) t = pick(rng);
  return {c, t};
}

Synthesis random_synthesis(int n, int length, Rng& rng) {
  Synthesis s{n, {}};
  for (int k = 0; k < length; ++k) s.gates.push_back(random_gate(n, rng));
  return s;
}

std::vector<BinMatrix> all_invertible(int n) {
  std::vector<BinMatrix> out;
  for (std::uint64_t key = 0; key < (std::uint64_t{1} << (n * n)); ++key) {
    BinMatrix m = decode(key, n);
    if (m.is_invertible()) out.push_back(m);
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::map<std::uint64_t, int> reference_sizes(int n) {
  std::map<std::uint64_t, int> dist;
  std::queue<BinMatrix> queue;
  const BinMatrix id = BinMatrix::identity(n);
  dist[encode(id)] = 0;
  queue.push(id);
  while (!queue.empty()) {
    const BinMatrix m = queue.front();
    queue.pop();
    const int d = dist[encode(m)];
    for (int c = 1; c <= n; ++c) {
      for (int t = 1; t <= n; ++t) {
        if (c == t) continue;
        const BinMatrix next = apply_cnot(m, {c, t});
        if (dist.emplace(encode(next), d + 1).second) queue.push(next);
      }
    }
  }
  return dist;
}

int naive_v(const BinMatrix& m) {
  const int n = m.dim();
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && (m.at(i, j) || m.at(j, i))) adj[i].push_back(j);
    }
  }
  return count_components(n, adj);
}

int naive_e(const BinMatrix& m) {
  const int n = m.dim();
  std::vector<std::vector<int>> adj(2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (m.at(i, j)) {
        adj[i].push_back(n + j);
        adj[n + j].push_back(i);
      }
    }
  }
  return count_components(2 * n, adj);
}

std::vector<Permutation> naive_rivers(const BinMatrix& m) {
  std::vector<Permutation> out;
  for (const Permutation& p : all_permutations(m.dim())) {
    bool ok = true;
    for (int i = 0; i < m.dim() && ok; ++i) ok = m.at(i, p(i));
    if (ok) out.push_back(p);
  }
  return out;
}

bool naive_is_middle(const BinMatrix& m, const CnotGate& g) {
  return river_images(m) != river_images(apply_cnot(m, g));
}

Check check_fast_cperfect(int n_max, int cases, std::uint64_t seed) {
  Check ck{"mprime equals I plus the sum of river matrices"};
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    const BinMatrix m = random_invertible(pick_dim(n_max, rng), rng);
    BinMatrix sum = BinMatrix::identity(m.dim());
    for (const Permutation& p : naive_rivers(m)) sum = sum ^ permutation_matrix(p);
    ++ck.cases;
    if (mprime(m) != sum || river_parity_matrix(m) != sum) ck.fail(describe(m));
  }
  return ck;
}

namespace {

void exclusivity_case(Check& ck, const BinMatrix& m, const CnotGate& g) {
  const BinMatrix next = apply_cnot(m, g);
  const bool link = naive_v(next) < naive_v(m);
  const bool cut = naive_e(next) > naive_e(m);
  const bool middle = naive_is_middle(m, g);
  ++ck.cases;
  if (link + cut + middle > 1) {
    ck.fail("two classes at " + describe(m, g));
    return;
  }
  const GateClass expected = link     ? GateClass::Link
                             : cut    ? GateClass::Cut
                             : middle ? GateClass::Middle
                                      : GateClass::Neither;
  if (classify_gate(m, g) != expected) ck.fail("classifier disagrees at " + describe(m, g));
}

}  // namespace

Check check_exclusivity_exhaustive(int n) {
  Check ck{"link, middle and cut are exclusive (exhaustive)"};
  for (const BinMatrix& m : all_invertible(n)) {
    for (int c = 1; c <= n; ++c) {
      for (int t = 1; t <= n; ++t) {
        if (c != t) exclusivity_case(ck, m, {c, t});
      }
    }
  }
  return ck;
}

Check check_exclusivity_random(int n, int cases, std::uint64_t seed) {
  Check ck{"link, middle and cut are exclusive (n = " + std::to_string(n) + ")"};
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    const BinMatrix m = random_invertible(n, rng);
    exclusivity_case(ck, m, random_gate(n, rng));
  }
  return ck;
}

Check check_link_deltas(int n_max, int cases, std::uint64_t seed) {
  Check ck{"one gate moves v and e by at most one; v drop implies e drop"};
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    const int n = pick_dim(n_max, rng);
    const BinMatrix m = random_invertible(n, rng);
    const CnotGate g = random_gate(n, rng);
    const BinMatrix next = apply_cnot(m, g);
    const int dv = naive_v(next) - naive_v(m);
    const int de = naive_e(next) - naive_e(m);
    ++ck.cases;
    if (std::abs(dv) > 1 || std::abs(de) > 1 || (dv == -1 && de != -1)) {
      ck.fail(describe(m, g) + " dv=" + std::to_string(dv) + " de=" + std::to_string(de));
    } else if (classify_gate(m, g) == GateClass::Link && de != -1) {
      ck.fail("link without e drop at " + describe(m, g));
    }
  }
  return ck;
}

Check check_pair_parity(int n_max, int cases, std::uint64_t seed) {
  Check ck{"river pairs keep their parity across a gate"};
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    const int n = pick_dim(n_max, rng);
    const BinMatrix m = random_invertible(n, rng);
    const CnotGate g = random_gate(n, rng);
    const auto before = river_images(m);
    const auto after = river_images(apply_cnot(m, g));
    // Partner of sigma: the images at the control and target rows exchanged.
    const Permutation swap = Permutation::transposition(n, g.control - 1, g.target - 1);
    ++ck.cases;
    for (const Permutation& sigma : all_permutations(n)) {
      const Permutation tau = sigma * swap;
      const int a = before.count(sigma.image()) + before.count(tau.image());
      const int b = after.count(sigma.image()) + after.count(tau.image());
      if ((a - b) % 2 != 0) {
        ck.fail(describe(m, g) + " sigma " + sigma.one_line());
        break;
      }
    }
  }
  return ck;
}

Check check_class_parity(int n_max, int cases, std::uint64_t seed) {
  Check ck{"river parity is preserved on every class of a transposition set"};
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    const int n = pick_dim(n_max, rng);
    const BinMatrix m = random_invertible(n, rng);
    const CnotGate g = random_gate(n, rng);
    std::vector<Permutation> moves{Permutation::transposition(n, g.control - 1, g.target - 1)};
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng() & 1) moves.push_back(Permutation::transposition(n, i, j));
      }
    }
    const auto perms = all_permutations(n);
    std::map<std::vector<int>, int> index;
    for (std::size_t p = 0; p < perms.size(); ++p) index[perms[p].image()] = static_cast<int>(p);
    UnionFind uf(static_cast<int>(perms.size()));
    for (std::size_t p = 0; p < perms.size(); ++p) {
      for (const Permutation& t : moves) uf.unite(static_cast<int>(p), index[(perms[p] * t).image()]);
    }
    const auto before = river_images(m);
    const auto after = river_images(apply_cnot(m, g));
    std::map<int, int> parity;
    for (std::size_t p = 0; p < perms.size(); ++p) {
      const int root = uf.find(static_cast<int>(p));
      parity[root] += before.count(perms[p].image()) + after.count(perms[p].image());
    }
    ++ck.cases;
    for (const auto& [root, total] : parity) {
      if (total % 2 != 0) {
        ck.fail(describe(m, g));
        break;
      }
    }
  }
  return ck;
}

Check check_middle_nullspace(int n_max, int cases, std::uint64_t seed) {
  Check ck{"each middle-gate component sums to zero in mprime"};
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    const int n = pick_dim(n_max, rng);
    const int length = std::uniform_int_distribution<int>(1, 4 * n)(rng);
    const Synthesis s = random_synthesis(n, length, rng);
    const ClassifiedSynthesis cs = classify_synthesis(s);
    UnionFind uf(n);
    for (std::size_t i = 0; i < s.gates.size(); ++i) {
      if (cs.classes[i] == GateClass::Middle) uf.unite(s.gates[i].control - 1, s.gates[i].target - 1);
    }
    const BinMatrix m = s.replay();
    ++ck.cases;
    for (const auto& group : ComponentPartition::from(uf).groups()) {
      if (!check_component_nullspace(m, group)) {
        ck.fail(describe(m));
        break;
      }
    }
  }
  return ck;
}

Check check_middle_fast_exhaustive(int n) {
  Check ck{"matching-based middle test equals river comparison (exhaustive)"};
  for (const BinMatrix& m : all_invertible(n)) {
    for (int c = 1; c <= n; ++c) {
      for (int t = 1; t <= n; ++t) {
        if (c == t) continue;
        ++ck.cases;
        if (is_middle_fast(m, {c, t}) != naive_is_middle(m, {c, t})) ck.fail(describe(m, {c, t}));
      }
    }
  }
  return ck;
}

Check check_middle_fast_random(int n, int cases, std::uint64_t seed) {
  Check ck{"matching-based middle test equals river comparison (n = " + std::to_string(n) + ")"};
  Rng rng(seed);
  for (int k = 0; k < cases; ++k) {
    const BinMatrix m = random_invertible(n, rng);
    const CnotGate g = random_gate(n, rng);
    ++ck.cases;
    if (is_middle_fast(m, g) != naive_is_middle(m, g)) ck.fail(describe(m, g));
  }
  return ck;
}

Check check_size_equivalence(const SizeTable& table, double sample_rate, int conjugates,
                             std::uint64_t seed) {
  Check ck{"size is invariant under transpose, inverse and relabeling"};
  Rng rng(seed);
  std::bernoulli_distribution sample(sample_rate);
  const int n = table.n();
  const auto perms = all_permutations(n);
  std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
  for (std::uint64_t key = 0; key < table.raw().size(); ++key) {
    if (table.at(key) == SizeTable::kUnreached) continue;
    const BinMatrix m = decode(key, n);
    const int s = table.at(key);
    ++ck.cases;
    if (table.exact_size(transpose(m)) != s || table.exact_size(inverse(m)) != s) {
      ck.fail(describe(m));
      continue;
    }
    if (!sample(rng)) continue;
    for (int k = 0; k < conjugates; ++k) {
      const BinMatrix p = permutation_matrix(perms[pick(rng)]);
      if (table.exact_size(multiply(multiply(inverse(p), m), p)) != s) {
        ck.fail("conjugate of " + describe(m));
        break;
      }
    }
  }
  return ck;
}

namespace {

void linkability_case(LinkabilitySweep& sw, const SizeTable& table, const BinMatrix& m) {
  const int n = m.dim();
  const LinkabilityResult r = decide_linkable(m);
  const bool expected = table.exact_size(m) == n - 1;
  ++sw.check.cases;
  if (r.linkable != expected) {
    sw.check.fail((expected ? "missed " : "false positive ") + describe(m));
    return;
  }
  if (!r.linkable) {
    ++sw.reasons[reason_name(*r.reason)];
    return;
  }
  ++sw.linkable;
  const Synthesis& w = *r.witness;
  if (w.size() != static_cast<std::size_t>(n - 1) || w.replay() != m) {
    sw.check.fail("bad witness for " + describe(m));
    return;
  }
  if (classify_synthesis(w).links != n - 1) sw.check.fail("witness gate not a link for " + describe(m));
}

}  // namespace

LinkabilitySweep check_linkability_exhaustive(const SizeTable& table) {
  LinkabilitySweep sw;
  sw.check.name = "linkability agrees with exact sizes (n = " + std::to_string(table.n()) + ")";
  for (std::uint64_t key = 0; key < table.raw().size(); ++key) {
    if (table.at(key) == SizeTable::kUnreached) continue;
    const BinMatrix m = decode(key, table.n());
    if (vertex_component_count(m) == 1) linkability_case(sw, table, m);
  }
  return sw;
}

LinkabilitySweep check_linkability_random(const SizeTable& table, int samples, std::uint64_t seed) {
  LinkabilitySweep sw;
  sw.check.name = "linkability agrees with exact sizes (random n = " +
                  std::to_string(table.n()) + ")";
  Rng rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, table.raw().size() - 1);
  while (sw.check.cases < samples) {
    const std::uint64_t key = pick(rng);
    if (table.at(key) == SizeTable::kUnreached) continue;
    const BinMatrix m = decode(key, table.n());
    if (vertex_component_count(m) == 1) linkability_case(sw, table, m);
  }
  return sw;
}

}  // namespace lmc::testkit
