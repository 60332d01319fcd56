#include "lmc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lmc/bound.hpp"
#include "lmc/classifier.hpp"
#include "lmc/connectivity.hpp"
#include "lmc/errors.hpp"
#include "lmc/io.hpp"
#include "lmc/linkability.hpp"
#include "lmc/oracle.hpp"
#include "lmc/permsynth.hpp"
#include "lmc/rivers.hpp"

namespace lmc::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct BoundFlags {
  bool no_floor = false;
  bool strengthen = false;
  bool no_rank_cap = false;
  std::string rule = "min";

  void attach(CLI::App* app) {
    app->add_flag("--no-floor", no_floor, "Keep c_perfect rational and round the total up");
    app->add_flag("--strengthen", strengthen, "Maximise over M, M^T, M^-1 and M^-T");
    app->add_flag("--no-rank-cap", no_rank_cap,
                  "Do not cap the middle-gate component count by n - rank(M')");
    app->add_option("--cperfect-rule", rule, "Combine c_perfect(M) and c_perfect(M^T)")
        ->check(CLI::IsMember({"min", "max", "matrix"}));
  }

  BoundOptions options() const {
    BoundOptions o;
    o.mode = no_floor ? CperfectMode::Rational : CperfectMode::Floor;
    o.strengthen = strengthen;
    o.rank_cap = !no_rank_cap;
    o.combine = parse_combine(rule);
    return o;
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

BinMatrix read_invertible(const std::string& path) {
  BinMatrix m = read_matrix_file(path);
  if (!m.is_invertible()) throw SingularMatrixError();
  return m;
}

std::string mode_name(CperfectMode m) { return m == CperfectMode::Floor ? "floor" : "rational"; }

json bound_json(const LmcReport& r) {
  return json{{"n", r.n},
              {"ell", r.ell},
              {"m", r.m},
              {"m_rational", r.m_rational()},
              {"c", r.c},
              {"z", r.z},
              {"z_inv", r.z_inv},
              {"bound", r.bound},
              {"depth_lb", r.depth_lb},
              {"cperfect_rule", std::string(combine_name(r.combine))},
              {"cperfect_mode", mode_name(r.mode)},
              {"rank_cap", r.rank_cap},
              {"strengthened", r.strengthened}};
}

int cmd_bound(const std::string& path, const BoundFlags& flags, bool as_json, std::ostream& out) {
  const LmcReport r = lmc_bound(read_invertible(path), flags.options());
  if (as_json) {
    out << bound_json(r).dump(2) << "\n";
    return kExitOk;
  }
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"n", std::to_string(r.n)},
      {"ell", std::to_string(r.ell)},
      {"m", std::to_string(r.m) + " (" + r.m_rational() + ")"},
      {"c", std::to_string(r.c)},
      {"z", std::to_string(r.z)},
      {"z_inv", std::to_string(r.z_inv)},
      {"bound", std::to_string(r.bound)},
      {"depth_lb", std::to_string(r.depth_lb)},
      {"rule", std::string(combine_name(r.combine)) + ", " + mode_name(r.mode) +
                   (r.rank_cap ? ", rank cap" : "") + (r.strengthened ? ", strengthened" : "")},
  };
  for (const auto& [key, value] : rows) out << std::left << std::setw(10) << key << value << "\n";
  return kExitOk;
}

int cmd_connectivity(const std::string& path, std::ostream& out) {
  const BinMatrix m = read_matrix_file(path);
  const auto gv = vertex_components(m);
  const auto ge = edge_components(m);
  std::vector<std::string> labels;
  for (int i = 1; i <= m.dim(); ++i) labels.push_back("R" + std::to_string(i));
  for (int j = 1; j <= m.dim(); ++j) labels.push_back("C" + std::to_string(j));
  out << "v=" << gv.component_count << " e=" << ge.component_count << "\n";
  out << "G_v: " << format_groups(gv) << "\n";
  out << "G_e: " << format_groups(ge, labels) << "\n";
  return kExitOk;
}

int cmd_cperfect(const std::string& path, std::ostream& out) {
  const CperfectReport r = cperfect(read_invertible(path));
  out << "mprime:\n" << r.mprime.to_string() << "\n";
  out << "emp=" << r.emp << " dup=" << r.dup << "\n";
  out << "c_perfect=" << r.rational_string() << " floor=" << r.cperfect << "\n";
  out << "nullity=" << r.nullity << "\n";
  out << "middle_lower_bound=" << r.middle_lower_bound << "\n";
  return kExitOk;
}

int cmd_rivers(const std::string& path, std::ostream& out) {
  const BinMatrix m = read_matrix_file(path);
  if (m.dim() > kMaxRiverOracleDim) throw DimensionError("rivers supports n <= 8");
  for (const Permutation& p : enumerate_rivers(m).rivers) out << p.one_line() << "\n";
  return kExitOk;
}

void print_census(const ClassifiedSynthesis& cs, std::ostream& out, const std::string& prefix) {
  out << prefix << "pattern " << cs.pattern() << "\n";
  out << prefix << "L=" << cs.links << " M=" << cs.middles << " C=" << cs.cuts
      << " N=" << cs.neithers << "\n";
  for (GateClass c : {GateClass::Link, GateClass::Middle, GateClass::Cut}) {
    const GateGraph g = gate_graph(cs, c);
    out << prefix << class_name(c) << ": edges=" << g.edges.size()
        << " spanning_tree=" << yes_no(g.is_spanning_tree()) << " star=" << yes_no(g.is_star())
        << " path=" << yes_no(g.is_path()) << "\n";
  }
}

int cmd_classify(const std::string& path, std::ostream& out) {
  print_census(classify_synthesis(read_synthesis_file(path)), out, "");
  return kExitOk;
}

int cmd_synth_perm(const std::string& cycles, int n, const std::string& construction,
                   const std::string& out_path, std::ostream& out) {
  const auto id = parse_construction(construction);
  if (!id) throw ParseError(0, "unknown construction '" + construction + "' (row1..row5)");
  const Permutation sigma = parse_cycle_notation(cycles, n);
  const Synthesis s = synth_permutation(sigma, *id);
  const ClassifiedSynthesis cs = classify_synthesis(s);
  if (out_path.empty()) {
    out << "# gates " << s.size() << "\n";
    print_census(cs, out, "# ");
    out << format_synthesis(s);
    return kExitOk;
  }
  std::ofstream file(out_path);
  if (!file) throw Error("cannot open " + out_path + " for writing");
  file << format_synthesis(s);
  out << "gates " << s.size() << "\n";
  print_census(cs, out, "");
  return kExitOk;
}

int cmd_linkable(const std::string& path, std::ostream& out) {
  const LinkabilityResult r = decide_linkable(read_invertible(path));
  if (r.linkable) {
    out << "LINKABLE\n" << format_synthesis(*r.witness);
    return kExitOk;
  }
  out << "NOT LINKABLE (" << reason_name(*r.reason) << ")\n";
  return kExitNegative;
}

int cmd_verify(const std::string& matrix_path, const std::string& synth_path, std::ostream& out) {
  const BinMatrix m = read_invertible(matrix_path);
  const Synthesis s = read_synthesis_file(synth_path);
  if (s.n != m.dim()) {
    throw DimensionError("matrix has n = " + std::to_string(m.dim()) + ", synthesis has n = " +
                         std::to_string(s.n));
  }
  const bool match = s.replay() == m;
  const int bound = lmc_bound(m).bound;
  const int gates = static_cast<int>(s.size());
  out << "match=" << yes_no(match) << " gates=" << gates << " bound=" << bound << "\n";
  if (!match) {
    out << "MISMATCH\n";
    return kExitNegative;
  }
  if (gates == bound) {
    out << "OPTIMAL\n";
    return kExitOk;
  }
  out << "GAP " << gates - bound << "\n";
  return kExitNegative;
}

struct CensusFlags {
  int n = 0;
  std::string out_dir;
  std::string cache;
  int threads = 1;
  bool timings = false;
  BoundFlags bound;
};

fs::path cache_path(const CensusFlags& f) {
  if (!f.cache.empty()) return f.cache;
  if (const char* dir = std::getenv("LMC_CACHE_DIR"); dir && *dir) {
    return fs::path(dir) / ("sizes_n" + std::to_string(f.n) + ".lmc");
  }
  return {};
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw Error("cannot open " + path.string() + " for writing");
  file << text;
}

std::string confusion_csv(const ConfusionMatrix& cm) {
  std::ostringstream s;
  s << "bound\\size";
  for (int j = 0; j < cm.dim(); ++j) s << "," << j;
  s << "\n";
  for (int b = 0; b < cm.dim(); ++b) {
    s << b;
    for (int j = 0; j < cm.dim(); ++j) s << "," << cm.counts[b][j];
    s << "\n";
  }
  return s.str();
}

std::string heatmap_csv(const ConfusionMatrix& cm) {
  const auto frac = cm.column_fractions();
  std::ostringstream s;
  s << "bound\\size";
  for (int j = 0; j < cm.dim(); ++j) s << "," << j;
  s << "\n" << std::setprecision(6) << std::fixed;
  for (int b = 0; b < cm.dim(); ++b) {
    s << b;
    for (int j = 0; j < cm.dim(); ++j) s << "," << frac[b][j];
    s << "\n";
  }
  return s.str();
}

json metrics_json(const Metrics& mt, const BoundOptions& o, int n) {
  auto num = [](double x) { return std::isnan(x) ? json(nullptr) : json(x); };
  return json{
      {"definitions",
       {{"delta", "size - bound, >= 0 for every matrix"},
        {"sigma", "sqrt(mean(delta^2))"},
        {"mad", "mean(|delta|)"},
        {"pcc", "Pearson correlation of bound and size"},
        {"r2", "pcc^2"}}},
      {"n", n},
      {"total", mt.total},
      {"delta0", mt.delta0},
      {"delta_le1", mt.delta_le1},
      {"delta_le2", mt.delta_le2},
      {"sigma", mt.sigma},
      {"mad", mt.mad},
      {"pcc", num(mt.pcc)},
      {"r2", num(mt.r2)},
      {"cperfect_rule", std::string(combine_name(o.combine))},
      {"cperfect_mode", mode_name(o.mode)},
      {"rank_cap", o.rank_cap},
      {"strengthened", o.strengthen}};
}

int cmd_census(const CensusFlags& f, std::ostream& out) {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const fs::path cache = cache_path(f);
  SizeTable table;
  if (!cache.empty() && fs::exists(cache)) {
    table = SizeTable::load(cache);
    if (table.n() != f.n) throw Error(cache.string() + " holds n = " + std::to_string(table.n()));
  } else {
    table = bfs_sizes(f.n, f.threads);
    if (!cache.empty()) {
      if (cache.has_parent_path()) fs::create_directories(cache.parent_path());
      table.save(cache);
    }
  }
  const auto t1 = clock::now();
  const BoundOptions options = f.bound.options();
  const ConfusionMatrix cm = confusion(table, options, f.threads);
  const Metrics mt = metrics(cm);
  const auto t2 = clock::now();

  out << "n=" << f.n << " matrices=" << mt.total << " max_size=" << table.max_size() << "\n";
  out << std::fixed << std::setprecision(3);
  out << "delta0=" << 100 * mt.delta0 << "% delta<=1=" << 100 * mt.delta_le1
      << "% delta<=2=" << 100 * mt.delta_le2 << "%\n";
  out << "sigma=" << mt.sigma << " mad=" << mt.mad << " pcc=" << mt.pcc << " r2=" << mt.r2 << "\n";
  if (f.timings) {
    out << "bfs_seconds=" << std::chrono::duration<double>(t1 - t0).count()
        << " bound_seconds=" << std::chrono::duration<double>(t2 - t1).count() << "\n";
  }

  if (!f.out_dir.empty()) {
    const fs::path dir(f.out_dir);
    fs::create_directories(dir);
    std::ostringstream sizes;
    sizes << "size,count\n";
    const auto hist = table.histogram();
    for (std::size_t s = 0; s < hist.size(); ++s) sizes << s << "," << hist[s] << "\n";
    write_file(dir / "sizes.csv", sizes.str());
    write_file(dir / "confusion.csv", confusion_csv(cm));
    write_file(dir / "heatmap.csv", heatmap_csv(cm));
    write_file(dir / "metrics.json", metrics_json(mt, options, f.n).dump(2) + "\n");
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lower bounds and exact sizes for CNOT circuits", "lmc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every command");

  std::string matrix;
  std::string synthesis;
  bool as_json = false;
  BoundFlags bound_flags;

  auto* bound = app.add_subcommand("bound", "Print the lower bound report of a matrix");
  bound->add_option("matrix", matrix, "Matrix file")->required();
  bound->add_flag("--json", as_json, "JSON output");
  bound_flags.attach(bound);

  auto* connectivity = app.add_subcommand("connectivity", "Print v(M), e(M) and their components");
  connectivity->add_option("matrix", matrix, "Matrix file")->required();

  auto* cperf = app.add_subcommand("cperfect", "Print M', Emp, Dup and c_perfect");
  cperf->add_option("matrix", matrix, "Matrix file")->required();

  auto* rivers = app.add_subcommand("rivers", "List the rivers of a matrix (n <= 8)");
  rivers->add_option("matrix", matrix, "Matrix file")->required();

  auto* classify = app.add_subcommand("classify", "Classify each gate as link, middle or cut");
  classify->add_option("synthesis", synthesis, "Synthesis file")->required();

  std::string cycles;
  int perm_n = 0;
  std::string construction = "row1";
  std::string synth_out;
  auto* synth = app.add_subcommand("synth-perm", "Synthesize a permutation matrix in 3(n-k) gates");
  synth->add_option("cycles", cycles, "Cycle notation such as \"(1 3 5)(2 4)\"")->required();
  synth->add_option("--n", perm_n, "Number of qubits (default: largest label)")
      ->check(CLI::Range(1, kMaxDim));
  synth->add_option("--construction", construction, "row1 .. row5")
      ->check(CLI::IsMember({"row1", "row2", "row3", "row4", "row5"}));
  synth->add_option("-o,--out", synth_out, "Write the synthesis here instead of stdout");

  auto* linkable = app.add_subcommand("linkable", "Decide whether s(M) = n - 1 (requires v(M) = 1)");
  linkable->add_option("matrix", matrix, "Matrix file")->required();

  CensusFlags census_flags;
  auto* census = app.add_subcommand("census", "Exhaustive bound-vs-size census for n <= 5");
  census->add_option("--n", census_flags.n, "Number of qubits")->required()->check(CLI::Range(1, 5));
  census->add_option("--out", census_flags.out_dir, "Directory for CSV and JSON reports");
  census->add_option("--cache", census_flags.cache, "Size table cache file");
  census->add_option("--threads", census_flags.threads, "Worker threads")->check(CLI::Range(1, 256));
  census->add_flag("--timings", census_flags.timings, "Print wall-clock timings");
  census_flags.bound.attach(census);

  auto* verify = app.add_subcommand("verify", "Replay a synthesis and compare it with the bound");
  verify->add_option("matrix", matrix, "Matrix file")->required();
  verify->add_option("synthesis", synthesis, "Synthesis file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bound) return cmd_bound(matrix, bound_flags, as_json, out);
    if (*connectivity) return cmd_connectivity(matrix, out);
    if (*cperf) return cmd_cperfect(matrix, out);
    if (*rivers) return cmd_rivers(matrix, out);
    if (*classify) return cmd_classify(synthesis, out);
    if (*synth) return cmd_synth_perm(cycles, perm_n, construction, synth_out, out);
    if (*linkable) return cmd_linkable(matrix, out);
    if (*census) return cmd_census(census_flags, out);
    if (*verify) return cmd_verify(matrix, synthesis, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace lmc::cli
