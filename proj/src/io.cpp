#include "lmc/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace lmc {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

/// Content lines with comments and blanks removed.
std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    lines.push_back({number, std::move(text)});
  }
  return lines;
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

int parse_dimension(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(0, "empty input: expected the dimension n");
  const auto n = parse_int(lines.front().text);
  if (!n || *n < 1 || *n > kMaxDim) {
    throw ParseError(lines.front().number, "dimension must be an integer in [1, 32]");
  }
  return *n;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return in;
}

}  // namespace

BinMatrix parse_matrix(std::istream& in) {
  const auto lines = content_lines(in);
  const int n = parse_dimension(lines);
  if (lines.size() != static_cast<std::size_t>(n) + 1) {
    const std::size_t at = lines.size() > static_cast<std::size_t>(n) + 1 ? lines[n + 1].number
                                                                         : lines.back().number;
    throw ParseError(at, "expected " + std::to_string(n) + " matrix rows, found " +
                             std::to_string(lines.size() - 1));
  }
  std::vector<Row> rows(n, 0);
  for (int i = 0; i < n; ++i) {
    const Line& line = lines[i + 1];
    if (line.text.size() != static_cast<std::size_t>(n)) {
      throw ParseError(line.number, "row has " + std::to_string(line.text.size()) +
                                        " characters, expected " + std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      const char c = line.text[j];
      if (c == '1') {
        rows[i] |= Row{1} << j;
      } else if (c != '0') {
        throw ParseError(line.number, std::string("invalid character '") + c + "'");
      }
    }
  }
  return BinMatrix::from_rows(n, rows, false);
}

BinMatrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  return parse_matrix(in);
}

BinMatrix read_matrix_file(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_matrix(in);
}

std::string format_matrix(const BinMatrix& m) {
  return std::to_string(m.dim()) + "\n" + m.to_string() + "\n";
}

Synthesis parse_synthesis(std::istream& in) {
  const auto lines = content_lines(in);
  Synthesis s{parse_dimension(lines), {}};
  for (std::size_t k = 1; k < lines.size(); ++k) {
    std::istringstream fields(lines[k].text);
    std::string a, b, extra;
    fields >> a >> b;
    if (b.empty() || (fields >> extra)) {
      throw ParseError(lines[k].number, "expected \"control target\"");
    }
    const auto control = parse_int(a);
    const auto target = parse_int(b);
    if (!control || !target) throw ParseError(lines[k].number, "gate labels must be integers");
    const CnotGate g{*control, *target};
    try {
      validate_gate(g, s.n);
    } catch (const GateError& e) {
      throw ParseError(lines[k].number, e.what());
    }
    s.gates.push_back(g);
  }
  return s;
}

Synthesis parse_synthesis(const std::string& text) {
  std::istringstream in(text);
  return parse_synthesis(in);
}

Synthesis read_synthesis_file(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_synthesis(in);
}

std::string format_synthesis(const Synthesis& s) {
  std::string out = std::to_string(s.n) + "\n";
  for (const CnotGate& g : s.gates) {
    out += std::to_string(g.control) + " " + std::to_string(g.target) + "\n";
  }
  return out;
}

}  // namespace lmc
