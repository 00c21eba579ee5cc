#include "bbqp/io.hpp"

#include <cerrno>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace bbqp {

namespace {

struct Line {
  int number = 0;  // 1-based position in the original stream
  std::string text;
};

bool is_space(char ch) { return ch == ' ' || ch == '\t'; }

// Data lines only: blank lines and '#' comment lines are skipped, original
// line numbers are kept for diagnostics.
std::vector<Line> data_lines(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::size_t pos = 0;
    while (pos < raw.size() && is_space(raw[pos])) ++pos;
    if (pos == raw.size() || raw[pos] == '#') continue;
    out.push_back({number, raw});
  }
  return out;
}

std::string at_line(const Line& line) { return "line " + std::to_string(line.number); }

// Whole line as integer tokens; exact count enforced, bad tokens reported
// with their column.
std::vector<Value> parse_ints(const Line& line, const std::string& what, int expected) {
  std::vector<Value> values;
  const std::string& s = line.text;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && is_space(s[pos])) ++pos;
    if (pos >= s.size()) break;
    const std::size_t start = pos;
    while (pos < s.size() && !is_space(s[pos])) ++pos;
    const std::string token = s.substr(start, pos - start);
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(token.c_str(), &end, 10);
    if (end != token.c_str() + token.size() || end == token.c_str() || errno == ERANGE)
      throw ParseError(at_line(line) + ", column " + std::to_string(start + 1) + ": '" +
                       token + "' is not a 64-bit integer");
    values.push_back(v);
  }
  if (static_cast<int>(values.size()) != expected)
    throw ParseError(at_line(line) + ": expected " + std::to_string(expected) +
                     " integers for " + what + ", got " + std::to_string(values.size()));
  return values;
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : lines_(data_lines(in)) {}

  const Line& need(const std::string& what) {
    if (index_ >= lines_.size())
      throw ParseError("unexpected end of input: missing " + what);
    return lines_[index_++];
  }

  void expect_done() {
    if (index_ < lines_.size())
      throw ParseError(at_line(lines_[index_]) + ": unexpected content after the last row");
  }

 private:
  std::vector<Line> lines_;
  std::size_t index_ = 0;
};

void check_header(const Line& line, const std::string& magic) {
  std::istringstream is(line.text);
  std::string word;
  int version = 0;
  if (!(is >> word) || word != magic || !(is >> version) || version != 1 ||
      (is >> word))
    throw ParseError(at_line(line) + ": expected header '" + magic + " 1'");
}

std::pair<int, int> parse_shape(const Line& line) {
  const auto mn = parse_ints(line, "dimensions", 2);
  if (mn[0] < 1 || mn[1] < 1)
    throw ParseError(at_line(line) + ": dimensions must be positive");
  if (mn[0] > (1 << 20) || mn[1] > (1 << 20) || mn[0] * mn[1] > (Value(1) << 30))
    throw ParseError(at_line(line) + ": dimensions too large");
  return {static_cast<int>(mn[0]), static_cast<int>(mn[1])};
}

void write_row(std::ostream& out, const Value* row, int count) {
  for (int k = 0; k < count; ++k) {
    if (k) out << ' ';
    out << row[k];
  }
  out << '\n';
}

BitVector parse_bits(const Line& line, const std::string& what, int expected) {
  const std::string& s = line.text;
  std::size_t pos = 0;
  while (pos < s.size() && is_space(s[pos])) ++pos;
  const std::size_t start = pos;
  while (pos < s.size() && !is_space(s[pos])) ++pos;
  const std::string token = s.substr(start, pos - start);
  while (pos < s.size() && is_space(s[pos])) ++pos;
  if (pos != s.size())
    throw ParseError(at_line(line) + ": expected a single contiguous bit string for " + what);
  if (static_cast<int>(token.size()) != expected)
    throw ParseError(at_line(line) + ": expected " + std::to_string(expected) + " bits for " +
                     what + ", got " + std::to_string(token.size()));
  BitVector bits(token.size());
  for (std::size_t k = 0; k < token.size(); ++k) {
    if (token[k] != '0' && token[k] != '1')
      throw ParseError(at_line(line) + ", column " + std::to_string(start + k + 1) +
                       ": bit must be 0 or 1");
    bits[k] = token[k] == '1';
  }
  return bits;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  LineReader reader(in);
  check_header(reader.need("header"), "BBQP");
  const auto [m, n] = parse_shape(reader.need("dimensions"));
  auto c = parse_ints(reader.need("c"), "c", m);
  auto d = parse_ints(reader.need("d"), "d", n);
  std::vector<Value> q;
  q.reserve(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i) {
    const std::string what = "row " + std::to_string(i + 1) + " of Q";
    const auto row = parse_ints(reader.need(what), what, n);
    q.insert(q.end(), row.begin(), row.end());
  }
  reader.expect_done();
  try {
    return Instance(m, n, std::move(q), std::move(c), std::move(d));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Instance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

void serialize_instance(const Instance& inst, std::ostream& out) {
  out << "BBQP 1\n" << inst.m << ' ' << inst.n << '\n';
  write_row(out, inst.c.data(), inst.m);
  write_row(out, inst.d.data(), inst.n);
  for (int i = 0; i < inst.m; ++i) write_row(out, inst.row(i), inst.n);
}

std::string serialize_instance_text(const Instance& inst) {
  std::ostringstream out;
  serialize_instance(inst, out);
  return out.str();
}

Solution parse_solution(std::istream& in) {
  LineReader reader(in);
  const auto [m, n] = parse_shape(reader.need("dimensions"));
  Solution sol;
  sol.x = parse_bits(reader.need("x bits"), "x", m);
  sol.y = parse_bits(reader.need("y bits"), "y", n);
  reader.expect_done();
  return sol;
}

Solution parse_solution_text(const std::string& text) {
  std::istringstream in(text);
  return parse_solution(in);
}

void serialize_solution(const Solution& sol, std::ostream& out) {
  out << sol.x.size() << ' ' << sol.y.size() << '\n';
  for (auto b : sol.x) out << (b ? '1' : '0');
  out << '\n';
  for (auto b : sol.y) out << (b ? '1' : '0');
  out << '\n';
}

std::string serialize_solution_text(const Solution& sol) {
  std::ostringstream out;
  serialize_solution(sol, out);
  return out.str();
}

BqpProblem parse_bqp(std::istream& in) {
  LineReader reader(in);
  check_header(reader.need("header"), "BQP");
  const auto n_line = parse_ints(reader.need("dimension"), "dimension", 1);
  if (n_line[0] < 1 || n_line[0] > (1 << 15))
    throw ParseError("dimension must be between 1 and 32768");
  const int n = static_cast<int>(n_line[0]);
  BqpProblem problem;
  problem.c = parse_ints(reader.need("c'"), "c'", n);
  problem.q.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    const std::string what = "row " + std::to_string(i + 1) + " of Q'";
    const auto row = parse_ints(reader.need(what), what, n);
    problem.q.insert(problem.q.end(), row.begin(), row.end());
  }
  reader.expect_done();
  return problem;
}

BqpProblem parse_bqp_text(const std::string& text) {
  std::istringstream in(text);
  return parse_bqp(in);
}

}  // namespace bbqp
