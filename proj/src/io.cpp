#include "robinson/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <system_error>
#include <vector>

namespace robinson {

namespace {

// Whitespace tokens of the non-comment lines, with line numbers for messages.
class Tokens {
 public:
  Tokens(std::istream& in, std::string what) : what_(std::move(what)) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) toks_.push_back({tok, lineno});
    }
  }

  bool done() const { return pos_ == toks_.size(); }

  int next_int(const char* field) {
    const auto& [tok, line] = take(field);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line, "bad integer '" + tok + "'");
    return value;
  }

  double next_real(const char* field) {
    const auto& [tok, line] = take(field);
    double value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) fail(line, "bad number '" + tok + "'");
    return value;
  }

  void expect_end() {
    if (!done()) fail(toks_[pos_].second, "unexpected trailing token '" + toks_[pos_].first + "'");
  }

  int line() const { return done() ? (toks_.empty() ? 0 : toks_.back().second) : toks_[pos_].second; }

  [[noreturn]] void fail(int line, const std::string& msg) const {
    throw InputError(what_ + ", line " + std::to_string(line) + ": " + msg);
  }

 private:
  const std::pair<std::string, int>& take(const char* field) {
    if (done()) fail(line(), std::string("unexpected end of input, expected ") + field);
    return toks_[pos_++];
  }

  std::string what_;
  std::vector<std::pair<std::string, int>> toks_;
  std::size_t pos_ = 0;
};

std::vector<Edge> read_edges(Tokens& t, int n, int count) {
  std::vector<Edge> edges;
  for (int i = 0; i < count; ++i) {
    const int u = t.next_int("edge endpoint");
    const int v = t.next_int("edge endpoint");
    if (u < 0 || u >= n || v < 0 || v >= n) t.fail(t.line(), "endpoint out of range");
    edges.push_back({u, v});
  }
  return edges;
}

}  // namespace

DissimilaritySpace read_matrix(std::istream& in) {
  Tokens t(in, "matrix");
  const int n = t.next_int("n");
  if (n < 1) t.fail(t.line(), "n must be positive");
  std::vector<double> d;
  d.reserve(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < static_cast<std::size_t>(n) * n; ++i) d.push_back(t.next_real("entry"));
  t.expect_end();
  return DissimilaritySpace(n, std::move(d));
}

Tree read_tree(std::istream& in) {
  Tokens t(in, "tree");
  const int n = t.next_int("n");
  if (n < 1) t.fail(t.line(), "n must be positive");
  auto edges = read_edges(t, n, n - 1);
  t.expect_end();
  return Tree(n, std::move(edges));
}

OrientedTree read_oriented_tree(std::istream& in) {
  Tokens t(in, "oriented tree");
  const int n = t.next_int("n");
  if (n < 1) t.fail(t.line(), "n must be positive");
  std::vector<Arc> arcs;
  for (const Edge& e : read_edges(t, n, n - 1)) arcs.push_back({e.u, e.v});
  t.expect_end();
  return OrientedTree::from_arcs(n, arcs);
}

SimpleGraph read_graph(std::istream& in) {
  Tokens t(in, "graph");
  SimpleGraph g;
  g.n = t.next_int("n");
  if (g.n < 1) t.fail(t.line(), "n must be positive");
  while (!t.done()) g.edges.push_back(read_edges(t, g.n, 1).front());
  g.validate();
  return g;
}

BinaryMatrix read_binary_matrix(std::istream& in) {
  Tokens t(in, "binary matrix");
  const int rows = t.next_int("rows");
  const int cols = t.next_int("cols");
  if (rows < 1 || cols < 0) t.fail(t.line(), "bad dimensions");
  BinaryMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int bit = t.next_int("0/1 entry");
      if (bit != 0 && bit != 1) t.fail(t.line(), "entries must be 0 or 1");
      m.set(r, c, bit == 1);
    }
  }
  t.expect_end();
  return m;
}

std::string format_real(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void write_matrix(std::ostream& out, const DissimilaritySpace& space) {
  const int n = space.size();
  out << n << '\n';
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) out << (y ? " " : "") << format_real(space(x, y));
    out << '\n';
  }
}

void write_tree(std::ostream& out, const Tree& tree) {
  out << tree.size() << '\n';
  for (const Edge& e : tree.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_oriented_tree(std::ostream& out, const OrientedTree& ot) {
  out << ot.size() << '\n';
  for (const Arc& a : ot.arcs()) out << a.from << ' ' << a.to << '\n';
}

void write_graph(std::ostream& out, const SimpleGraph& g) {
  out << g.n << '\n';
  for (const Edge& e : g.edges) out << e.u << ' ' << e.v << '\n';
}

void write_binary_matrix(std::ostream& out, const BinaryMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out << (c ? " " : "") << (m.get(r, c) ? 1 : 0);
    out << '\n';
  }
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path.string() + "' for writing");
  return out;
}

}  // namespace robinson
