#include "symbreak/graph6.hpp"

#include <istream>
#include <sstream>

#include "symbreak/error.hpp"

namespace symbreak {

namespace {

constexpr int kBias = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

int decode_byte(char c) {
  int value = static_cast<unsigned char>(c) - kBias;
  if (value < 0 || value > 63)
    throw ParseError(std::string("graph6: invalid character '") + c + "'");
  return value;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    throw InvalidArgument("graph6 output is limited to " + std::to_string(kGraph6MaxOrder) +
                          " vertices");
  std::string out(1, static_cast<char>(n + kBias));
  int bits = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      bits = (bits << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(bits + kBias));
        bits = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((bits << (6 - filled)) + kBias));
  return out;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = decode_byte(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw ParseError("graph6: truncated order header");
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | decode_byte(text[k]);
    pos = 4;
  } else {
    throw ParseError("graph6: orders above 258047 are not supported");
  }
  if (n < 1) throw ParseError("graph6: graph must have at least one vertex");

  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = (pairs + 5) / 6;
  if (text.size() - pos != expected)
    throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes for order " +
                     std::to_string(n) + ", got " + std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = decode_byte(text[pos + bit / 6]);
      if ((byte >> (5 - bit % 6)) & 1) edges.push_back({i, j});
    }
  }
  // Padding bits must be zero.
  if (bit % 6 != 0) {
    int last = decode_byte(text[pos + bit / 6]);
    if (last & ((1 << (6 - bit % 6)) - 1)) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long n = 0;
  long m = 0;
  if (!(in >> n >> m)) throw ParseError("edge list: missing 'n m' header");
  if (n < 1 || m < 0) throw ParseError("edge list: invalid header");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long k = 0; k < m; ++k) {
    long u = 0;
    long v = 0;
    if (!(in >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw ParseError("edge list: invalid edge " + std::to_string(u) + " " + std::to_string(v));
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  std::string rest;
  if (in >> rest) throw ParseError("edge list: trailing data '" + rest + "'");
  return Graph(static_cast<int>(n), edges);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    out.push_back(parse_graph6(view));
  }
  return out;
}

}  // namespace symbreak
