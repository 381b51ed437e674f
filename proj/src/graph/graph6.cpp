#include "trifree/graph6.hpp"

namespace trifree {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kMaxGraph6Order = 258047;

[[noreturn]] void parse_error(const std::string& what) { throw GraphError(ErrorCode::Parse, "graph6: " + what); }

int sextet(char c) {
  if (c < 63 || c > 126) parse_error(std::string("character out of range: code ") + std::to_string(static_cast<int>(c)));
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.empty()) parse_error("empty input");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) parse_error("truncated length prefix");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(text[i]);
    if (n < 63) parse_error("long length prefix used for order below 63");
    pos = 4;
  } else {
    if (text.size() < 8) parse_error("truncated length prefix");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(text[i]);
    if (n <= kMaxGraph6Order) parse_error("extended length prefix used for small order");
    pos = 8;
  }
  if (n == 0) throw GraphError(ErrorCode::EmptyGraph, "graph6: order 0 encodes the empty graph");
  if (n > Graph::kMaxOrder) throw GraphError(ErrorCode::OrderTooLarge, "graph6: order " + std::to_string(n) + " too large");

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (text.size() - pos != chars) {
    parse_error("expected " + std::to_string(chars) + " adjacency characters, got " + std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  int i = 0;
  int j = 1;
  for (std::size_t c = 0; c < chars; ++c) {
    const int value = sextet(text[pos + c]);
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = (value >> k) & 1;
      if (bit >= bits) {
        if (set) parse_error("nonzero padding bits");
        continue;
      }
      if (set) edges.push_back({i, j});
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_edges(static_cast<int>(n), std::span<const Edge>(edges));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int value = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      value = (value << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(value + 63));
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((value << (6 - filled)) + 63));
  return out;
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

}  // namespace trifree
