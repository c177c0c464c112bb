#include "gfactor/graph6.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "gfactor/error.hpp"

namespace gfactor {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

}  // namespace

Graph decode_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) base = kHeader.size();
  std::string_view body = text.substr(base);
  if (body.ends_with('\n')) body.remove_suffix(1);
  if (body.ends_with('\r')) body.remove_suffix(1);

  if (body.empty()) throw ParseError("empty graph6 record", base);
  for (std::size_t i = 0; i < body.size(); ++i) {
    const auto c = static_cast<unsigned char>(body[i]);
    if (c < kBias || c > kBias + 63) throw ParseError("byte outside graph6 range [63,126]", base + i);
  }

  const int n = static_cast<unsigned char>(body[0]) - kBias;
  if (n == 63) throw ParseError("multi-byte size prefix (order > 62) is not supported", base);
  if (n == 0) throw ParseError("order-0 graphs are not supported", base);

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (body.size() != expected) {
    throw ParseError("graph6 length " + std::to_string(body.size()) + " does not match order " +
                         std::to_string(n) + " (expected " + std::to_string(expected) + ")",
                     base + std::min(body.size(), expected));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = static_cast<unsigned char>(body[1 + k / 6]) - kBias;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(body.back()) - kBias;
    const int pad = static_cast<int>(6 - bits % 6);
    if (last & ((1 << pad) - 1)) throw ParseError("nonzero padding bits", base + body.size() - 1);
  }
  return Graph::from_edges(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw UnsupportedSizeError("graph6 encoding supports orders up to 62, got " + std::to_string(n));
  }
  std::string out(1, static_cast<char>(kBias + n));
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (chunk << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int declared = -1;
  int max_vertex = -1;
  std::size_t pos = 0;

  auto skip_ws = [&](std::size_t& p, std::size_t end) {
    while (p < end && (text[p] == ' ' || text[p] == '\t' || text[p] == '\r')) ++p;
  };
  auto read_int = [&](std::size_t& p, std::size_t end) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + p, text.data() + end, value);
    if (ec != std::errc{} || value < 0) throw ParseError("expected a non-negative integer", p);
    p = static_cast<std::size_t>(ptr - text.data());
    return value;
  };

  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::size_t p = pos;
    skip_ws(p, end);
    if (p < end && text[p] != '#') {
      if (text.substr(p, end - p).starts_with("order")) {
        p += 5;
        skip_ws(p, end);
        declared = read_int(p, end);
      } else {
        const int u = read_int(p, end);
        skip_ws(p, end);
        const int v = read_int(p, end);
        if (u == v) throw ParseError("loop edge", pos);
        edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
      }
      skip_ws(p, end);
      if (p < end) throw ParseError("unexpected trailing text", p);
    }
    pos = end + 1;
  }

  const int order = declared >= 0 ? declared : max_vertex + 1;
  if (order < 1) throw ParseError("edge list defines no vertices", 0);
  if (max_vertex >= order) throw ParseError("vertex index exceeds declared order", 0);
  return Graph::from_edges(order, edges);
}

std::string format_edge_list(const Graph& g) {
  std::string out = "order " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace gfactor
