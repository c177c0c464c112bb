#include "gfactor/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "gfactor/error.hpp"

namespace gfactor {

namespace {

void check_order(int order) {
  if (order < 1) throw ParameterError("graph order must be at least 1, got " + std::to_string(order));
  if (order > kMaxOrder) {
    throw UnsupportedSizeError("graph order " + std::to_string(order) + " exceeds " +
                               std::to_string(kMaxOrder));
  }
}

}  // namespace

Graph::Graph(int order) : order_(order) {
  check_order(order);
  rows_.assign(static_cast<std::size_t>(order), 0);
}

Graph::Graph(int order, std::vector<Row> rows) : order_(order), rows_(std::move(rows)) {
  check_order(order);
  check_invariants();
}

Graph Graph::from_rows(int order, std::vector<Row> rows) {
  check_order(order);
  if (rows.size() != static_cast<std::size_t>(order)) {
    throw ParameterError("expected " + std::to_string(order) + " rows, got " +
                         std::to_string(rows.size()));
  }
  return Graph(order, std::move(rows));
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  check_order(order);
  std::vector<Row> rows(static_cast<std::size_t>(order), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw ParameterError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                           "} out of range for order " + std::to_string(order));
    }
    if (u == v) throw ParameterError("loop at vertex " + std::to_string(u));
    rows[static_cast<std::size_t>(u)] |= Row{1} << v;
    rows[static_cast<std::size_t>(v)] |= Row{1} << u;
  }
  return Graph(order, std::move(rows));
}

void Graph::check_invariants() const {
  const Row mask = vertex_mask();
  for (int i = 0; i < order_; ++i) {
    const Row r = row(i);
    if (r & ~mask) throw PreconditionError("row " + std::to_string(i) + " has bits beyond the order");
    if ((r >> i) & 1U) throw PreconditionError("loop at vertex " + std::to_string(i));
    for (int j = i + 1; j < order_; ++j) {
      if (has_edge(i, j) != has_edge(j, i)) {
        throw PreconditionError("asymmetric entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

Row Graph::vertex_mask() const noexcept {
  return order_ == 64 ? ~Row{0} : (Row{1} << order_) - 1;
}

int Graph::degree(int v) const { return std::popcount(row(v)); }

int Graph::edge_count() const {
  int twice = 0;
  for (Row r : rows_) twice += std::popcount(r);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order_; ++u) {
    for (int v = u + 1; v < order_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)]) {
      throw ParameterError("permutation images are not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int order) {
  std::vector<int> images(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) images[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t v = 0; v < images_.size(); ++v) inv[static_cast<std::size_t>(images_[v])] = static_cast<int>(v);
  return Permutation(std::move(inv));
}

bool Bipartition::is_valid_for(const Graph& g) const {
  if (left.size() + right.size() != static_cast<std::size_t>(g.order())) return false;
  Row l = 0, r = 0;
  for (int v : left) {
    if (v < 0 || v >= g.order() || ((l >> v) & 1U)) return false;
    l |= Row{1} << v;
  }
  for (int v : right) {
    if (v < 0 || v >= g.order() || ((r >> v) & 1U) || ((l >> v) & 1U)) return false;
    r |= Row{1} << v;
  }
  for (int v : left) {
    if (g.row(v) & l) return false;
  }
  for (int v : right) {
    if (g.row(v) & r) return false;
  }
  return true;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(v)] = g.degree(v);
  return out;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool is_regular(const Graph& g) {
  for (int v = 1; v < g.order(); ++v) {
    if (g.degree(v) != g.degree(0)) return false;
  }
  return true;
}

bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.row(v) == 0) return true;
  }
  return false;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> out;
  Row unseen = g.vertex_mask();
  while (unseen) {
    const int start = std::countr_zero(unseen);
    Row block = Row{1} << start;
    Row frontier = block;
    while (frontier) {
      Row next = 0;
      for (Row f = frontier; f; f &= f - 1) next |= g.row(std::countr_zero(f));
      frontier = next & ~block;
      block |= next;
    }
    unseen &= ~block;
    std::vector<int> members;
    for (Row b = block; b; b &= b - 1) members.push_back(std::countr_zero(b));
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

std::optional<Bipartition> bipartition_of(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] != -1) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (Row r = g.row(u); r; r &= r - 1) {
        const int v = std::countr_zero(r);
        auto& cv = color[static_cast<std::size_t>(v)];
        if (cv == -1) {
          cv = 1 - color[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (cv == color[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (int v = 0; v < n; ++v) (color[static_cast<std::size_t>(v)] == 0 ? parts.left : parts.right).push_back(v);
  return parts;
}

AcyclicClass classify_acyclic(const Graph& g) {
  const int k = static_cast<int>(components(g).size());
  // A graph is a forest iff |E| = n - (number of components).
  if (g.edge_count() != g.order() - k) return {AcyclicKind::has_cycle, k};
  return {k == 1 ? AcyclicKind::tree : AcyclicKind::forest_multi, k};
}

bool contains_c4(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (std::popcount(g.row(u) & g.row(v)) >= 2) return true;
    }
  }
  return false;
}

Graph permute(const Graph& g, const Permutation& p) {
  if (p.order() != g.order()) {
    throw ParameterError("permutation order " + std::to_string(p.order()) + " does not match graph order " +
                         std::to_string(g.order()));
  }
  std::vector<Row> rows(static_cast<std::size_t>(g.order()), 0);
  for (int u = 0; u < g.order(); ++u) {
    Row mapped = 0;
    for (Row r = g.row(u); r; r &= r - 1) mapped |= Row{1} << p[std::countr_zero(r)];
    rows[static_cast<std::size_t>(p[u])] = mapped;
  }
  return Graph::from_rows(g.order(), std::move(rows));
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int k = static_cast<int>(vertices.size());
  std::vector<Row> rows(static_cast<std::size_t>(k), 0);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (g.has_edge(vertices[static_cast<std::size_t>(a)], vertices[static_cast<std::size_t>(b)])) {
        rows[static_cast<std::size_t>(a)] |= Row{1} << b;
      }
    }
  }
  return Graph::from_rows(k, std::move(rows));
}

}  // namespace gfactor
