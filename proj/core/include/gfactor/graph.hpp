#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gfactor {

using Row = std::uint64_t;

/// Largest order representable by a single adjacency word per row.
inline constexpr int kMaxOrder = 64;

using Edge = std::pair<int, int>;

/// Undirected simple graph stored as one adjacency bit-row per vertex.
///
/// Every constructor checks symmetry and the zero diagonal, so a Graph value
/// is always a valid adjacency structure. Order 0 is rejected.
class Graph {
 public:
  /// Edgeless graph on `order` vertices.
  explicit Graph(int order);

  static Graph from_rows(int order, std::vector<Row> rows);
  static Graph from_edges(int order, std::span<const Edge> edges);

  int order() const noexcept { return order_; }
  Row row(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  std::span<const Row> rows() const noexcept { return rows_; }

  bool has_edge(int u, int v) const { return (row(u) >> v) & 1U; }
  int degree(int v) const;
  int edge_count() const;

  /// Edges {u, v} with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Mask with the low `order()` bits set.
  Row vertex_mask() const noexcept;

  bool operator==(const Graph&) const = default;

 private:
  Graph(int order, std::vector<Row> rows);
  void check_invariants() const;

  int order_;
  std::vector<Row> rows_;
};

/// Vertex relabeling: vertex v is sent to images()[v].
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int order);

  int order() const noexcept { return static_cast<int>(images_.size()); }
  int operator[](int v) const { return images_[static_cast<std::size_t>(v)]; }
  std::span<const int> images() const noexcept { return images_; }
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;

  /// True when left/right partition the vertices of g and every edge crosses.
  bool is_valid_for(const Graph& g) const;

  bool operator==(const Bipartition&) const = default;
};

enum class AcyclicKind { tree, forest_multi, has_cycle };

struct AcyclicClass {
  AcyclicKind kind;
  int component_count;
};

std::vector<int> degree_sequence(const Graph& g);

int max_degree(const Graph& g);
bool is_regular(const Graph& g);
bool has_isolated_vertex(const Graph& g);

/// Connected components, each sorted ascending, blocks ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

bool is_connected(const Graph& g);

/// BFS 2-coloring; the lowest vertex of each component goes left.
std::optional<Bipartition> bipartition_of(const Graph& g);

inline bool is_bipartite(const Graph& g) { return bipartition_of(g).has_value(); }

AcyclicClass classify_acyclic(const Graph& g);

/// True iff two distinct vertices have at least two common neighbours.
bool contains_c4(const Graph& g);

/// Edge {i, j} of the result iff {p^-1(i), p^-1(j)} is an edge of g.
Graph permute(const Graph& g, const Permutation& p);

/// Subgraph induced on `vertices`, relabeled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

}  // namespace gfactor
