#include "gfactor/generators.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "gfactor/error.hpp"
#include "gfactor/graph6.hpp"

namespace gfactor {

namespace {

void require_positive(int n, const char* family) {
  if (n < 1) throw ParameterError(std::string(family) + " needs n >= 1, got " + std::to_string(n));
}

int single_size(const FamilyParams& params, const char* family) {
  if (params.sizes.size() != 1) throw ParameterError(std::string(family) + " takes exactly one size");
  return params.sizes[0];
}

}  // namespace

Graph complete(int n) {
  require_positive(n, "complete");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw ParameterError("cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path(int n) {
  require_positive(n, "path");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph star(int n) {
  require_positive(n, "star");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(n, edges);
}

Graph edgeless(int n) {
  require_positive(n, "edgeless");
  return Graph(n);
}

Graph matching(int n) {
  require_positive(n, "matching");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
  return Graph::from_edges(2 * n, edges);
}

Graph complete_bipartite(int a, int b) {
  require_positive(a, "complete_bipartite");
  require_positive(b, "complete_bipartite");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return Graph::from_edges(a + b, edges);
}

Graph disjoint_union(const Graph& first, const Graph& second) {
  const int shift = first.order();
  std::vector<Row> rows(first.rows().begin(), first.rows().end());
  for (Row r : second.rows()) rows.push_back(r << shift);
  return Graph::from_rows(shift + second.order(), std::move(rows));
}

Graph disjoint_copies(const Graph& g, int copies) {
  require_positive(copies, "disjoint_copies");
  Graph out = g;
  for (int c = 1; c < copies; ++c) out = disjoint_union(out, g);
  return out;
}

Graph tree_from_pruefer(std::span<const int> sequence) {
  const int n = static_cast<int>(sequence.size()) + 2;
  std::vector<int> remaining(static_cast<std::size_t>(n), 1);
  for (int label : sequence) {
    if (label < 0 || label >= n) {
      throw ParameterError("Pruefer label " + std::to_string(label) + " outside [0, " + std::to_string(n) + ")");
    }
    ++remaining[static_cast<std::size_t>(label)];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (remaining[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (int label : sequence) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, label);
    if (--remaining[static_cast<std::size_t>(label)] == 1) leaves.push(label);
  }
  const int u = leaves.top();
  leaves.pop();
  edges.emplace_back(u, leaves.top());
  return Graph::from_edges(n, edges);
}

Graph generate(Family family, const FamilyParams& params) {
  switch (family) {
    case Family::complete:
      return complete(single_size(params, "complete"));
    case Family::cycle:
      return cycle(single_size(params, "cycle"));
    case Family::path:
      return path(single_size(params, "path"));
    case Family::star:
      return star(single_size(params, "star"));
    case Family::matching:
      return matching(single_size(params, "matching"));
    case Family::edgeless:
      return edgeless(single_size(params, "edgeless"));
    case Family::complete_bipartite:
      if (params.sizes.size() != 2) throw ParameterError("complete_bipartite takes two sizes");
      return complete_bipartite(params.sizes[0], params.sizes[1]);
    case Family::disjoint_union: {
      if (params.operands.empty()) throw ParameterError("disjoint_union needs at least one operand");
      Graph out = params.operands.front();
      for (std::size_t i = 1; i < params.operands.size(); ++i) out = disjoint_union(out, params.operands[i]);
      return out;
    }
    case Family::tree_from_pruefer:
      return tree_from_pruefer(params.pruefer);
  }
  throw ParameterError("unknown graph family");
}

}  // namespace gfactor

namespace gfactor {

namespace {

std::string component_name(const Graph& c) {
  const int n = c.order();
  const int m = c.edge_count();
  if (m == n * (n - 1) / 2) return "K" + std::to_string(n);
  const int top = max_degree(c);
  if (is_regular(c) && top == 2) return "C" + std::to_string(n);
  if (m == n - 1 && top == 2) return "P" + std::to_string(n);
  if (const auto parts = bipartition_of(c)) {
    const auto a = parts->left.size();
    const auto b = parts->right.size();
    if (static_cast<std::size_t>(m) == a * b) {
      return "K" + std::to_string(std::min(a, b)) + "," + std::to_string(std::max(a, b));
    }
  }
  return "[" + encode_graph6(c) + "]";
}

}  // namespace

std::string describe(const Graph& g) {
  std::vector<std::pair<int, std::string>> names;
  for (const auto& block : components(g)) {
    names.emplace_back(static_cast<int>(block.size()), component_name(induced_subgraph(g, block)));
  }
  std::sort(names.begin(), names.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first > y.first : x.second < y.second;
  });
  std::string out;
  for (std::size_t i = 0; i < names.size();) {
    std::size_t j = i;
    while (j < names.size() && names[j] == names[i]) ++j;
    if (!out.empty()) out += " + ";
    if (j - i > 1) out += std::to_string(j - i);
    out += names[i].second;
    i = j;
  }
  return out;
}

}  // namespace gfactor
