#include "gfactor/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

#include "gfactor/error.hpp"

namespace gfactor {

namespace {

class KeyMinimizer {
 public:
  explicit KeyMinimizer(const Graph& g) : g_(g), n_(g.order()), total_bits_(n_ * (n_ - 1) / 2) {}

  void run() {
    for (int v = 0; v < n_; ++v) {
      seq_[0] = v;
      used_ = Row{1} << v;
      descend(1, 0);
    }
  }

  std::uint32_t best() const { return best_; }
  const std::array<int, kMaxCanonicalOrder>& best_sequence() const { return best_seq_; }

 private:
  void descend(int depth, std::uint32_t prefix) {
    if (depth == n_) {
      if (!found_ || prefix < best_) {
        best_ = prefix;
        best_seq_ = seq_;
        found_ = true;
      }
      return;
    }
    // Column `depth` contributes `depth` bits; try children smallest column first.
    std::array<std::pair<std::uint32_t, int>, kMaxCanonicalOrder> children{};
    int count = 0;
    for (int v = 0; v < n_; ++v) {
      if ((used_ >> v) & 1U) continue;
      std::uint32_t column = 0;
      for (int i = 0; i < depth; ++i) column = (column << 1) | (g_.has_edge(seq_[static_cast<std::size_t>(i)], v) ? 1U : 0U);
      children[static_cast<std::size_t>(count++)] = {column, v};
    }
    std::sort(children.begin(), children.begin() + count);
    const int bits_through = depth * (depth + 1) / 2;
    for (int c = 0; c < count; ++c) {
      const auto [column, v] = children[static_cast<std::size_t>(c)];
      const std::uint32_t extended = (prefix << depth) | column;
      if (found_ && extended > (best_ >> (total_bits_ - bits_through))) break;
      seq_[static_cast<std::size_t>(depth)] = v;
      used_ |= Row{1} << v;
      descend(depth + 1, extended);
      used_ &= ~(Row{1} << v);
    }
  }

  const Graph& g_;
  int n_;
  int total_bits_;
  std::array<int, kMaxCanonicalOrder> seq_{};
  std::array<int, kMaxCanonicalOrder> best_seq_{};
  Row used_ = 0;
  std::uint32_t best_ = 0;
  bool found_ = false;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) {
    throw UnsupportedSizeError("canonical form is capped at order " + std::to_string(kMaxCanonicalOrder) +
                               ", got " + std::to_string(n));
  }
  KeyMinimizer minimizer(g);
  minimizer.run();

  const int bits = n * (n - 1) / 2;
  std::string key(static_cast<std::size_t>(bits), '0');
  for (int b = 0; b < bits; ++b) {
    if ((minimizer.best() >> (bits - 1 - b)) & 1U) key[static_cast<std::size_t>(b)] = '1';
  }
  // Position d holds original vertex seq[d], so the labeling sends seq[d] -> d.
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) images[static_cast<std::size_t>(minimizer.best_sequence()[static_cast<std::size_t>(d)])] = d;
  Permutation labeling(std::move(images));
  Graph graph = permute(g, labeling);
  return {std::move(key), std::move(labeling), std::move(graph)};
}

Graph graph_from_key(const std::string& key) {
  int n = 1;
  while (static_cast<std::size_t>(n * (n - 1) / 2) < key.size()) ++n;
  if (static_cast<std::size_t>(n * (n - 1) / 2) != key.size()) {
    throw ParameterError("key length " + std::to_string(key.size()) + " is not triangular");
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (key[k] == '1') {
        edges.emplace_back(i, j);
      } else if (key[k] != '0') {
        throw ParameterError("key contains a character other than 0/1");
      }
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace gfactor
