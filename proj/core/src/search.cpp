#include "gfactor/search.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "gfactor/canonical.hpp"
#include "gfactor/error.hpp"
#include "gfactor/linalg.hpp"

namespace gfactor {

namespace {

enum class Side : std::uint8_t { b, c };

struct Variable {
  int x;
  int y;
  Side side;
};

enum class TrivialFilter { exclude, only };

class Searcher {
 public:
  Searcher(const Graph& target, const SearchConfig& cfg, const WitnessVisitor& visit, TrivialFilter filter)
      : n_(target.order()), cfg_(cfg), visit_(visit), filter_(filter) {
    const auto size = static_cast<std::size_t>(n_);
    a_.assign(target.rows().begin(), target.rows().end());
    deg_a_.resize(size);
    b_one_.assign(size, 0);
    c_one_.assign(size, 0);
    b_unk_.resize(size);
    c_unk_.resize(size);
    const Row full = target.vertex_mask();
    for (int i = 0; i < n_; ++i) {
      deg_a_[static_cast<std::size_t>(i)] = target.degree(i);
      b_unk_[static_cast<std::size_t>(i)] = full & ~(Row{1} << i);
      c_unk_[static_cast<std::size_t>(i)] = full & ~(Row{1} << i);
    }

    std::vector<int> order(size);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int u, int v) { return deg_a_[static_cast<std::size_t>(u)] > deg_a_[static_cast<std::size_t>(v)]; });
    for (std::size_t t = 0; t < size; ++t) {
      for (std::size_t s = t + 1; s < size; ++s) {
        vars_.push_back({order[t], order[s], Side::b});
        vars_.push_back({order[t], order[s], Side::c});
      }
    }
    for (const char* rule : {"P1", "P2", "P3", "P4"}) stats_.prunes_by_rule[rule] = 0;
  }

  SearchStats run() {
    // The root node is the empty assignment; it must already be consistent
    // (e.g. P3 fails at the root when a vertex degree has no factorization).
    bool root_ok = true;
    for (int v = 0; v < n_ && root_ok; ++v) root_ok = degree_ok(v);
    if (!cfg_.pruning.degree) root_ok = true;
    if (root_ok) descend(0);
    stats_.exhausted = !stopped_;
    return stats_;
  }

 private:
  void descend(std::size_t index) {
    if (index == vars_.size()) {
      leaf();
      return;
    }
    const Variable var = vars_[index];
    for (int value = 0; value < 2 && !stopped_; ++value) {
      if (stats_.nodes_expanded >= cfg_.node_limit) {
        stopped_ = true;
        return;
      }
      ++stats_.nodes_expanded;
      assign(var, value);
      if (const char* failed = check(var)) {
        ++stats_.prunes_by_rule[failed];
      } else {
        descend(index + 1);
      }
      unassign(var);
    }
  }

  void leaf() {
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        const int want = static_cast<int>((a_[static_cast<std::size_t>(i)] >> j) & 1U);
        if (std::popcount(b_one_[static_cast<std::size_t>(i)] & c_one_[static_cast<std::size_t>(j)]) != want) return;
      }
    }
    WitnessBits w{b_one_, c_one_};
    const bool trivial = w.trivial();
    if ((filter_ == TrivialFilter::exclude && trivial) || (filter_ == TrivialFilter::only && !trivial)) return;
    ++stats_.witnesses_found;
    if (!visit_(w)) stopped_ = true;
  }

  void assign(const Variable& v, int value) {
    auto& unk = v.side == Side::b ? b_unk_ : c_unk_;
    auto& one = v.side == Side::b ? b_one_ : c_one_;
    unk[static_cast<std::size_t>(v.x)] &= ~(Row{1} << v.y);
    unk[static_cast<std::size_t>(v.y)] &= ~(Row{1} << v.x);
    if (value) {
      one[static_cast<std::size_t>(v.x)] |= Row{1} << v.y;
      one[static_cast<std::size_t>(v.y)] |= Row{1} << v.x;
    }
  }

  void unassign(const Variable& v) {
    auto& unk = v.side == Side::b ? b_unk_ : c_unk_;
    auto& one = v.side == Side::b ? b_one_ : c_one_;
    unk[static_cast<std::size_t>(v.x)] |= Row{1} << v.y;
    unk[static_cast<std::size_t>(v.y)] |= Row{1} << v.x;
    one[static_cast<std::size_t>(v.x)] &= ~(Row{1} << v.y);
    one[static_cast<std::size_t>(v.y)] &= ~(Row{1} << v.x);
  }

  // (BC)_ij = |N_B(i) & N_C(j)| must still be able to equal A_ij.
  const char* pair_check(int i, int j) const {
    const bool diagonal = i == j;
    if (diagonal ? !cfg_.pruning.diagonal : !cfg_.pruning.entry) return nullptr;
    const auto si = static_cast<std::size_t>(i);
    const auto sj = static_cast<std::size_t>(j);
    const int want = static_cast<int>((a_[si] >> j) & 1U);
    const int lower = std::popcount(b_one_[si] & c_one_[sj]);
    const int upper = std::popcount((b_one_[si] | b_unk_[si]) & (c_one_[sj] | c_unk_[sj]));
    if (lower > want || upper < want) return diagonal ? "P2" : "P1";
    return nullptr;
  }

  bool degree_ok(int v) const {
    const auto sv = static_cast<std::size_t>(v);
    const int b_min = std::popcount(b_one_[sv]);
    const int b_max = b_min + std::popcount(b_unk_[sv]);
    const int c_min = std::popcount(c_one_[sv]);
    const int c_max = c_min + std::popcount(c_unk_[sv]);
    const int d = deg_a_[sv];
    if (d == 0) return b_min == 0 || c_min == 0;
    for (int b = std::max(b_min, 1); b <= b_max; ++b) {
      if (d % b == 0 && d / b >= c_min && d / b <= c_max) return true;
    }
    return false;
  }

  // Component of v in the decided part of one factor; closed when no vertex in
  // it has an undecided entry left in that factor.
  bool closed_component_ok(int v, const std::vector<Row>& one, const std::vector<Row>& unk,
                           const std::vector<Row>& other_one, const std::vector<Row>& other_unk) const {
    Row block = Row{1} << v;
    Row frontier = block;
    while (frontier) {
      Row next = 0;
      for (Row f = frontier; f; f &= f - 1) {
        const auto u = static_cast<std::size_t>(std::countr_zero(f));
        if (unk[u]) return true;
        next |= one[u];
      }
      frontier = next & ~block;
      block |= next;
    }
    int lo = 0;
    int hi = n_;
    for (Row f = block; f; f &= f - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(f));
      const int min_deg = std::popcount(other_one[u]);
      lo = std::max(lo, min_deg);
      hi = std::min(hi, min_deg + std::popcount(other_unk[u]));
    }
    return lo <= hi;
  }

  const char* check(const Variable& v) const {
    const int ends[2] = {v.x, v.y};
    for (int e : ends) {
      for (int other = 0; other < n_; ++other) {
        const char* failed = v.side == Side::b ? pair_check(e, other) : pair_check(other, e);
        if (failed) return failed;
      }
    }
    if (cfg_.pruning.degree) {
      for (int e : ends) {
        if (!degree_ok(e)) return "P3";
      }
    }
    if (cfg_.pruning.component_degree) {
      for (int e : ends) {
        if (!closed_component_ok(e, b_one_, b_unk_, c_one_, c_unk_)) return "P4";
        if (!closed_component_ok(e, c_one_, c_unk_, b_one_, b_unk_)) return "P4";
      }
    }
    return nullptr;
  }

  int n_;
  const SearchConfig& cfg_;
  const WitnessVisitor& visit_;
  TrivialFilter filter_;
  std::vector<Row> a_;
  std::vector<int> deg_a_;
  std::vector<Row> b_one_, b_unk_, c_one_, c_unk_;
  std::vector<Variable> vars_;
  SearchStats stats_;
  bool stopped_ = false;
};

std::string row_bits(Row r, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int j = 0; j < n; ++j) {
    if ((r >> j) & 1U) s[static_cast<std::size_t>(j)] = '1';
  }
  return s;
}

std::string order_key(const WitnessBits& w) {
  const int n = static_cast<int>(w.b.size());
  std::string key;
  for (Row r : w.b) key += row_bits(r, n);
  for (Row r : w.c) key += row_bits(r, n);
  return key;
}

void merge_stats(SearchStats& into, const SearchStats& from) {
  into.nodes_expanded += from.nodes_expanded;
  into.witnesses_found += from.witnesses_found;
  for (const auto& [rule, count] : from.prunes_by_rule) into.prunes_by_rule[rule] += count;
  into.exhausted = from.exhausted;
}

}  // namespace

bool WitnessBits::trivial() const {
  return std::all_of(b.begin(), b.end(), [](Row r) { return r == 0; }) ||
         std::all_of(c.begin(), c.end(), [](Row r) { return r == 0; });
}

bool witness_less(const WitnessBits& x, const WitnessBits& y) { return order_key(x) < order_key(y); }

SearchStats search_witnesses(const Graph& target, const SearchConfig& cfg, const WitnessVisitor& visit) {
  if (cfg.node_limit == 0) throw ParameterError("node_limit must be positive");
  if (cfg.include_trivial) {
    // One pass over everything: nontrivial first, then trivial, so the
    // visitor sees a stable order regardless of mode.
    SearchStats stats = Searcher(target, cfg, visit, TrivialFilter::exclude).run();
    if (!stats.exhausted) return stats;
    if (cfg.mode == SearchMode::first && stats.witnesses_found > 0) return stats;
    SearchStats rest = Searcher(target, cfg, visit, TrivialFilter::only).run();
    merge_stats(stats, rest);
    return stats;
  }
  SearchStats stats = Searcher(target, cfg, visit, TrivialFilter::exclude).run();
  if (stats.exhausted && stats.witnesses_found == 0 && target.edge_count() == 0) {
    SearchStats rest = Searcher(target, cfg, visit, TrivialFilter::only).run();
    merge_stats(stats, rest);
  }
  return stats;
}

Graph fixed_graph(const Graph& g) { return canonical_form(g).graph; }

IntMatrix fix_labeling(const Graph& g) { return adjacency(fixed_graph(g)); }

Factorization to_factorization(const Graph& target, const WitnessBits& w) {
  const int n = target.order();
  return Factorization::make(adjacency(target), adjacency(Graph::from_rows(n, w.b)),
                             adjacency(Graph::from_rows(n, w.c)));
}

std::vector<Factorization> factor_naive(const Graph& g) {
  constexpr int kNaiveCap = 5;
  if (g.order() > kNaiveCap) {
    throw UnsupportedSizeError("factor_naive is limited to order " + std::to_string(kNaiveCap) + ", got " +
                               std::to_string(g.order()));
  }
  const Graph target = fixed_graph(g);
  const int n = target.order();
  const int bits = n * (n - 1) / 2;

  std::vector<std::vector<Row>> all;
  for (std::uint32_t mask = 0; mask < (1U << bits); ++mask) {
    std::vector<Row> rows(static_cast<std::size_t>(n), 0);
    int k = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++k) {
        if ((mask >> k) & 1U) {
          rows[static_cast<std::size_t>(i)] |= Row{1} << j;
          rows[static_cast<std::size_t>(j)] |= Row{1} << i;
        }
      }
    }
    all.push_back(std::move(rows));
  }

  std::vector<WitnessBits> found;
  for (const auto& b : all) {
    for (const auto& c : all) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) {
        for (int j = 0; j < n && ok; ++j) {
          const int want = static_cast<int>((target.row(i) >> j) & 1U);
          ok = std::popcount(b[static_cast<std::size_t>(i)] & c[static_cast<std::size_t>(j)]) == want;
        }
      }
      if (ok) found.push_back({b, c});
    }
  }
  std::sort(found.begin(), found.end(), witness_less);
  std::vector<Factorization> out;
  for (const auto& w : found) out.push_back(to_factorization(target, w));
  return out;
}

SearchResult factor_search(const Graph& g, const SearchConfig& cfg) {
  if (g.order() > cfg.order_cap) {
    throw UnsupportedSizeError("order " + std::to_string(g.order()) + " exceeds the search cap " +
                               std::to_string(cfg.order_cap));
  }
  const Graph target = fixed_graph(g);
  std::vector<WitnessBits> found;
  SearchStats stats = search_witnesses(target, cfg, [&](const WitnessBits& w) {
    found.push_back(w);
    return cfg.mode == SearchMode::all;
  });
  std::sort(found.begin(), found.end(), witness_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  SearchResult result{{}, stats};
  for (const auto& w : found) result.witnesses.push_back(to_factorization(target, w));
  return result;
}

FactorPair factor_pair_of(const Factorization& f) {
  std::string h = canonical_key(f.h);
  std::string k = canonical_key(f.k);
  if (k < h) std::swap(h, k);
  return {std::move(h), std::move(k)};
}

std::set<FactorPair> dedup_pairs(const std::vector<Factorization>& witnesses) {
  std::set<FactorPair> out;
  for (const auto& f : witnesses) out.insert(factor_pair_of(f));
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::unknown:
      return "unknown";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "yes") return Verdict::yes;
  if (s == "no") return Verdict::no;
  if (s == "unknown") return Verdict::unknown;
  throw ParameterError("unknown verdict '" + s + "'");
}

FactorizabilityResult is_factorizable(const Graph& g, const SearchConfig& cfg) {
  FactorizabilityResult result{Verdict::unknown, std::nullopt, screen(g), {}};
  if (result.screen.ruled_out()) {
    result.verdict = Verdict::no;
    return result;
  }
  if (g.order() > cfg.order_cap || g.order() > kMaxCanonicalOrder) return result;

  SearchConfig first = cfg;
  first.mode = SearchMode::first;
  const Graph target = fixed_graph(g);
  std::optional<WitnessBits> witness;
  result.stats = search_witnesses(target, first, [&](const WitnessBits& w) {
    witness = w;
    return false;
  });
  if (witness) {
    result.verdict = Verdict::yes;
    result.witness = to_factorization(target, *witness);
  } else if (result.stats.exhausted) {
    result.verdict = Verdict::no;
  }
  return result;
}

}  // namespace gfactor
