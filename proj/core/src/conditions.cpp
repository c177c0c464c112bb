#include "gfactor/conditions.hpp"

#include <algorithm>
#include <map>

#include "gfactor/canonical.hpp"
#include "gfactor/error.hpp"
#include "gfactor/linalg.hpp"

namespace gfactor {

namespace {

struct RuleSpec {
  const char* id;
  const char* ref;
};

constexpr RuleSpec kRules[] = {
    {"R1", "factorizable graphs have an even number of edges"},
    {"R2", "a factorizable graph with neither C4 nor isolated vertices has even order"},
    {"R3", "no tree of order at least 2 is factorizable"},
    {"R4", "no forest without isolated vertices and with an odd number of components is factorizable"},
};

const std::map<std::string, std::string>& assertion_refs() {
  static const std::map<std::string, std::string> refs = {
      {"V1", "degree product: deg_G(v) = deg_H(v) deg_K(v)"},
      {"V2", "vertices connected in H share their K-degree (and symmetrically)"},
      {"V3", "edge bounds: min(|E(H)|,|E(K)|) <= |E(G)| <= min(D(H)|E(K)|, D(K)|E(H)|)"},
      {"V4", "edge bound for n > 4: |E(G)| <= |E(H)||E(K)|/2"},
      {"V5", "connected regular G forces regular factors"},
      {"V6", "regular factors give a regular product"},
      {"V7", "a bipartite product has at most one connected factor"},
      {"V8", "connected bipartite G: one factor bipartite across G's parts, the other inside them"},
      {"V9", "connected non-bipartite factor and a factor without isolated vertices give connected G"},
      {"V10", "connected bipartite factor with disconnected G: other factor regular bipartite, n even, "
              "G two non-bipartite components"},
      {"V11", "odd order with a connected factor and a factor without isolated vertices gives connected G"},
      {"V12", "disconnected G with a connected factor and a factor without isolated vertices: both factors "
              "bipartite"},
      {"V13", "connected G: lambda_max(G) = lambda_max(H) lambda_max(K)"},
  };
  return refs;
}

struct Facts {
  const Graph* graph;
  int edges;
  int max_deg;
  bool connected;
  bool bipartite;
  bool regular;
  bool isolated;
  std::vector<std::vector<int>> blocks;

  explicit Facts(const Graph& g)
      : graph(&g),
        edges(g.edge_count()),
        max_deg(max_degree(g)),
        connected(false),
        bipartite(is_bipartite(g)),
        regular(is_regular(g)),
        isolated(has_isolated_vertex(g)),
        blocks(components(g)) {
    connected = blocks.size() == 1;
  }
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Every vertex in each block of `partition` has the same degree in `other`.
std::optional<std::string> first_mixed_block(const Facts& partition, const Graph& other) {
  for (const auto& block : partition.blocks) {
    for (int v : block) {
      if (other.degree(v) != other.degree(block.front())) {
        return "vertices " + std::to_string(block.front()) + " and " + std::to_string(v) + " have degrees " +
               std::to_string(other.degree(block.front())) + " and " + std::to_string(other.degree(v));
      }
    }
  }
  return std::nullopt;
}

class Recorder {
 public:
  void add(const char* id, bool applicable, bool holds, std::string expected = {}, std::string observed = {}) {
    out_.push_back(AssertionOutcome{id, applicable, !applicable || holds, std::move(expected), std::move(observed)});
  }
  std::vector<AssertionOutcome> take() { return std::move(out_); }

 private:
  std::vector<AssertionOutcome> out_;
};

}  // namespace

std::string to_string(RuleStatus s) {
  switch (s) {
    case RuleStatus::pass:
      return "pass";
    case RuleStatus::ruled_out:
      return "ruled_out";
    case RuleStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

RuleStatus rule_status_from_string(const std::string& s) {
  if (s == "pass") return RuleStatus::pass;
  if (s == "ruled_out") return RuleStatus::ruled_out;
  if (s == "inconclusive") return RuleStatus::inconclusive;
  throw ParameterError("unknown rule status '" + s + "'");
}

const std::vector<std::string>& rule_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& r : kRules) out.emplace_back(r.id);
    return out;
  }();
  return ids;
}

RuleRecord evaluate_rule(const std::string& rule_id, const Graph& g) {
  const auto* rule = std::find_if(std::begin(kRules), std::end(kRules), [&](const RuleSpec& r) { return rule_id == r.id; });
  if (rule == std::end(kRules)) throw ParameterError("unknown rule id '" + rule_id + "'");

  RuleRecord rec{rule_id, RuleStatus::pass, rule->ref, ""};
  const int n = g.order();
  const int m = g.edge_count();
  if (rule_id == "R1") {
    if (m % 2 == 1) {
      rec.status = RuleStatus::ruled_out;
      rec.detail = "odd edge count " + std::to_string(m);
    } else {
      rec.detail = "edge count " + std::to_string(m) + " is even";
    }
  } else if (rule_id == "R2") {
    const bool c4 = contains_c4(g);
    const bool iso = has_isolated_vertex(g);
    if (!c4 && !iso && n % 2 == 1) {
      rec.status = RuleStatus::ruled_out;
      rec.detail = "C4-free, no isolated vertex, odd order " + std::to_string(n);
    } else {
      rec.detail = c4 ? "contains C4" : iso ? "has an isolated vertex" : "order " + std::to_string(n) + " is even";
    }
  } else if (rule_id == "R3") {
    const auto cls = classify_acyclic(g);
    if (cls.kind == AcyclicKind::tree && n >= 2) {
      rec.status = RuleStatus::ruled_out;
      rec.detail = "tree of order " + std::to_string(n);
    } else {
      rec.detail = cls.kind == AcyclicKind::tree ? "single vertex" : "not a tree";
    }
  } else {
    const auto cls = classify_acyclic(g);
    const bool forest = cls.kind != AcyclicKind::has_cycle;
    const bool iso = has_isolated_vertex(g);
    if (forest && !iso && cls.component_count % 2 == 1) {
      rec.status = RuleStatus::ruled_out;
      rec.detail = "forest without isolated vertices, " + std::to_string(cls.component_count) + " components";
    } else {
      rec.detail = !forest ? "has a cycle"
                   : iso   ? "has an isolated vertex"
                           : std::to_string(cls.component_count) + " components (even)";
    }
  }
  return rec;
}

ConditionReport screen(const Graph& g) {
  ConditionReport report{g.order() <= kMaxCanonicalOrder ? canonical_key(g) : std::string{}, RuleStatus::inconclusive,
                         g.edge_count() == 0, {}};
  for (const auto& id : rule_ids()) {
    report.rules.push_back(evaluate_rule(id, g));
    if (report.rules.back().status == RuleStatus::ruled_out) report.verdict = RuleStatus::ruled_out;
  }
  return report;
}

const std::vector<std::string>& assertion_ids() {
  static const std::vector<std::string> ids = {"V1", "V2", "V3", "V4",  "V5",  "V6", "V7",
                                               "V8", "V9", "V10", "V11", "V12", "V13"};
  return ids;
}

const std::string& assertion_ref(const std::string& assertion_id) {
  const auto& refs = assertion_refs();
  auto it = refs.find(assertion_id);
  if (it == refs.end()) throw ParameterError("unknown assertion id '" + assertion_id + "'");
  return it->second;
}

ViolationList ValidationResult::violations() const {
  ViolationList out;
  for (const auto& o : outcomes) {
    if (o.applicable && !o.holds) out.push_back({o.assertion_id, o.expected, o.observed, assertion_ref(o.assertion_id)});
  }
  return out;
}

ValidationResult validate_detailed(const Factorization& f, double tol) {
  const IntMatrix product = multiply(f.b, f.c);
  for (int i = 0; i < f.a.order(); ++i) {
    for (int j = 0; j < f.a.order(); ++j) {
      if (product(i, j) != f.a(i, j)) throw ProductMismatch(i, j, product(i, j).get_str(), f.a(i, j).get_str());
    }
  }

  const Facts g(f.g), h(f.h), k(f.k);
  const int n = f.g.order();
  Recorder rec;
  ExploratoryObservations ex;

  {  // V1
    std::string observed;
    for (int v = 0; v < n && observed.empty(); ++v) {
      if (f.g.degree(v) != f.h.degree(v) * f.k.degree(v)) {
        observed = "vertex " + std::to_string(v) + ": " + std::to_string(f.g.degree(v)) + " vs " +
                   std::to_string(f.h.degree(v)) + "*" + std::to_string(f.k.degree(v));
      }
    }
    rec.add("V1", true, observed.empty(), "deg_G = deg_H * deg_K at every vertex", observed);
  }
  {  // V2
    auto bad = first_mixed_block(h, f.k);
    if (!bad) bad = first_mixed_block(k, f.h);
    rec.add("V2", true, !bad, "constant opposite-factor degree on every component", bad.value_or(""));
  }
  const bool no_isolated = !h.isolated && !k.isolated;
  {  // V3
    const bool lower = std::min(h.edges, k.edges) <= g.edges;
    const bool upper = g.edges <= std::min(h.max_deg * k.edges, k.max_deg * h.edges);
    rec.add("V3", no_isolated, lower && upper, "min(|E(H)|,|E(K)|) <= |E(G)| <= min(D(H)|E(K)|, D(K)|E(H)|)",
            "|E(G)|=" + std::to_string(g.edges) + " |E(H)|=" + std::to_string(h.edges) + " |E(K)|=" +
                std::to_string(k.edges) + " D(H)=" + std::to_string(h.max_deg) + " D(K)=" + std::to_string(k.max_deg));
    ex.two_sided_edge_bound_applicable = no_isolated;
    ex.two_sided_edge_bound_holds = !no_isolated || g.edges >= std::max(h.edges, k.edges);
  }
  {  // V4
    const bool holds = 2 * g.edges <= h.edges * k.edges;
    rec.add("V4", n > 4 && h.connected && k.connected, holds, "2|E(G)| <= |E(H)||E(K)|",
            std::to_string(2 * g.edges) + " vs " + std::to_string(h.edges * k.edges));
    ex.unguarded_edge_bound_applicable = n > 4 && no_isolated;
    ex.unguarded_edge_bound_holds = !ex.unguarded_edge_bound_applicable || holds;
  }
  rec.add("V5", g.connected && g.regular, h.regular && k.regular, "H and K regular",
          "H regular=" + yes_no(h.regular) + " K regular=" + yes_no(k.regular));
  rec.add("V6", h.regular && k.regular, g.regular, "G regular", "G regular=" + yes_no(g.regular));
  rec.add("V7", n >= 2 && g.bipartite, !(h.connected && k.connected), "at most one connected factor",
          "H connected=" + yes_no(h.connected) + " K connected=" + yes_no(k.connected));
  {  // V8
    bool applicable = n >= 2 && g.connected && g.bipartite;
    bool holds = true;
    std::string observed;
    if (applicable) {
      const auto parts = *bipartition_of(f.g);
      Row left = 0;
      for (int v : parts.left) left |= Row{1} << v;
      const Row right = f.g.vertex_mask() & ~left;
      auto crosses_only = [&](const Graph& x) {
        for (int v = 0; v < n; ++v) {
          if (x.row(v) & (((left >> v) & 1U) ? left : right)) return false;
        }
        return true;
      };
      auto inside_only = [&](const Graph& x) {
        for (int v = 0; v < n; ++v) {
          if (x.row(v) & (((left >> v) & 1U) ? right : left)) return false;
        }
        return true;
      };
      const bool h_cross = crosses_only(f.h), k_cross = crosses_only(f.k);
      const bool h_in = inside_only(f.h), k_in = inside_only(f.k);
      holds = (h_cross && k_in) || (k_cross && h_in);
      observed = "H crosses-only=" + yes_no(h_cross) + " inside-only=" + yes_no(h_in) + "; K crosses-only=" +
                 yes_no(k_cross) + " inside-only=" + yes_no(k_in);
    }
    rec.add("V8", applicable, holds, "one factor bipartite across G's parts, the other inside them", observed);
  }

  // V9-V12 hold with either factor in the role of the connected one, since
  // A = BC = CB for symmetric A.
  const std::pair<const Facts*, const Facts*> roles[] = {{&h, &k}, {&k, &h}};
  {  // V9
    bool applicable = false;
    for (auto [x, y] : roles) applicable |= x->connected && !x->bipartite && !y->isolated;
    rec.add("V9", applicable, g.connected, "G connected", "G connected=" + yes_no(g.connected));
  }
  {  // V10
    bool applicable = false;
    bool holds = true;
    std::string observed;
    for (auto [x, y] : roles) {
      if (!(x->connected && x->bipartite && !y->isolated && !g.connected)) continue;
      applicable = true;
      bool two_nonbipartite = g.blocks.size() == 2;
      if (two_nonbipartite) {
        for (const auto& block : g.blocks) {
          if (is_bipartite(induced_subgraph(f.g, block))) two_nonbipartite = false;
        }
      }
      const bool ok = y->regular && y->bipartite && n % 2 == 0 && two_nonbipartite;
      if (!ok) {
        observed = "other factor regular=" + yes_no(y->regular) + " bipartite=" + yes_no(y->bipartite) +
                   " n=" + std::to_string(n) + " G components=" + std::to_string(g.blocks.size()) +
                   " all non-bipartite=" + yes_no(two_nonbipartite);
      }
      holds = holds && ok;
      if (g.blocks.size() == 2 && n <= 2 * kMaxCanonicalOrder) {
        ex.component_iso_applicable = true;
        ex.components_isomorphic = g.blocks[0].size() == g.blocks[1].size() &&
                                   canonical_key(induced_subgraph(f.g, g.blocks[0])) ==
                                       canonical_key(induced_subgraph(f.g, g.blocks[1]));
      }
    }
    rec.add("V10", applicable, holds, "other factor regular bipartite, n even, G = two non-bipartite components",
            observed);
  }
  {  // V11
    bool applicable = false;
    for (auto [x, y] : roles) applicable |= n % 2 == 1 && x->connected && !y->isolated;
    rec.add("V11", applicable, g.connected, "G connected", "G connected=" + yes_no(g.connected));
  }
  {  // V12
    bool applicable = false;
    for (auto [x, y] : roles) applicable |= !g.connected && x->connected && !y->isolated;
    rec.add("V12", applicable, h.bipartite && k.bipartite, "H and K bipartite",
            "H bipartite=" + yes_no(h.bipartite) + " K bipartite=" + yes_no(k.bipartite));
  }
  {  // V13
    if (g.connected) {
      const auto check = lambda_max_product_check(f.g, f.h, f.k, tol);
      rec.add("V13", true, check.holds, "lambda_max(G) = lambda_max(H) * lambda_max(K)",
              std::to_string(check.lhs) + " vs " + std::to_string(check.rhs));
    } else {
      rec.add("V13", false, true);
    }
  }
  return ValidationResult{rec.take(), ex};
}

ViolationList validate_factorization(const Factorization& f, double tol) {
  return validate_detailed(f, tol).violations();
}

nlohmann::json to_json(const RuleRecord& r) {
  return {{"rule_id", r.rule_id}, {"status", to_string(r.status)}, {"paper_ref", r.paper_ref}, {"detail", r.detail}};
}

nlohmann::json to_json(const ConditionReport& r) {
  nlohmann::json rules = nlohmann::json::array();
  for (const auto& rule : r.rules) rules.push_back(to_json(rule));
  return {{"graph_key", r.graph_key}, {"verdict", to_string(r.verdict)}, {"trivial", r.trivial}, {"rules", rules}};
}

nlohmann::json to_json(const Violation& v) {
  return {{"assertion_id", v.assertion_id},
          {"expected", v.expected},
          {"observed", v.observed},
          {"paper_ref", v.paper_ref}};
}

nlohmann::json to_json(const ViolationList& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& item : v) out.push_back(to_json(item));
  return out;
}

namespace {

template <typename T>
T field(const nlohmann::json& j, const char* name, const char* owner) {
  if (!j.is_object() || !j.contains(name)) {
    throw SchemaError(std::string(owner) + " missing field '" + name + "'", 0);
  }
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw SchemaError(std::string(owner) + " field '" + name + "' has the wrong type", 0);
  }
}

RuleStatus status_field(const nlohmann::json& j, const char* name, const char* owner) {
  try {
    return rule_status_from_string(field<std::string>(j, name, owner));
  } catch (const ParameterError& e) {
    throw SchemaError(std::string(owner) + " field '" + name + "': " + e.what(), 0);
  }
}

}  // namespace

ConditionReport condition_report_from_json(const nlohmann::json& j) {
  ConditionReport r{field<std::string>(j, "graph_key", "ConditionReport"), status_field(j, "verdict", "ConditionReport"),
                    field<bool>(j, "trivial", "ConditionReport"), {}};
  for (const auto& rule : field<nlohmann::json>(j, "rules", "ConditionReport")) {
    r.rules.push_back(RuleRecord{field<std::string>(rule, "rule_id", "rule"), status_field(rule, "status", "rule"),
                                 field<std::string>(rule, "paper_ref", "rule"),
                                 field<std::string>(rule, "detail", "rule")});
  }
  return r;
}

ViolationList violation_list_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw SchemaError("violations is not an array", 0);
  ViolationList out;
  for (const auto& v : j) {
    out.push_back(Violation{field<std::string>(v, "assertion_id", "violation"),
                            field<std::string>(v, "expected", "violation"),
                            field<std::string>(v, "observed", "violation"),
                            field<std::string>(v, "paper_ref", "violation")});
  }
  return out;
}

}  // namespace gfactor
