#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ofamas/errors.hpp"

namespace ofamas::graph {

// Ordered role pool. Domain roles occupy indices [0, size()); the reserved
// END and START tokens sit directly above them and never appear as node
// labels in a stored graph.
class RoleVocabulary {
public:
  RoleVocabulary(); // default 19-role pool
  explicit RoleVocabulary(std::vector<std::string> roles);

  int size() const { return static_cast<int>(roles_.size()); }
  int end_index() const { return size(); }
  int start_index() const { return size() + 1; }
  // Distribution width of the role prediction head: domain roles plus END.
  int num_classes() const { return size() + 1; }

  const std::string& role_name(int index) const;
  int index_of(const std::string& name) const; // DataError when unknown
  const std::vector<std::string>& roles() const { return roles_; }

  static constexpr const char* kStartToken = "<START>";
  static constexpr const char* kEndToken = "<END>";

  // The built-in pool, also shipped as core/data/roles.json.
  static const std::vector<std::string>& default_roles();

  static RoleVocabulary from_json(const std::string& json_text);
  std::string to_json() const;

private:
  std::vector<std::string> roles_;
};

using Edge = std::pair<int, int>; // (source, target), source < target

// Role-annotated DAG. Node position is generation order; every edge points
// from a lower to a strictly higher index, so stored graphs are acyclic by
// construction. Raw external records can bypass the checked mutators via
// from_raw() and must then be passed through validate().
class MasGraph {
public:
  MasGraph() = default;
  explicit MasGraph(std::optional<std::string> query) : query_(std::move(query)) {}

  static MasGraph from_raw(std::vector<int> roles, std::vector<Edge> edges,
                           std::optional<std::string> query = std::nullopt);

  int add_node(int role_index);
  void add_edge(int source, int target);

  int node_count() const { return static_cast<int>(roles_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int role_of(int node) const { return roles_.at(static_cast<std::size_t>(node)); }
  const std::vector<int>& roles() const { return roles_; }
  const std::set<Edge>& edges() const { return edges_; }
  bool has_edge(int source, int target) const { return edges_.count({source, target}) > 0; }
  std::vector<int> in_neighbors(int node) const;

  const std::optional<std::string>& query() const { return query_; }
  void set_query(std::optional<std::string> q) { query_ = std::move(q); }

  bool operator==(const MasGraph& other) const {
    return roles_ == other.roles_ && edges_ == other.edges_;
  }

private:
  std::vector<int> roles_;
  std::set<Edge> edges_;
  std::optional<std::string> query_;
};

enum class TopologyKind { Chain, Star, Tree, Layered, Complete, Mesh };

const std::vector<TopologyKind>& all_topology_kinds();
std::string kind_name(TopologyKind kind);
// Accepts the synthesis alias "FullConnected" for Complete.
TopologyKind kind_from_name(const std::string& name);
int min_nodes_for(TopologyKind kind);

// Canonical constructions:
//   Chain    0->1->...->n-1
//   Star     hub 0 -> every leaf
//   Tree     complete binary tree, parent floor((i-1)/2) -> i
//   Layered  consecutive balanced layers (2 layers for n<6, else 3),
//            full bipartite edges between consecutive layers
//   Complete i -> j for all i < j
//   Mesh     chain plus skip edges i -> i+2
MasGraph make_canonical(TopologyKind kind, int n, const std::vector<int>& roles);

struct ValidityReport {
  bool ok = true;
  std::vector<std::string> issues;
};

// Structural checks for graphs of arbitrary provenance: index ordering,
// duplicates, role range (when a vocabulary size is given), reserved-token
// misuse, plus an independent Kahn acyclicity pass.
ValidityReport validate(const MasGraph& g, int vocab_size = -1);

// Deterministic topological order: Kahn's algorithm with lowest-index
// tie-break. The raw-edge overload throws StructureError on cycles.
std::vector<int> topological_order(const MasGraph& g);
std::vector<int> topological_order(int node_count, const std::vector<Edge>& edges);

// Edge-string form "a->b c->d" with single-space separators, sorted by
// (source, target). parse rejects malformed tokens, self-loops and
// backward edges with the token position.
std::set<Edge> parse_edges(const std::string& text);
std::string format_edges(const std::set<Edge>& edges);

// Graph JSON: {"query": str|null, "roles": [role names], "edges": "a->b ..."}
std::string to_json(const MasGraph& g, const RoleVocabulary& vocab);
MasGraph graph_from_json(const std::string& json_text, const RoleVocabulary& vocab);

// DOT export: one node per agent labelled "i: RoleName".
std::string to_dot(const MasGraph& g, const RoleVocabulary& vocab,
                   const std::string& name = "mas");

} // namespace ofamas::graph
