#include "ofamas/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace ofamas::graph {

// -- RoleVocabulary ------------------------------------------------------

const std::vector<std::string>& RoleVocabulary::default_roles() {
  static const std::vector<std::string> kRoles = {
      "Knowledgeable Expert",
      "Critic",
      "Mathematician",
      "Psychologist",
      "Historian",
      "Doctor",
      "Project Manager",
      "Algorithm Designer",
      "Programming Expert",
      "Test Analyst",
      "Bug Fixer",
      "Math Solver",
      "Mathematical Analyst",
      "Programming Expert for Math",
      "Inspector",
      "Knowledgeable Expert for Choice Question",
      "Critic for Choice Question",
      "Math Solver for Choice Question",
      "Final Decision Maker",
  };
  return kRoles;
}

RoleVocabulary::RoleVocabulary() : roles_(default_roles()) {}

RoleVocabulary::RoleVocabulary(std::vector<std::string> roles) : roles_(std::move(roles)) {
  if (roles_.empty()) throw ConfigError("role vocabulary must not be empty");
  std::set<std::string> seen;
  for (const auto& r : roles_) {
    if (r == kStartToken || r == kEndToken) {
      throw ConfigError("reserved token used as a role name: " + r);
    }
    if (!seen.insert(r).second) throw ConfigError("duplicate role name: " + r);
  }
}

const std::string& RoleVocabulary::role_name(int index) const {
  if (index < 0 || index > start_index()) {
    throw DataError("role index " + std::to_string(index) + " out of range");
  }
  static const std::string kEnd = kEndToken;
  static const std::string kStart = kStartToken;
  if (index == end_index()) return kEnd;
  if (index == start_index()) return kStart;
  return roles_[static_cast<std::size_t>(index)];
}

int RoleVocabulary::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (roles_[static_cast<std::size_t>(i)] == name) return i;
  }
  throw DataError("unknown role name: " + name);
}

RoleVocabulary RoleVocabulary::from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("role vocabulary JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParseError("role vocabulary JSON must be an array of names");
  std::vector<std::string> roles;
  for (const auto& item : j) {
    if (!item.is_string()) throw ParseError("role vocabulary entries must be strings");
    roles.push_back(item.get<std::string>());
  }
  return RoleVocabulary(std::move(roles));
}

std::string RoleVocabulary::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : roles_) j.push_back(r);
  return j.dump(2) + "\n";
}

// -- MasGraph --------------------------------------------------------------

MasGraph MasGraph::from_raw(std::vector<int> roles, std::vector<Edge> edges,
                            std::optional<std::string> query) {
  MasGraph g(std::move(query));
  g.roles_ = std::move(roles);
  for (const Edge& e : edges) g.edges_.insert(e);
  return g;
}

int MasGraph::add_node(int role_index) {
  if (role_index < 0) throw DataError("negative role index");
  roles_.push_back(role_index);
  return node_count() - 1;
}

void MasGraph::add_edge(int source, int target) {
  if (source < 0 || target >= node_count() || source >= target) {
    throw StructureError("edge (" + std::to_string(source) + "," + std::to_string(target) +
                         ") violates the index-ordering constraint");
  }
  if (!edges_.insert({source, target}).second) {
    throw StructureError("duplicate edge (" + std::to_string(source) + "," +
                         std::to_string(target) + ")");
  }
}

std::vector<int> MasGraph::in_neighbors(int node) const {
  std::vector<int> out;
  for (const Edge& e : edges_) {
    if (e.second == node) out.push_back(e.first);
  }
  return out;
}

// -- topology kinds ---------------------------------------------------------

const std::vector<TopologyKind>& all_topology_kinds() {
  static const std::vector<TopologyKind> kKinds = {
      TopologyKind::Chain,   TopologyKind::Star,     TopologyKind::Tree,
      TopologyKind::Layered, TopologyKind::Complete, TopologyKind::Mesh,
  };
  return kKinds;
}

std::string kind_name(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::Chain: return "Chain";
    case TopologyKind::Star: return "Star";
    case TopologyKind::Tree: return "Tree";
    case TopologyKind::Layered: return "Layered";
    case TopologyKind::Complete: return "Complete";
    case TopologyKind::Mesh: return "Mesh";
  }
  throw ContractError("unreachable topology kind");
}

TopologyKind kind_from_name(const std::string& name) {
  for (TopologyKind k : all_topology_kinds()) {
    if (kind_name(k) == name) return k;
  }
  if (name == "FullConnected") return TopologyKind::Complete;
  throw DataError("unknown topology kind: " + name);
}

int min_nodes_for(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::Chain: return 2;
    case TopologyKind::Mesh: return 4;
    default: return 3;
  }
}

namespace {

std::vector<int> layer_sizes(int n) {
  const int layers = n < 6 ? 2 : 3;
  std::vector<int> sizes(static_cast<std::size_t>(layers), n / layers);
  for (int i = 0; i < n % layers; ++i) sizes[static_cast<std::size_t>(i)] += 1;
  return sizes;
}

} // namespace

MasGraph make_canonical(TopologyKind kind, int n, const std::vector<int>& roles) {
  if (n < min_nodes_for(kind)) {
    throw InputError(kind_name(kind) + " requires at least " +
                     std::to_string(min_nodes_for(kind)) + " nodes, got " + std::to_string(n));
  }
  if (static_cast<int>(roles.size()) != n) {
    throw InputError("role assignment has " + std::to_string(roles.size()) + " entries for " +
                     std::to_string(n) + " nodes");
  }
  MasGraph g;
  for (int r : roles) g.add_node(r);
  switch (kind) {
    case TopologyKind::Chain:
      for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
      break;
    case TopologyKind::Star:
      for (int i = 1; i < n; ++i) g.add_edge(0, i);
      break;
    case TopologyKind::Tree:
      for (int i = 1; i < n; ++i) g.add_edge((i - 1) / 2, i);
      break;
    case TopologyKind::Layered: {
      const std::vector<int> sizes = layer_sizes(n);
      int start = 0;
      for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
        const int next_start = start + sizes[l];
        for (int u = start; u < next_start; ++u) {
          for (int v = next_start; v < next_start + sizes[l + 1]; ++v) g.add_edge(u, v);
        }
        start = next_start;
      }
      break;
    }
    case TopologyKind::Complete:
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
      }
      break;
    case TopologyKind::Mesh:
      for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
      for (int i = 0; i + 2 < n; ++i) g.add_edge(i, i + 2);
      break;
  }
  return g;
}

// -- validation ---------------------------------------------------------------

ValidityReport validate(const MasGraph& g, int vocab_size) {
  ValidityReport report;
  auto flag = [&report](std::string issue) {
    report.ok = false;
    report.issues.push_back(std::move(issue));
  };

  const int n = g.node_count();
  if (n < 1) flag("graph has no nodes");

  for (int v = 0; v < n; ++v) {
    const int role = g.role_of(v);
    if (vocab_size >= 0) {
      if (role == vocab_size || role == vocab_size + 1) {
        flag("node " + std::to_string(v) + " is labelled with a reserved token");
      } else if (role < 0 || role >= vocab_size) {
        flag("node " + std::to_string(v) + " role index " + std::to_string(role) +
             " out of range");
      }
    } else if (role < 0) {
      flag("node " + std::to_string(v) + " has a negative role index");
    }
  }

  for (const Edge& e : g.edges()) {
    if (e.first == e.second) {
      flag("self-loop at node " + std::to_string(e.first));
    } else if (e.first > e.second) {
      flag("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
           ") points backward in generation order");
    }
    if (e.first < 0 || e.second >= n) {
      flag("edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
           ") references a missing node");
    }
  }

  // Independent acyclicity re-check via Kahn's algorithm, ignoring the
  // index-ordering findings above.
  if (n >= 1) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    bool in_range = true;
    for (const Edge& e : edges) {
      in_range = in_range && e.first >= 0 && e.first < n && e.second >= 0 && e.second < n &&
                 e.first != e.second;
    }
    if (in_range) {
      try {
        topological_order(n, edges);
      } catch (const StructureError&) {
        flag("cycle detected by Kahn's algorithm");
      }
    }
  }
  return report;
}

std::vector<int> topological_order(int node_count, const std::vector<Edge>& edges) {
  std::vector<int> in_degree(static_cast<std::size_t>(node_count), 0);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(node_count));
  for (const Edge& e : edges) {
    out[static_cast<std::size_t>(e.first)].push_back(e.second);
    in_degree[static_cast<std::size_t>(e.second)] += 1;
  }
  std::set<int> ready; // ordered => lowest-index tie-break
  for (int v = 0; v < node_count; ++v) {
    if (in_degree[static_cast<std::size_t>(v)] == 0) ready.insert(v);
  }
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(node_count));
  while (!ready.empty()) {
    const int v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (int w : out[static_cast<std::size_t>(v)]) {
      if (--in_degree[static_cast<std::size_t>(w)] == 0) ready.insert(w);
    }
  }
  if (static_cast<int>(order.size()) != node_count) {
    throw StructureError("cycle detected: topological order covers " +
                         std::to_string(order.size()) + " of " + std::to_string(node_count) +
                         " nodes");
  }
  return order;
}

std::vector<int> topological_order(const MasGraph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  return topological_order(g.node_count(), edges);
}

// -- edge strings ----------------------------------------------------------

std::set<Edge> parse_edges(const std::string& text) {
  std::set<Edge> edges;
  if (text.empty()) return edges;
  std::istringstream in(text);
  std::string token;
  int position = 0;
  while (in >> token) {
    position += 1;
    const auto arrow = token.find("->");
    if (arrow == std::string::npos || arrow == 0 || arrow + 2 >= token.size()) {
      throw ParseError("edge token " + std::to_string(position) + " ('" + token +
                       "') is not of the form a->b");
    }
    int a = 0, b = 0;
    try {
      std::size_t consumed = 0;
      a = std::stoi(token.substr(0, arrow), &consumed);
      if (consumed != arrow) throw std::invalid_argument("trailing");
      const std::string rhs = token.substr(arrow + 2);
      b = std::stoi(rhs, &consumed);
      if (consumed != rhs.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError("edge token " + std::to_string(position) + " ('" + token +
                       "') is not of the form a->b");
    }
    if (a < 0 || b < 0) {
      throw ParseError("edge token " + std::to_string(position) + " has a negative endpoint");
    }
    if (a == b) {
      throw ParseError("edge token " + std::to_string(position) + " ('" + token +
                       "') is a self-loop");
    }
    if (a > b) {
      throw ParseError("edge token " + std::to_string(position) + " ('" + token +
                       "') points backward in generation order");
    }
    edges.insert({a, b});
  }
  return edges;
}

std::string format_edges(const std::set<Edge>& edges) {
  std::ostringstream out;
  bool first = true;
  for (const Edge& e : edges) { // std::set iterates in (source, target) order
    if (!first) out << " ";
    out << e.first << "->" << e.second;
    first = false;
  }
  return out.str();
}

// -- JSON / DOT ---------------------------------------------------------------

std::string to_json(const MasGraph& g, const RoleVocabulary& vocab) {
  nlohmann::ordered_json j;
  if (g.query().has_value()) {
    j["query"] = *g.query();
  } else {
    j["query"] = nullptr;
  }
  nlohmann::ordered_json roles = nlohmann::ordered_json::array();
  for (int v = 0; v < g.node_count(); ++v) roles.push_back(vocab.role_name(g.role_of(v)));
  j["roles"] = std::move(roles);
  j["edges"] = format_edges(g.edges());
  return j.dump();
}

MasGraph graph_from_json(const std::string& json_text, const RoleVocabulary& vocab) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("graph JSON: ") + e.what());
  }
  if (!j.contains("roles") || !j["roles"].is_array()) {
    throw ParseError("graph JSON is missing the roles array");
  }
  std::vector<int> roles;
  for (const auto& r : j["roles"]) {
    if (!r.is_string()) throw ParseError("graph JSON roles must be strings");
    roles.push_back(vocab.index_of(r.get<std::string>()));
  }
  std::set<Edge> edges = parse_edges(j.value("edges", std::string()));
  std::optional<std::string> query;
  if (j.contains("query") && j["query"].is_string()) query = j["query"].get<std::string>();
  MasGraph g = MasGraph::from_raw(std::move(roles),
                                  std::vector<Edge>(edges.begin(), edges.end()), std::move(query));
  const ValidityReport report = validate(g, vocab.size());
  if (!report.ok) {
    throw DataError("graph JSON failed validation: " + report.issues.front());
  }
  return g;
}

std::string to_dot(const MasGraph& g, const RoleVocabulary& vocab, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  rankdir=LR;\n";
  for (int v = 0; v < g.node_count(); ++v) {
    out << "  n" << v << " [label=\"" << v << ": " << vocab.role_name(g.role_of(v)) << "\"];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  n" << e.first << " -> n" << e.second << ";\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace ofamas::graph
