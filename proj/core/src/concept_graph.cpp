#include "hypermediator/concept_graph.hpp"

#include "hypermediator/errors.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace hypermediator {

namespace {

constexpr std::array<std::string_view, 4> kEdgeKindNames = {"part_whole", "specification",
                                                            "analogy", "associative"};
constexpr std::array<std::string_view, 3> kWeightClassNames = {"weak", "moderate", "strong"};

bool qualifies(const Edge& edge, const WeightThresholds& thresholds, WeightClass min_class) {
  return weight_class(edge.weight, thresholds) >= min_class;
}

}  // namespace

std::string_view to_string(EdgeKind kind) { return kEdgeKindNames[static_cast<std::size_t>(kind)]; }

std::optional<EdgeKind> edge_kind_from_string(std::string_view name) {
  for (EdgeKind kind : kAllEdgeKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view to_string(WeightClass weight_class) {
  return kWeightClassNames[static_cast<std::size_t>(weight_class)];
}

std::optional<WeightClass> weight_class_from_string(std::string_view name) {
  const std::string lowered = normalize_text(name);
  for (std::size_t i = 0; i < kWeightClassNames.size(); ++i) {
    if (kWeightClassNames[i] == lowered) return static_cast<WeightClass>(i);
  }
  return std::nullopt;
}

void WeightThresholds::check() const {
  if (moderate_min < 2 || strong_min < 2 || moderate_min > strong_min) {
    throw ConfigError("invalid weight thresholds: need 2 <= moderate_min (" +
                      std::to_string(moderate_min) + ") <= strong_min (" +
                      std::to_string(strong_min) + ")");
  }
}

WeightClass weight_class(std::size_t weight, const WeightThresholds& thresholds) {
  if (weight >= thresholds.strong_min) return WeightClass::Strong;
  if (weight >= thresholds.moderate_min) return WeightClass::Moderate;
  return WeightClass::Weak;
}

AnalogyLabels default_analogy_labels() { return {"analogy", "analogie", "analog"}; }

EdgeKind classify_relation(std::string_view rel_type, const AnalogyLabels& analogy_labels) {
  return analogy_labels.contains(normalize_text(rel_type)) ? EdgeKind::Analogy
                                                            : EdgeKind::Associative;
}

bool edge_key_less(const Edge& lhs, const Edge& rhs) {
  return std::tie(lhs.a, lhs.b, lhs.kind) < std::tie(rhs.a, rhs.b, rhs.kind);
}

ConceptGraph::ConceptGraph(std::vector<ConceptNode> nodes, std::vector<Edge> edges,
                           WeightThresholds thresholds, TagCounts fragments_by_kind)
    : nodes_(std::move(nodes)),
      edges_(std::move(edges)),
      thresholds_(thresholds),
      fragments_by_kind_(fragments_by_kind) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!node_index_.emplace(nodes_[i].id, i).second) {
      throw Error("duplicate graph node: " + nodes_[i].id.str());
    }
  }
  incidence_.resize(nodes_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& edge = edges_[i];
    auto a = node_index_.find(edge.a);
    auto b = node_index_.find(edge.b);
    if (a == node_index_.end() || b == node_index_.end()) {
      throw Error("edge endpoint missing from graph: " + edge.a.str() + " / " + edge.b.str());
    }
    if (edge.a == edge.b) throw Error("self-loop edge on " + edge.a.str());
    if (edge.weight == 0 || edge.weight != edge.supporting_fragments.size()) {
      throw Error("edge weight does not match its supporting fragments: " + edge.a.str() +
                  " / " + edge.b.str());
    }
    if (i > 0 && !edge_key_less(edges_[i - 1], edge)) {
      throw Error("edges are not in canonical order or are duplicated");
    }
    incidence_[a->second].push_back(i);
    incidence_[b->second].push_back(i);
  }
}

const ConceptNode* ConceptGraph::find_node(const ConceptId& id) const {
  auto it = node_index_.find(id);
  return it == node_index_.end() ? nullptr : &nodes_[it->second];
}

std::span<const std::size_t> ConceptGraph::incident_edges(const ConceptId& id) const {
  auto it = node_index_.find(id);
  if (it == node_index_.end()) return {};
  return incidence_[it->second];
}

GraphBuild build_graph(const Corpus& corpus, const WeightThresholds& thresholds,
                       const AnalogyLabels& analogy_labels) {
  thresholds.check();
  AnalogyLabels labels;
  for (const std::string& label : analogy_labels) labels.insert(normalize_text(label));

  GraphBuild result;
  std::map<ConceptId, TagCounts> node_counts;
  std::map<std::tuple<ConceptId, ConceptId, EdgeKind>, Edge> edges;

  auto add_edge = [&](const Fragment& fragment, ConceptId a, ConceptId b, EdgeKind kind,
                      const std::string* label) {
    if (a == b) {
      result.warnings.push_back(
          {fragment.fragment_id, "self-referential " + std::string(element_name(fragment.kind)) +
                                     " on \"" + a.str() + "\" dropped"});
      return;
    }
    if (!is_directed(kind) && b < a) std::swap(a, b);
    Edge& edge = edges[{a, b, kind}];
    if (edge.weight == 0) {
      edge.a = a;
      edge.b = b;
      edge.kind = kind;
    }
    ++edge.weight;
    edge.supporting_fragments.push_back(fragment.fragment_id);
    if (label != nullptr) edge.rel_labels.push_back(*label);
  };

  for (const Article& article : corpus.articles()) {
    for (const Fragment& fragment : article.fragments) {
      for (const ConceptId& id : mentioned_concepts(fragment)) ++node_counts[id][fragment.kind];

      if (const auto* pw = std::get_if<PartWholeAttrs>(&fragment.attrs)) {
        add_edge(fragment, pw->holonym, pw->meronym, EdgeKind::PartWhole, nullptr);
      } else if (const auto* sp = std::get_if<SpecificationAttrs>(&fragment.attrs)) {
        add_edge(fragment, sp->hypernym, sp->hyponym, EdgeKind::Specification, nullptr);
      } else if (const auto* rel = std::get_if<RelationAttrs>(&fragment.attrs)) {
        if (normalize_text(rel->rel_type).empty()) {
          result.warnings.push_back({fragment.fragment_id, "relation has an empty type; "
                                                           "classified as associative"});
        }
        add_edge(fragment, rel->a, rel->b, classify_relation(rel->rel_type, labels),
                 &rel->rel_type);
      }
    }
  }

  std::vector<ConceptNode> nodes;
  nodes.reserve(node_counts.size());
  for (auto& [id, counts] : node_counts) nodes.push_back({id, counts});

  std::vector<Edge> edge_list;
  edge_list.reserve(edges.size());
  for (auto& [key, edge] : edges) {
    std::ranges::sort(edge.rel_labels);
    edge_list.push_back(std::move(edge));
  }

  result.graph = ConceptGraph(std::move(nodes), std::move(edge_list), thresholds,
                              corpus.fragment_counts());
  return result;
}

GraphStats stats(const ConceptGraph& graph) {
  GraphStats out;
  out.concept_count = graph.nodes().size();
  out.edge_count = graph.edges().size();
  for (const Edge& edge : graph.edges()) ++out.edges_by_kind[static_cast<std::size_t>(edge.kind)];
  out.fragments_by_kind = graph.fragments_by_kind();
  return out;
}

EgoNetwork ego_network(const ConceptGraph& graph, const ConceptId& center, std::size_t depth,
                       WeightClass min_class) {
  if (!graph.contains(center)) throw UnknownConcept(center.str());
  if (depth < 1) throw Error("ego network depth must be at least 1");

  std::map<ConceptId, std::size_t> visited{{center, 0}};
  std::vector<ConceptId> order{center};
  std::vector<std::size_t> hops{0};
  std::vector<ConceptId> frontier{center};

  for (std::size_t layer = 1; layer <= depth && !frontier.empty(); ++layer) {
    std::set<ConceptId> next;
    for (const ConceptId& id : frontier) {
      for (std::size_t e : graph.incident_edges(id)) {
        const Edge& edge = graph.edges()[e];
        if (!qualifies(edge, graph.thresholds(), min_class)) continue;
        const ConceptId& neighbour = edge.other(id);
        if (!visited.contains(neighbour)) next.insert(neighbour);
      }
    }
    frontier.assign(next.begin(), next.end());
    for (const ConceptId& id : frontier) {
      visited.emplace(id, layer);
      order.push_back(id);
      hops.push_back(layer);
    }
  }

  std::vector<ConceptNode> nodes;
  nodes.reserve(order.size());
  for (const ConceptId& id : order) nodes.push_back(*graph.find_node(id));

  std::vector<Edge> edges;
  for (const Edge& edge : graph.edges()) {
    if (qualifies(edge, graph.thresholds(), min_class) && visited.contains(edge.a) &&
        visited.contains(edge.b)) {
      edges.push_back(edge);
    }
  }

  return {ConceptGraph(std::move(nodes), std::move(edges), graph.thresholds(),
                       graph.fragments_by_kind()),
          std::move(hops)};
}

std::vector<Path> find_paths(const ConceptGraph& graph, const ConceptId& from, const ConceptId& to,
                             std::size_t max_hops, WeightClass min_class) {
  if (!graph.contains(from)) throw UnknownConcept(from.str());
  if (!graph.contains(to)) throw UnknownConcept(to.str());
  if (max_hops < 1) throw Error("max_hops must be at least 1");

  std::vector<Path> paths;
  if (from == to) return paths;

  Path current;
  std::set<ConceptId> on_path{from};
  auto dfs = [&](auto&& self, const ConceptId& at) -> void {
    for (std::size_t e : graph.incident_edges(at)) {
      const Edge& edge = graph.edges()[e];
      if (!qualifies(edge, graph.thresholds(), min_class)) continue;
      const ConceptId& next = edge.other(at);
      if (on_path.contains(next)) continue;
      current.push_back({at, next, e});
      if (next == to) {
        paths.push_back(current);
      } else if (current.size() < max_hops) {
        on_path.insert(next);
        self(self, next);
        on_path.erase(next);
      }
      current.pop_back();
    }
  };
  dfs(dfs, from);

  auto sort_key = [&](const Path& path) {
    std::vector<std::string_view> node_seq;
    std::vector<EdgeKind> kinds;
    std::vector<std::size_t> indices;
    for (const PathStep& step : path) {
      node_seq.push_back(step.to.str());
      kinds.push_back(graph.edges()[step.edge_index].kind);
      indices.push_back(step.edge_index);
    }
    return std::tuple(path.size(), node_seq, kinds, indices);
  };
  std::ranges::sort(paths, [&](const Path& x, const Path& y) { return sort_key(x) < sort_key(y); });
  return paths;
}

}  // namespace hypermediator
