#pragma once

#include "hypermediator/concept_id.hpp"
#include "hypermediator/corpus.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hypermediator {

enum class EdgeKind : std::uint8_t {
  PartWhole,      // holonym -> meronym
  Specification,  // hypernym -> hyponym
  Analogy,
  Associative,
};

inline constexpr std::array<EdgeKind, 4> kAllEdgeKinds = {
    EdgeKind::PartWhole, EdgeKind::Specification, EdgeKind::Analogy, EdgeKind::Associative};

std::string_view to_string(EdgeKind kind);
std::optional<EdgeKind> edge_kind_from_string(std::string_view name);
constexpr bool is_directed(EdgeKind kind) {
  return kind == EdgeKind::PartWhole || kind == EdgeKind::Specification;
}

enum class WeightClass : std::uint8_t { Weak, Moderate, Strong };

std::string_view to_string(WeightClass weight_class);
std::optional<WeightClass> weight_class_from_string(std::string_view name);

struct WeightThresholds {
  std::size_t strong_min = 3;
  std::size_t moderate_min = 2;

  /// Throws ConfigError unless 2 <= moderate_min <= strong_min.
  void check() const;

  friend bool operator==(const WeightThresholds&, const WeightThresholds&) = default;
};

WeightClass weight_class(std::size_t weight, const WeightThresholds& thresholds);

/// Normalized `type` labels that mark a relation as an analogy.
using AnalogyLabels = std::set<std::string>;
AnalogyLabels default_analogy_labels();

EdgeKind classify_relation(std::string_view rel_type, const AnalogyLabels& analogy_labels);

struct Edge {
  // Directed kinds: a is the whole / general side. Undirected: a < b.
  ConceptId a;
  ConceptId b;
  EdgeKind kind = EdgeKind::Associative;
  std::size_t weight = 0;
  std::vector<std::string> rel_labels;  // sorted multiset, undirected kinds only
  std::vector<std::string> supporting_fragments;

  bool directed() const { return is_directed(kind); }
  const ConceptId& other(const ConceptId& endpoint) const { return endpoint == a ? b : a; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Canonical edge ordering: (a, b, kind).
bool edge_key_less(const Edge& lhs, const Edge& rhs);

struct ConceptNode {
  ConceptId id;
  TagCounts counts;  // fragments mentioning the concept, per kind

  friend bool operator==(const ConceptNode&, const ConceptNode&) = default;
};

struct GraphStats {
  std::size_t concept_count = 0;
  std::size_t edge_count = 0;
  std::array<std::size_t, 4> edges_by_kind{};
  TagCounts fragments_by_kind;

  std::size_t edges_of(EdgeKind kind) const { return edges_by_kind[static_cast<std::size_t>(kind)]; }
  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

/// Immutable concept graph. Nodes keep the order they were given in
/// (lexicographic for built graphs); edges are kept in canonical order.
class ConceptGraph {
 public:
  ConceptGraph() = default;
  ConceptGraph(std::vector<ConceptNode> nodes, std::vector<Edge> edges,
               WeightThresholds thresholds, TagCounts fragments_by_kind);

  std::span<const ConceptNode> nodes() const noexcept { return nodes_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const WeightThresholds& thresholds() const noexcept { return thresholds_; }
  const TagCounts& fragments_by_kind() const noexcept { return fragments_by_kind_; }

  bool contains(const ConceptId& id) const { return node_index_.contains(id); }
  const ConceptNode* find_node(const ConceptId& id) const;

  /// Indices into edges() of edges touching `id`.
  std::span<const std::size_t> incident_edges(const ConceptId& id) const;

  friend bool operator==(const ConceptGraph& lhs, const ConceptGraph& rhs) {
    return lhs.nodes_ == rhs.nodes_ && lhs.edges_ == rhs.edges_ &&
           lhs.thresholds_ == rhs.thresholds_ && lhs.fragments_by_kind_ == rhs.fragments_by_kind_;
  }

 private:
  std::vector<ConceptNode> nodes_;
  std::vector<Edge> edges_;
  WeightThresholds thresholds_;
  TagCounts fragments_by_kind_;
  std::unordered_map<ConceptId, std::size_t> node_index_;
  std::vector<std::vector<std::size_t>> incidence_;
};

struct BuildWarning {
  std::string fragment_key;
  std::string message;
  friend bool operator==(const BuildWarning&, const BuildWarning&) = default;
};

struct GraphBuild {
  ConceptGraph graph;
  std::vector<BuildWarning> warnings;
};

GraphBuild build_graph(const Corpus& corpus, const WeightThresholds& thresholds,
                       const AnalogyLabels& analogy_labels);

GraphStats stats(const ConceptGraph& graph);

struct EgoNetwork {
  ConceptGraph graph;           // nodes in BFS layer order, then lexicographic
  std::vector<std::size_t> hops;  // parallel to graph.nodes()
};

/// Breadth-first neighbourhood of `center` over edges of class >= min_class,
/// traversed regardless of direction. Throws UnknownConcept.
EgoNetwork ego_network(const ConceptGraph& graph, const ConceptId& center, std::size_t depth,
                       WeightClass min_class);

struct PathStep {
  ConceptId from;
  ConceptId to;
  std::size_t edge_index;  // into graph.edges()
  friend bool operator==(const PathStep&, const PathStep&) = default;
};

using Path = std::vector<PathStep>;

/// Every simple path of 1..max_hops qualifying edges between two concepts,
/// ordered by length, then node sequence, then edge kinds. Throws UnknownConcept.
std::vector<Path> find_paths(const ConceptGraph& graph, const ConceptId& from, const ConceptId& to,
                             std::size_t max_hops, WeightClass min_class);

}  // namespace hypermediator
