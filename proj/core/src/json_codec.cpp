#include "json_codec.hpp"

#include "hypermediator/errors.hpp"
#include "hypermediator/slug.hpp"
#include "hypermediator/version.hpp"

namespace hypermediator::codec {

namespace {

json span_to_json(Span span) { return {{"begin", span.begin}, {"end", span.end}}; }

Span span_from_json(const json& j) {
  return {j.at("begin").get<std::size_t>(), j.at("end").get<std::size_t>()};
}

template <class T>
json optional_to_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

ConceptId concept_from_json(const json& j) { return ConceptId::normalize(j.get<std::string>()); }

TagKind tag_kind_from_json(const json& j) {
  const auto kind = tag_kind_from_element(j.get<std::string>());
  if (!kind) throw BundleError("unknown fragment kind: " + j.dump());
  return *kind;
}

EdgeKind edge_kind_from_json(const json& j) {
  const auto kind = edge_kind_from_string(j.get<std::string>());
  if (!kind) throw BundleError("unknown edge kind: " + j.dump());
  return *kind;
}

TagAttributes attributes_from_json(TagKind kind, const json& j) {
  auto id = [&](const char* name) { return concept_from_json(j.at(name)); };
  auto str = [&](const char* name) { return j.at(name).get<std::string>(); };
  switch (kind) {
    case TagKind::Identity:
    case TagKind::Norm:
    case TagKind::Stakes: return SubjectAttrs{id("id")};
    case TagKind::Position:
      if (j.contains("holonym")) return PartWholeAttrs{id("holonym"), id("meronym")};
      return SpecificationAttrs{id("hypernym"), id("hyponym")};
    case TagKind::Relation: return RelationAttrs{id("a"), id("b"), str("type")};
    case TagKind::Time: return TimeAttrs{id("id"), str("date")};
    case TagKind::Spatial: return SpatialAttrs{id("id"), str("lieu")};
    case TagKind::Quote: return QuoteAttrs{id("id"), str("auteur"), str("reference")};
  }
  throw BundleError("unreachable fragment kind");
}

}  // namespace

json counts_to_json(const TagCounts& counts) {
  json j = json::object();
  for (TagKind kind : kAllTagKinds) j[std::string(element_name(kind))] = counts[kind];
  return j;
}

TagCounts counts_from_json(const json& j) {
  TagCounts counts;
  for (TagKind kind : kAllTagKinds) {
    counts[kind] = j.at(std::string(element_name(kind))).get<std::size_t>();
  }
  return counts;
}

json stats_to_json(const GraphStats& stats) {
  json by_kind = json::object();
  for (EdgeKind kind : kAllEdgeKinds) by_kind[std::string(to_string(kind))] = stats.edges_of(kind);
  return {{"concept_count", stats.concept_count},
          {"edge_count", stats.edge_count},
          {"edges_by_kind", by_kind},
          {"fragments_by_kind", counts_to_json(stats.fragments_by_kind)},
          {"fragment_total", stats.fragments_by_kind.total()}};
}

json node_to_json(const ConceptNode& node) {
  return {{"id", node.id.str()}, {"slug", slugify(node.id.str())},
          {"counts", counts_to_json(node.counts)}, {"total", node.counts.total()}};
}

json edge_to_json(const Edge& edge, const WeightThresholds& thresholds) {
  return {{"source", edge.a.str()},
          {"target", edge.b.str()},
          {"kind", to_string(edge.kind)},
          {"directed", edge.directed()},
          {"weight", edge.weight},
          {"weight_class", to_string(weight_class(edge.weight, thresholds))},
          {"rel_labels", edge.rel_labels},
          {"supporting_fragments", edge.supporting_fragments}};
}

json graph_to_json(const ConceptGraph& graph) {
  json nodes = json::array();
  for (const ConceptNode& node : graph.nodes()) nodes.push_back(node_to_json(node));
  json edges = json::array();
  for (const Edge& edge : graph.edges()) edges.push_back(edge_to_json(edge, graph.thresholds()));
  return {{"nodes", nodes},
          {"edges", edges},
          {"thresholds",
           {{"strong_min", graph.thresholds().strong_min},
            {"moderate_min", graph.thresholds().moderate_min}}},
          {"stats", stats_to_json(stats(graph))}};
}

ConceptGraph graph_from_json(const json& j) {
  std::vector<ConceptNode> nodes;
  for (const json& n : j.at("nodes")) {
    nodes.push_back({concept_from_json(n.at("id")), counts_from_json(n.at("counts"))});
  }
  std::vector<Edge> edges;
  for (const json& e : j.at("edges")) {
    Edge edge;
    edge.a = concept_from_json(e.at("source"));
    edge.b = concept_from_json(e.at("target"));
    edge.kind = edge_kind_from_json(e.at("kind"));
    edge.weight = e.at("weight").get<std::size_t>();
    edge.rel_labels = e.at("rel_labels").get<std::vector<std::string>>();
    edge.supporting_fragments = e.at("supporting_fragments").get<std::vector<std::string>>();
    edges.push_back(std::move(edge));
  }
  const json& t = j.at("thresholds");
  WeightThresholds thresholds{t.at("strong_min").get<std::size_t>(),
                              t.at("moderate_min").get<std::size_t>()};
  return ConceptGraph(std::move(nodes), std::move(edges), thresholds,
                      counts_from_json(j.at("stats").at("fragments_by_kind")));
}

json meta_to_json(const ArticleMeta& meta) {
  return {{"article_id", meta.article_id}, {"slug", slugify(meta.article_id)},
          {"title", meta.title},           {"authors", meta.authors},
          {"year", optional_to_json(meta.year)}, {"theme", optional_to_json(meta.theme)}};
}

ArticleMeta meta_from_json(const json& j) {
  ArticleMeta meta;
  meta.article_id = j.at("article_id").get<std::string>();
  meta.title = j.at("title").get<std::string>();
  meta.authors = j.at("authors").get<std::vector<std::string>>();
  if (!j.at("year").is_null()) meta.year = j.at("year").get<int>();
  if (!j.at("theme").is_null()) meta.theme = j.at("theme").get<std::string>();
  return meta;
}

json attributes_to_json(const Fragment& fragment) {
  struct Visitor {
    json operator()(const SubjectAttrs& a) const { return {{"id", a.id.str()}}; }
    json operator()(const PartWholeAttrs& a) const {
      return {{"holonym", a.holonym.str()}, {"meronym", a.meronym.str()}};
    }
    json operator()(const SpecificationAttrs& a) const {
      return {{"hypernym", a.hypernym.str()}, {"hyponym", a.hyponym.str()}};
    }
    json operator()(const RelationAttrs& a) const {
      return {{"a", a.a.str()}, {"b", a.b.str()}, {"type", a.rel_type}};
    }
    json operator()(const TimeAttrs& a) const { return {{"id", a.id.str()}, {"date", a.date}}; }
    json operator()(const SpatialAttrs& a) const { return {{"id", a.id.str()}, {"lieu", a.place}}; }
    json operator()(const QuoteAttrs& a) const {
      return {{"id", a.id.str()}, {"auteur", a.author}, {"reference", a.reference}};
    }
  };
  return std::visit(Visitor{}, fragment.attrs);
}

json article_to_json(const Article& article) {
  json j = meta_to_json(article.meta);
  j["body"] = article.body;
  json fragments = json::array();
  for (const Fragment& f : article.fragments) {
    fragments.push_back({{"fragment_key", f.fragment_id},
                         {"kind", element_name(f.kind)},
                         {"attributes", attributes_to_json(f)},
                         {"span", span_to_json(f.span)},
                         {"line", f.location.line},
                         {"column", f.location.column}});
  }
  j["fragments"] = fragments;
  return j;
}

Article article_from_json(const json& j) {
  Article article;
  article.meta = meta_from_json(j);
  article.body = j.at("body").get<std::string>();
  for (const json& f : j.at("fragments")) {
    Fragment fragment;
    fragment.fragment_id = f.at("fragment_key").get<std::string>();
    fragment.article_id = article.meta.article_id;
    fragment.kind = tag_kind_from_json(f.at("kind"));
    fragment.attrs = attributes_from_json(fragment.kind, f.at("attributes"));
    fragment.span = span_from_json(f.at("span"));
    if (fragment.span.begin >= fragment.span.end || fragment.span.end > article.body.size()) {
      throw BundleError("fragment " + fragment.fragment_id + " span outside its article body");
    }
    fragment.text = article.body.substr(fragment.span.begin, fragment.span.size());
    fragment.location = {f.at("line").get<std::size_t>(), f.at("column").get<std::size_t>()};
    article.fragments.push_back(std::move(fragment));
  }
  return article;
}

json record_to_json(const ConceptRecord& record, const ConceptGraph& graph, const Corpus& corpus,
                    std::size_t context_window) {
  json categories = json::array();
  for (RecordCategory category : kAllRecordCategories) {
    json entries = json::array();
    for (const RecordEntry* entry : record.entries_in(category)) {
      const TraceResult traced = trace(*entry, corpus, context_window);
      json e = {{"fragment_key", entry->fragment_key},
                {"kind", element_name(entry->kind)},
                {"role", to_string(entry->role)},
                {"caption", entry->caption},
                {"text", entry->text},
                {"span", span_to_json(entry->span)},
                {"context", span_to_json(traced.context_span)},
                {"source", meta_to_json(entry->source)}};
      if (entry->related_concept) {
        e["related_concept"] = entry->related_concept->str();
        e["related_slug"] = slugify(entry->related_concept->str());
      } else {
        e["related_concept"] = nullptr;
        e["related_slug"] = nullptr;
      }
      entries.push_back(std::move(e));
    }
    categories.push_back(
        {{"category", to_string(category)}, {"count", entries.size()}, {"entries", entries}});
  }
  json neighbors = json::array();
  for (const RecordNeighbor& n : record.neighbors) {
    neighbors.push_back({{"concept", n.concept_id.str()},
                         {"slug", slugify(n.concept_id.str())},
                         {"kind", to_string(n.kind)},
                         {"weight", n.weight},
                         {"weight_class", to_string(weight_class(n.weight, graph.thresholds()))}});
  }
  return {{"concept", record.concept_id.str()},
          {"slug", slugify(record.concept_id.str())},
          {"entry_count", record.entries.size()},
          {"categories", categories},
          {"neighbors", neighbors}};
}

ConceptRecord record_from_json(const json& j) {
  ConceptRecord record;
  record.concept_id = concept_from_json(j.at("concept"));
  for (const json& c : j.at("categories")) {
    const auto category = record_category_from_string(c.at("category").get<std::string>());
    if (!category) throw BundleError("unknown record category: " + c.at("category").dump());
    for (const json& e : c.at("entries")) {
      RecordEntry entry;
      entry.fragment_key = e.at("fragment_key").get<std::string>();
      entry.category = *category;
      entry.kind = tag_kind_from_json(e.at("kind"));
      const auto role = concept_role_from_string(e.at("role").get<std::string>());
      if (!role) throw BundleError("unknown concept role: " + e.at("role").dump());
      entry.role = *role;
      entry.caption = e.at("caption").get<std::string>();
      entry.text = e.at("text").get<std::string>();
      entry.span = span_from_json(e.at("span"));
      entry.source = meta_from_json(e.at("source"));
      if (!e.at("related_concept").is_null()) {
        entry.related_concept = concept_from_json(e.at("related_concept"));
      }
      record.entries.push_back(std::move(entry));
    }
  }
  for (const json& n : j.at("neighbors")) {
    record.neighbors.push_back({concept_from_json(n.at("concept")), edge_kind_from_json(n.at("kind")),
                                n.at("weight").get<std::size_t>()});
  }
  return record;
}

json config_to_json(const BuildConfig& config) {
  return {{"thresholds",
           {{"strong_min", config.thresholds.strong_min},
            {"moderate_min", config.thresholds.moderate_min}}},
          {"analogy_labels", config.analogy_labels},
          {"context_window", config.context_window},
          {"captions", config.captions.all()}};
}

json manifest_to_json(const Manifest& manifest) {
  json warnings = json::array();
  for (const BuildWarning& w : manifest.warnings) {
    warnings.push_back({{"fragment_key", w.fragment_key}, {"message", w.message}});
  }
  json j = config_to_json(manifest.config);
  j["tool"] = kToolName;
  j["tool_version"] = manifest.tool_version;
  j["input_hash"] = manifest.input_hash;
  j["timestamp"] = manifest.timestamp;
  j["warnings"] = warnings;
  return j;
}

Manifest manifest_from_json(const json& j) {
  Manifest manifest;
  manifest.input_hash = j.at("input_hash").get<std::string>();
  manifest.tool_version = j.at("tool_version").get<std::string>();
  manifest.timestamp = j.at("timestamp").get<std::string>();
  const json& t = j.at("thresholds");
  manifest.config.thresholds = {t.at("strong_min").get<std::size_t>(),
                                t.at("moderate_min").get<std::size_t>()};
  manifest.config.analogy_labels = j.at("analogy_labels").get<AnalogyLabels>();
  manifest.config.context_window = j.at("context_window").get<std::size_t>();
  for (const auto& [name, pattern] : j.at("captions").items()) {
    manifest.config.captions.set(name, pattern.get<std::string>());
  }
  for (const json& w : j.at("warnings")) {
    manifest.warnings.push_back(
        {w.at("fragment_key").get<std::string>(), w.at("message").get<std::string>()});
  }
  return manifest;
}

json index_to_json(const Corpus& corpus) {
  json concepts = json::array();
  for (const ConceptSummary& summary : list_concepts(corpus)) {
    concepts.push_back({{"concept", summary.concept_id.str()},
                        {"slug", slugify(summary.concept_id.str())},
                        {"counts", counts_to_json(summary.counts)},
                        {"total", summary.counts.total()}});
  }
  json articles = json::array();
  for (const Article& article : corpus.articles()) {
    json a = meta_to_json(article.meta);
    a["fragment_count"] = article.fragments.size();
    articles.push_back(std::move(a));
  }
  return {{"concept_count", concepts.size()},
          {"concepts", concepts},
          {"article_count", articles.size()},
          {"articles", articles}};
}

json report_to_json(const ValidationReport& report) {
  json issues = json::array();
  for (const ParseIssue& issue : report.issues) {
    issues.push_back({{"severity", to_string(issue.severity)},
                      {"article_id", issue.article_id},
                      {"line", issue.location.line},
                      {"column", issue.location.column},
                      {"code", to_string(issue.code)},
                      {"message", issue.message}});
  }
  return {{"articles_parsed", report.articles_parsed},
          {"counts", counts_to_json(report.counts)},
          {"fragment_total", report.counts.total()},
          {"error_count", report.error_count()},
          {"warning_count", report.warning_count()},
          {"issues", issues}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace hypermediator::codec
