#pragma once

// nlohmann::json encoders/decoders for the bundle documents. Private to the
// library; the public surface is serialize.hpp.

#include "hypermediator/artifact.hpp"

#include <nlohmann/json.hpp>

namespace hypermediator::codec {

using nlohmann::json;

json counts_to_json(const TagCounts& counts);
TagCounts counts_from_json(const json& j);

json stats_to_json(const GraphStats& stats);
json node_to_json(const ConceptNode& node);
json edge_to_json(const Edge& edge, const WeightThresholds& thresholds);
json graph_to_json(const ConceptGraph& graph);
ConceptGraph graph_from_json(const json& j);

json meta_to_json(const ArticleMeta& meta);
ArticleMeta meta_from_json(const json& j);
json attributes_to_json(const Fragment& fragment);
json article_to_json(const Article& article);
Article article_from_json(const json& j);

json record_to_json(const ConceptRecord& record, const ConceptGraph& graph, const Corpus& corpus,
                    std::size_t context_window);
ConceptRecord record_from_json(const json& j);

json config_to_json(const BuildConfig& config);
json manifest_to_json(const Manifest& manifest);
Manifest manifest_from_json(const json& j);

json index_to_json(const Corpus& corpus);
json report_to_json(const ValidationReport& report);

std::string dump(const json& j);

}  // namespace hypermediator::codec
