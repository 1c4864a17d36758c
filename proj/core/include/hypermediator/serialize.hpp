#pragma once

// JSON documents shared by the site bundle, the CLI and the HTTP API.
// All output is deterministic: object keys sorted, two-space indentation.

#include "hypermediator/artifact.hpp"

#include <string>

namespace hypermediator {

std::string graph_json(const ConceptGraph& graph);
std::string ego_json(const EgoNetwork& ego, const ConceptId& center, std::size_t depth,
                     WeightClass min_class);
std::string paths_json(const ConceptGraph& graph, const std::vector<Path>& paths,
                       const ConceptId& from, const ConceptId& to, std::size_t max_hops,
                       WeightClass min_class);
std::string stats_json(const GraphStats& stats);
std::string record_json(const ConceptRecord& record, const ConceptGraph& graph,
                        const Corpus& corpus, std::size_t context_window);
std::string article_json(const Article& article);
std::string index_json(const Corpus& corpus);
std::string manifest_json(const Manifest& manifest);
std::string report_json(const ValidationReport& report);
std::string error_json(int status, const std::string& message);

}  // namespace hypermediator
