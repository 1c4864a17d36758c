#include "hypermediator/serialize.hpp"

#include "hypermediator/slug.hpp"
#include "json_codec.hpp"

namespace hypermediator {

using codec::json;

std::string graph_json(const ConceptGraph& graph) { return codec::dump(codec::graph_to_json(graph)); }

std::string ego_json(const EgoNetwork& ego, const ConceptId& center, std::size_t depth,
                     WeightClass min_class) {
  json j = codec::graph_to_json(ego.graph);
  for (std::size_t i = 0; i < ego.hops.size(); ++i) j["nodes"][i]["hops"] = ego.hops[i];
  j["center"] = center.str();
  j["depth"] = depth;
  j["min_class"] = to_string(min_class);
  return codec::dump(j);
}

std::string paths_json(const ConceptGraph& graph, const std::vector<Path>& paths,
                       const ConceptId& from, const ConceptId& to, std::size_t max_hops,
                       WeightClass min_class) {
  json out = json::array();
  for (const Path& path : paths) {
    json nodes = json::array({from.str()});
    json steps = json::array();
    for (const PathStep& step : path) {
      nodes.push_back(step.to.str());
      json e = codec::edge_to_json(graph.edges()[step.edge_index], graph.thresholds());
      e["from"] = step.from.str();
      e["to"] = step.to.str();
      steps.push_back(std::move(e));
    }
    out.push_back({{"length", path.size()}, {"nodes", nodes}, {"edges", steps}});
  }
  return codec::dump({{"from", from.str()},
                      {"to", to.str()},
                      {"max_hops", max_hops},
                      {"min_class", to_string(min_class)},
                      {"path_count", paths.size()},
                      {"paths", out}});
}

std::string stats_json(const GraphStats& stats) { return codec::dump(codec::stats_to_json(stats)); }

std::string record_json(const ConceptRecord& record, const ConceptGraph& graph,
                        const Corpus& corpus, std::size_t context_window) {
  return codec::dump(codec::record_to_json(record, graph, corpus, context_window));
}

std::string article_json(const Article& article) {
  return codec::dump(codec::article_to_json(article));
}

std::string index_json(const Corpus& corpus) { return codec::dump(codec::index_to_json(corpus)); }

std::string manifest_json(const Manifest& manifest) {
  return codec::dump(codec::manifest_to_json(manifest));
}

std::string report_json(const ValidationReport& report) {
  return codec::dump(codec::report_to_json(report));
}

std::string error_json(int status, const std::string& message) {
  return codec::dump({{"status", status}, {"error", message}});
}

}  // namespace hypermediator
