#include "hypermediator/gexf.hpp"

#include "hypermediator/slug.hpp"
#include "hypermediator/version.hpp"

#include <sstream>

namespace hypermediator {

namespace {

std::string escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      case '\n': out += "&#10;"; break;
      case '\r': out += "&#13;"; break;
      case '\t': out += "&#9;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string join(const std::vector<std::string>& items, std::string_view separator) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += separator;
    out += items[i];
  }
  return out;
}

}  // namespace

std::string export_gexf(const ConceptGraph& graph) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<gexf xmlns=\"http://www.gexf.net/1.2draft\" version=\"1.2\">\n"
      << "  <meta>\n"
      << "    <creator>" << kToolName << ' ' << kVersion << "</creator>\n"
      << "    <description>concept graph</description>\n"
      << "  </meta>\n"
      << "  <graph mode=\"static\">\n"
      << "    <attributes class=\"node\">\n"
      << "      <attribute id=\"fragments\" title=\"fragments\" type=\"integer\"/>\n"
      << "    </attributes>\n"
      << "    <attributes class=\"edge\">\n"
      << "      <attribute id=\"kind\" title=\"kind\" type=\"string\"/>\n"
      << "      <attribute id=\"weight\" title=\"weight\" type=\"integer\"/>\n"
      << "      <attribute id=\"weight_class\" title=\"weight_class\" type=\"string\"/>\n"
      << "      <attribute id=\"rel_labels\" title=\"rel_labels\" type=\"string\"/>\n"
      << "    </attributes>\n";

  if (graph.nodes().empty()) {
    out << "    <nodes/>\n";
  } else {
    out << "    <nodes>\n";
    for (const ConceptNode& node : graph.nodes()) {
      out << "      <node id=\"" << escape(slugify(node.id.str())) << "\" label=\""
          << escape(node.id.str()) << "\">\n"
          << "        <attvalues>\n"
          << "          <attvalue for=\"fragments\" value=\"" << node.counts.total() << "\"/>\n"
          << "        </attvalues>\n"
          << "      </node>\n";
    }
    out << "    </nodes>\n";
  }

  if (graph.edges().empty()) {
    out << "    <edges/>\n";
  } else {
    out << "    <edges>\n";
    std::size_t index = 0;
    for (const Edge& edge : graph.edges()) {
      out << "      <edge id=\"e" << index++ << "\" source=\"" << escape(slugify(edge.a.str()))
          << "\" target=\"" << escape(slugify(edge.b.str())) << "\" type=\""
          << (edge.directed() ? "directed" : "undirected") << "\" weight=\"" << edge.weight
          << "\" label=\"" << to_string(edge.kind) << "\">\n"
          << "        <attvalues>\n"
          << "          <attvalue for=\"kind\" value=\"" << to_string(edge.kind) << "\"/>\n"
          << "          <attvalue for=\"weight\" value=\"" << edge.weight << "\"/>\n"
          << "          <attvalue for=\"weight_class\" value=\""
          << to_string(weight_class(edge.weight, graph.thresholds())) << "\"/>\n"
          << "          <attvalue for=\"rel_labels\" value=\"" << escape(join(edge.rel_labels, "|"))
          << "\"/>\n"
          << "        </attvalues>\n"
          << "      </edge>\n";
    }
    out << "    </edges>\n";
  }
  out << "  </graph>\n</gexf>\n";
  return out.str();
}

}  // namespace hypermediator
