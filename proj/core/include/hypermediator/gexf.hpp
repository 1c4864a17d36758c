#pragma once

#include "hypermediator/concept_graph.hpp"

#include <string>

namespace hypermediator {

/// GEXF 1.2 document for Gephi. Node ids are concept slugs; each edge
/// carries its own `type` (directed for part/whole and specification) and
/// the attributes kind, weight, weight_class and rel_labels.
std::string export_gexf(const ConceptGraph& graph);

}  // namespace hypermediator
