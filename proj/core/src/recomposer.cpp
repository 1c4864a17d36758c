#include "hypermediator/recomposer.hpp"

#include "hypermediator/errors.hpp"

#include <algorithm>
#include <tuple>

namespace hypermediator {

namespace {

constexpr std::array<std::string_view, 6> kCategoryNames = {
    "definitions", "stakes", "positions", "relations", "contexts", "citations"};

constexpr std::array<std::string_view, 7> kRoleNames = {
    "subject", "holonym", "meronym", "hypernym", "hyponym", "a", "b"};

const std::map<std::string, std::string>& default_patterns() {
  static const std::map<std::string, std::string> patterns = {
      {"identity", R"(identified mention of "{concept}")"},
      {"norm", R"(fragment defining "{concept}")"},
      {"stakes", R"(fragment on the stakes of "{concept}")"},
      {"holonym", R"(fragment in which "{concept}" is the whole containing "{other}")"},
      {"meronym", R"(fragment in which "{concept}" is part of "{other}")"},
      {"hypernym", R"(fragment in which "{concept}" is more general than "{other}")"},
      {"hyponym", R"(fragment in which "{concept}" is a kind of "{other}")"},
      {"relations", R"(fragment in which "{concept}" relates to "{other}" ({type}))"},
      {"time", R"(fragment dating "{concept}" ({date}))"},
      {"spatial", R"(fragment situating "{concept}" in {place})"},
      {"quote", R"(quotation by {author} on "{concept}" ({reference}))"},
  };
  return patterns;
}

std::string expand(const std::string& pattern,
                   const std::vector<std::pair<std::string_view, std::string_view>>& values) {
  std::string out;
  out.reserve(pattern.size());
  for (std::size_t i = 0; i < pattern.size();) {
    if (pattern[i] == '{') {
      const auto close = pattern.find('}', i);
      if (close != std::string::npos) {
        const std::string_view name(pattern.data() + i + 1, close - i - 1);
        auto it = std::ranges::find(values, name, &std::pair<std::string_view, std::string_view>::first);
        if (it != values.end()) {
          out += it->second;
          i = close + 1;
          continue;
        }
      }
    }
    out += pattern[i++];
  }
  return out;
}

struct Placement {
  ConceptRole role;
  std::optional<ConceptId> other;
};

// The role `concept` plays in `fragment`, if any.
std::optional<Placement> place_in(const Fragment& fragment, const ConceptId& concept_id) {
  auto pair = [&](const ConceptId& first, const ConceptId& second, ConceptRole first_role,
                  ConceptRole second_role) -> std::optional<Placement> {
    if (first == concept_id) {
      return Placement{first_role, second == concept_id ? std::nullopt : std::optional(second)};
    }
    if (second == concept_id) return Placement{second_role, first};
    return std::nullopt;
  };
  if (const auto* s = std::get_if<SubjectAttrs>(&fragment.attrs)) {
    if (s->id == concept_id) return Placement{ConceptRole::Subject, std::nullopt};
  } else if (const auto* pw = std::get_if<PartWholeAttrs>(&fragment.attrs)) {
    return pair(pw->holonym, pw->meronym, ConceptRole::Holonym, ConceptRole::Meronym);
  } else if (const auto* sp = std::get_if<SpecificationAttrs>(&fragment.attrs)) {
    return pair(sp->hypernym, sp->hyponym, ConceptRole::Hypernym, ConceptRole::Hyponym);
  } else if (const auto* rel = std::get_if<RelationAttrs>(&fragment.attrs)) {
    return pair(rel->a, rel->b, ConceptRole::RelationA, ConceptRole::RelationB);
  } else if (const auto* t = std::get_if<TimeAttrs>(&fragment.attrs)) {
    if (t->id == concept_id) return Placement{ConceptRole::Subject, std::nullopt};
  } else if (const auto* sa = std::get_if<SpatialAttrs>(&fragment.attrs)) {
    if (sa->id == concept_id) return Placement{ConceptRole::Subject, std::nullopt};
  } else if (const auto* q = std::get_if<QuoteAttrs>(&fragment.attrs)) {
    if (q->id == concept_id) return Placement{ConceptRole::Subject, std::nullopt};
  }
  return std::nullopt;
}

std::string caption_for(const Fragment& fragment, const ConceptId& concept_id,
                        const Placement& placement, const CaptionTemplates& captions) {
  std::string template_name;
  switch (placement.role) {
    case ConceptRole::Holonym: template_name = "holonym"; break;
    case ConceptRole::Meronym: template_name = "meronym"; break;
    case ConceptRole::Hypernym: template_name = "hypernym"; break;
    case ConceptRole::Hyponym: template_name = "hyponym"; break;
    default: template_name = std::string(element_name(fragment.kind)); break;
  }
  const std::string& other = placement.other ? placement.other->str() : concept_id.str();
  std::vector<std::pair<std::string_view, std::string_view>> values = {
      {"concept", concept_id.str()}, {"other", other}};
  if (const auto* rel = std::get_if<RelationAttrs>(&fragment.attrs)) {
    values.emplace_back("type", rel->rel_type);
  } else if (const auto* t = std::get_if<TimeAttrs>(&fragment.attrs)) {
    values.emplace_back("date", t->date);
  } else if (const auto* sa = std::get_if<SpatialAttrs>(&fragment.attrs)) {
    values.emplace_back("place", sa->place);
  } else if (const auto* q = std::get_if<QuoteAttrs>(&fragment.attrs)) {
    values.emplace_back("author", q->author);
    values.emplace_back("reference", q->reference);
  }
  return expand(captions.get(template_name), values);
}

// Moves `offset` up to `count` code points through a UTF-8 string.
std::size_t step_back(std::string_view text, std::size_t offset, std::size_t count) {
  while (count > 0 && offset > 0) {
    --offset;
    while (offset > 0 && (static_cast<unsigned char>(text[offset]) & 0xC0) == 0x80) --offset;
    --count;
  }
  return offset;
}

std::size_t step_forward(std::string_view text, std::size_t offset, std::size_t count) {
  while (count > 0 && offset < text.size()) {
    ++offset;
    while (offset < text.size() && (static_cast<unsigned char>(text[offset]) & 0xC0) == 0x80) ++offset;
    --count;
  }
  return offset;
}

}  // namespace

std::string_view to_string(RecordCategory category) {
  return kCategoryNames[static_cast<std::size_t>(category)];
}

std::optional<RecordCategory> record_category_from_string(std::string_view name) {
  for (RecordCategory c : kAllRecordCategories) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

RecordCategory category_of(TagKind kind) {
  switch (kind) {
    case TagKind::Identity:
    case TagKind::Norm: return RecordCategory::Definitions;
    case TagKind::Stakes: return RecordCategory::Stakes;
    case TagKind::Position: return RecordCategory::Positions;
    case TagKind::Relation: return RecordCategory::Relations;
    case TagKind::Time:
    case TagKind::Spatial: return RecordCategory::Contexts;
    case TagKind::Quote: return RecordCategory::Citations;
  }
  return RecordCategory::Definitions;
}

std::string_view to_string(ConceptRole role) { return kRoleNames[static_cast<std::size_t>(role)]; }

std::optional<ConceptRole> concept_role_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kRoleNames.size(); ++i) {
    if (kRoleNames[i] == name) return static_cast<ConceptRole>(i);
  }
  return std::nullopt;
}

CaptionTemplates::CaptionTemplates() : patterns_(default_patterns()) {}

bool CaptionTemplates::is_known(const std::string& name) {
  return default_patterns().contains(name);
}

void CaptionTemplates::set(const std::string& name, std::string pattern) {
  if (!is_known(name)) throw ConfigError("unknown caption template: " + name);
  patterns_[name] = std::move(pattern);
}

const std::string& CaptionTemplates::get(const std::string& name) const {
  return patterns_.at(name);
}

std::vector<const RecordEntry*> ConceptRecord::entries_in(RecordCategory category) const {
  std::vector<const RecordEntry*> out;
  for (const RecordEntry& entry : entries) {
    if (entry.category == category) out.push_back(&entry);
  }
  return out;
}

ConceptRecord compose_record(const Corpus& corpus, const ConceptGraph& graph,
                             const ConceptId& concept_id, const CaptionTemplates& captions) {
  ConceptRecord record;
  record.concept_id = concept_id;

  for (const Article& article : corpus.articles()) {
    for (const Fragment& fragment : article.fragments) {
      const auto placement = place_in(fragment, concept_id);
      if (!placement) continue;
      RecordEntry entry;
      entry.fragment_key = fragment.fragment_id;
      entry.category = category_of(fragment.kind);
      entry.kind = fragment.kind;
      entry.role = placement->role;
      entry.text = fragment.text;
      entry.caption = caption_for(fragment, concept_id, *placement, captions);
      entry.source = article.meta;
      entry.span = fragment.span;
      entry.related_concept = placement->other;
      record.entries.push_back(std::move(entry));
    }
  }
  if (record.entries.empty()) throw UnknownConcept(concept_id.str());

  std::ranges::sort(record.entries, [](const RecordEntry& x, const RecordEntry& y) {
    return std::tie(x.category, x.source.article_id, x.span.begin, x.span.end, x.fragment_key) <
           std::tie(y.category, y.source.article_id, y.span.begin, y.span.end, y.fragment_key);
  });

  for (std::size_t e : graph.incident_edges(concept_id)) {
    const Edge& edge = graph.edges()[e];
    record.neighbors.push_back({edge.other(concept_id), edge.kind, edge.weight});
  }
  std::ranges::sort(record.neighbors, [](const RecordNeighbor& x, const RecordNeighbor& y) {
    return std::tuple(y.weight, x.concept_id, x.kind) < std::tuple(x.weight, y.concept_id, y.kind);
  });
  return record;
}

TraceResult trace(const RecordEntry& entry, const Corpus& corpus, std::size_t window) {
  const auto found = corpus.find_fragment(entry.fragment_key);
  if (!found || found->fragment->text != entry.text || found->fragment->span != entry.span ||
      found->article->meta.article_id != entry.source.article_id) {
    throw StaleEntry("fragment " + entry.fragment_key + " no longer matches the corpus");
  }
  const Article& article = *found->article;
  TraceResult out;
  out.source = article.meta;
  out.span = entry.span;
  out.context_span = {step_back(article.body, entry.span.begin, window),
                      step_forward(article.body, entry.span.end, window)};
  out.context = std::string(article.slice(out.context_span));
  return out;
}

std::vector<ConceptSummary> list_concepts(const Corpus& corpus) {
  std::map<ConceptId, TagCounts> counts;
  for (const Article& article : corpus.articles()) {
    for (const Fragment& fragment : article.fragments) {
      for (const ConceptId& id : mentioned_concepts(fragment)) ++counts[id][fragment.kind];
    }
  }
  std::vector<ConceptSummary> out;
  out.reserve(counts.size());
  for (auto& [id, c] : counts) out.push_back({id, c});
  return out;
}

}  // namespace hypermediator
