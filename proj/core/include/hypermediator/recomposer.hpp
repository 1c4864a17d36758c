#pragma once

#include "hypermediator/concept_graph.hpp"
#include "hypermediator/corpus.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hypermediator {

/// Sections of a concept record, in display order.
enum class RecordCategory : std::uint8_t {
  Definitions,
  Stakes,
  Positions,
  Relations,
  Contexts,
  Citations,
};

inline constexpr std::array<RecordCategory, 6> kAllRecordCategories = {
    RecordCategory::Definitions, RecordCategory::Stakes,   RecordCategory::Positions,
    RecordCategory::Relations,   RecordCategory::Contexts, RecordCategory::Citations};

std::string_view to_string(RecordCategory category);
std::optional<RecordCategory> record_category_from_string(std::string_view name);
RecordCategory category_of(TagKind kind);

/// Which slot of its fragment the record's concept fills.
enum class ConceptRole : std::uint8_t {
  Subject,   // id attribute
  Holonym,
  Meronym,
  Hypernym,
  Hyponym,
  RelationA,
  RelationB,
};

std::string_view to_string(ConceptRole role);
std::optional<ConceptRole> concept_role_from_string(std::string_view name);

/// Caption templates keyed by template name. Placeholders: {concept}
/// {other} {type} {date} {place} {author} {reference}.
///
/// Names: identity, norm, stakes, holonym, meronym, hypernym, hyponym,
/// relations, time, spatial, quote.
class CaptionTemplates {
 public:
  CaptionTemplates();

  void set(const std::string& name, std::string pattern);
  const std::string& get(const std::string& name) const;
  const std::map<std::string, std::string>& all() const noexcept { return patterns_; }

  static bool is_known(const std::string& name);

  friend bool operator==(const CaptionTemplates&, const CaptionTemplates&) = default;

 private:
  std::map<std::string, std::string> patterns_;
};

struct RecordEntry {
  std::string fragment_key;
  RecordCategory category = RecordCategory::Definitions;
  TagKind kind = TagKind::Identity;
  ConceptRole role = ConceptRole::Subject;
  std::string text;
  std::string caption;
  ArticleMeta source;
  Span span;
  std::optional<ConceptId> related_concept;

  friend bool operator==(const RecordEntry&, const RecordEntry&) = default;
};

struct RecordNeighbor {
  ConceptId concept_id;
  EdgeKind kind = EdgeKind::Associative;
  std::size_t weight = 0;
  friend bool operator==(const RecordNeighbor&, const RecordNeighbor&) = default;
};

struct ConceptRecord {
  ConceptId concept_id;
  std::vector<RecordEntry> entries;  // grouped by category, display order
  std::vector<RecordNeighbor> neighbors;

  std::vector<const RecordEntry*> entries_in(RecordCategory category) const;

  friend bool operator==(const ConceptRecord&, const ConceptRecord&) = default;
};

/// Throws UnknownConcept when no fragment mentions `concept`.
ConceptRecord compose_record(const Corpus& corpus, const ConceptGraph& graph,
                             const ConceptId& concept_id, const CaptionTemplates& captions = {});

inline constexpr std::size_t kDefaultContextWindow = 200;

struct TraceResult {
  ArticleMeta source;
  Span span;
  Span context_span;  // span widened by up to N characters each side
  std::string context;
};

/// Resolves an entry back to its article. Throws StaleEntry when the
/// fragment no longer exists or its text changed.
TraceResult trace(const RecordEntry& entry, const Corpus& corpus,
                  std::size_t window = kDefaultContextWindow);

struct ConceptSummary {
  ConceptId concept_id;
  TagCounts counts;
  friend bool operator==(const ConceptSummary&, const ConceptSummary&) = default;
};

std::vector<ConceptSummary> list_concepts(const Corpus& corpus);

}  // namespace hypermediator
