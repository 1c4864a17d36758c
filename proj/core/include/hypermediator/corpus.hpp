#pragma once

#include "hypermediator/concept_id.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace hypermediator {

/// The eight kinds of SCAC fragment, in grid order.
enum class TagKind : std::uint8_t {
  Identity,
  Norm,
  Stakes,
  Position,
  Relation,
  Time,
  Spatial,
  Quote,
};

inline constexpr std::size_t kTagKindCount = 8;

inline constexpr std::array<TagKind, kTagKindCount> kAllTagKinds = {
    TagKind::Identity, TagKind::Norm,     TagKind::Stakes,  TagKind::Position,
    TagKind::Relation, TagKind::Time,     TagKind::Spatial, TagKind::Quote,
};

/// XML element name of a tag kind ("relations" for Relation).
std::string_view element_name(TagKind kind);
std::optional<TagKind> tag_kind_from_element(std::string_view name);

/// Per-kind counters indexed by TagKind.
class TagCounts {
 public:
  std::size_t& operator[](TagKind kind) { return counts_[static_cast<std::size_t>(kind)]; }
  std::size_t operator[](TagKind kind) const { return counts_[static_cast<std::size_t>(kind)]; }
  std::size_t total() const;

  friend bool operator==(const TagCounts&, const TagCounts&) = default;

 private:
  std::array<std::size_t, kTagKindCount> counts_{};
};

// Attribute payloads, one per tag shape.

struct SubjectAttrs {  // identity, norm, stakes
  ConceptId id;
  friend bool operator==(const SubjectAttrs&, const SubjectAttrs&) = default;
};

struct PartWholeAttrs {
  ConceptId holonym;
  ConceptId meronym;
  friend bool operator==(const PartWholeAttrs&, const PartWholeAttrs&) = default;
};

struct SpecificationAttrs {
  ConceptId hypernym;
  ConceptId hyponym;
  friend bool operator==(const SpecificationAttrs&, const SpecificationAttrs&) = default;
};

struct RelationAttrs {
  ConceptId a;
  ConceptId b;
  std::string rel_type;  // verbatim "type" attribute
  friend bool operator==(const RelationAttrs&, const RelationAttrs&) = default;
};

struct TimeAttrs {
  ConceptId id;
  std::string date;
  friend bool operator==(const TimeAttrs&, const TimeAttrs&) = default;
};

struct SpatialAttrs {
  ConceptId id;
  std::string place;  // "lieu"
  friend bool operator==(const SpatialAttrs&, const SpatialAttrs&) = default;
};

struct QuoteAttrs {
  ConceptId id;
  std::string author;  // "auteur"
  std::string reference;
  friend bool operator==(const QuoteAttrs&, const QuoteAttrs&) = default;
};

using TagAttributes = std::variant<SubjectAttrs, PartWholeAttrs, SpecificationAttrs,
                                   RelationAttrs, TimeAttrs, SpatialAttrs, QuoteAttrs>;

/// Half-open byte range into an article's canonical body text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - begin; }
  friend bool operator==(const Span&, const Span&) = default;
};

struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;
  friend bool operator==(const SourceLocation&, const SourceLocation&) = default;
};

struct Fragment {
  std::string fragment_id;  // fragment_key(*this), disambiguated if needed
  std::string article_id;
  TagKind kind = TagKind::Identity;
  TagAttributes attrs;
  std::string text;
  Span span;
  SourceLocation location;  // start tag in the source file

  friend bool operator==(const Fragment&, const Fragment&) = default;
};

/// "<article_id>:<kind>:<begin>-<end>".
std::string fragment_key(const Fragment& fragment);
std::string fragment_key(std::string_view article_id, TagKind kind, Span span);

/// Distinct concepts named by the fragment's attributes, in attribute order.
std::vector<ConceptId> mentioned_concepts(const Fragment& fragment);

struct ArticleMeta {
  std::string article_id;
  std::string title;
  std::vector<std::string> authors;
  std::optional<int> year;
  std::optional<std::string> theme;

  friend bool operator==(const ArticleMeta&, const ArticleMeta&) = default;
};

struct Article {
  ArticleMeta meta;
  std::string body;  // canonical body: prose with all element markup removed
  std::vector<Fragment> fragments;

  std::string_view slice(Span span) const {
    return std::string_view(body).substr(span.begin, span.size());
  }

  friend bool operator==(const Article&, const Article&) = default;
};

/// Immutable collection of parsed articles, ordered by article_id.
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<Article> articles);

  std::span<const Article> articles() const noexcept { return articles_; }
  bool empty() const noexcept { return articles_.empty(); }

  const Article* find_article(std::string_view article_id) const;

  struct FragmentRef {
    const Article* article = nullptr;
    const Fragment* fragment = nullptr;
  };
  std::optional<FragmentRef> find_fragment(std::string_view key) const;

  /// Accepted fragments per kind over the whole corpus.
  TagCounts fragment_counts() const;
  std::size_t fragment_total() const { return fragment_counts().total(); }

  friend bool operator==(const Corpus& lhs, const Corpus& rhs) {
    return lhs.articles_ == rhs.articles_;
  }

 private:
  std::vector<Article> articles_;
  std::unordered_map<std::string, std::size_t> article_index_;
  std::unordered_map<std::string, std::pair<std::size_t, std::size_t>> fragment_index_;
};

}  // namespace hypermediator
