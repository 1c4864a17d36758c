#pragma once

#include "hypermediator/corpus.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hypermediator {

enum class Severity { Error, Warning };

enum class IssueCode {
  UnknownTag,
  MissingAttribute,
  ConflictingPositionAttributes,
  EmptyFragmentText,
  MalformedDocument,
  DuplicateArticleId,
  UnknownAttribute,
};

std::string_view to_string(Severity severity);
std::string_view to_string(IssueCode code);

struct ParseIssue {
  Severity severity = Severity::Error;
  std::string article_id;
  SourceLocation location;  // 1-based; line 0 when the issue has no position
  IssueCode code = IssueCode::MalformedDocument;
  std::string message;

  friend bool operator==(const ParseIssue&, const ParseIssue&) = default;
};

struct ValidationReport {
  std::vector<ParseIssue> issues;
  TagCounts counts;  // accepted fragments per kind
  std::size_t articles_parsed = 0;

  std::size_t error_count() const;
  std::size_t warning_count() const;
  bool has_errors() const { return error_count() > 0; }

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

struct ArticleParse {
  std::optional<Article> article;  // absent when the document itself is rejected
  std::vector<ParseIssue> issues;
  SourceLocation article_location;  // position of the <article> start tag
};

/// Parses one article file. `file_stem` is the article id unless the root
/// element carries an `id` attribute.
ArticleParse parse_article(std::string_view source, std::string_view file_stem);

struct CorpusParse {
  Corpus corpus;
  ValidationReport report;
};

/// Parses every `*.xml` file directly inside `directory`.
/// Throws EmptyCorpus when there is none.
CorpusParse parse_corpus(const std::filesystem::path& directory);

/// Lint mode: the report parse_corpus would produce.
ValidationReport validate(const std::filesystem::path& directory);

}  // namespace hypermediator
