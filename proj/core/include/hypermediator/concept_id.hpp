#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>

namespace hypermediator {

/// Canonical text form used for concept identity: NFC, case-folded, trimmed,
/// inner whitespace runs collapsed to a single space. May be empty.
std::string normalize_text(std::string_view raw);

/// True when the text holds no characters other than Unicode white space.
bool is_blank(std::string_view text);

/// True when `bytes` is well-formed UTF-8.
bool is_valid_utf8(std::string_view bytes);

/// Identifier of a concept. Two raw spellings denote the same concept iff
/// they normalize to the same value.
class ConceptId {
 public:
  ConceptId() = default;

  /// Throws InvalidConceptId when nothing is left after normalization.
  static ConceptId normalize(std::string_view raw);

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  friend bool operator==(const ConceptId&, const ConceptId&) = default;
  friend auto operator<=>(const ConceptId&, const ConceptId&) = default;

 private:
  explicit ConceptId(std::string value) : value_(std::move(value)) {}

  std::string value_;
};

inline ConceptId normalize_concept_id(std::string_view raw) {
  return ConceptId::normalize(raw);
}

}  // namespace hypermediator

template <>
struct std::hash<hypermediator::ConceptId> {
  std::size_t operator()(const hypermediator::ConceptId& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};
