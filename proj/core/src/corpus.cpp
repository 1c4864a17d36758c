#include "hypermediator/corpus.hpp"

#include "hypermediator/errors.hpp"

#include <algorithm>
#include <numeric>

namespace hypermediator {

namespace {

constexpr std::array<std::string_view, kTagKindCount> kElementNames = {
    "identity", "norm", "stakes", "position", "relations", "time", "spatial", "quote",
};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string_view element_name(TagKind kind) {
  return kElementNames[static_cast<std::size_t>(kind)];
}

std::optional<TagKind> tag_kind_from_element(std::string_view name) {
  for (TagKind kind : kAllTagKinds) {
    if (element_name(kind) == name) return kind;
  }
  return std::nullopt;
}

std::size_t TagCounts::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

std::string fragment_key(std::string_view article_id, TagKind kind, Span span) {
  std::string key(article_id);
  key += ':';
  key += element_name(kind);
  key += ':';
  key += std::to_string(span.begin);
  key += '-';
  key += std::to_string(span.end);
  return key;
}

std::string fragment_key(const Fragment& fragment) {
  return fragment_key(fragment.article_id, fragment.kind, fragment.span);
}

std::vector<ConceptId> mentioned_concepts(const Fragment& fragment) {
  std::vector<ConceptId> out = std::visit(
      Overloaded{
          [](const SubjectAttrs& a) { return std::vector<ConceptId>{a.id}; },
          [](const PartWholeAttrs& a) { return std::vector<ConceptId>{a.holonym, a.meronym}; },
          [](const SpecificationAttrs& a) {
            return std::vector<ConceptId>{a.hypernym, a.hyponym};
          },
          [](const RelationAttrs& a) { return std::vector<ConceptId>{a.a, a.b}; },
          [](const TimeAttrs& a) { return std::vector<ConceptId>{a.id}; },
          [](const SpatialAttrs& a) { return std::vector<ConceptId>{a.id}; },
          [](const QuoteAttrs& a) { return std::vector<ConceptId>{a.id}; },
      },
      fragment.attrs);
  if (out.size() == 2 && out[0] == out[1]) out.pop_back();
  return out;
}

Corpus::Corpus(std::vector<Article> articles) : articles_(std::move(articles)) {
  std::ranges::sort(articles_, {}, [](const Article& a) { return a.meta.article_id; });
  for (std::size_t i = 0; i < articles_.size(); ++i) {
    const Article& article = articles_[i];
    if (!article_index_.emplace(article.meta.article_id, i).second) {
      throw Error("duplicate article id in corpus: " + article.meta.article_id);
    }
    for (std::size_t j = 0; j < article.fragments.size(); ++j) {
      const Fragment& fragment = article.fragments[j];
      if (fragment.article_id != article.meta.article_id) {
        throw Error("fragment " + fragment.fragment_id + " does not belong to article " +
                    article.meta.article_id);
      }
      if (fragment.span.begin >= fragment.span.end || fragment.span.end > article.body.size()) {
        throw Error("fragment " + fragment.fragment_id + " has a span outside the body");
      }
      if (!fragment_index_.emplace(fragment.fragment_id, std::pair{i, j}).second) {
        throw Error("duplicate fragment id in corpus: " + fragment.fragment_id);
      }
    }
  }
}

const Article* Corpus::find_article(std::string_view article_id) const {
  auto it = article_index_.find(std::string(article_id));
  return it == article_index_.end() ? nullptr : &articles_[it->second];
}

std::optional<Corpus::FragmentRef> Corpus::find_fragment(std::string_view key) const {
  auto it = fragment_index_.find(std::string(key));
  if (it == fragment_index_.end()) return std::nullopt;
  const Article& article = articles_[it->second.first];
  return FragmentRef{&article, &article.fragments[it->second.second]};
}

TagCounts Corpus::fragment_counts() const {
  TagCounts counts;
  for (const Article& article : articles_) {
    for (const Fragment& fragment : article.fragments) ++counts[fragment.kind];
  }
  return counts;
}

}  // namespace hypermediator
