#include "hypermediator/corpus.hpp"
#include "hypermediator/scac_parser.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace hypermediator;

TEST_CASE("fragment keys") {
  CHECK(fragment_key("a1", TagKind::Norm, {10, 55}) == "a1:norm:10-55");
  CHECK(fragment_key("meliani-2008", TagKind::Relation, {0, 3}) == "meliani-2008:relations:0-3");
  CHECK(fragment_key("x", TagKind::Quote, {7, 7}) == "x:quote:7-7");
}

TEST_CASE("element names round trip") {
  for (auto kind : kAllTagKinds) {
    CHECK(tag_kind_from_element(element_name(kind)) == kind);
  }
  CHECK(element_name(TagKind::Relation) == "relations");
  CHECK_FALSE(tag_kind_from_element("relation").has_value());
  CHECK_FALSE(tag_kind_from_element("norme").has_value());
}

TEST_CASE("mentioned concepts") {
  Fragment f;
  f.kind = TagKind::Relation;
  f.attrs = RelationAttrs{ConceptId::normalize("Cadrage"), ConceptId::normalize("problème"), "x"};
  auto m = mentioned_concepts(f);
  REQUIRE(m.size() == 2);
  CHECK(m[0].str() == "cadrage");
  CHECK(m[1].str() == "problème");

  f.attrs = RelationAttrs{ConceptId::normalize("boucle"), ConceptId::normalize("BOUCLE"), "x"};
  CHECK(mentioned_concepts(f).size() == 1);

  f.kind = TagKind::Time;
  f.attrs = TimeAttrs{ConceptId::normalize("t"), "2008"};
  CHECK(mentioned_concepts(f) == std::vector{ConceptId::normalize("t")});
}

TEST_CASE("corpus is ordered by article id and indexes fragments") {
  auto z = parse_article(hmtest::article_xml("zeta", "<norm id=\"c\">zeta text</norm>"), "z");
  auto a = parse_article(hmtest::article_xml("alpha", "x <stakes id=\"c\">alpha text</stakes>"), "a");
  REQUIRE(z.article);
  REQUIRE(a.article);
  Corpus corpus({*z.article, *a.article});
  REQUIRE(corpus.articles().size() == 2);
  CHECK(corpus.articles()[0].meta.article_id == "alpha");
  CHECK(corpus.articles()[1].meta.article_id == "zeta");
  CHECK(corpus.find_article("zeta") != nullptr);
  CHECK(corpus.find_article("nope") == nullptr);

  const auto& frag = corpus.articles()[0].fragments.at(0);
  auto found = corpus.find_fragment(frag.fragment_id);
  REQUIRE(found);
  CHECK(found->fragment->text == "alpha text");
  CHECK(found->article->slice(frag.span) == "alpha text");
  CHECK_FALSE(corpus.find_fragment("alpha:norm:0-1"));

  auto counts = corpus.fragment_counts();
  CHECK(counts[TagKind::Norm] == 1);
  CHECK(counts[TagKind::Stakes] == 1);
  CHECK(counts.total() == 2);
  CHECK(corpus.fragment_total() == 2);
}

TEST_CASE("tag counts") {
  TagCounts c;
  c[TagKind::Quote] = 3;
  c[TagKind::Identity] += 2;
  CHECK(c.total() == 5);
  CHECK(c[TagKind::Norm] == 0);
}
