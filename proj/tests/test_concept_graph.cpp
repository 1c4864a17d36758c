#include "hypermediator/concept_graph.hpp"
#include "hypermediator/errors.hpp"
#include "hypermediator/scac_parser.hpp"

#include "generator.hpp"
#include "oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace hypermediator;

namespace {

ConceptId id(std::string_view s) { return ConceptId::normalize(s); }

GraphBuild build_dir(const std::filesystem::path& dir, WeightThresholds t = {}) {
  return build_graph(parse_corpus(dir).corpus, t, default_analogy_labels());
}

GraphBuild build_body(std::string_view body) {
  auto p = parse_article(hmtest::article_xml("t", body), "t");
  REQUIRE(p.article);
  return build_graph(Corpus({*p.article}), {}, default_analogy_labels());
}

const Edge* find_edge(const ConceptGraph& g, std::string_view a, std::string_view b, EdgeKind kind) {
  for (const auto& e : g.edges()) {
    if (e.a == id(a) && e.b == id(b) && e.kind == kind) return &e;
  }
  return nullptr;
}

std::vector<hmtest::oracle::PlainEdge> plain(const ConceptGraph& g) {
  std::vector<hmtest::oracle::PlainEdge> out;
  for (const auto& e : g.edges()) out.push_back({e.a.str(), e.b.str(), e.weight});
  return out;
}

std::size_t min_weight(WeightClass c, const WeightThresholds& t) {
  switch (c) {
    case WeightClass::Weak: return 1;
    case WeightClass::Moderate: return t.moderate_min;
    case WeightClass::Strong: return t.strong_min;
  }
  return 1;
}

}  // namespace

TEST_CASE("relation classification") {
  auto labels = default_analogy_labels();
  CHECK(classify_relation("analogie", labels) == EdgeKind::Analogy);
  CHECK(classify_relation("  Analogy ", labels) == EdgeKind::Analogy);
  CHECK(classify_relation("ANALOG", labels) == EdgeKind::Analogy);
  CHECK(classify_relation("identifie", labels) == EdgeKind::Associative);
  CHECK(classify_relation("", labels) == EdgeKind::Associative);
  CHECK(classify_relation("metaphore", {"métaphore"}) == EdgeKind::Associative);
  CHECK(classify_relation("Métaphore", {"métaphore"}) == EdgeKind::Analogy);
}

TEST_CASE("weight classes") {
  WeightThresholds t;
  CHECK(weight_class(1, t) == WeightClass::Weak);
  CHECK(weight_class(2, t) == WeightClass::Moderate);
  CHECK(weight_class(3, t) == WeightClass::Strong);
  CHECK(weight_class(40, t) == WeightClass::Strong);
  WeightThresholds wide{.strong_min = 5, .moderate_min = 3};
  CHECK(weight_class(2, wide) == WeightClass::Weak);
  CHECK(weight_class(4, wide) == WeightClass::Moderate);
  CHECK_NOTHROW(wide.check());
  CHECK_THROWS_AS((WeightThresholds{.strong_min = 2, .moderate_min = 3}.check()), ConfigError);
  CHECK_THROWS_AS((WeightThresholds{.strong_min = 3, .moderate_min = 1}.check()), ConfigError);
  CHECK_NOTHROW((WeightThresholds{.strong_min = 2, .moderate_min = 2}.check()));
}

TEST_CASE("property: weight class is monotone in weight") {
  for (std::size_t m = 2; m < 8; ++m) {
    for (std::size_t s = m; s < 10; ++s) {
      WeightThresholds t{.strong_min = s, .moderate_min = m};
      for (std::size_t w = 1; w < 20; ++w) CHECK(weight_class(w, t) <= weight_class(w + 1, t));
    }
  }
}

TEST_CASE("star fixture") {
  auto built = build_dir(hmtest::fixture("star"));
  const auto& g = built.graph;
  CHECK(g.nodes().size() == 6);
  CHECK(g.edges().size() == 5);
  const auto* north = find_edge(g, "centre", "nord", EdgeKind::Associative);
  REQUIRE(north);
  CHECK(north->weight == 3);
  CHECK(north->supporting_fragments.size() == 3);
  CHECK(north->rel_labels == std::vector<std::string>{"lien", "lien", "lien"});
  CHECK(weight_class(north->weight, g.thresholds()) == WeightClass::Strong);
  const auto* sw = find_edge(g, "sud", "sud-ouest", EdgeKind::PartWhole);
  REQUIRE(sw);
  CHECK(sw->directed());
  CHECK(built.warnings.empty());
}

TEST_CASE("undirected edges store endpoints in order") {
  auto built = build_body("<relations a=\"zèbre\" b=\"âne\" type=\"lien\">z</relations>");
  REQUIRE(built.graph.edges().size() == 1);
  const auto& e = built.graph.edges()[0];
  CHECK(e.a < e.b);
  CHECK_FALSE(e.directed());
}

TEST_CASE("directed edges keep whole and general on the a side") {
  auto built = build_body(
      "<position holonym=\"zz\" meronym=\"aa\">p</position>"
      "<position hypernym=\"yy\" hyponym=\"bb\">s</position>");
  REQUIRE(built.graph.edges().size() == 2);
  CHECK(find_edge(built.graph, "zz", "aa", EdgeKind::PartWhole));
  CHECK(find_edge(built.graph, "yy", "bb", EdgeKind::Specification));
}

TEST_CASE("self relations and empty types warn") {
  auto built = build_body(
      "<relations a=\"boucle\" b=\" BOUCLE\" type=\"lien\">x</relations>"
      "<relations a=\"x\" b=\"y\" type=\"\">y</relations>");
  CHECK(built.graph.edges().size() == 1);
  CHECK(built.warnings.size() == 2);
  CHECK(built.graph.contains(id("boucle")));
  CHECK(built.graph.edges()[0].kind == EdgeKind::Associative);
}

TEST_CASE("no relations gives an empty edge set") {
  auto built = build_dir(hmtest::fixture("no-relations"));
  CHECK(built.graph.edges().empty());
  auto s = stats(built.graph);
  CHECK(s.edge_count == 0);
  CHECK(s.concept_count == 2);
  CHECK(s.fragments_by_kind.total() == 6);
}

TEST_CASE("stats") {
  auto built = build_dir(hmtest::fixture("chain"));
  auto s = stats(built.graph);
  CHECK(s.concept_count == 4);
  CHECK(s.edge_count == 4);
  CHECK(s.edges_of(EdgeKind::Associative) == 2);
  CHECK(s.edges_of(EdgeKind::Specification) == 1);
  CHECK(s.edges_of(EdgeKind::Analogy) == 1);
  CHECK(s.edges_of(EdgeKind::PartWhole) == 0);
  CHECK(s.fragments_by_kind[TagKind::Relation] == 4);
}

TEST_CASE("ego network of the star center") {
  auto g = build_dir(hmtest::fixture("star")).graph;
  auto ego = ego_network(g, id("centre"), 1, WeightClass::Weak);
  CHECK(ego.graph.nodes().size() == 5);
  CHECK(ego.graph.edges().size() == 4);
  CHECK(ego.graph.nodes()[0].id == id("centre"));
  CHECK(ego.hops[0] == 0);

  auto strong = ego_network(g, id("centre"), 1, WeightClass::Strong);
  CHECK(strong.graph.nodes().size() == 2);
  CHECK(strong.graph.edges().size() == 1);

  auto deeper = ego_network(g, id("centre"), 2, WeightClass::Weak);
  CHECK(deeper.graph.nodes().size() == 6);

  CHECK_THROWS_AS(ego_network(g, id("absent"), 1, WeightClass::Weak), UnknownConcept);
  CHECK_THROWS_AS(ego_network(g, id("centre"), 0, WeightClass::Weak), Error);
}

TEST_CASE("paths in the chain") {
  auto g = build_dir(hmtest::fixture("chain")).graph;
  auto paths = find_paths(g, id("a"), id("c"), 2, WeightClass::Weak);
  REQUIRE(paths.size() == 2);
  // a-b-c and a-d-c, same length, ordered by node sequence.
  CHECK(paths[0][0].to == id("b"));
  CHECK(paths[1][0].to == id("d"));
  for (const auto& p : paths) {
    CHECK(p.front().from == id("a"));
    CHECK(p.back().to == id("c"));
  }
  CHECK(find_paths(g, id("a"), id("c"), 1, WeightClass::Weak).empty());
  auto moderate = find_paths(g, id("a"), id("d"), 3, WeightClass::Moderate);
  REQUIRE(moderate.size() == 1);
  CHECK(moderate[0].size() == 1);
  CHECK(find_paths(g, id("a"), id("a"), 3, WeightClass::Weak).empty());
  CHECK_THROWS_AS(find_paths(g, id("a"), id("zz"), 3, WeightClass::Weak), UnknownConcept);
}

TEST_CASE("graph construction is order independent") {
  auto files = hmtest::random_corpus(5, {.min_articles = 3, .max_articles = 3});
  hmtest::TempDir dir;
  hmtest::write_corpus(files, dir.path());
  auto corpus = parse_corpus(dir.path()).corpus;
  std::vector<Article> reversed(corpus.articles().rbegin(), corpus.articles().rend());
  auto a = build_graph(corpus, {}, default_analogy_labels());
  auto b = build_graph(Corpus(reversed), {}, default_analogy_labels());
  CHECK(a.graph == b.graph);
  CHECK(std::is_sorted(a.graph.edges().begin(), a.graph.edges().end(), edge_key_less));
}

TEST_CASE("ConceptGraph rejects inconsistent input") {
  std::vector<ConceptNode> nodes = {{id("a"), {}}, {id("b"), {}}};
  Edge good{id("a"), id("b"), EdgeKind::Associative, 1, {"x"}, {"t:relations:0-1"}};
  CHECK_NOTHROW(ConceptGraph(nodes, {good}, {}, {}));
  Edge dangling = good;
  dangling.b = id("c");
  CHECK_THROWS(ConceptGraph(nodes, {dangling}, {}, {}));
  Edge loop = good;
  loop.b = id("a");
  CHECK_THROWS(ConceptGraph(nodes, {loop}, {}, {}));
  Edge heavy = good;
  heavy.weight = 2;
  CHECK_THROWS(ConceptGraph(nodes, {heavy}, {}, {}));
}

TEST_CASE("property: ego and paths agree with exhaustive enumeration") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    CAPTURE(seed);
    auto files = hmtest::random_corpus(seed, {.max_articles = 2, .max_fragments = 14, .vocabulary = 10});
    hmtest::TempDir dir;
    hmtest::write_corpus(files, dir.path());
    WeightThresholds t{.strong_min = 3, .moderate_min = 2};
    auto g = build_dir(dir.path(), t).graph;
    REQUIRE(g.nodes().size() <= 30);
    auto edges = plain(g);

    for (const auto& center : g.nodes()) {
      for (std::size_t depth = 1; depth <= 3; ++depth) {
        for (auto cls : {WeightClass::Weak, WeightClass::Moderate, WeightClass::Strong}) {
          auto expected = hmtest::oracle::ego_hops(edges, center.id.str(), depth, min_weight(cls, t));
          auto ego = ego_network(g, center.id, depth, cls);
          std::map<std::string, std::size_t> got;
          for (std::size_t i = 0; i < ego.graph.nodes().size(); ++i) got[ego.graph.nodes()[i].id.str()] = ego.hops[i];
          CHECK(got == expected);
          // Every qualifying edge between members, nothing else.
          std::size_t between = 0;
          for (const auto& e : g.edges()) {
            if (e.weight >= min_weight(cls, t) && expected.contains(e.a.str()) && expected.contains(e.b.str())) ++between;
          }
          CHECK(ego.graph.edges().size() == between);
          ++checked;
        }
      }
    }

    for (const auto& from : g.nodes()) {
      for (const auto& to : g.nodes()) {
        for (auto cls : {WeightClass::Weak, WeightClass::Moderate}) {
          auto expected = hmtest::oracle::all_paths(edges, from.id.str(), to.id.str(), 3, min_weight(cls, t));
          auto paths = find_paths(g, from.id, to.id, 3, cls);
          std::set<std::vector<std::size_t>> got;
          for (const auto& p : paths) {
            std::vector<std::size_t> seq;
            for (const auto& step : p) seq.push_back(step.edge_index);
            got.insert(seq);
          }
          CHECK(got.size() == paths.size());
          CHECK(got == expected);
          for (std::size_t i = 1; i < paths.size(); ++i) CHECK(paths[i - 1].size() <= paths[i].size());
        }
      }
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("property: raising min_class never grows the ego network") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    auto files = hmtest::random_corpus(seed, {.vocabulary = 8});
    hmtest::TempDir dir;
    hmtest::write_corpus(files, dir.path());
    auto g = build_dir(dir.path()).graph;
    for (const auto& center : g.nodes()) {
      auto weak = ego_network(g, center.id, 2, WeightClass::Weak);
      auto moderate = ego_network(g, center.id, 2, WeightClass::Moderate);
      auto strong = ego_network(g, center.id, 2, WeightClass::Strong);
      auto ids = [](const EgoNetwork& e) {
        std::set<ConceptId> s;
        for (const auto& n : e.graph.nodes()) s.insert(n.id);
        return s;
      };
      auto w = ids(weak), m = ids(moderate), s = ids(strong);
      CHECK(std::includes(w.begin(), w.end(), m.begin(), m.end()));
      CHECK(std::includes(m.begin(), m.end(), s.begin(), s.end()));
      CHECK(weak.graph.edges().size() >= moderate.graph.edges().size());
      CHECK(moderate.graph.edges().size() >= strong.graph.edges().size());
    }
  }
}
