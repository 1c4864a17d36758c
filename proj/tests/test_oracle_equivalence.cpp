// Library output against the regex scanner on fixed and generated corpora.

#include "hypermediator/concept_graph.hpp"
#include "hypermediator/scac_parser.hpp"

#include "generator.hpp"
#include "oracle.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace hypermediator;
namespace oracle = hmtest::oracle;

namespace {

void check_against_oracle(const std::filesystem::path& dir) {
  auto expected = oracle::expect(oracle::scan_dir(dir));
  auto parsed = parse_corpus(dir);
  REQUIRE_FALSE(parsed.report.has_errors());
  auto graph = build_graph(parsed.corpus, {}, default_analogy_labels()).graph;
  auto s = stats(graph);

  CHECK(parsed.corpus.fragment_total() == expected.fragment_total);
  for (auto kind : kAllTagKinds) {
    auto name = std::string(element_name(kind));
    auto want = expected.fragments_by_kind.contains(name) ? expected.fragments_by_kind.at(name) : 0;
    CAPTURE(name);
    CHECK(parsed.report.counts[kind] == want);
    CHECK(s.fragments_by_kind[kind] == want);
  }

  std::set<std::string> concepts;
  std::map<std::string, std::map<std::string, std::size_t>> counts;
  for (const auto& node : graph.nodes()) {
    concepts.insert(node.id.str());
    for (auto kind : kAllTagKinds) {
      if (node.counts[kind] > 0) counts[node.id.str()][std::string(element_name(kind))] = node.counts[kind];
    }
  }
  CHECK(concepts == expected.concepts);
  CHECK(counts == expected.concept_counts);
  CHECK(s.concept_count == expected.concepts.size());

  std::map<oracle::EdgeKey, std::size_t> edges;
  for (const auto& e : graph.edges()) edges[{e.a.str(), e.b.str(), std::string(to_string(e.kind))}] = e.weight;
  CHECK(edges == expected.edges);
  CHECK(s.edge_count == expected.edges.size());
  for (auto kind : kAllEdgeKinds) {
    auto name = std::string(to_string(kind));
    CHECK(s.edges_of(kind) == (expected.edges_by_kind.contains(name) ? expected.edges_by_kind.at(name) : 0));
  }
}

}  // namespace

TEST_CASE("fixtures") {
  for (const char* name : {"rich", "fig2", "star", "chain", "no-relations", "edge-cases"}) {
    CAPTURE(name);
    check_against_oracle(hmtest::fixture(name));
  }
}

TEST_CASE("rich fixture figures") {
  auto expected = oracle::expect(oracle::scan_dir(hmtest::fixture("rich")));
  CHECK(expected.fragment_total == 44);
  CHECK(expected.fragments_by_kind.size() == 8);
  // cadrage -> problème is asserted in two articles, three times in all.
  CHECK(expected.edges.at({"cadrage", "problème", "associative"}) == 3);
  CHECK(expected.edges.at({"organisation", "système", "analogy"}) == 2);
}

TEST_CASE("generated corpora") {
  for (std::uint64_t seed = 1000; seed < 1100; ++seed) {
    CAPTURE(seed);
    hmtest::TempDir dir;
    hmtest::write_corpus(hmtest::random_corpus(seed), dir.path());
    check_against_oracle(dir.path());
  }
}
