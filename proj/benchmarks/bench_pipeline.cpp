#include "hypermediator/artifact.hpp"
#include "hypermediator/concept_graph.hpp"
#include "hypermediator/gexf.hpp"
#include "hypermediator/recomposer.hpp"
#include "hypermediator/scac_parser.hpp"
#include "hypermediator/serialize.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

using namespace hypermediator;

namespace {

// Articles of `fragments` tags each over a vocabulary of `concepts` names,
// about a third of them relational.
std::vector<std::string> make_articles(std::size_t articles, std::size_t fragments, std::size_t concepts) {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<std::size_t> pick(0, concepts - 1);
  std::uniform_int_distribution<int> kind(0, 11);
  auto name = [&] { return "notion " + std::to_string(pick(rng)); };
  std::vector<std::string> out;
  for (std::size_t a = 0; a < articles; ++a) {
    std::string body;
    for (std::size_t f = 0; f < fragments; ++f) {
      std::string text = "some running prose about the framing of a situation, number " + std::to_string(f);
      switch (kind(rng)) {
        case 0: body += "<identity id=\"" + name() + "\">" + text + "</identity>\n"; break;
        case 1: body += "<norm id=\"" + name() + "\">" + text + "</norm>\n"; break;
        case 2: body += "<stakes id=\"" + name() + "\">" + text + "</stakes>\n"; break;
        case 3: body += "<time id=\"" + name() + "\" date=\"1999\">" + text + "</time>\n"; break;
        case 4: body += "<spatial id=\"" + name() + "\" lieu=\"Lyon\">" + text + "</spatial>\n"; break;
        case 5: body += "<quote id=\"" + name() + "\" auteur=\"N\" reference=\"r\">" + text + "</quote>\n"; break;
        case 6: body += "<position holonym=\"" + name() + "\" meronym=\"" + name() + "\">" + text + "</position>\n"; break;
        case 7: body += "<position hypernym=\"" + name() + "\" hyponym=\"" + name() + "\">" + text + "</position>\n"; break;
        case 8: body += "<relations a=\"" + name() + "\" b=\"" + name() + "\" type=\"analogie\">" + text + "</relations>\n"; break;
        default: body += "<relations a=\"" + name() + "\" b=\"" + name() + "\" type=\"lien\">" + text + "</relations>\n"; break;
      }
    }
    out.push_back("<article id=\"a" + std::to_string(a) + "\"><meta><title>t</title><author>x</author></meta><body>\n" +
                  body + "</body></article>\n");
  }
  return out;
}

Corpus make_corpus(std::size_t articles, std::size_t fragments, std::size_t concepts) {
  std::vector<Article> parsed;
  for (const auto& src : make_articles(articles, fragments, concepts)) {
    parsed.push_back(*parse_article(src, "x").article);
  }
  return Corpus(std::move(parsed));
}

void BM_ParseArticle(benchmark::State& state) {
  auto sources = make_articles(1, static_cast<std::size_t>(state.range(0)), 150);
  for (auto _ : state) benchmark::DoNotOptimize(parse_article(sources[0], "x"));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(sources[0].size()));
}
BENCHMARK(BM_ParseArticle)->Arg(50)->Arg(500)->Arg(5000);

void BM_BuildGraph(benchmark::State& state) {
  auto corpus = make_corpus(static_cast<std::size_t>(state.range(0)), 60, 150);
  for (auto _ : state) benchmark::DoNotOptimize(build_graph(corpus, {}, default_analogy_labels()));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.fragment_total()));
}
BENCHMARK(BM_BuildGraph)->Arg(33)->Arg(330);

void BM_ComposeAllRecords(benchmark::State& state) {
  auto corpus = make_corpus(33, 60, 150);
  auto graph = build_graph(corpus, {}, default_analogy_labels()).graph;
  for (auto _ : state) {
    for (const auto& node : graph.nodes()) benchmark::DoNotOptimize(compose_record(corpus, graph, node.id));
  }
}
BENCHMARK(BM_ComposeAllRecords);

void BM_EgoNetwork(benchmark::State& state) {
  auto corpus = make_corpus(33, 60, 150);
  auto graph = build_graph(corpus, {}, default_analogy_labels()).graph;
  const auto& center = graph.nodes()[0].id;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ego_network(graph, center, static_cast<std::size_t>(state.range(0)), WeightClass::Weak));
  }
}
BENCHMARK(BM_EgoNetwork)->Arg(1)->Arg(2)->Arg(3);

void BM_FindPaths(benchmark::State& state) {
  auto corpus = make_corpus(33, 60, 150);
  auto graph = build_graph(corpus, {}, default_analogy_labels()).graph;
  const auto& from = graph.nodes().front().id;
  const auto& to = graph.nodes().back().id;
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_paths(graph, from, to, static_cast<std::size_t>(state.range(0)), WeightClass::Weak));
  }
}
BENCHMARK(BM_FindPaths)->Arg(2)->Arg(3);

void BM_ExportGexf(benchmark::State& state) {
  auto corpus = make_corpus(33, 60, 150);
  auto graph = build_graph(corpus, {}, default_analogy_labels()).graph;
  for (auto _ : state) benchmark::DoNotOptimize(export_gexf(graph));
}
BENCHMARK(BM_ExportGexf);

void BM_GraphJson(benchmark::State& state) {
  auto corpus = make_corpus(33, 60, 150);
  auto graph = build_graph(corpus, {}, default_analogy_labels()).graph;
  for (auto _ : state) benchmark::DoNotOptimize(graph_json(graph));
}
BENCHMARK(BM_GraphJson);

}  // namespace

BENCHMARK_MAIN();
