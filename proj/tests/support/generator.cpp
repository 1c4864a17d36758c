#include "generator.hpp"

#include "support.hpp"

#include <array>
#include <random>
#include <vector>

namespace hmtest {

namespace {

const std::vector<std::string> kVocabulary = {
    "cadrage",      "problème",     "système",      "acteur",
    "sens",         "contexte",     "fragment",     "hypertexte",
    "réseau",       "mémoire",      "école",        "communication",
    "intelligence collective",      "principe hologrammatique",
    "transclusion", "organisation", "donnée",       "forêt",
    "île",          "ça",           "straße",       "document recomposé",
};

const std::vector<std::string> kWords = {"the",   "frame", "meaning", "shifts", "when",
                                         "actors", "speak", "about",  "a",      "shared",
                                         "scene", "and",   "its",     "limits", "&amp;",
                                         "été",   "« cité »"};

const std::vector<std::string> kRelationTypes = {"lien", "analogie", "Analogy", "ANALOG",
                                                 "cause", "identifie", ""};

// Upper-cases ASCII and two-byte Latin-1 letters, matching the oracle.
std::string upper(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto c = static_cast<unsigned char>(s[i]);
    if (c >= 'a' && c <= 'z') {
      out += static_cast<char>(c - 32);
    } else if (c == 0xC3 && i + 1 < s.size()) {
      auto d = static_cast<unsigned char>(s[i + 1]);
      if (d == 0x9F) {
        out += "SS";
      } else {
        if (d >= 0xA0 && d <= 0xBE && d != 0xB7) d -= 0x20;
        out += static_cast<char>(c);
        out += static_cast<char>(d);
      }
      ++i;
    } else {
      out += static_cast<char>(c);
    }
  }
  return out;
}

class Gen {
 public:
  Gen(std::uint64_t seed, const GenOptions& options) : rng_(seed), options_(options) {}

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  std::size_t range(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  std::string concept_name() {
    std::size_t vocab = std::min(options_.vocabulary, kVocabulary.size());
    std::string name = kVocabulary[pick(vocab)];
    if (!options_.spelling_variants) return name;
    switch (pick(5)) {
      case 0: name = upper(name); break;
      case 1: name = "  " + name + " "; break;
      case 2: {
        if (auto sp = name.find(' '); sp != std::string::npos) name.replace(sp, 1, " \t ");
        name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
        break;
      }
      default: break;
    }
    return name;
  }

  std::string words() {
    std::string out;
    std::size_t n = range(1, 9);
    for (std::size_t i = 0; i < n; ++i) {
      if (i) out += ' ';
      out += kWords[pick(kWords.size())];
    }
    return out;
  }

  std::string fragment(std::size_t kind, std::size_t nest_budget) {
    std::string text = words();
    if (options_.nesting && nest_budget > 0 && chance(0.15)) {
      text += " " + fragment(pick(8), nest_budget - 1) + " " + words();
    }
    auto c = [&] { return concept_name(); };
    switch (kind) {
      case 0: return "<identity id=\"" + c() + "\">" + text + "</identity>";
      case 1: return "<norm id=\"" + c() + "\">" + text + "</norm>";
      case 2: return "<stakes id=\"" + c() + "\">" + text + "</stakes>";
      case 3:
        if (chance(0.5)) {
          return "<position holonym=\"" + c() + "\" meronym=\"" + c() + "\">" + text + "</position>";
        }
        return "<position hypernym=\"" + c() + "\" hyponym=\"" + c() + "\">" + text + "</position>";
      case 4:
        return "<relations a=\"" + c() + "\" b=\"" + c() + "\" type=\"" +
               kRelationTypes[pick(kRelationTypes.size())] + "\">" + text + "</relations>";
      case 5: return "<time id=\"" + c() + "\" date=\"" + std::to_string(1900 + pick(120)) + "\">" + text + "</time>";
      case 6: return "<spatial id=\"" + c() + "\" lieu=\"Lyon\">" + text + "</spatial>";
      default:
        return "<quote id=\"" + c() + "\" auteur=\"N. N.\" reference=\"p. " +
               std::to_string(pick(300)) + "\">" + text + "</quote>";
    }
  }

 private:
  std::mt19937_64 rng_;
  GenOptions options_;
};

}  // namespace

CorpusFiles random_corpus(std::uint64_t seed, const GenOptions& options) {
  Gen gen(seed, options);
  CorpusFiles files;
  std::size_t articles = gen.range(options.min_articles, options.max_articles);
  for (std::size_t a = 0; a < articles; ++a) {
    std::string body;
    std::size_t fragments = gen.range(options.min_fragments, options.max_fragments);
    for (std::size_t f = 0; f < fragments; ++f) {
      // The first eight fragments of the first article cycle through every kind.
      std::size_t kind = (a == 0 && f < 8) ? f : gen.pick(8);
      if (gen.chance(0.3)) body += gen.words() + "\n";
      body += gen.fragment(kind, 2) + "\n";
    }
    std::string id = "gen-" + std::to_string(seed) + "-" + std::to_string(a);
    files["article" + std::to_string(a) + ".xml"] = article_xml(id, body);
  }
  return files;
}

CorpusFiles proportion_corpus() {
  struct Quota {
    const char* kind;
    std::size_t count;
  };
  const std::array<Quota, 4> quotas = {{{"part_whole", 29},
                                        {"specification", 6},
                                        {"analogy", 7},
                                        {"associative", 58}}};
  std::array<std::string, 4> bodies;
  std::size_t n = 0;
  for (const auto& q : quotas) {
    for (std::size_t i = 0; i < q.count; ++i, ++n) {
      std::string x = "notion " + std::to_string(2 * n);
      std::string y = "notion " + std::to_string(2 * n + 1);
      std::string kind = q.kind;
      std::string frag;
      if (kind == "part_whole") {
        frag = "<position holonym=\"" + x + "\" meronym=\"" + y + "\">" + y + " belongs to " + x + "</position>";
      } else if (kind == "specification") {
        frag = "<position hypernym=\"" + x + "\" hyponym=\"" + y + "\">" + y + " is a kind of " + x + "</position>";
      } else if (kind == "analogy") {
        frag = "<relations a=\"" + x + "\" b=\"" + y + "\" type=\"analogie\">" + x + " resembles " + y + "</relations>";
      } else {
        frag = "<relations a=\"" + x + "\" b=\"" + y + "\" type=\"lien\">" + x + " goes with " + y + "</relations>";
      }
      bodies[n % 4] += frag + "\n";
    }
  }
  CorpusFiles files;
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    files["part" + std::to_string(i) + ".xml"] = article_xml("part-" + std::to_string(i), bodies[i]);
  }
  return files;
}

void write_corpus(const CorpusFiles& files, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& [name, text] : files) write_file(dir / name, text);
}

}  // namespace hmtest
