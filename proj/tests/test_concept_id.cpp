#include "hypermediator/concept_id.hpp"
#include "hypermediator/errors.hpp"
#include "hypermediator/slug.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace hypermediator;

TEST_CASE("normalize examples") {
  CHECK(normalize_concept_id("cadrage").str() == "cadrage");
  CHECK(normalize_concept_id("  Cadrage ").str() == "cadrage");
  CHECK(normalize_concept_id("Systémique\tQualitative").str() == "systémique qualitative");
  CHECK(normalize_concept_id("PRINCIPE   HOLOGRAMMATIQUE").str() == "principe hologrammatique");
}

TEST_CASE("normalize applies NFC") {
  // "e" + combining acute accent composes to U+00E9.
  CHECK(normalize_concept_id("proble\xCC\x80me").str() == "problème");
  CHECK(normalize_concept_id("problème") == normalize_concept_id("proble\xCC\x80me"));
}

TEST_CASE("normalize collapses unicode white space") {
  // no-break space and ideographic space
  CHECK(normalize_concept_id("a\xC2\xA0\xC2\xA0" "b").str() == "a b");
  CHECK(normalize_concept_id("\xE3\x80\x80x\n\ny\r\n").str() == "x y");
}

TEST_CASE("blank identifiers are rejected") {
  CHECK_THROWS_AS(normalize_concept_id(""), InvalidConceptId);
  CHECK_THROWS_AS(normalize_concept_id(" \t\n"), InvalidConceptId);
  CHECK_THROWS_AS(normalize_concept_id("\xC2\xA0"), InvalidConceptId);
  CHECK(normalize_text("   ").empty());
  CHECK(is_blank(" \t\xC2\xA0"));
  CHECK_FALSE(is_blank(" x "));
}

TEST_CASE("utf-8 validation") {
  CHECK(is_valid_utf8("cadrage"));
  CHECK(is_valid_utf8("problème"));
  CHECK_FALSE(is_valid_utf8("\xFF"));
  CHECK_FALSE(is_valid_utf8("\xC3"));
  CHECK_FALSE(is_valid_utf8("\xED\xA0\x80"));  // surrogate
}

namespace {

std::string random_spelling(std::mt19937& rng) {
  static const std::vector<std::string> pieces = {
      "a", "B", "é", "É", "ç", "Ç", "ß", "SS", "  ", "\t", "\n", " ", "x", "Y", "ô", "ÿ", "Σ",
      "σ", "ς", "İ", "ﬁ", "e\xCC\x81", "\xC2\xA0", "-", "'", "1"};
  std::uniform_int_distribution<std::size_t> len(1, 12);
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  std::string s;
  for (std::size_t i = len(rng); i > 0; --i) s += pieces[pick(rng)];
  return s;
}

std::string ascii_upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

TEST_CASE("property: normalize is idempotent and case-insensitive") {
  std::mt19937 rng(7);
  for (int i = 0; i < 500; ++i) {
    auto raw = random_spelling(rng);
    auto once = normalize_text(raw);
    CHECK(normalize_text(once) == once);
    CHECK(normalize_text(ascii_upper(raw)) == once);
    CHECK(is_valid_utf8(once));
    if (!once.empty()) {
      CHECK(once.front() != ' ');
      CHECK(once.back() != ' ');
      CHECK(once.find("  ") == std::string::npos);
    }
  }
}

TEST_CASE("property: unicode upper-casing does not change identity") {
  // Upper-case forms written out by hand; the library must fold them back.
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"straße", "STRASSE"}, {"école", "ÉCOLE"},   {"ça", "ÇA"},
      {"σοφία", "ΣΟΦΊΑ"},    {"forêt", "FORÊT"},   {"île", "ÎLE"},
      {"ﬁlm", "FILM"},       {"œuvre", "ŒUVRE"},   {"ÿ", "Ÿ"}};
  for (const auto& [lower, upper] : pairs) {
    CAPTURE(lower);
    CHECK(normalize_text(lower) == normalize_text(upper));
  }
}

TEST_CASE("oracle normalizer agrees on the spellings it covers") {
  for (const char* raw : {"  Cadrage ", "Systémique\tQualitative", "ÉCOLE", "Straße", "STRASSE",
                          "principe  hologrammatique", "ÇA"}) {
    CAPTURE(raw);
    CHECK(hmtest::oracle::normalize(raw) == normalize_text(raw));
  }
}

TEST_CASE("slugs") {
  CHECK(slugify("cadrage") == "cadrage");
  CHECK(slugify("principe hologrammatique") == "principe-hologrammatique");
  CHECK(slugify("problème") == "probl%C3%A8me");
  CHECK(slugify("a-b") == "a%2Db");
  CHECK(slugify("..") == "%2E%2E");
  CHECK(slugify("a/b?c") == "a%2Fb%3Fc");
  CHECK(slugify("a b") != slugify("a-b"));
  CHECK(unslugify("probl%C3%A8me") == "problème");
  CHECK(unslugify("principe-hologrammatique") == "principe hologrammatique");
  CHECK(unslugify("bad%zz") == "bad%zz");
}

TEST_CASE("property: slug round trip") {
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto id = normalize_text(random_spelling(rng));
    if (id.empty()) continue;
    auto slug = slugify(id);
    CHECK(unslugify(slug) == id);
    CHECK(slug.find('/') == std::string::npos);
    CHECK(slug.find(' ') == std::string::npos);
    CHECK(slug != ".");
    CHECK(slug != "..");
  }
}
