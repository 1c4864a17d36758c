#include "hypermediator/artifact.hpp"

#include "hypermediator/errors.hpp"
#include "hypermediator/serialize.hpp"
#include "hypermediator/slug.hpp"
#include "hypermediator/version.hpp"
#include "json_codec.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <memory>
#include <sstream>

namespace hypermediator {

namespace fs = std::filesystem;

namespace {

class Sha256 {
 public:
  Sha256() : ctx_(EVP_MD_CTX_new(), &EVP_MD_CTX_free) {
    if (!ctx_ || EVP_DigestInit_ex(ctx_.get(), EVP_sha256(), nullptr) != 1) {
      throw Error("cannot initialise SHA-256");
    }
  }

  void update(std::string_view bytes) {
    EVP_DigestUpdate(ctx_.get(), bytes.data(), bytes.size());
  }

  // Length-prefixed so that concatenated fields cannot alias each other.
  void field(std::string_view bytes) {
    update(std::to_string(bytes.size()));
    update(std::string_view("\0", 1));
    update(bytes);
  }

  std::string hex() {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_DigestFinal_ex(ctx_.get(), digest, &length);
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < length; ++i) {
      out += kHex[digest[i] >> 4];
      out += kHex[digest[i] & 0xF];
    }
    return out;
  }

 private:
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx_;
};

std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

void write_file(const fs::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw BundleError("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw BundleError("cannot write " + path.string());
}

codec::json read_json(const fs::path& path) {
  const auto text = read_file(path);
  if (!text) throw BundleError("cannot read " + path.string());
  try {
    return codec::json::parse(*text);
  } catch (const codec::json::exception& e) {
    throw BundleError(path.string() + ": " + e.what());
  }
}

std::vector<fs::path> json_files_in(const fs::path& dir) {
  std::vector<fs::path> out;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") out.push_back(entry.path());
  }
  std::ranges::sort(out);
  return out;
}

}  // namespace

const ConceptRecord* BuildArtifact::find_record(const ConceptId& id) const {
  auto it = records.find(id);
  return it == records.end() ? nullptr : &it->second;
}

std::string build_timestamp() {
  std::time_t seconds = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
    seconds = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  }
  std::tm utc{};
  gmtime_r(&seconds, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

std::string input_content_hash(const fs::path& corpus_dir, const BuildConfig& config) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(corpus_dir)) {
    if (entry.path().extension() == ".xml" && !entry.is_directory()) files.push_back(entry.path());
  }
  std::ranges::sort(files, {}, [](const fs::path& p) { return p.filename().string(); });

  Sha256 hash;
  for (const fs::path& file : files) {
    hash.field(file.filename().string());
    hash.field(read_file(file).value_or(std::string()));
  }
  if (auto config_bytes = read_file(corpus_dir / kConfigFileName)) {
    hash.field(kConfigFileName);
    hash.field(*config_bytes);
  }
  hash.field(codec::config_to_json(config).dump());
  return hash.hex();
}

BuildArtifact assemble_artifact(Corpus corpus, const BuildConfig& config) {
  BuildArtifact artifact;
  GraphBuild built = build_graph(corpus, config.thresholds, config.analogy_labels);
  artifact.graph = std::move(built.graph);
  for (const ConceptNode& node : artifact.graph.nodes()) {
    artifact.records.emplace(node.id, compose_record(corpus, artifact.graph, node.id, config.captions));
  }
  artifact.corpus = std::move(corpus);
  artifact.manifest.tool_version = std::string(kVersion);
  artifact.manifest.config = config;
  artifact.manifest.warnings = std::move(built.warnings);
  artifact.manifest.timestamp = build_timestamp();
  return artifact;
}

ArtifactBuild build_artifact(const fs::path& corpus_dir, const BuildConfig& config) {
  config.thresholds.check();
  CorpusParse parsed = parse_corpus(corpus_dir);
  ArtifactBuild out;
  out.artifact = assemble_artifact(std::move(parsed.corpus), config);
  out.artifact.manifest.input_hash = input_content_hash(corpus_dir, config);
  out.report = std::move(parsed.report);
  return out;
}

void write_bundle(const BuildArtifact& artifact, const fs::path& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec || !fs::is_directory(out_dir)) {
    throw BundleError("cannot create output directory " + out_dir.string() + ": " + ec.message());
  }
  const fs::path concepts = out_dir / "concepts";
  const fs::path articles = out_dir / "articles";
  for (const fs::path& dir : {concepts, articles}) {
    fs::remove_all(dir, ec);
    fs::create_directories(dir, ec);
    if (ec) throw BundleError("cannot create " + dir.string() + ": " + ec.message());
  }

  const std::size_t window = artifact.manifest.config.context_window;
  write_file(out_dir / "graph.json", graph_json(artifact.graph));
  write_file(out_dir / "index.json", index_json(artifact.corpus));
  write_file(out_dir / "manifest.json", manifest_json(artifact.manifest));
  for (const auto& [id, record] : artifact.records) {
    write_file(concepts / (slugify(id.str()) + ".json"),
               record_json(record, artifact.graph, artifact.corpus, window));
  }
  for (const Article& article : artifact.corpus.articles()) {
    write_file(articles / (slugify(article.meta.article_id) + ".json"), article_json(article));
  }
}

BuildArtifact load_bundle(const fs::path& bundle_dir) {
  std::error_code ec;
  if (!fs::is_regular_file(bundle_dir / "manifest.json", ec)) {
    throw BundleError(bundle_dir.string() + " is not a bundle (no manifest.json)");
  }
  BuildArtifact artifact;
  try {
    artifact.manifest = codec::manifest_from_json(read_json(bundle_dir / "manifest.json"));
    artifact.graph = codec::graph_from_json(read_json(bundle_dir / "graph.json"));
    std::vector<Article> articles;
    for (const fs::path& file : json_files_in(bundle_dir / "articles")) {
      articles.push_back(codec::article_from_json(read_json(file)));
    }
    artifact.corpus = Corpus(std::move(articles));
    for (const fs::path& file : json_files_in(bundle_dir / "concepts")) {
      ConceptRecord record = codec::record_from_json(read_json(file));
      ConceptId id = record.concept_id;
      artifact.records.emplace(std::move(id), std::move(record));
    }
  } catch (const codec::json::exception& e) {
    throw BundleError("malformed bundle " + bundle_dir.string() + ": " + e.what());
  } catch (const InvalidConceptId& e) {
    throw BundleError("malformed bundle " + bundle_dir.string() + ": " + e.what());
  }
  for (const ConceptNode& node : artifact.graph.nodes()) {
    if (!artifact.records.contains(node.id)) {
      throw BundleError("bundle has no record for concept \"" + node.id.str() + "\"");
    }
  }
  return artifact;
}

}  // namespace hypermediator
