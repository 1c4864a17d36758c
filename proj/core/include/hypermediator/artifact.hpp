#pragma once

#include "hypermediator/concept_graph.hpp"
#include "hypermediator/config.hpp"
#include "hypermediator/corpus.hpp"
#include "hypermediator/recomposer.hpp"
#include "hypermediator/scac_parser.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace hypermediator {

struct Manifest {
  std::string input_hash;  // SHA-256 over article files, config file and effective settings
  std::string tool_version;
  BuildConfig config;
  std::string timestamp;  // the only field allowed to differ between identical builds
  std::vector<BuildWarning> warnings;

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

/// Everything the exports and the HTTP API serve.
struct BuildArtifact {
  Corpus corpus;
  ConceptGraph graph;
  std::map<ConceptId, ConceptRecord> records;
  Manifest manifest;

  const ConceptRecord* find_record(const ConceptId& id) const;

  friend bool operator==(const BuildArtifact&, const BuildArtifact&) = default;
};

struct ArtifactBuild {
  BuildArtifact artifact;
  ValidationReport report;
};

/// Hex SHA-256 of every article file (name and bytes, in name order), the
/// corpus config file if present, and the effective settings.
std::string input_content_hash(const std::filesystem::path& corpus_dir, const BuildConfig& config);

/// Parses the corpus, builds the graph and composes every record.
ArtifactBuild build_artifact(const std::filesystem::path& corpus_dir, const BuildConfig& config);

/// Same, from an already parsed corpus (no input hash).
BuildArtifact assemble_artifact(Corpus corpus, const BuildConfig& config);

/// Writes the JSON site bundle:
///   graph.json, index.json, manifest.json,
///   concepts/<slug>.json, articles/<slug>.json
/// Throws BundleError when the directory cannot be written.
void write_bundle(const BuildArtifact& artifact, const std::filesystem::path& out_dir);

/// Reads a bundle written by write_bundle. Throws BundleError.
BuildArtifact load_bundle(const std::filesystem::path& bundle_dir);

/// UTC time for manifests; honours SOURCE_DATE_EPOCH.
std::string build_timestamp();

}  // namespace hypermediator
