#pragma once

#include "hypermediator/concept_graph.hpp"
#include "hypermediator/recomposer.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace hypermediator {

inline constexpr std::string_view kConfigFileName = "hypermediator.toml";

/// Per-corpus build settings.
struct BuildConfig {
  WeightThresholds thresholds;
  AnalogyLabels analogy_labels = default_analogy_labels();
  CaptionTemplates captions;
  std::size_t context_window = kDefaultContextWindow;

  friend bool operator==(const BuildConfig&, const BuildConfig&) = default;
};

/// Applies a TOML-subset document on top of `config`:
///
///     strong_min = 3
///     moderate_min = 2
///     analogy_labels = ["analogy", "analogie"]
///     context_window = 200
///     [captions]
///     relations = "..."
///
/// Throws ConfigError with a line number on malformed input or unknown keys.
void apply_config_text(BuildConfig& config, std::string_view text,
                       std::string_view origin = kConfigFileName);

/// Defaults overlaid with `<corpus_dir>/hypermediator.toml` when present.
BuildConfig load_corpus_config(const std::filesystem::path& corpus_dir);

}  // namespace hypermediator
