#include "cli.hpp"

#include "hypermediator/artifact.hpp"
#include "hypermediator/errors.hpp"
#include "hypermediator/gexf.hpp"
#include "hypermediator/serialize.hpp"
#include "hypermediator/server.hpp"
#include "hypermediator/slug.hpp"
#include "hypermediator/version.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

namespace hypermediator::cli {

namespace fs = std::filesystem;

namespace {

struct Options {
  std::string corpus_dir;
  std::string bundle_dir;
  std::string output;
  std::string json_report;
  std::string config_file;
  std::optional<std::size_t> strong_min;
  std::optional<std::size_t> moderate_min;
  std::optional<std::size_t> context_window;
  std::vector<std::string> analogy_labels;
  bool keep_going = false;
  bool json = false;
  std::string format;
  std::string concept_id;
  std::string from;
  std::string to;
  std::size_t max_hops = 3;
  std::size_t depth = 1;
  std::string min_class = "weak";
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string ui_dir;
};

void print_issue(std::ostream& os, const ParseIssue& issue) {
  os << issue.article_id << ':' << issue.location.line << ':' << issue.location.column << ": "
     << to_string(issue.severity) << ": " << to_string(issue.code) << ": " << issue.message << '\n';
}

void print_counts(std::ostream& os, const TagCounts& counts) {
  os << counts.total() << " fragments (";
  for (std::size_t i = 0; i < kAllTagKinds.size(); ++i) {
    if (i > 0) os << ", ";
    os << element_name(kAllTagKinds[i]) << ' ' << counts[kAllTagKinds[i]];
  }
  os << ')';
}

void print_stats(std::ostream& os, const GraphStats& s) {
  os << "concepts: " << s.concept_count << '\n' << "edges: " << s.edge_count << '\n';
  for (EdgeKind kind : kAllEdgeKinds) os << "  " << to_string(kind) << ": " << s.edges_of(kind) << '\n';
  os << "fragments: " << s.fragments_by_kind.total() << '\n';
  for (TagKind kind : kAllTagKinds) {
    os << "  " << element_name(kind) << ": " << s.fragments_by_kind[kind] << '\n';
  }
}

WeightClass parse_min_class(const std::string& text) {
  const auto parsed = weight_class_from_string(text);
  if (!parsed) throw CLI::ValidationError("--min-class", "expected weak, moderate or strong");
  return *parsed;
}

ConceptId resolve_concept(const BuildArtifact& artifact, const std::string& token) {
  for (const std::string& candidate : {token, unslugify(token)}) {
    try {
      ConceptId id = ConceptId::normalize(candidate);
      if (artifact.graph.contains(id)) return id;
    } catch (const InvalidConceptId&) {
    }
  }
  throw UnknownConcept(token);
}

int cmd_validate(const Options& opt, std::ostream& out, std::ostream& err) {
  const ValidationReport report = validate(opt.corpus_dir);
  const bool json_to_stdout = opt.json_report == "-";
  if (!opt.json_report.empty()) {
    const std::string doc = report_json(report);
    if (json_to_stdout) {
      out << doc;
    } else {
      std::ofstream file(opt.json_report, std::ios::binary);
      if (!file || !(file << doc)) {
        err << "error: cannot write " << opt.json_report << '\n';
        return kExitFailure;
      }
    }
  }
  if (!json_to_stdout) {
    for (const ParseIssue& issue : report.issues) print_issue(out, issue);
    out << "validated " << report.articles_parsed << " articles: ";
    print_counts(out, report.counts);
    out << "; " << report.error_count() << " errors, " << report.warning_count() << " warnings\n";
  }
  return report.has_errors() ? kExitFailure : kExitOk;
}

BuildConfig effective_config(const Options& opt) {
  BuildConfig config;
  if (!opt.config_file.empty()) {
    std::ifstream in(opt.config_file, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file " + opt.config_file);
    std::ostringstream text;
    text << in.rdbuf();
    apply_config_text(config, text.str(), opt.config_file);
  } else {
    config = load_corpus_config(opt.corpus_dir);
  }
  if (opt.strong_min) config.thresholds.strong_min = *opt.strong_min;
  if (opt.moderate_min) config.thresholds.moderate_min = *opt.moderate_min;
  if (opt.context_window) config.context_window = *opt.context_window;
  if (!opt.analogy_labels.empty()) {
    config.analogy_labels.clear();
    for (const std::string& label : opt.analogy_labels) {
      config.analogy_labels.insert(normalize_text(label));
    }
  }
  config.thresholds.check();
  return config;
}

int cmd_build(const Options& opt, std::ostream& out, std::ostream& err) {
  const BuildConfig config = effective_config(opt);
  const ArtifactBuild built = build_artifact(opt.corpus_dir, config);
  for (const ParseIssue& issue : built.report.issues) print_issue(err, issue);
  if (built.report.has_errors() && !opt.keep_going) {
    err << "error: " << built.report.error_count()
        << " errors in corpus; nothing written (use --keep-going to build anyway)\n";
    return kExitFailure;
  }
  for (const BuildWarning& w : built.artifact.manifest.warnings) {
    err << "warning: " << w.fragment_key << ": " << w.message << '\n';
  }
  write_bundle(built.artifact, opt.output);
  const GraphStats s = stats(built.artifact.graph);
  out << "built " << opt.output << ": " << built.report.articles_parsed << " articles, "
      << s.fragments_by_kind.total() << " fragments, " << s.concept_count << " concepts, "
      << s.edge_count << " edges\n";
  return built.report.has_errors() ? kExitFailure : kExitOk;
}

int write_output(const std::string& path, const std::string& contents, std::ostream& out,
                 std::ostream& err) {
  if (path.empty() || path == "-") {
    out << contents;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file || !(file << contents)) {
    err << "error: cannot write " << path << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_export(const Options& opt, std::ostream& out, std::ostream& err) {
  const BuildArtifact artifact = load_bundle(opt.bundle_dir);
  if (opt.format == "gexf") return write_output(opt.output, export_gexf(artifact.graph), out, err);
  if (opt.output.empty() || opt.output == "-") return write_output("", graph_json(artifact.graph), out, err);
  write_bundle(artifact, opt.output);
  return kExitOk;
}

int cmd_record(const Options& opt, std::ostream& out, std::ostream&) {
  const BuildArtifact artifact = load_bundle(opt.bundle_dir);
  const ConceptId id = resolve_concept(artifact, opt.concept_id);
  out << record_json(*artifact.find_record(id), artifact.graph, artifact.corpus,
                     artifact.manifest.config.context_window);
  return kExitOk;
}

int cmd_stats(const Options& opt, std::ostream& out, std::ostream&) {
  const BuildArtifact artifact = load_bundle(opt.bundle_dir);
  const GraphStats s = stats(artifact.graph);
  if (opt.json) {
    out << stats_json(s);
  } else {
    print_stats(out, s);
  }
  return kExitOk;
}

int cmd_paths(const Options& opt, std::ostream& out, std::ostream&) {
  const BuildArtifact artifact = load_bundle(opt.bundle_dir);
  const ConceptId from = resolve_concept(artifact, opt.from);
  const ConceptId to = resolve_concept(artifact, opt.to);
  const WeightClass min_class = parse_min_class(opt.min_class);
  const auto paths = find_paths(artifact.graph, from, to, opt.max_hops, min_class);
  out << paths_json(artifact.graph, paths, from, to, opt.max_hops, min_class);
  return kExitOk;
}

int cmd_ego(const Options& opt, std::ostream& out, std::ostream&) {
  const BuildArtifact artifact = load_bundle(opt.bundle_dir);
  const ConceptId center = resolve_concept(artifact, opt.concept_id);
  const WeightClass min_class = parse_min_class(opt.min_class);
  const EgoNetwork ego = ego_network(artifact.graph, center, opt.depth, min_class);
  out << ego_json(ego, center, opt.depth, min_class);
  return kExitOk;
}

int cmd_serve(const Options& opt, std::ostream& out, std::ostream& err) {
  auto artifact = std::make_shared<const BuildArtifact>(load_bundle(opt.bundle_dir));
  std::optional<fs::path> ui;
  if (!opt.ui_dir.empty()) {
    ui = opt.ui_dir;
  } else if (std::error_code ec; fs::is_directory(fs::path(opt.bundle_dir) / "ui", ec)) {
    ui = fs::path(opt.bundle_dir) / "ui";
  }
  ApiServer server(artifact, ui);
  if (!server.bind(opt.host, opt.port)) {
    err << "error: cannot listen on " << opt.host << ':' << opt.port
        << " (port in use or address unavailable)\n";
    return kExitFailure;
  }
  out << "serving " << opt.bundle_dir << " on http://" << opt.host << ':' << opt.port << '\n'
      << std::flush;
  return server.listen() ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compile SCAC-tagged article corpora into concept records and a concept graph",
               std::string(kToolName)};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Options opt;

  auto* validate_cmd = app.add_subcommand("validate", "Lint a corpus directory");
  validate_cmd->add_option("dir", opt.corpus_dir, "Corpus directory")->required();
  validate_cmd->add_option("--json", opt.json_report,
                           "Also write the report as JSON to this file ('-' for stdout only)");

  auto* build_cmd = app.add_subcommand("build", "Build the site bundle from a corpus");
  build_cmd->add_option("dir", opt.corpus_dir, "Corpus directory")->required();
  build_cmd->add_option("-o,--output", opt.output, "Bundle output directory")->required();
  build_cmd->add_option("--config", opt.config_file,
                        "Config file (default: <dir>/hypermediator.toml)");
  build_cmd->add_option("--strong-min", opt.strong_min, "Minimum weight of a strong tie");
  build_cmd->add_option("--moderate-min", opt.moderate_min, "Minimum weight of a moderate tie");
  build_cmd->add_option("--analogy-label", opt.analogy_labels,
                        "Relation type marking an analogy (repeatable; replaces the defaults)");
  build_cmd->add_option("--context-window", opt.context_window,
                        "Characters of context around traced fragments");
  build_cmd->add_flag("--keep-going", opt.keep_going, "Write the bundle even if the corpus has errors");

  auto* export_cmd = app.add_subcommand("export", "Export a built bundle");
  export_cmd->add_option("bundle", opt.bundle_dir, "Bundle directory")->required();
  export_cmd->add_option("--format", opt.format, "gexf or json")
      ->required()
      ->check(CLI::IsMember({"gexf", "json"}));
  export_cmd->add_option("-o,--output", opt.output,
                         "Output file (gexf) or bundle directory (json); stdout if omitted");

  auto* record_cmd = app.add_subcommand("record", "Print one concept record as JSON");
  record_cmd->add_option("bundle", opt.bundle_dir, "Bundle directory")->required();
  record_cmd->add_option("--concept", opt.concept_id, "Concept id or slug")->required();

  auto* stats_cmd = app.add_subcommand("stats", "Print graph statistics");
  stats_cmd->add_option("bundle", opt.bundle_dir, "Bundle directory")->required();
  stats_cmd->add_flag("--json", opt.json, "Print JSON");

  auto* paths_cmd = app.add_subcommand("paths", "List paths between two concepts");
  paths_cmd->add_option("bundle", opt.bundle_dir, "Bundle directory")->required();
  paths_cmd->add_option("--from", opt.from, "Start concept")->required();
  paths_cmd->add_option("--to", opt.to, "End concept")->required();
  paths_cmd->add_option("--max-hops", opt.max_hops, "Maximum path length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  paths_cmd->add_option("--min-class", opt.min_class, "weak, moderate or strong")->capture_default_str();

  auto* ego_cmd = app.add_subcommand("ego", "Print the ego network of a concept");
  ego_cmd->add_option("bundle", opt.bundle_dir, "Bundle directory")->required();
  ego_cmd->add_option("--concept", opt.concept_id, "Center concept")->required();
  ego_cmd->add_option("--depth", opt.depth, "Hops from the center")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ego_cmd->add_option("--min-class", opt.min_class, "weak, moderate or strong")->capture_default_str();

  auto* serve_cmd = app.add_subcommand("serve", "Serve the HTTP API over a bundle");
  serve_cmd->add_option("bundle", opt.bundle_dir, "Bundle directory")->required();
  serve_cmd->add_option("--port", opt.port, "TCP port")->required()->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", opt.host, "Bind address")->capture_default_str();
  serve_cmd->add_option("--ui", opt.ui_dir, "Static UI bundle served at / (default: <bundle>/ui)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (*validate_cmd) return cmd_validate(opt, out, err);
    if (*build_cmd) return cmd_build(opt, out, err);
    if (*export_cmd) return cmd_export(opt, out, err);
    if (*record_cmd) return cmd_record(opt, out, err);
    if (*stats_cmd) return cmd_stats(opt, out, err);
    if (*paths_cmd) return cmd_paths(opt, out, err);
    if (*ego_cmd) return cmd_ego(opt, out, err);
    if (*serve_cmd) return cmd_serve(opt, out, err);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace hypermediator::cli
