#pragma once

#include "hypermediator/artifact.hpp"

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

namespace hypermediator {

/// Read-only HTTP/1.1 JSON API over a loaded artifact:
///
///   GET /api/index
///   GET /api/graph
///   GET /api/graph/ego/{slug}?depth=&min_class=
///   GET /api/graph/paths?from=&to=&max_hops=&min_class=
///   GET /api/concepts/{slug}
///   GET /api/articles/{id}
///   GET /api/stats
///
/// plus the UI bundle under `/` when a directory is given. Every response
/// carries the manifest input hash in `X-Manifest-Hash` and `ETag`.
class ApiServer {
 public:
  explicit ApiServer(std::shared_ptr<const BuildArtifact> artifact,
                     std::optional<std::filesystem::path> ui_dir = std::nullopt);
  ~ApiServer();

  ApiServer(const ApiServer&) = delete;
  ApiServer& operator=(const ApiServer&) = delete;

  /// False when the address cannot be bound (e.g. port in use).
  bool bind(const std::string& host, int port);
  /// Binds an ephemeral port and returns it, or -1.
  int bind_any_port(const std::string& host);

  /// Serves until stop(); call after a successful bind.
  bool listen();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace hypermediator
