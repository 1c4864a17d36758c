#include "hypermediator/server.hpp"

#include "hypermediator/errors.hpp"
#include "hypermediator/serialize.hpp"
#include "hypermediator/slug.hpp"

#include <httplib.h>

#include <charconv>
#include <map>
#include <unordered_map>

namespace hypermediator {

namespace {

constexpr const char* kJson = "application/json; charset=utf-8";

constexpr const char* kFallbackPage = R"(<!doctype html>
<html><head><meta charset="utf-8"><title>hypermediator</title></head>
<body>
<h1>hypermediator</h1>
<p>No UI bundle is mounted. The JSON API is available under <code>/api/</code>:
<a href="/api/index">index</a>, <a href="/api/graph">graph</a>, <a href="/api/stats">stats</a>.</p>
</body></html>
)";

// Path segment after `prefix` exactly as the client sent it (still
// percent-encoded), so that "a-b" and "a%2Db" stay distinguishable.
std::string raw_tail(const httplib::Request& req, std::string_view prefix) {
  std::string_view target = req.target;
  target = target.substr(0, target.find('?'));
  if (!target.starts_with(prefix)) return {};
  return std::string(target.substr(prefix.size()));
}

std::optional<std::size_t> positive_param(const httplib::Request& req, const std::string& name,
                                          std::size_t fallback) {
  if (!req.has_param(name)) return fallback;
  const std::string value = req.get_param_value(name);
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size() || out < 1) return std::nullopt;
  return out;
}

}  // namespace

struct ApiServer::Impl {
  std::shared_ptr<const BuildArtifact> artifact;
  httplib::Server http;
  std::string etag;

  std::string index_body;
  std::string graph_body;
  std::string stats_body;
  std::unordered_map<std::string, std::string> concept_bodies;  // by slug
  std::unordered_map<std::string, ConceptId> concept_slugs;
  std::unordered_map<std::string, std::string> article_bodies;  // by slug

  explicit Impl(std::shared_ptr<const BuildArtifact> a) : artifact(std::move(a)) {
    const BuildArtifact& art = *artifact;
    etag = "\"" + art.manifest.input_hash + "\"";
    index_body = index_json(art.corpus);
    graph_body = graph_json(art.graph);
    stats_body = stats_json(stats(art.graph));
    for (const auto& [id, record] : art.records) {
      const std::string slug = slugify(id.str());
      concept_slugs.emplace(slug, id);
      concept_bodies.emplace(slug, record_json(record, art.graph, art.corpus,
                                               art.manifest.config.context_window));
    }
    for (const Article& article : art.corpus.articles()) {
      article_bodies.emplace(slugify(article.meta.article_id), article_json(article));
    }
  }

  // Accepts a slug, a raw concept id, or a slug with lowercase escapes.
  std::optional<ConceptId> resolve_concept(const std::string& token) const {
    if (auto it = concept_slugs.find(token); it != concept_slugs.end()) return it->second;
    for (const std::string& candidate : {token, unslugify(token)}) {
      try {
        ConceptId id = ConceptId::normalize(candidate);
        if (artifact->graph.contains(id)) return id;
      } catch (const InvalidConceptId&) {
      }
    }
    return std::nullopt;
  }

  void send_json(httplib::Response& res, int status, std::string body) {
    res.status = status;
    res.set_content(std::move(body), kJson);
  }

  void send_error(httplib::Response& res, int status, const std::string& message) {
    send_json(res, status, error_json(status, message));
  }

  void routes(const std::optional<std::filesystem::path>& ui_dir) {
    // httplib's default adds SO_REUSEPORT, which lets a second server share a
    // busy port silently. Keep address reuse only so a taken port fails to bind.
    http.set_socket_options([](socket_t sock) {
      int yes = 1;
      ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char*>(&yes), sizeof(yes));
    });
    http.set_pre_routing_handler([this](const httplib::Request& req, httplib::Response& res) {
      res.set_header("X-Manifest-Hash", artifact->manifest.input_hash);
      res.set_header("ETag", etag);
      if (req.get_header_value("If-None-Match") == etag) {
        res.status = 304;
        return httplib::Server::HandlerResponse::Handled;
      }
      return httplib::Server::HandlerResponse::Unhandled;
    });

    http.Get("/api/index", [this](const httplib::Request&, httplib::Response& res) {
      send_json(res, 200, index_body);
    });
    http.Get("/api/graph", [this](const httplib::Request&, httplib::Response& res) {
      send_json(res, 200, graph_body);
    });
    http.Get("/api/stats", [this](const httplib::Request&, httplib::Response& res) {
      send_json(res, 200, stats_body);
    });

    http.Get("/api/graph/paths", [this](const httplib::Request& req, httplib::Response& res) {
      if (!req.has_param("from") || !req.has_param("to")) {
        return send_error(res, 400, "query parameters 'from' and 'to' are required");
      }
      const auto from = resolve_concept(req.get_param_value("from"));
      const auto to = resolve_concept(req.get_param_value("to"));
      if (!from || !to) {
        return send_error(res, 404, "unknown concept: " +
                                        req.get_param_value(from ? "to" : "from"));
      }
      const auto max_hops = positive_param(req, "max_hops", 3);
      if (!max_hops) return send_error(res, 400, "max_hops must be a positive integer");
      const auto min_class = weight_class_from_string(
          req.has_param("min_class") ? req.get_param_value("min_class") : "weak");
      if (!min_class) return send_error(res, 400, "min_class must be weak, moderate or strong");
      const auto paths = find_paths(artifact->graph, *from, *to, *max_hops, *min_class);
      send_json(res, 200, paths_json(artifact->graph, paths, *from, *to, *max_hops, *min_class));
    });

    http.Get("/api/graph/ego/(.+)", [this](const httplib::Request& req, httplib::Response& res) {
      const std::string token = raw_tail(req, "/api/graph/ego/");
      const auto center = resolve_concept(token);
      if (!center) return send_error(res, 404, "unknown concept: " + unslugify(token));
      const auto depth = positive_param(req, "depth", 1);
      if (!depth) return send_error(res, 400, "depth must be a positive integer");
      const auto min_class = weight_class_from_string(
          req.has_param("min_class") ? req.get_param_value("min_class") : "weak");
      if (!min_class) return send_error(res, 400, "min_class must be weak, moderate or strong");
      const EgoNetwork ego = ego_network(artifact->graph, *center, *depth, *min_class);
      send_json(res, 200, ego_json(ego, *center, *depth, *min_class));
    });

    http.Get("/api/concepts/(.+)", [this](const httplib::Request& req, httplib::Response& res) {
      const std::string token = raw_tail(req, "/api/concepts/");
      const auto id = resolve_concept(token);
      if (!id) return send_error(res, 404, "unknown concept: " + unslugify(token));
      send_json(res, 200, concept_bodies.at(slugify(id->str())));
    });

    http.Get("/api/articles/(.+)", [this](const httplib::Request& req, httplib::Response& res) {
      const std::string token = raw_tail(req, "/api/articles/");
      auto it = article_bodies.find(token);
      if (it == article_bodies.end()) it = article_bodies.find(slugify(unslugify(token)));
      if (it == article_bodies.end()) it = article_bodies.find(slugify(req.matches[1].str()));
      if (it == article_bodies.end()) {
        return send_error(res, 404, "unknown article: " + req.matches[1].str());
      }
      send_json(res, 200, it->second);
    });

    http.Get("/api/(.*)", [this](const httplib::Request& req, httplib::Response& res) {
      send_error(res, 404, "no such endpoint: " + req.path);
    });

    if (ui_dir && http.set_mount_point("/", ui_dir->string())) return;
    http.Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(kFallbackPage, "text/html; charset=utf-8");
    });
  }
};

ApiServer::ApiServer(std::shared_ptr<const BuildArtifact> artifact,
                     std::optional<std::filesystem::path> ui_dir)
    : impl_(std::make_unique<Impl>(std::move(artifact))) {
  impl_->routes(ui_dir);
}

ApiServer::~ApiServer() { stop(); }

bool ApiServer::bind(const std::string& host, int port) {
  return impl_->http.bind_to_port(host, port);
}

int ApiServer::bind_any_port(const std::string& host) {
  return impl_->http.bind_to_any_port(host);
}

bool ApiServer::listen() { return impl_->http.listen_after_bind(); }

void ApiServer::stop() {
  if (impl_ && impl_->http.is_running()) impl_->http.stop();
}

void ApiServer::wait_until_ready() const { impl_->http.wait_until_ready(); }

}  // namespace hypermediator
