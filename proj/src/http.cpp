// Copyright 2026 The imprecise-ror Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ror/http.hpp"

#include <httplib.h>

#include "ror/api.hpp"

namespace ror {

namespace {

using io::Json;

constexpr const char* kJson = "application/json";

std::string param(const httplib::Request& req, const std::string& key, const std::string& fallback) {
  return req.has_param(key) ? req.get_param_value(key) : fallback;
}

bool flag(const httplib::Request& req, const std::string& key) {
  const std::string v = param(req, key, "false");
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw Error(ErrorCode::bad_request, "parameter '" + key + "' must be true or false");
}

long integer(const httplib::Request& req, const std::string& key, long fallback) {
  if (!req.has_param(key)) return fallback;
  const std::string v = req.get_param_value(key);
  try {
    std::size_t used = 0;
    const long x = std::stol(v, &used);
    if (used == v.size()) return x;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::bad_request, "parameter '" + key + "' must be an integer");
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    const std::size_t comma = text.find(',', start);
    const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!part.empty()) out.push_back(part);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// Canonical cache key: endpoint plus the sorted query string.
std::string cache_key(const std::string& endpoint, const httplib::Request& req) {
  std::string key = endpoint;
  char sep = '?';
  for (const auto& [k, v] : req.params) {
    key += sep + k + "=" + v;
    sep = '&';
  }
  return key;
}

// Dominance accepts kind=normal|strong|weak|ik (with i, k) or index=.
std::string dominance_index(const httplib::Request& req) {
  if (req.has_param("index")) return req.get_param_value("index");
  const std::string kind = param(req, "kind", "normal");
  if (kind == "normal") return "classic";
  if (kind == "strong" || kind == "weak") return kind;
  if (kind == "ik") {
    if (!req.has_param("i") || !req.has_param("k"))
      throw Error(ErrorCode::bad_request, "kind=ik needs parameters i and k");
    return req.get_param_value("i") + "," + req.get_param_value("k");
  }
  throw Error(ErrorCode::bad_request, "kind must be normal, strong, weak or ik; got '" + kind + "'");
}

void send_error(httplib::Response& res, const Error& e) {
  res.status = api::http_status(e.code());
  res.set_content(io::dump(io::to_json(e)), kJson);
}

template <class Handler>
httplib::Server::Handler guarded(Handler h) {
  return [h](const httplib::Request& req, httplib::Response& res) {
    try {
      h(req, res);
    } catch (const Error& e) {
      send_error(res, e);
    } catch (const std::exception& e) {
      res.status = 500;
      res.set_content(io::dump(Json{{"code", "Internal"}, {"message", e.what()}, {"details", Json::array()}}), kJson);
    }
  };
}

}  // namespace

struct HttpServer::Impl {
  SessionStore& store;
  httplib::Server server;

  explicit Impl(SessionStore& s) : store(s) { routes(); }

  // Serves a cached JSON (or text) body computed on the session document.
  void cached(const httplib::Request& req, httplib::Response& res, const std::string& endpoint,
              const std::function<std::string(const io::ProblemDocument&)>& compute,
              const char* type = kJson) {
    const std::string id = req.path_params.at("id");
    res.set_content(store.query(id, cache_key(endpoint, req), compute), type);
  }

  void routes() {
    server.Post("/problems", guarded([this](const httplib::Request& req, httplib::Response& res) {
      res.status = 201;
      res.set_content(io::dump(store.create(io::parse_text(req.body))), kJson);
    }));
    server.Get("/sessions/:id", guarded([this](const httplib::Request& req, httplib::Response& res) {
      res.set_content(io::dump(store.describe(req.path_params.at("id"))), kJson);
    }));
    server.Post("/sessions/:id/statements", guarded([this](const httplib::Request& req, httplib::Response& res) {
      res.set_content(io::dump(store.add_statement(req.path_params.at("id"), io::parse_text(req.body))), kJson);
    }));
    server.Post("/sessions/:id/revert", guarded([this](const httplib::Request& req, httplib::Response& res) {
      long version = integer(req, "version", -1);
      if (!req.body.empty()) {
        const Json body = io::parse_text(req.body);
        if (!body.is_object() || !body.contains("version") || !body.at("version").is_number_integer())
          throw Error(ErrorCode::bad_request, "revert body must be {\"version\": integer}");
        version = body.at("version").get<long>();
      }
      if (version < 0) throw Error(ErrorCode::bad_request, "revert needs a non-negative version");
      res.set_content(io::dump(store.revert(req.path_params.at("id"), version)), kJson);
    }));
    server.Get("/sessions/:id/dominance", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::string index = dominance_index(req);
      const bool collapse = flag(req, "collapse");
      cached(req, res, "dominance", [&](const io::ProblemDocument& d) {
        return io::dump(api::dominance({d, collapse}, index));
      });
    }));
    server.Get("/sessions/:id/relations", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const Family f = io::parse_family(param(req, "family", "necessary"));
      const std::string index = param(req, "index", "classic");
      const bool collapse = flag(req, "collapse");
      cached(req, res, "relations", [&](const io::ProblemDocument& d) {
        return io::dump(api::relations({d, collapse}, f, index));
      });
    }));
    server.Get("/sessions/:id/group", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const Family outer = io::parse_family(param(req, "outer", "necessary"));
      const Family inner = io::parse_family(param(req, "inner", "necessary"));
      const std::string index = param(req, "index", "classic");
      const auto dms = split(param(req, "dms", ""));
      const bool exclude = flag(req, "exclude");
      const bool collapse = flag(req, "collapse");
      cached(req, res, "group", [&](const io::ProblemDocument& d) {
        return io::dump(api::group({d, collapse}, outer, inner, index, dms, exclude));
      });
    }));
    server.Get("/sessions/:id/sorting", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::string index = param(req, "index", "classic");
      const bool joint = flag(req, "joint");
      const bool collapse = flag(req, "collapse");
      cached(req, res, "sorting", [&](const io::ProblemDocument& d) {
        return io::dump(api::sorting({d, collapse}, index, joint));
      });
    }));
    server.Get("/sessions/:id/extreme-ranks", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::string index = param(req, "index", "classic");
      const bool collapse = flag(req, "collapse");
      cached(req, res, "extreme-ranks", [&](const io::ProblemDocument& d) {
        return io::dump(api::extreme_ranks({d, collapse}, index));
      });
    }));
    server.Get("/sessions/:id/diagnose", guarded([this](const httplib::Request& req, httplib::Response& res) {
      DiagnosisOptions o;
      o.max_sets = static_cast<int>(integer(req, "max_sets", o.max_sets));
      o.node_budget = integer(req, "budget", o.node_budget);
      const bool collapse = flag(req, "collapse");
      cached(req, res, "diagnose", [&](const io::ProblemDocument& d) {
        return io::dump(api::diagnose({d, collapse}, o));
      });
    }));
    server.Get("/sessions/:id/sweep", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::string index = param(req, "index", "classic");
      const bool collapse = flag(req, "collapse");
      cached(req, res, "sweep", [&](const io::ProblemDocument& d) {
        return io::dump(api::sweep({d, collapse}, index));
      });
    }));
    server.Get("/sessions/:id/export/dot", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::string relation = param(req, "relation", "necessary");
      const std::string index = param(req, "index", "classic");
      const bool collapse = flag(req, "collapse");
      cached(
          req, res, "dot",
          [&](const io::ProblemDocument& d) { return api::dot({d, collapse}, relation, index); },
          "text/vnd.graphviz");
    }));
  }
};

HttpServer::HttpServer(SessionStore& store) : impl_(std::make_unique<Impl>(store)) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::run() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace ror
