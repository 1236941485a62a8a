#pragma once

#include <string>

#include "httplib.h"
#include "json.hpp"

#include "ofamas/errors.hpp"

namespace ofamas::detail {

// Single-attempt JSON POST. Throws TransportError carrying the endpoint,
// transport diagnostics and any response body excerpt; callers own retry
// policy.
inline nlohmann::json post_json(const std::string& endpoint, const std::string& path,
                                const nlohmann::json& body, const std::string& auth_token,
                                int timeout_seconds) {
  httplib::Client client(endpoint);
  client.set_connection_timeout(timeout_seconds);
  client.set_read_timeout(timeout_seconds);
  httplib::Headers headers;
  if (!auth_token.empty()) {
    headers.emplace("Authorization", "Bearer " + auth_token);
  }
  auto res = client.Post(path, headers, body.dump(), "application/json");
  if (!res) {
    throw TransportError("POST " + endpoint + path +
                         " failed: " + httplib::to_string(res.error()));
  }
  if (res->status < 200 || res->status >= 300) {
    std::string excerpt = res->body.substr(0, 200);
    throw TransportError("POST " + endpoint + path + " returned status " +
                         std::to_string(res->status) + ": " + excerpt);
  }
  try {
    return nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::exception& e) {
    throw TransportError("POST " + endpoint + path +
                         " returned unparseable JSON: " + e.what());
  }
}

} // namespace ofamas::detail
