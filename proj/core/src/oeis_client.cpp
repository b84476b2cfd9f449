#include "raboter/oeis_client.hpp"

#include <httplib.h>

#include <cstdio>
#include <json.hpp>

namespace raboter::oeis {

using nlohmann::json;

Transport http_transport(std::string endpoint, std::chrono::seconds timeout) {
  return [endpoint = std::move(endpoint), timeout](const std::string& target) -> std::optional<std::string> {
    try {
      httplib::Client client(endpoint);
      client.set_connection_timeout(timeout);
      client.set_read_timeout(timeout);
      client.set_follow_location(true);
      auto response = client.Get(target);
      if (!response || response->status != 200) {
        return std::nullopt;
      }
      return response->body;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
}

std::string search_target(std::span<const Natural> values) {
  std::string target = "/search?q=";
  const std::size_t n = std::min(values.size(), kMaxQueryTerms);
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) {
      target += "%2C";
    }
    target += to_string(values[i]);
  }
  target += "&fmt=json";
  return target;
}

namespace {

std::optional<SequenceMatch> read_entry(const json& entry) {
  if (!entry.is_object()) {
    return std::nullopt;
  }
  auto number = entry.find("number");
  if (number == entry.end() || !number->is_number_integer()) {
    return std::nullopt;
  }
  char id[16];
  std::snprintf(id, sizeof id, "A%06lld", static_cast<long long>(number->get<std::int64_t>()));
  std::string name;
  auto name_it = entry.find("name");
  if (name_it != entry.end() && name_it->is_string()) {
    name = name_it->get<std::string>();
  }
  return SequenceMatch{id, std::move(name)};
}

}  // namespace

std::optional<std::vector<SequenceMatch>> parse_search_response(std::string_view body, std::size_t limit) {
  json doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    return std::nullopt;
  }
  const json* entries = nullptr;
  if (doc.is_array()) {
    entries = &doc;
  } else if (doc.is_object()) {
    auto results = doc.find("results");
    if (results == doc.end()) {
      return std::nullopt;
    }
    if (results->is_null()) {
      return std::vector<SequenceMatch>{};  // the old layout's "no match"
    }
    if (!results->is_array()) {
      return std::nullopt;
    }
    entries = &*results;
  } else if (doc.is_null()) {
    return std::vector<SequenceMatch>{};
  } else {
    return std::nullopt;
  }
  std::vector<SequenceMatch> matches;
  for (const json& entry : *entries) {
    if (matches.size() >= limit) {
      break;
    }
    if (auto match = read_entry(entry)) {
      matches.push_back(std::move(*match));
    }
  }
  return matches;
}

Client::Client(Transport transport, unsigned retries) : transport_(std::move(transport)), retries_(retries) {}

LookupResult Client::lookup(std::span<const Natural> values, std::size_t limit) const {
  LookupResult result;
  const std::size_t n = std::min(values.size(), kMaxQueryTerms);
  result.query.assign(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(n));
  if (result.query.empty() || !transport_) {
    return result;
  }
  const std::string target = search_target(values);
  for (unsigned attempt = 0; attempt <= retries_; ++attempt) {
    std::optional<std::string> body;
    try {
      body = transport_(target);
    } catch (const std::exception&) {
      body.reset();
    }
    if (!body) {
      continue;
    }
    if (auto matches = parse_search_response(*body, limit)) {
      result.matches = std::move(*matches);
      result.fetched = true;
    }
    return result;
  }
  return result;
}

}  // namespace raboter::oeis
