#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "raboter/arith.hpp"

namespace raboter::oeis {

struct SequenceMatch {
  std::string id;  // "A027649"
  std::string name;

  friend bool operator==(const SequenceMatch&, const SequenceMatch&) = default;
};

/// fetched == false means the lookup did not happen (network, parse error);
/// callers must not read it as "no match".
struct LookupResult {
  std::vector<Natural> query;
  std::vector<SequenceMatch> matches;
  bool fetched = false;
};

inline constexpr std::size_t kMaxQueryTerms = 40;

/// Performs a GET of `target` (path plus query string) and returns the body,
/// or nullopt on any failure.
using Transport = std::function<std::optional<std::string>(const std::string& target)>;

/// HTTP(S) transport against `endpoint` such as "https://oeis.org".
Transport http_transport(std::string endpoint, std::chrono::seconds timeout = std::chrono::seconds(10));

/// "/search?q=1%2C4%2C14&fmt=json" for the first kMaxQueryTerms values.
std::string search_target(std::span<const Natural> values);

/// Reads up to `limit` (id, name) pairs out of a search response. Accepts both
/// the bare-array layout and the older {"results": [...]} layout; returns
/// nullopt when the body is not something it understands.
std::optional<std::vector<SequenceMatch>> parse_search_response(std::string_view body, std::size_t limit);

class Client {
 public:
  explicit Client(Transport transport, unsigned retries = 1);

  /// Never throws for transport or parse problems; those give fetched = false.
  LookupResult lookup(std::span<const Natural> values, std::size_t limit = 5) const;

 private:
  Transport transport_;
  unsigned retries_;
};

}  // namespace raboter::oeis
