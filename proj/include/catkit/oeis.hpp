#pragma once

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "catkit/error.hpp"
#include "catkit/natural.hpp"
#include "catkit/seq_io.hpp"

namespace catkit {

struct OeisEntry {
  std::string a_number;  // "A" followed by six digits
  std::string name;
  IntSeq terms;
};

inline bool is_valid_a_number(std::string_view id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  return std::all_of(id.begin() + 1, id.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

namespace detail {

// One process-wide lock pair: fixture writes are exclusive against
// reads, and at most one network request is in flight at a time.
inline std::shared_mutex& store_mutex() {
  static std::shared_mutex m;
  return m;
}
inline std::mutex& network_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace detail

// Directory of OEIS records, one JSON document per A-number.
class FixtureStore {
 public:
  explicit FixtureStore(std::filesystem::path directory)
      : directory_(std::move(directory)) {}

  const std::filesystem::path& directory() const { return directory_; }

  std::optional<OeisEntry> load(const std::string& a_number) const {
    std::shared_lock lock(detail::store_mutex());
    return load_unlocked(a_number);
  }

  // All fixtures, sorted by A-number so lookups are deterministic.
  std::vector<OeisEntry> load_all() const {
    std::shared_lock lock(detail::store_mutex());
    std::vector<OeisEntry> entries;
    if (!std::filesystem::is_directory(directory_)) return entries;
    std::vector<std::string> ids;
    for (const auto& file : std::filesystem::directory_iterator(directory_)) {
      if (file.path().extension() != ".json") continue;
      const std::string id = file.path().stem().string();
      if (is_valid_a_number(id)) ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end());
    for (const std::string& id : ids) {
      if (auto entry = load_unlocked(id)) entries.push_back(std::move(*entry));
    }
    return entries;
  }

  void store(const OeisEntry& entry) const {
    std::unique_lock lock(detail::store_mutex());
    std::filesystem::create_directories(directory_);
    nlohmann::json doc;
    doc["a_number"] = entry.a_number;
    doc["name"] = entry.name;
    nlohmann::json terms = nlohmann::json::array();
    for (const Natural& t : entry.terms) terms.push_back(t.str());
    doc["terms"] = std::move(terms);
    std::ofstream out(directory_ / (entry.a_number + ".json"));
    if (!out)
      throw domain_error("cannot write fixture for " + entry.a_number + " in '" +
                         directory_.string() + "'");
    out << doc.dump(2) << '\n';
  }

 private:
  std::optional<OeisEntry> load_unlocked(const std::string& a_number) const {
    const std::filesystem::path file = directory_ / (a_number + ".json");
    std::ifstream in(file);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
      throw parse_error("corrupt fixture '" + file.string() + "': " + e.what(),
                        static_cast<std::size_t>(e.byte));
    }
    OeisEntry entry;
    entry.a_number = doc.at("a_number").get<std::string>();
    entry.name = doc.at("name").get<std::string>();
    for (const auto& term : doc.at("terms"))
      entry.terms.push_back(Natural::from_decimal(term.get<std::string>()));
    return entry;
  }

  std::filesystem::path directory_;
};

enum class OeisSource { fixtures, network };

// Offline-first lookup client: fixtures mode consults only the local
// store; network mode issues a single bounded-timeout request against
// the OEIS JSON search endpoint and writes fetched entries through to
// the fixture cache.
class OeisClient {
 public:
  explicit OeisClient(std::filesystem::path fixture_dir = default_fixture_dir(),
                      std::string base_url = default_base_url())
      : store_(std::move(fixture_dir)), base_url_(std::move(base_url)) {}

  const FixtureStore& fixtures() const { return store_; }

  // Entries whose stored terms contain the query as a contiguous
  // subsequence. No match is an empty list, not an error.
  std::vector<OeisEntry> search_by_terms(const IntSeq& terms, OeisSource source) {
    if (terms.empty()) throw domain_error("search_by_terms: query must be nonempty");
    if (source == OeisSource::fixtures) {
      std::vector<OeisEntry> hits;
      for (OeisEntry& entry : store_.load_all()) {
        if (contains_run(entry.terms, terms)) hits.push_back(std::move(entry));
      }
      return hits;
    }
    return parse_results(http_search(to_csv(terms)));
  }

  // Single entry by A-number. Network hits are written through to the
  // fixture cache so later fixtures-mode lookups see identical terms.
  OeisEntry fetch(const std::string& a_number, OeisSource source) {
    if (!is_valid_a_number(a_number))
      throw domain_error("malformed A-number '" + a_number +
                         "' (expected A followed by six digits)");
    if (source == OeisSource::fixtures) {
      if (auto entry = store_.load(a_number)) return *entry;
      throw not_found_error("no fixture for " + a_number + " in '" +
                            store_.directory().string() + "'");
    }
    std::vector<OeisEntry> results = parse_results(http_search("id:" + a_number));
    for (OeisEntry& entry : results) {
      if (entry.a_number == a_number) {
        store_.store(entry);
        return std::move(entry);
      }
    }
    throw not_found_error(a_number + " not found on the network endpoint");
  }

  static std::filesystem::path default_fixture_dir() {
    if (const char* env = std::getenv("CATKIT_FIXTURES")) return env;
    return "fixtures/oeis";
  }

  static std::string default_base_url() {
    if (const char* env = std::getenv("OEIS_BASE_URL")) return env;
    return "https://oeis.org";
  }

 private:
  static bool contains_run(const IntSeq& haystack, const IntSeq& needle) {
    return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) !=
           haystack.end();
  }

  nlohmann::json http_search(const std::string& query) {
    std::lock_guard lock(detail::network_mutex());
    httplib::Client client(base_url_);
    client.set_connection_timeout(10, 0);
    client.set_read_timeout(10, 0);
    const httplib::Result res =
        client.Get("/search", httplib::Params{{"q", query}, {"fmt", "json"}},
                   httplib::Headers{});
    if (!res)
      throw network_error("request to '" + base_url_ +
                          "' failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
      throw network_error("'" + base_url_ + "/search' returned HTTP " +
                          std::to_string(res->status));
    try {
      return nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::parse_error& e) {
      throw network_error(std::string("endpoint returned invalid JSON: ") + e.what());
    }
  }

  // Accepts both response shapes seen from the search endpoint: a
  // top-level array of records, or an object with a "results" array
  // (null when nothing matched).
  static std::vector<OeisEntry> parse_results(const nlohmann::json& body) {
    const nlohmann::json* records = nullptr;
    if (body.is_array()) {
      records = &body;
    } else if (body.is_object() && body.contains("results")) {
      if (body["results"].is_null()) return {};
      records = &body["results"];
    } else {
      throw network_error("endpoint response has no results array");
    }
    std::vector<OeisEntry> entries;
    for (const auto& record : *records) {
      if (!record.contains("number")) continue;
      OeisEntry entry;
      char id[8];
      std::snprintf(id, sizeof id, "A%06lld",
                    record["number"].get<long long>());
      entry.a_number = id;
      entry.name = record.value("name", "");
      if (record.contains("data"))
        entry.terms = parse_sequence(record["data"].get<std::string>());
      entries.push_back(std::move(entry));
    }
    return entries;
  }

  FixtureStore store_;
  std::string base_url_;
};

}  // namespace catkit
