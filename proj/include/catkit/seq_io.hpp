#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "catkit/error.hpp"
#include "catkit/natural.hpp"

namespace catkit {

// Sequence file format, shared artifact-wide: either a JSON array of
// decimal strings or a one-line CSV of decimal integers. Writers emit
// JSON by default.

inline std::string to_json(const IntSeq& seq) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Natural& term : seq) arr.push_back(term.str());
  return arr.dump();
}

inline std::string to_csv(const IntSeq& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out.push_back(',');
    out += seq[i].str();
  }
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' ||
                        s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace detail

// Auto-detects the format: text starting with '[' is parsed as a JSON
// array (decimal strings or nonnegative integers), anything else as a
// one-line CSV. Empty input is the empty sequence.
inline IntSeq parse_sequence(std::string_view text) {
  const std::string_view body = detail::trim(text);
  IntSeq seq;
  if (body.empty()) return seq;
  if (body.front() == '[') {
    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(body);
    } catch (const nlohmann::json::parse_error& e) {
      throw parse_error(std::string("invalid JSON sequence: ") + e.what(),
                        static_cast<std::size_t>(e.byte));
    }
    if (!parsed.is_array()) throw parse_error("JSON sequence must be an array", 1);
    for (const auto& element : parsed) {
      if (element.is_string()) {
        seq.push_back(Natural::from_decimal(element.get<std::string>()));
      } else if (element.is_number_unsigned()) {
        seq.push_back(Natural(element.get<unsigned long long>()));
      } else {
        throw parse_error("JSON sequence terms must be decimal strings", 1);
      }
    }
    return seq;
  }
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = body.find(',', pos);
    const std::string_view token = detail::trim(
        body.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
    if (token.empty())
      throw parse_error("empty CSV entry at position " + std::to_string(pos + 1), pos + 1);
    seq.push_back(Natural::from_decimal(token));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return seq;
}

inline IntSeq load_sequence(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot read sequence file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_sequence(buffer.str());
}

}  // namespace catkit
