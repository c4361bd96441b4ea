#pragma once

#include <stdexcept>
#include <string>

namespace catkit {

// Invalid user-supplied input: out-of-range parameters, sequences that
// fail their membership requirements, malformed text.
class domain_error : public std::invalid_argument {
 public:
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed text input; position is 1-based.
class parse_error : public domain_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : domain_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An internal consistency check failed (exact division left a remainder,
// a certified construction produced a non-member). Always a bug.
class integrity_error : public std::logic_error {
 public:
  explicit integrity_error(const std::string& what) : std::logic_error(what) {}
};

class network_error : public std::runtime_error {
 public:
  explicit network_error(const std::string& what) : std::runtime_error(what) {}
};

class not_found_error : public std::runtime_error {
 public:
  explicit not_found_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace catkit
