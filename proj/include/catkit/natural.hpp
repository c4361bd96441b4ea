#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catkit/error.hpp"

namespace catkit {

// Arbitrary-precision nonnegative integer. Thin value wrapper around
// GMP's mpz_class; the wrapper pins the nonnegativity invariant and the
// decimal-string serialization used everywhere in this project.
class Natural {
 public:
  Natural() : value_(0) {}

  template <std::integral T>
  Natural(T n) {  // NOLINT: implicit by design, counts read like integers
    if constexpr (std::is_signed_v<T>) {
      if (n < 0) throw domain_error("Natural cannot be negative");
      value_ = static_cast<unsigned long>(static_cast<long long>(n));
    } else {
      value_ = static_cast<unsigned long>(n);
    }
  }

  // Parses a decimal string: digits only, no sign, no exponent.
  static Natural from_decimal(std::string_view text) {
    if (text.empty()) throw parse_error("empty decimal string", 1);
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9') {
        throw parse_error("invalid character '" + std::string(1, text[i]) +
                              "' in decimal string at position " + std::to_string(i + 1),
                          i + 1);
      }
    }
    Natural n;
    n.value_ = mpz_class(std::string(text), 10);
    return n;
  }

  std::string str() const { return value_.get_str(); }

  bool is_zero() const { return mpz_sgn(value_.get_mpz_t()) == 0; }

  // Fails when the value does not fit; used only for desk-scale counts.
  unsigned long long to_ullong() const {
    if (!value_.fits_ulong_p())
      throw domain_error("Natural value " + str() + " does not fit in 64 bits");
    return value_.get_ui();
  }

  Natural& operator+=(const Natural& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }

  Natural& operator*=(const Natural& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }

  // Quotient of an exact division. A nonzero remainder means the caller's
  // formula is wrong, so it surfaces as an integrity_error.
  Natural div_exact(const Natural& divisor) const {
    if (divisor.is_zero()) throw integrity_error("exact division by zero");
    Natural q, r;
    mpz_tdiv_qr(q.value_.get_mpz_t(), r.value_.get_mpz_t(), value_.get_mpz_t(),
                divisor.value_.get_mpz_t());
    if (!r.is_zero()) {
      throw integrity_error("division " + str() + " / " + divisor.str() +
                            " left remainder " + r.str());
    }
    return q;
  }

  friend bool operator==(const Natural& lhs, const Natural& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Natural& lhs, const Natural& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n) {
    return os << n.str();
  }

 private:
  mpz_class value_;
};

// Finite sequence of Natural values, 0-based.
using IntSeq = std::vector<Natural>;

}  // namespace catkit
