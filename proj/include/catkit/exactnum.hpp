#pragma once

#include <string>

#include "catkit/error.hpp"
#include "catkit/natural.hpp"

namespace catkit {

// C(n, k), exact; 0 when k is outside [0, n] so summations can sweep
// index ranges without guards.
inline Natural binomial(long long n, long long k) {
  if (n < 0) throw domain_error("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Natural result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= Natural(n - k + i);
    result = result.div_exact(Natural(i));  // prefix products are binomials
  }
  return result;
}

// C_n = C(2n, n) / (n + 1).
inline Natural catalan(long long n) {
  if (n < 0) throw domain_error("catalan: n must be nonnegative");
  return binomial(2 * n, n).div_exact(Natural(n + 1));
}

// The generalized Catalan number: (k+1)/(2n+k+1) * C(2n+k+1, n) for
// k >= 0, extended at k = -1 to 1 when n = 0 and 0 otherwise.
// Multiplies first and divides last; the division is exact, and a
// remainder trips an integrity_error inside div_exact.
inline Natural gen_catalan(long long n, long long k) {
  if (n < 0) throw domain_error("gen_catalan: n must be nonnegative");
  if (k < -1) throw domain_error("gen_catalan: k must be at least -1");
  if (k == -1) return n == 0 ? 1 : 0;
  const Natural numerator = Natural(k + 1) * binomial(2 * n + k + 1, n);
  return numerator.div_exact(Natural(2 * n + k + 1));
}

// First `len` coefficients of the (k+1)-st convolution power of the
// Catalan sequence, computed by iterated discrete convolution. k = 0
// returns the Catalan sequence itself. Serves as the independent route
// to gen_catalan values.
inline IntSeq catalan_power_convolution(long long k, long long len) {
  if (k < 0) throw domain_error("catalan_power_convolution: k must be nonnegative");
  if (len < 0) throw domain_error("catalan_power_convolution: len must be nonnegative");
  IntSeq base(static_cast<std::size_t>(len));
  for (long long n = 0; n < len; ++n) base[static_cast<std::size_t>(n)] = catalan(n);
  IntSeq acc = base;
  for (long long round = 0; round < k; ++round) {
    IntSeq next(static_cast<std::size_t>(len));
    for (std::size_t n = 0; n < next.size(); ++n) {
      Natural sum = 0;
      for (std::size_t i = 0; i <= n; ++i) sum += acc[i] * base[n - i];
      next[n] = sum;
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace catkit
