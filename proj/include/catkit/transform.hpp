#pragma once

#include <string>

#include "catkit/error.hpp"
#include "catkit/exactnum.hpp"
#include "catkit/natural.hpp"

namespace catkit {

// The two equivalent summation forms of the Catalan transform. Both are
// first-class so they can be cross-checked against each other.
enum class TransformMode { direct, reversed };

// Transform coefficient k/(2n-k) * C(2n-k, n-k), with the n = k = 0
// entry fixed to 1 and the k = 0 column 0 for n >= 1.
inline Natural ct_coefficient(long long n, long long k) {
  if (n < 0 || k < 0 || k > n)
    throw domain_error("ct_coefficient: requires 0 <= k <= n");
  if (n == 0 && k == 0) return 1;
  if (k == 0) return 0;
  const Natural numerator = Natural(k) * binomial(2 * n - k, n - k);
  return numerator.div_exact(Natural(2 * n - k));
}

// Catalan transform of a finite sequence; output length equals input
// length (b_n depends only on a_0..a_n).
//
// direct:   b_n = sum_{k=0}^{n} ct_coefficient(n, k) a_k
// reversed: b_n = sum_{k=0}^{n} gen_catalan(k, n-1-k) a_{n-k}
//           (the k = n term uses the k = -1 extension of gen_catalan)
inline IntSeq catalan_transform(const IntSeq& a, TransformMode mode) {
  IntSeq b(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    Natural sum = 0;
    const long long nn = static_cast<long long>(n);
    for (long long k = 0; k <= nn; ++k) {
      if (mode == TransformMode::direct) {
        sum += ct_coefficient(nn, k) * a[static_cast<std::size_t>(k)];
      } else {
        sum += gen_catalan(k, nn - 1 - k) * a[static_cast<std::size_t>(nn - k)];
      }
    }
    b[n] = sum;
  }
  return b;
}

// k zeros followed by C_0, C_1, ..., truncated or padded to `len` terms.
inline IntSeq shifted_catalan(long long k, long long len) {
  if (k < 0) throw domain_error("shifted_catalan: k must be nonnegative");
  if (len < 0) throw domain_error("shifted_catalan: len must be nonnegative");
  IntSeq out(static_cast<std::size_t>(len));
  for (long long n = k; n < len; ++n)
    out[static_cast<std::size_t>(n)] = catalan(n - k);
  return out;
}

}  // namespace catkit
