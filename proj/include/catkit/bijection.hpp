#pragma once

#include <span>
#include <string>
#include <vector>

#include "catkit/dyckpath.hpp"
#include "catkit/error.hpp"
#include "catkit/families.hpp"

namespace catkit {

// Maps a Dyck (k+n)-path that starts with at least k upsteps to the
// sequence v with v_i = 1 + semilength of the longest balanced suffix
// of the prefix strictly before the (i+k)-th upstep. The result is
// certified as a member of B_n^(k).
inline ConstrainedSeq dyck_to_seq(const Path& path, int k) {
  if (k < 0) throw domain_error("dyck_to_seq: k must be nonnegative");
  if (!path.is_dyck())
    throw domain_error("dyck_to_seq: '" + path.str() + "' is not a Dyck path");
  const int m = static_cast<int>(path.semilength());
  if (k > m)
    throw domain_error("dyck_to_seq: k = " + std::to_string(k) +
                       " exceeds semilength " + std::to_string(m));
  const auto& steps = path.steps();
  for (int i = 0; i < k; ++i) {
    if (steps[static_cast<std::size_t>(i)] != Step::up)
      throw domain_error("dyck_to_seq: path must start with at least " +
                         std::to_string(k) + " upsteps");
  }
  const int n = m - k;
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(n));
  int ups_seen = 0;
  for (std::size_t pos = 0; pos < steps.size(); ++pos) {
    if (steps[pos] != Step::up) continue;
    ++ups_seen;
    if (ups_seen <= k) continue;
    const auto prefix = std::span<const Step>(steps).first(pos);
    entries.push_back(1 + static_cast<int>(longest_balanced_suffix(prefix)));
  }
  ConstrainedSeq v(std::move(entries));
  if (!is_member(family_b(n, k), v))
    throw integrity_error("dyck_to_seq: image (" + v.str() + ") of '" + path.str() +
                          "' is not in B_" + std::to_string(n) + "^(" +
                          std::to_string(k) + ")");
  return v;
}

// Inverse direction, built greedily: emit the k mandatory upsteps, then
// for each entry append downsteps until the longest balanced suffix of
// the path so far has semilength v_i - 1 (the suffix statistic only
// grows as downsteps are appended), emit the next upstep, and finally
// close the path down to height 0. Inputs are certified against
// B_n^(k) up front, after which a stuck construction is a bug.
inline Path seq_to_dyck(const ConstrainedSeq& v, int k) {
  if (k < 0) throw domain_error("seq_to_dyck: k must be nonnegative");
  const int n = v.length();
  require_member(family_b(n, k), v, "seq_to_dyck");
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(2 * (n + k)));
  steps.insert(steps.end(), static_cast<std::size_t>(k), Step::up);
  long long height = k;
  for (int i = 1; i <= n; ++i) {
    const long long target = v.u(i) - 1;
    while (true) {
      const long long current = longest_balanced_suffix(std::span<const Step>(steps));
      if (current == target) break;
      if (current > target)
        throw integrity_error("seq_to_dyck: suffix statistic overshot target " +
                              std::to_string(target) + " for entry " + std::to_string(i) +
                              " of (" + v.str() + ")");
      if (height == 0)
        throw integrity_error("seq_to_dyck: path hit height 0 before reaching target " +
                              std::to_string(target) + " for entry " + std::to_string(i) +
                              " of (" + v.str() + ")");
      steps.push_back(Step::down);
      --height;
    }
    steps.push_back(Step::up);
    ++height;
  }
  steps.insert(steps.end(), static_cast<std::size_t>(height), Step::down);
  return Path(std::move(steps));
}

}  // namespace catkit
