#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catkit/error.hpp"
#include "catkit/exactnum.hpp"
#include "catkit/natural.hpp"

namespace catkit {

// up < down gives the lexicographic order used by every enumeration.
enum class Step : unsigned char { up = 0, down = 1 };

// A finite sequence of up/down steps. Not every Path is a Dyck path;
// the validation flags are computed from the step sequence.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Step> steps) : steps_(std::move(steps)) {}

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  std::size_t upsteps() const {
    return static_cast<std::size_t>(
        std::count(steps_.begin(), steps_.end(), Step::up));
  }
  std::size_t downsteps() const { return size() - upsteps(); }

  long long final_height() const {
    return static_cast<long long>(upsteps()) - static_cast<long long>(downsteps());
  }

  // All prefix heights >= 0.
  bool is_nonnegative() const {
    long long h = 0;
    for (Step s : steps_) {
      h += (s == Step::up) ? 1 : -1;
      if (h < 0) return false;
    }
    return true;
  }

  // Nonnegative and returns to height 0.
  bool is_dyck() const { return is_nonnegative() && final_height() == 0; }

  // Number of upsteps; equals the number of downsteps for a Dyck path.
  std::size_t semilength() const { return upsteps(); }

  std::string str() const {
    std::string out;
    out.reserve(size());
    for (Step s : steps_) out.push_back(s == Step::up ? 'U' : 'D');
    return out;
  }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;

 private:
  std::vector<Step> steps_;
};

// Parses a string over {U, D} (case-insensitive) into a Path.
inline Path parse_path(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == 'U' || c == 'u') {
      steps.push_back(Step::up);
    } else if (c == 'D' || c == 'd') {
      steps.push_back(Step::down);
    } else {
      throw parse_error("invalid step character '" + std::string(1, c) +
                            "' at position " + std::to_string(i + 1),
                        i + 1);
    }
  }
  return Path(std::move(steps));
}

// Semilength of the longest suffix that is itself a Dyck path (balanced
// and never dipping below its own start); 0 when the sequence is empty
// or ends with an upstep. Backward scan: a suffix starting at j is Dyck
// iff the running total from the end is 0 at j and never positive.
inline long long longest_balanced_suffix(std::span<const Step> steps) {
  long long height = 0;
  long long best = 0;
  for (std::size_t scanned = 1; scanned <= steps.size(); ++scanned) {
    height += (steps[steps.size() - scanned] == Step::up) ? 1 : -1;
    if (height > 0) break;
    if (height == 0) best = static_cast<long long>(scanned) / 2;
  }
  return best;
}

inline long long longest_balanced_suffix(const Path& prefix) {
  return longest_balanced_suffix(std::span<const Step>(prefix.steps()));
}

namespace detail {

template <class Visit>
void walk_paths(long long target_ups, long long target_downs, long long forced_ups,
                std::vector<Step>& buffer, long long ups, long long downs,
                Visit&& visit) {
  if (ups == target_ups && downs == target_downs) {
    visit(Path(buffer));
    return;
  }
  // Upstep first: up < down keeps the stream lexicographic.
  if (ups < target_ups) {
    buffer.push_back(Step::up);
    walk_paths(target_ups, target_downs, forced_ups, buffer, ups + 1, downs, visit);
    buffer.pop_back();
  }
  const bool past_forced_prefix =
      static_cast<long long>(buffer.size()) >= forced_ups;
  if (past_forced_prefix && downs < target_downs && downs < ups) {
    buffer.push_back(Step::down);
    walk_paths(target_ups, target_downs, forced_ups, buffer, ups, downs + 1, visit);
    buffer.pop_back();
  }
}

}  // namespace detail

// Visits every Dyck m-path whose first min_leading_ups steps are all
// upsteps, in lexicographic order. Generates by height-bounded
// backtracking rather than filtering all C_m paths.
template <class Visit>
void for_each_dyck(long long m, long long min_leading_ups, Visit&& visit) {
  if (m < 0) throw domain_error("for_each_dyck: semilength must be nonnegative");
  if (min_leading_ups < 0 || min_leading_ups > m)
    throw domain_error("for_each_dyck: requires 0 <= min_leading_ups <= semilength");
  std::vector<Step> buffer;
  buffer.reserve(static_cast<std::size_t>(2 * m));
  detail::walk_paths(m, m, min_leading_ups, buffer, 0, 0, visit);
}

inline std::vector<Path> enumerate_dyck(long long m, long long min_leading_ups) {
  std::vector<Path> out;
  for_each_dyck(m, min_leading_ups, [&](const Path& p) { out.push_back(p); });
  return out;
}

// Visits all paths with the given step counts whose prefix heights stay
// nonnegative, in lexicographic order. Empty stream when ups < downs.
template <class Visit>
void for_each_nonneg(long long ups, long long downs, Visit&& visit) {
  if (ups < 0 || downs < 0)
    throw domain_error("for_each_nonneg: step counts must be nonnegative");
  std::vector<Step> buffer;
  buffer.reserve(static_cast<std::size_t>(ups + downs));
  detail::walk_paths(ups, downs, 0, buffer, 0, 0, visit);
}

inline std::vector<Path> enumerate_nonneg(long long ups, long long downs) {
  std::vector<Path> out;
  for_each_nonneg(ups, downs, [&](const Path& p) { out.push_back(p); });
  return out;
}

// 1 + number of steps strictly after the last downstep ("number of steps
// weakly after the last downstep").
inline long long trailing_statistic_s(const Path& path) {
  const auto& steps = path.steps();
  for (std::size_t scanned = 1; scanned <= steps.size(); ++scanned) {
    if (steps[steps.size() - scanned] == Step::down)
      return static_cast<long long>(scanned);
  }
  throw domain_error("trailing_statistic_s: path has no downstep");
}

// Counts of the trailing statistic over all nonnegative paths with k+n
// upsteps and n downsteps. Keys land in 1..k+1 and the values sum to
// gen_catalan(n, k).
inline std::map<long long, Natural> s_histogram(long long n, long long k) {
  if (n < 1) throw domain_error("s_histogram: n must be at least 1");
  if (k < 0) throw domain_error("s_histogram: k must be nonnegative");
  std::map<long long, Natural> hist;
  for_each_nonneg(k + n, n, [&](const Path& p) {
    hist[trailing_statistic_s(p)] += 1;
  });
  return hist;
}

}  // namespace catkit
