#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catkit/error.hpp"
#include "catkit/natural.hpp"

namespace catkit {

// A finite sequence (u_1, ..., u_n) of positive integers with 1-indexed
// semantics; houses both the constrained sequences and the functions
// f:[1,n] -> [1,n] via u_i = f(i).
struct ConstrainedSeq {
  std::vector<int> entries;  // u_1..u_n stored 0-based

  ConstrainedSeq() = default;
  explicit ConstrainedSeq(std::vector<int> e) : entries(std::move(e)) {}

  int length() const { return static_cast<int>(entries.size()); }
  int u(int i) const { return entries[static_cast<std::size_t>(i - 1)]; }

  // Comma-separated positive decimal entries, e.g. "1,2,3"; "" is the
  // empty sequence.
  static ConstrainedSeq parse(std::string_view text) {
    ConstrainedSeq seq;
    if (text.empty()) return seq;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = text.find(',', pos);
      const std::string_view token =
          text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
      if (token.empty())
        throw parse_error("empty entry at position " + std::to_string(pos + 1), pos + 1);
      int value = 0;
      for (std::size_t i = 0; i < token.size(); ++i) {
        if (token[i] < '0' || token[i] > '9')
          throw parse_error("invalid character '" + std::string(1, token[i]) +
                                "' at position " + std::to_string(pos + i + 1),
                            pos + i + 1);
        if (value > 100000000)
          throw parse_error("entry too large at position " + std::to_string(pos + 1),
                            pos + 1);
        value = value * 10 + (token[i] - '0');
      }
      if (value < 1)
        throw parse_error("entries must be positive at position " + std::to_string(pos + 1),
                          pos + 1);
      seq.entries.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
      if (pos == text.size())
        throw parse_error("trailing comma at position " + std::to_string(pos), pos);
    }
    return seq;
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(entries[i]);
    }
    return out;
  }

  friend bool operator==(const ConstrainedSeq&, const ConstrainedSeq&) = default;
  friend auto operator<=>(const ConstrainedSeq&, const ConstrainedSeq&) = default;
};

// 1-based index pair (i, j) with i < j witnessing a violation of the
// pair condition u_j - (j - i) in [1, u_i - 1].
struct Violation {
  int i;
  int j;
  friend bool operator==(const Violation&, const Violation&) = default;
};

namespace detail {

// The pair condition: u_j - (j - i) must avoid [1, u_i - 1].
inline bool pair_ok(int u_i, int u_j, int gap) {
  const int t = u_j - gap;
  return t < 1 || t > u_i - 1;
}

}  // namespace detail

// Checks the pair condition over all 1 <= i < j <= n. Returns the
// lexicographically smallest violating pair, or nullopt when the
// sequence satisfies the condition.
inline std::optional<Violation> check_condition(const ConstrainedSeq& u) {
  for (int entry : u.entries)
    if (entry < 1) throw domain_error("check_condition: entries must be positive");
  const int n = u.length();
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!detail::pair_ok(u.u(i), u.u(j), j - i)) return Violation{i, j};
  return std::nullopt;
}

// Declarative description of one sequence family: per-index upper
// bounds (entries are always >= 1) plus an optional constraint on the
// last entry.
class FamilySpec {
 public:
  enum class LastEntry { none, pinned, strictly_greater };

  FamilySpec(std::string label, std::vector<int> upper_bounds,
             LastEntry last_kind = LastEntry::none, int last_value = 0)
      : label_(std::move(label)),
        upper_bounds_(std::move(upper_bounds)),
        last_kind_(last_kind),
        last_value_(last_value) {
    for (int b : upper_bounds_)
      if (b < 1) throw domain_error(label_ + ": upper bounds must be positive");
    if (upper_bounds_.empty()) {
      if (last_kind_ != LastEntry::none)
        throw domain_error(label_ + ": last-entry constraint on empty family");
      return;
    }
    const int last_bound = upper_bounds_.back();
    if (last_kind_ == LastEntry::pinned &&
        (last_value_ < 1 || last_value_ > last_bound))
      throw domain_error(label_ + ": pinned last entry outside bounds");
    if (last_kind_ == LastEntry::strictly_greater &&
        (last_value_ < 0 || last_value_ + 1 > last_bound))
      throw domain_error(label_ + ": last-entry threshold outside bounds");
  }

  const std::string& label() const { return label_; }
  int length() const { return static_cast<int>(upper_bounds_.size()); }
  const std::vector<int>& upper_bounds() const { return upper_bounds_; }
  LastEntry last_entry_kind() const { return last_kind_; }
  int last_entry_value() const { return last_value_; }

 private:
  std::string label_;
  std::vector<int> upper_bounds_;
  LastEntry last_kind_;
  int last_value_;
};

// A_n: sequences in [1, n]^n.
inline FamilySpec family_a(int n) {
  if (n < 0) throw domain_error("family_a: n must be nonnegative");
  return FamilySpec("A:" + std::to_string(n), std::vector<int>(static_cast<std::size_t>(n), n));
}

// B_n^(k): 1 <= v_i <= i + k.
inline FamilySpec family_b(int n, int k) {
  if (n < 0 || k < 0) throw domain_error("family_b: n and k must be nonnegative");
  std::vector<int> bounds(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) bounds[static_cast<std::size_t>(i - 1)] = i + k;
  return FamilySpec("B:" + std::to_string(n) + ":" + std::to_string(k), std::move(bounds));
}

// D_n^(s): positive entries with u_n = n + s. The raw definition leaves
// the other entries unbounded, but the pair condition against j = n
// forces u_i <= s + i, which makes the search space finite.
inline FamilySpec family_d(int n, int s) {
  if (n < 1) throw domain_error("family_d: n must be at least 1");
  if (s < 0) throw domain_error("family_d: s must be nonnegative");
  std::vector<int> bounds(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) bounds[static_cast<std::size_t>(i - 1)] = s + i;
  return FamilySpec("D:" + std::to_string(n) + ":" + std::to_string(s), std::move(bounds),
                    FamilySpec::LastEntry::pinned, n + s);
}

// F_n^(k): 1 <= u_i <= n + k + 1 with u_n > n. For n = 0 the last-entry
// constraint is vacuous and the family holds the empty sequence.
inline FamilySpec family_f(int n, int k) {
  if (n < 0 || k < 0) throw domain_error("family_f: n and k must be nonnegative");
  std::vector<int> bounds(static_cast<std::size_t>(n), n + k + 1);
  if (n == 0) return FamilySpec("F:0:" + std::to_string(k), std::move(bounds));
  return FamilySpec("F:" + std::to_string(n) + ":" + std::to_string(k), std::move(bounds),
                    FamilySpec::LastEntry::strictly_greater, n);
}

// R_{m,bound}: sequences in [1, bound]^m.
inline FamilySpec family_r(int m, int bound) {
  if (m < 0) throw domain_error("family_r: m must be nonnegative");
  if (bound < 1) throw domain_error("family_r: bound must be at least 1");
  return FamilySpec("R:" + std::to_string(m) + ":" + std::to_string(bound),
                    std::vector<int>(static_cast<std::size_t>(m), bound));
}

// Builds a FamilySpec from a CLI descriptor: A:n, B:n:k, D:n:s, F:n:k,
// or R:m:bound.
inline FamilySpec parse_family(std::string_view descriptor) {
  std::vector<int> params;
  std::size_t pos = descriptor.find(':');
  const std::string_view head = descriptor.substr(0, pos);
  while (pos != std::string_view::npos) {
    const std::size_t next = descriptor.find(':', pos + 1);
    const std::string_view token = descriptor.substr(
        pos + 1, next == std::string_view::npos ? next : next - pos - 1);
    if (token.empty() || token.size() > 8 ||
        !std::all_of(token.begin(), token.end(),
                     [](char c) { return c >= '0' && c <= '9'; }))
      throw domain_error("invalid family parameter in '" + std::string(descriptor) + "'");
    int value = 0;
    for (char c : token) value = value * 10 + (c - '0');
    params.push_back(value);
    pos = next;
  }
  if (head == "A" && params.size() == 1) return family_a(params[0]);
  if (head == "B" && params.size() == 2) return family_b(params[0], params[1]);
  if (head == "D" && params.size() == 2) return family_d(params[0], params[1]);
  if (head == "F" && params.size() == 2) return family_f(params[0], params[1]);
  if (head == "R" && params.size() == 2) return family_r(params[0], params[1]);
  throw domain_error("unknown family descriptor '" + std::string(descriptor) +
                     "' (expected A:n, B:n:k, D:n:s, F:n:k, or R:m:bound)");
}

namespace detail {

inline bool last_entry_ok(const FamilySpec& spec, int value) {
  switch (spec.last_entry_kind()) {
    case FamilySpec::LastEntry::pinned:
      return value == spec.last_entry_value();
    case FamilySpec::LastEntry::strictly_greater:
      return value > spec.last_entry_value();
    case FamilySpec::LastEntry::none:
      return true;
  }
  return true;
}

// Depth-first walk of the family in lexicographic order. The pair
// condition is prefix-closed (it quantifies only over pairs inside the
// prefix), so pruning on the first violated pair is sound.
template <class Leaf>
void walk_family(const FamilySpec& spec, std::vector<int>& u, Leaf&& leaf) {
  const int n = spec.length();
  const int i = static_cast<int>(u.size()) + 1;
  if (i > n) {
    leaf(u);
    return;
  }
  const int bound = spec.upper_bounds()[static_cast<std::size_t>(i - 1)];
  for (int value = 1; value <= bound; ++value) {
    if (i == n && !last_entry_ok(spec, value)) continue;
    bool ok = true;
    for (int j = 1; j < i; ++j) {
      if (!pair_ok(u[static_cast<std::size_t>(j - 1)], value, i - j)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    u.push_back(value);
    walk_family(spec, u, leaf);
    u.pop_back();
  }
}

}  // namespace detail

// Visits exactly the sequences within the bounds that satisfy the pair
// condition and the last-entry constraint, in lexicographic order.
template <class Visit>
void for_each_member(const FamilySpec& spec, Visit&& visit) {
  std::vector<int> u;
  u.reserve(static_cast<std::size_t>(spec.length()));
  detail::walk_family(spec, u, [&](const std::vector<int>& entries) {
    visit(ConstrainedSeq(entries));
  });
}

inline std::vector<ConstrainedSeq> enumerate_family(const FamilySpec& spec) {
  std::vector<ConstrainedSeq> out;
  for_each_member(spec, [&](const ConstrainedSeq& u) { out.push_back(u); });
  return out;
}

// Same pruned backtracking as the enumeration, without materializing
// the sequences. The count doubles as the independent oracle for the
// closed-form identities, so there is deliberately no shortcut here.
inline Natural count_family(const FamilySpec& spec) {
  Natural count = 0;
  std::vector<int> u;
  u.reserve(static_cast<std::size_t>(spec.length()));
  detail::walk_family(spec, u, [&](const std::vector<int>&) { count += 1; });
  return count;
}

// Membership test: length, bounds, last-entry constraint, and the pair
// condition.
inline bool is_member(const FamilySpec& spec, const ConstrainedSeq& u) {
  if (u.length() != spec.length()) return false;
  for (int i = 1; i <= u.length(); ++i) {
    const int value = u.u(i);
    if (value < 1 || value > spec.upper_bounds()[static_cast<std::size_t>(i - 1)])
      return false;
  }
  if (u.length() > 0 && !detail::last_entry_ok(spec, u.u(u.length()))) return false;
  return !check_condition(u).has_value();
}

// Like is_member but explains the failure.
inline void require_member(const FamilySpec& spec, const ConstrainedSeq& u,
                           const std::string& context) {
  if (u.length() != spec.length())
    throw domain_error(context + ": (" + u.str() + ") has length " +
                       std::to_string(u.length()) + ", " + spec.label() + " requires " +
                       std::to_string(spec.length()));
  for (int i = 1; i <= u.length(); ++i) {
    const int value = u.u(i);
    const int bound = spec.upper_bounds()[static_cast<std::size_t>(i - 1)];
    if (value < 1 || value > bound)
      throw domain_error(context + ": entry " + std::to_string(value) + " at index " +
                         std::to_string(i) + " outside [1," + std::to_string(bound) +
                         "] for " + spec.label());
  }
  if (u.length() > 0 && !detail::last_entry_ok(spec, u.u(u.length())))
    throw domain_error(context + ": last entry " + std::to_string(u.u(u.length())) +
                       " violates the last-entry constraint of " + spec.label());
  if (const auto violation = check_condition(u))
    throw domain_error(context + ": pair condition violated at (" +
                       std::to_string(violation->i) + "," + std::to_string(violation->j) +
                       ") in (" + u.str() + ")");
}

// The statistic X: largest 1-based index i with u_i > i, or 0 if none.
inline int statistic_x(const ConstrainedSeq& u) {
  for (int i = u.length(); i >= 1; --i)
    if (u.u(i) > i) return i;
  return 0;
}

// Splits u in A_n at k = X(u) >= 1 into a head certified in
// F_k^(n-k-1) and a tail certified in B_{n-k}. The memberships are
// consequences of the pair condition, so a failure there is a bug.
inline std::pair<ConstrainedSeq, ConstrainedSeq> split_at_x(const ConstrainedSeq& u, int n) {
  require_member(family_a(n), u, "split_at_x");
  const int k = statistic_x(u);
  if (k == 0)
    throw domain_error("split_at_x: statistic X is 0 for (" + u.str() +
                       "); the X = 0 class is B_n itself");
  ConstrainedSeq head(std::vector<int>(u.entries.begin(), u.entries.begin() + k));
  ConstrainedSeq tail(std::vector<int>(u.entries.begin() + k, u.entries.end()));
  if (!is_member(family_f(k, n - k - 1), head))
    throw integrity_error("split_at_x: head (" + head.str() + ") not in F_" +
                          std::to_string(k) + "^(" + std::to_string(n - k - 1) + ")");
  if (!is_member(family_b(n - k, 0), tail))
    throw integrity_error("split_at_x: tail (" + tail.str() + ") not in B_" +
                          std::to_string(n - k));
  return {std::move(head), std::move(tail)};
}

// Inverse of split_at_x: concatenates a head in F_k^(n-k-1) with a tail
// in B_{n-k} and certifies the result lands in A_n with X = k.
inline ConstrainedSeq join_at_x(const ConstrainedSeq& head, const ConstrainedSeq& tail,
                                int n) {
  const int k = head.length();
  if (k < 1) throw domain_error("join_at_x: head must be nonempty");
  if (k > n - 1)
    throw domain_error("join_at_x: head length " + std::to_string(k) +
                       " leaves no room in a length-" + std::to_string(n) + " sequence");
  require_member(family_f(k, n - k - 1), head, "join_at_x head");
  require_member(family_b(n - k, 0), tail, "join_at_x tail");
  std::vector<int> entries = head.entries;
  entries.insert(entries.end(), tail.entries.begin(), tail.entries.end());
  ConstrainedSeq joined(std::move(entries));
  if (!is_member(family_a(n), joined) || statistic_x(joined) != k)
    throw integrity_error("join_at_x: (" + joined.str() + ") failed certification for A_" +
                          std::to_string(n) + " with X = " + std::to_string(k));
  return joined;
}

// Reverse and decrement each entry by 1: maps B_n onto the inversion
// codes of the 231-avoiding permutations of [n].
inline std::vector<int> to_inversion_code(const ConstrainedSeq& v) {
  const int n = v.length();
  std::vector<int> code;
  code.reserve(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    const int value = v.u(i);
    if (value < 1 || value > i)
      throw domain_error("to_inversion_code: entry " + std::to_string(value) +
                         " at index " + std::to_string(i) + " outside [1," +
                         std::to_string(i) + "]");
    code.push_back(value - 1);
  }
  return code;
}

// A rearrangement of 1..n.
struct Permutation {
  std::vector<int> values;

  Permutation() = default;
  explicit Permutation(std::vector<int> v) : values(std::move(v)) {
    std::vector<bool> seen(values.size() + 1, false);
    for (int x : values) {
      if (x < 1 || x > static_cast<int>(values.size()) || seen[static_cast<std::size_t>(x)])
        throw domain_error("Permutation: values must be a rearrangement of 1..n");
      seen[static_cast<std::size_t>(x)] = true;
    }
  }

  int size() const { return static_cast<int>(values.size()); }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(values[i]);
    }
    return out;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

// Reconstructs the unique permutation whose inversion code (count of
// later smaller entries, per position) equals `code`: position i takes
// the (code_i + 1)-th smallest value not yet used.
inline Permutation code_to_permutation(const std::vector<int>& code) {
  const int n = static_cast<int>(code.size());
  std::vector<int> remaining(static_cast<std::size_t>(n));
  std::iota(remaining.begin(), remaining.end(), 1);
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int c = code[static_cast<std::size_t>(i)];
    if (c < 0 || c >= static_cast<int>(remaining.size()))
      throw domain_error("code_to_permutation: code entry " + std::to_string(c) +
                         " at position " + std::to_string(i + 1) + " outside [0," +
                         std::to_string(remaining.size() - 1) + "]");
    values.push_back(remaining[static_cast<std::size_t>(c)]);
    remaining.erase(remaining.begin() + c);
  }
  return Permutation(std::move(values));
}

// True iff no indices i < j < k have p_k < p_i < p_j.
inline bool avoids_231(const Permutation& p) {
  const int n = p.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (p.values[static_cast<std::size_t>(k)] < p.values[static_cast<std::size_t>(i)] &&
            p.values[static_cast<std::size_t>(i)] < p.values[static_cast<std::size_t>(j)])
          return false;
  return true;
}

}  // namespace catkit
