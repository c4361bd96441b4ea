#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "catkit/bijection.hpp"
#include "catkit/dyckpath.hpp"
#include "catkit/error.hpp"
#include "catkit/exactnum.hpp"
#include "catkit/families.hpp"
#include "catkit/natural.hpp"
#include "catkit/transform.hpp"

namespace catkit {

struct ClaimResult {
  std::string id;
  std::string params;
  bool passed = true;
  std::string counterexample;  // nonempty iff failed
};

struct VerificationReport {
  std::string suite;
  std::vector<ClaimResult> claims;

  bool passed() const {
    return std::all_of(claims.begin(), claims.end(),
                       [](const ClaimResult& c) { return c.passed; });
  }

  nlohmann::json to_json() const {
    nlohmann::json doc;
    doc["suite"] = suite;
    doc["claims"] = nlohmann::json::array();
    for (const ClaimResult& c : claims) {
      nlohmann::json entry;
      entry["id"] = c.id;
      entry["params"] = c.params;
      entry["status"] = c.passed ? "pass" : "fail";
      if (!c.passed) entry["counterexample"] = c.counterexample;
      doc["claims"].push_back(std::move(entry));
    }
    doc["overall"] = passed() ? "pass" : "fail";
    return doc;
  }

  std::string summary() const {
    std::ostringstream out;
    for (const ClaimResult& c : claims) {
      out << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << " (" << c.params << ")";
      if (!c.passed) out << ": " << c.counterexample;
      out << '\n';
    }
    out << "suite " << suite << ": " << (passed() ? "PASS" : "FAIL") << '\n';
    return out.str();
  }
};

namespace detail {

// Runs `body`, which returns a counterexample description on failure.
inline ClaimResult run_claim(const std::string& id, const std::string& params,
                             const std::function<std::optional<std::string>()>& body) {
  ClaimResult result{id, params};
  if (auto counterexample = body()) {
    result.passed = false;
    result.counterexample = *counterexample;
  }
  return result;
}

inline std::string range(int lo, int hi) {
  return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

}  // namespace detail

// Transform of the Catalan prefix against the exhaustive count of
// bound-n condition sequences.
inline VerificationReport verify_theorem1(int max_n = 6) {
  VerificationReport report{"theorem1", {}};
  report.claims.push_back(detail::run_claim(
      "theorem1.count-equals-transform", "n in " + detail::range(0, max_n),
      [&]() -> std::optional<std::string> {
        IntSeq catalans(static_cast<std::size_t>(max_n) + 1);
        for (int n = 0; n <= max_n; ++n) catalans[static_cast<std::size_t>(n)] = catalan(n);
        const IntSeq b = catalan_transform(catalans, TransformMode::direct);
        for (int n = 0; n <= max_n; ++n) {
          const Natural counted = count_family(family_a(n));
          if (counted != b[static_cast<std::size_t>(n)])
            return "n=" + std::to_string(n) + ": |A_n| = " + counted.str() +
                   " but transform term is " + b[static_cast<std::size_t>(n)].str();
        }
        return std::nullopt;
      }));
  return report;
}

// Dyck-path counts, family counts, and the constructive bijection
// between them, exhaustively over all semilengths up to the cap.
inline VerificationReport verify_prop2(int max_semilength = 10) {
  VerificationReport report{"prop2", {}};
  const std::string sweep = "n+k in " + detail::range(0, max_semilength);
  report.claims.push_back(detail::run_claim(
      "prop2.dyck-count-equals-gen-catalan", sweep,
      [&]() -> std::optional<std::string> {
        for (int m = 0; m <= max_semilength; ++m) {
          for (int k = 0; k <= m; ++k) {
            Natural paths = 0;
            for_each_dyck(m, k, [&](const Path&) { paths += 1; });
            const Natural expected = gen_catalan(m - k, k);
            if (paths != expected)
              return "m=" + std::to_string(m) + ",k=" + std::to_string(k) + ": " +
                     paths.str() + " paths, gen_catalan gives " + expected.str();
          }
        }
        return std::nullopt;
      }));
  report.claims.push_back(detail::run_claim(
      "prop2.family-count-equals-gen-catalan", sweep,
      [&]() -> std::optional<std::string> {
        for (int m = 0; m <= max_semilength; ++m) {
          for (int k = 0; k <= m; ++k) {
            const int n = m - k;
            const Natural members = count_family(family_b(n, k));
            const Natural expected = gen_catalan(n, k);
            if (members != expected)
              return "n=" + std::to_string(n) + ",k=" + std::to_string(k) + ": |B| = " +
                     members.str() + ", gen_catalan gives " + expected.str();
          }
        }
        return std::nullopt;
      }));
  report.claims.push_back(detail::run_claim(
      "prop2.bijection-round-trip-and-coverage", sweep,
      [&]() -> std::optional<std::string> {
        for (int m = 0; m <= max_semilength; ++m) {
          for (int k = 0; k <= m; ++k) {
            const int n = m - k;
            std::set<ConstrainedSeq> images;
            std::optional<std::string> failure;
            for_each_dyck(m, k, [&](const Path& p) {
              if (failure) return;
              const ConstrainedSeq v = dyck_to_seq(p, k);
              if (seq_to_dyck(v, k) != p) {
                failure = "round trip failed for '" + p.str() + "' with k = " +
                          std::to_string(k);
                return;
              }
              if (!images.insert(v).second)
                failure = "duplicate image (" + v.str() + ") at m=" + std::to_string(m) +
                          ",k=" + std::to_string(k);
            });
            if (failure) return failure;
            const std::vector<ConstrainedSeq> family = enumerate_family(family_b(n, k));
            if (images.size() != family.size() ||
                !std::equal(images.begin(), images.end(), family.begin()))
              return "image of the path set differs from B_" + std::to_string(n) + "^(" +
                     std::to_string(k) + ")";
          }
        }
        return std::nullopt;
      }));
  return report;
}

// Last-entry-pinned families: counts and the truncation bijection to B.
inline VerificationReport verify_prop4(int max_n = 8, int max_s = 4) {
  VerificationReport report{"prop4", {}};
  const std::string sweep =
      "n in " + detail::range(1, max_n) + ", s in " + detail::range(0, max_s);
  report.claims.push_back(detail::run_claim(
      "prop4.count-equals-gen-catalan", sweep, [&]() -> std::optional<std::string> {
        for (int n = 1; n <= max_n; ++n) {
          for (int s = 0; s <= max_s; ++s) {
            const Natural members = count_family(family_d(n, s));
            const Natural expected = gen_catalan(n - 1, s);
            if (members != expected)
              return "n=" + std::to_string(n) + ",s=" + std::to_string(s) + ": |D| = " +
                     members.str() + ", gen_catalan gives " + expected.str();
          }
        }
        return std::nullopt;
      }));
  report.claims.push_back(detail::run_claim(
      "prop4.truncation-is-bijection-to-B", sweep, [&]() -> std::optional<std::string> {
        for (int n = 1; n <= max_n; ++n) {
          for (int s = 0; s <= max_s; ++s) {
            std::set<ConstrainedSeq> truncated;
            for (const ConstrainedSeq& u : enumerate_family(family_d(n, s))) {
              ConstrainedSeq head(
                  std::vector<int>(u.entries.begin(), u.entries.end() - 1));
              if (!truncated.insert(head).second)
                return "truncation collides at (" + u.str() + "), n=" + std::to_string(n) +
                       ",s=" + std::to_string(s);
            }
            const std::vector<ConstrainedSeq> b_family =
                enumerate_family(family_b(n - 1, s));
            if (truncated.size() != b_family.size() ||
                !std::equal(truncated.begin(), truncated.end(), b_family.begin()))
              return "truncations of D_" + std::to_string(n) + "^(" + std::to_string(s) +
                     ") do not equal B_" + std::to_string(n - 1) + "^(" +
                     std::to_string(s) + ")";
          }
        }
        return std::nullopt;
      }));
  return report;
}

// Bounded families with a large last entry: counts and the partition by
// the last entry into the pinned families.
inline VerificationReport verify_prop5(int max_n = 8, int max_k = 4) {
  VerificationReport report{"prop5", {}};
  const std::string sweep =
      "n in " + detail::range(0, max_n) + ", k in " + detail::range(0, max_k);
  report.claims.push_back(detail::run_claim(
      "prop5.count-equals-gen-catalan", sweep, [&]() -> std::optional<std::string> {
        for (int n = 0; n <= max_n; ++n) {
          for (int k = 0; k <= max_k; ++k) {
            const Natural members = count_family(family_f(n, k));
            const Natural expected = gen_catalan(n, k);
            if (members != expected)
              return "n=" + std::to_string(n) + ",k=" + std::to_string(k) + ": |F| = " +
                     members.str() + ", gen_catalan gives " + expected.str();
          }
        }
        return std::nullopt;
      }));
  report.claims.push_back(detail::run_claim(
      "prop5.last-entry-partition-reproduces-D", sweep,
      [&]() -> std::optional<std::string> {
        for (int n = 1; n <= max_n; ++n) {
          for (int k = 0; k <= max_k; ++k) {
            std::map<int, std::set<ConstrainedSeq>> blocks;
            std::size_t total = 0;
            for (const ConstrainedSeq& u : enumerate_family(family_f(n, k))) {
              const int s = u.u(n) - n;
              if (s < 1 || s > k + 1)
                return "member (" + u.str() + ") of F_" + std::to_string(n) + "^(" +
                       std::to_string(k) + ") has last entry offset s=" + std::to_string(s);
              blocks[s].insert(u);
              ++total;
            }
            for (int s = 1; s <= k + 1; ++s) {
              const std::vector<ConstrainedSeq> d_family =
                  enumerate_family(family_d(n, s));
              const auto& block = blocks[s];
              if (block.size() != d_family.size() ||
                  !std::equal(block.begin(), block.end(), d_family.begin()))
                return "F-block with u_n = n+" + std::to_string(s) + " differs from D_" +
                       std::to_string(n) + "^(" + std::to_string(s) + ") at n=" +
                       std::to_string(n) + ",k=" + std::to_string(k);
              total -= block.size();
            }
            if (total != 0)
              return "partition misses members at n=" + std::to_string(n) + ",k=" +
                     std::to_string(k);
          }
        }
        return std::nullopt;
      }));
  return report;
}

// The statistic-X refinement: per-class product counts and the
// split/join bijection onto the Cartesian product.
inline VerificationReport verify_theorem5(int max_n = 6) {
  VerificationReport report{"theorem5", {}};
  const std::string sweep = "n in " + detail::range(1, max_n);
  report.claims.push_back(detail::run_claim(
      "theorem5.class-size-is-product", sweep, [&]() -> std::optional<std::string> {
        for (int n = 1; n <= max_n; ++n) {
          std::map<int, Natural> class_sizes;
          for_each_member(family_a(n), [&](const ConstrainedSeq& u) {
            class_sizes[statistic_x(u)] += 1;
          });
          for (int k = 0; k <= n - 1; ++k) {
            const Natural expected = gen_catalan(k, n - 1 - k) * catalan(n - k);
            const Natural actual = class_sizes[k];
            if (actual != expected)
              return "n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                     ": |A_{n,k}| = " + actual.str() + ", product formula gives " +
                     expected.str();
          }
        }
        return std::nullopt;
      }));
  report.claims.push_back(detail::run_claim(
      "theorem5.x-zero-class-is-B", sweep, [&]() -> std::optional<std::string> {
        for (int n = 1; n <= max_n; ++n) {
          std::vector<ConstrainedSeq> zero_class;
          for_each_member(family_a(n), [&](const ConstrainedSeq& u) {
            if (statistic_x(u) == 0) zero_class.push_back(u);
          });
          const std::vector<ConstrainedSeq> b_family = enumerate_family(family_b(n, 0));
          if (zero_class != b_family)
            return "A_{n,0} differs from B_n at n=" + std::to_string(n);
        }
        return std::nullopt;
      }));
  report.claims.push_back(detail::run_claim(
      "theorem5.split-join-bijection", sweep, [&]() -> std::optional<std::string> {
        for (int n = 1; n <= max_n; ++n) {
          std::map<int, std::set<std::pair<ConstrainedSeq, ConstrainedSeq>>> split_images;
          std::optional<std::string> failure;
          for_each_member(family_a(n), [&](const ConstrainedSeq& u) {
            if (failure) return;
            const int k = statistic_x(u);
            if (k == 0) return;
            const auto [head, tail] = split_at_x(u, n);
            if (join_at_x(head, tail, n) != u) {
              failure = "join(split(" + u.str() + ")) != original at n=" + std::to_string(n);
              return;
            }
            if (!split_images[k].insert({head, tail}).second)
              failure = "split image collides for (" + u.str() + ")";
          });
          if (failure) return failure;
          for (int k = 1; k <= n - 1; ++k) {
            std::set<std::pair<ConstrainedSeq, ConstrainedSeq>> product;
            for (const ConstrainedSeq& head : enumerate_family(family_f(k, n - k - 1)))
              for (const ConstrainedSeq& tail : enumerate_family(family_b(n - k, 0)))
                product.insert({head, tail});
            if (split_images[k] != product)
              return "split image differs from F x B product at n=" + std::to_string(n) +
                     ",k=" + std::to_string(k);
          }
        }
        return std::nullopt;
      }));
  return report;
}

// Shifted-Catalan transforms: boundary terms and the R-family counts.
inline VerificationReport verify_theorem6(int max_n = 8, int max_k = 3) {
  VerificationReport report{"theorem6", {}};
  const std::string sweep =
      "k in " + detail::range(0, max_k) + ", n in " + detail::range(0, max_n);
  report.claims.push_back(detail::run_claim(
      "theorem6.boundary-terms", sweep, [&]() -> std::optional<std::string> {
        for (int k = 0; k <= max_k; ++k) {
          const IntSeq b = catalan_transform(shifted_catalan(k, max_n + 1),
                                             TransformMode::direct);
          for (int n = 0; n < k && n <= max_n; ++n)
            if (!b[static_cast<std::size_t>(n)].is_zero())
              return "k=" + std::to_string(k) + ": b_" + std::to_string(n) + " = " +
                     b[static_cast<std::size_t>(n)].str() + ", expected 0";
          if (k <= max_n && b[static_cast<std::size_t>(k)] != Natural(1))
            return "k=" + std::to_string(k) + ": b_k = " +
                   b[static_cast<std::size_t>(k)].str() + ", expected 1";
        }
        return std::nullopt;
      }));
  report.claims.push_back(detail::run_claim(
      "theorem6.count-equals-transform", sweep, [&]() -> std::optional<std::string> {
        for (int k = 0; k <= max_k; ++k) {
          const IntSeq b = catalan_transform(shifted_catalan(k, max_n + 1),
                                             TransformMode::direct);
          for (int n = k + 1; n <= max_n; ++n) {
            const Natural counted = count_family(family_r(n - k, n));
            if (counted != b[static_cast<std::size_t>(n)])
              return "k=" + std::to_string(k) + ",n=" + std::to_string(n) +
                     ": |R| = " + counted.str() + ", transform term is " +
                     b[static_cast<std::size_t>(n)].str();
          }
        }
        return std::nullopt;
      }));
  return report;
}

// Formula-level identities plus the transform cross-checks.
inline VerificationReport verify_identities(int max_n = 30) {
  VerificationReport report{"identities", {}};
  report.claims.push_back(detail::run_claim(
      "identities.gen-catalan-summation",
      "n in " + detail::range(1, max_n) + ", k in " + detail::range(0, max_n),
      [&]() -> std::optional<std::string> {
        for (int n = 1; n <= max_n; ++n) {
          for (int k = 0; k <= max_n; ++k) {
            Natural sum = 0;
            for (int s = 1; s <= k + 1; ++s) sum += gen_catalan(n - 1, s);
            const Natural expected = gen_catalan(n, k);
            if (sum != expected)
              return "n=" + std::to_string(n) + ",k=" + std::to_string(k) + ": sum is " +
                     sum.str() + ", gen_catalan gives " + expected.str();
          }
        }
        return std::nullopt;
      }));
  report.claims.push_back(detail::run_claim(
      "identities.gen-catalan-is-convolution-power",
      "n, k in " + detail::range(0, std::min(max_n, 20)),
      [&]() -> std::optional<std::string> {
        const int cap = std::min(max_n, 20);
        for (int k = 0; k <= cap; ++k) {
          const IntSeq power = catalan_power_convolution(k, cap + 1);
          for (int n = 0; n <= cap; ++n) {
            if (gen_catalan(n, k) != power[static_cast<std::size_t>(n)])
              return "n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                     ": gen_catalan is " + gen_catalan(n, k).str() +
                     ", convolution gives " + power[static_cast<std::size_t>(n)].str();
          }
        }
        return std::nullopt;
      }));
  report.claims.push_back(detail::run_claim(
      "identities.gen-catalan-k0-is-catalan", "n in " + detail::range(0, max_n),
      [&]() -> std::optional<std::string> {
        for (int n = 0; n <= max_n; ++n)
          if (gen_catalan(n, 0) != catalan(n))
            return "n=" + std::to_string(n);
        return std::nullopt;
      }));
  report.claims.push_back(detail::run_claim(
      "identities.transform-mode-agreement",
      "exhaustive short sequences plus 200 seeded random, length <= 40",
      [&]() -> std::optional<std::string> {
        std::vector<IntSeq> inputs;
        // Exhaustive over short sequences with small terms.
        for (int len = 0; len <= 3; ++len) {
          std::vector<std::size_t> odometer(static_cast<std::size_t>(len), 0);
          while (true) {
            IntSeq a;
            for (std::size_t digit : odometer) a.push_back(Natural(digit));
            inputs.push_back(a);
            std::size_t i = 0;
            for (; i < odometer.size(); ++i) {
              if (++odometer[i] <= 2) break;
              odometer[i] = 0;
            }
            if (i == odometer.size()) break;
            if (odometer.empty()) break;
          }
        }
        std::mt19937_64 rng(20240517);
        std::uniform_int_distribution<int> len_dist(0, 40);
        std::uniform_int_distribution<unsigned long long> term_dist(0, 1000000);
        for (int trial = 0; trial < 200; ++trial) {
          IntSeq a(static_cast<std::size_t>(len_dist(rng)));
          for (Natural& term : a) term = Natural(term_dist(rng));
          inputs.push_back(std::move(a));
        }
        for (const IntSeq& a : inputs) {
          if (catalan_transform(a, TransformMode::direct) !=
              catalan_transform(a, TransformMode::reversed))
            return "modes disagree on input of length " + std::to_string(a.size());
        }
        return std::nullopt;
      }));
  report.claims.push_back(detail::run_claim(
      "identities.transform-linearity", "100 seeded random pairs, length <= 25",
      [&]() -> std::optional<std::string> {
        std::mt19937_64 rng(87251);
        std::uniform_int_distribution<int> len_dist(0, 25);
        std::uniform_int_distribution<unsigned long long> term_dist(0, 100000);
        std::uniform_int_distribution<unsigned long long> scalar_dist(0, 12);
        for (int trial = 0; trial < 100; ++trial) {
          const std::size_t len = static_cast<std::size_t>(len_dist(rng));
          IntSeq a(len), b(len), combined(len);
          const Natural alpha = Natural(scalar_dist(rng));
          const Natural beta = Natural(scalar_dist(rng));
          for (std::size_t i = 0; i < len; ++i) {
            a[i] = Natural(term_dist(rng));
            b[i] = Natural(term_dist(rng));
            combined[i] = alpha * a[i] + beta * b[i];
          }
          const IntSeq lhs = catalan_transform(combined, TransformMode::direct);
          const IntSeq ta = catalan_transform(a, TransformMode::direct);
          const IntSeq tb = catalan_transform(b, TransformMode::direct);
          for (std::size_t i = 0; i < len; ++i) {
            if (lhs[i] != alpha * ta[i] + beta * tb[i])
              return "linearity fails at term " + std::to_string(i) + " of trial " +
                     std::to_string(trial);
          }
        }
        return std::nullopt;
      }));
  report.claims.push_back(detail::run_claim(
      "identities.s-histogram-matches-gen-catalan", "n in [1,6], k in [0,4]",
      [&]() -> std::optional<std::string> {
        for (int n = 1; n <= 6; ++n) {
          for (int k = 0; k <= 4; ++k) {
            const std::map<long long, Natural> hist = s_histogram(n, k);
            Natural total = 0;
            for (const auto& [s, count] : hist) {
              if (s < 1 || s > k + 1)
                return "histogram key s=" + std::to_string(s) + " outside [1," +
                       std::to_string(k + 1) + "] at n=" + std::to_string(n) + ",k=" +
                       std::to_string(k);
              total += count;
            }
            if (hist.size() != static_cast<std::size_t>(k + 1))
              return "histogram at n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                     " does not cover every s in [1," + std::to_string(k + 1) + "]";
            for (int s = 1; s <= k + 1; ++s) {
              const Natural expected = gen_catalan(n - 1, k + 2 - s);
              if (hist.at(s) != expected)
                return "n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",s=" +
                       std::to_string(s) + ": histogram has " + hist.at(s).str() +
                       ", gen_catalan gives " + expected.str();
            }
            if (total != gen_catalan(n, k))
              return "histogram total at n=" + std::to_string(n) + ",k=" +
                     std::to_string(k) + " is " + total.str();
          }
        }
        return std::nullopt;
      }));
  return report;
}

// The inversion-code bridge from B_n to 231-avoiding permutations.
inline VerificationReport verify_remark(int max_n = 8) {
  VerificationReport report{"remark", {}};
  report.claims.push_back(detail::run_claim(
      "remark.code-map-hits-231-avoiders", "n in " + detail::range(0, max_n),
      [&]() -> std::optional<std::string> {
        for (int n = 0; n <= max_n; ++n) {
          std::set<Permutation> image;
          for (const ConstrainedSeq& v : enumerate_family(family_b(n, 0))) {
            const Permutation p = code_to_permutation(to_inversion_code(v));
            if (!image.insert(p).second)
              return "duplicate image (" + p.str() + ") at n=" + std::to_string(n);
          }
          std::set<Permutation> avoiders;
          std::vector<int> values(static_cast<std::size_t>(n));
          std::iota(values.begin(), values.end(), 1);
          do {
            Permutation p(values);
            if (avoids_231(p)) avoiders.insert(std::move(p));
          } while (std::next_permutation(values.begin(), values.end()));
          if (image != avoiders)
            return "image set differs from the 231-avoiding permutations at n=" +
                   std::to_string(n);
        }
        return std::nullopt;
      }));
  return report;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "theorem1", "prop2", "prop4", "prop5", "theorem5", "theorem6", "identities",
      "remark"};
  return names;
}

// Runs one named suite (or "all"), with an optional override of its
// primary parameter cap; the secondary caps stay at their defaults.
inline std::vector<VerificationReport> run_suites(const std::string& name,
                                                  std::optional<int> max_n = std::nullopt) {
  const auto pick = [&](int fallback) { return max_n.value_or(fallback); };
  std::vector<VerificationReport> reports;
  const bool all = name == "all";
  if (all || name == "theorem1") reports.push_back(verify_theorem1(pick(6)));
  if (all || name == "prop2") reports.push_back(verify_prop2(pick(10)));
  if (all || name == "prop4") reports.push_back(verify_prop4(pick(8)));
  if (all || name == "prop5") reports.push_back(verify_prop5(pick(8)));
  if (all || name == "theorem5") reports.push_back(verify_theorem5(pick(6)));
  if (all || name == "theorem6") reports.push_back(verify_theorem6(pick(8)));
  if (all || name == "identities") reports.push_back(verify_identities(pick(30)));
  if (all || name == "remark") reports.push_back(verify_remark(pick(8)));
  if (reports.empty())
    throw domain_error("unknown suite '" + name +
                       "' (expected theorem1, prop2, prop4, prop5, theorem5, theorem6, "
                       "identities, remark, or all)");
  return reports;
}

}  // namespace catkit
