// Acceptance gate: every release-blocking property, one line of output
// per criterion, nonzero exit when anything fails or overruns its
// budget. All comparisons are exact integer equality.

#include <chrono>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <catkit/catkit.hpp>

namespace {

using catkit::IntSeq;
using catkit::Natural;

// Independent of the library's family walker: counts functions
// [1,n] -> [1,n] obeying the pair rule by direct recursion over all n^n
// candidates, pruning a prefix as soon as one pair fails.
long long brute_count_bounded_functions(int n) {
  std::vector<int> u;
  long long count = 0;
  std::function<void()> rec = [&] {
    if (static_cast<int>(u.size()) == n) {
      ++count;
      return;
    }
    const int j = static_cast<int>(u.size()) + 1;
    for (int value = 1; value <= n; ++value) {
      bool ok = true;
      for (int i = 1; i < j; ++i) {
        const int t = value - (j - i);
        if (t >= 1 && t <= u[static_cast<std::size_t>(i - 1)] - 1) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      u.push_back(value);
      rec();
      u.pop_back();
    }
  };
  rec();
  return count;
}

IntSeq catalan_prefix(std::size_t len) {
  IntSeq a(len);
  for (std::size_t n = 0; n < len; ++n)
    a[n] = catkit::catalan(static_cast<long long>(n));
  return a;
}

std::optional<std::string> from_report(const catkit::VerificationReport& report) {
  for (const catkit::ClaimResult& claim : report.claims)
    if (!claim.passed) return claim.id + ": " + claim.counterexample;
  return std::nullopt;
}

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<std::optional<std::string>()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"transform of Catalan prefix equals exhaustive function count, n <= 7", 60.0,
       []() -> std::optional<std::string> {
         const IntSeq b = catkit::catalan_transform(catalan_prefix(8),
                                                    catkit::TransformMode::direct);
         const std::vector<long long> stated_prefix = {1, 1, 3, 11, 44};
         for (std::size_t n = 0; n < stated_prefix.size(); ++n) {
           if (b[n] != Natural(stated_prefix[n]))
             return "transform term " + std::to_string(n) + " is " + b[n].str() +
                    ", expected " + std::to_string(stated_prefix[n]);
         }
         for (int n = 0; n <= 7; ++n) {
           const long long counted = brute_count_bounded_functions(n);
           if (Natural(counted) != b[static_cast<std::size_t>(n)])
             return "n=" + std::to_string(n) + ": exhaustive count " +
                    std::to_string(counted) + " vs transform term " +
                    b[static_cast<std::size_t>(n)].str();
         }
         return std::nullopt;
       }},
      {"direct and reversed transform agree on 1000 random + stock inputs", 5.0,
       []() -> std::optional<std::string> {
         std::vector<IntSeq> inputs;
         inputs.push_back(catalan_prefix(41));
         for (long long k = 1; k <= 3; ++k)
           inputs.push_back(catkit::shifted_catalan(k, 41));
         std::mt19937_64 rng(2026);
         std::uniform_int_distribution<int> len_dist(0, 40);
         std::uniform_int_distribution<unsigned long long> term_dist(0, 1000000000);
         for (int trial = 0; trial < 1000; ++trial) {
           IntSeq a(static_cast<std::size_t>(len_dist(rng)));
           for (Natural& term : a) term = Natural(term_dist(rng));
           inputs.push_back(std::move(a));
         }
         for (std::size_t i = 0; i < inputs.size(); ++i) {
           if (catkit::catalan_transform(inputs[i], catkit::TransformMode::direct) !=
               catkit::catalan_transform(inputs[i], catkit::TransformMode::reversed))
             return "modes disagree on input " + std::to_string(i) + " (length " +
                    std::to_string(inputs[i].size()) + ")";
         }
         return std::nullopt;
       }},
      {"path counts, family counts, and bijection certified for n+k <= 10", 60.0,
       [] { return from_report(catkit::verify_prop2(10)); }},
      {"pinned and bounded family counts and partitions, n <= 8, s,k <= 4", 30.0,
       []() -> std::optional<std::string> {
         if (auto failure = from_report(catkit::verify_prop4(8, 4))) return failure;
         return from_report(catkit::verify_prop5(8, 4));
       }},
      {"statistic split/join bijection and product counts, n <= 7", 60.0,
       [] { return from_report(catkit::verify_theorem5(7)); }},
      {"summation identity n,k <= 30 and trailing-statistic histogram", 30.0,
       []() -> std::optional<std::string> {
         for (int n = 1; n <= 30; ++n) {
           for (int k = 0; k <= 30; ++k) {
             Natural sum = 0;
             for (int s = 1; s <= k + 1; ++s) sum += catkit::gen_catalan(n - 1, s);
             if (sum != catkit::gen_catalan(n, k))
               return "summation fails at n=" + std::to_string(n) +
                      ",k=" + std::to_string(k);
           }
         }
         for (int n = 1; n <= 6; ++n) {
           for (int k = 0; k <= 4; ++k) {
             const auto hist = catkit::s_histogram(n, k);
             if (hist.size() != static_cast<std::size_t>(k + 1))
               return "histogram at n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                      " has " + std::to_string(hist.size()) + " keys";
             for (int s = 1; s <= k + 1; ++s) {
               if (hist.at(s) != catkit::gen_catalan(n - 1, k + 2 - s))
                 return "histogram value at n=" + std::to_string(n) + ",k=" +
                        std::to_string(k) + ",s=" + std::to_string(s) + " is " +
                        hist.at(s).str();
             }
           }
         }
         return std::nullopt;
       }},
      {"generalized values equal convolution powers, n,k <= 20", 5.0,
       []() -> std::optional<std::string> {
         for (int k = 0; k <= 20; ++k) {
           const IntSeq power = catkit::catalan_power_convolution(k, 21);
           for (int n = 0; n <= 20; ++n) {
             if (catkit::gen_catalan(n, k) != power[static_cast<std::size_t>(n)])
               return "mismatch at n=" + std::to_string(n) + ",k=" + std::to_string(k);
           }
         }
         return std::nullopt;
       }},
      {"shifted transforms: boundary terms and counts, k <= 3, n <= 8", 60.0,
       [] { return from_report(catkit::verify_theorem6(8, 3)); }},
      {"inversion-code map hits exactly the 231-avoiders, n <= 8", 30.0,
       []() -> std::optional<std::string> {
         const Natural b8 = catkit::count_family(catkit::family_b(8, 0));
         if (b8 != Natural(1430))
           return "|B_8| is " + b8.str() + ", expected 1430";
         if (b8 != catkit::catalan(8))
           return "|B_8| does not equal the eighth Catalan number";
         return from_report(catkit::verify_remark(8));
       }},
      {"fixture search for (1,2,6,21,80) returns the catalogued id", 1.0,
       []() -> std::optional<std::string> {
         catkit::OeisClient client(CATKIT_REPO_FIXTURES);
         IntSeq probe;
         for (unsigned long long v : {1ull, 2ull, 6ull, 21ull, 80ull})
           probe.push_back(Natural(v));
         const auto hits = client.search_by_terms(probe, catkit::OeisSource::fixtures);
         for (const catkit::OeisEntry& hit : hits)
           if (hit.a_number == "A121988") return std::nullopt;
         return "search returned " + std::to_string(hits.size()) +
                " hits, none of them A121988";
       }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& criterion = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    std::optional<std::string> failure;
    try {
      failure = criterion.body();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!failure && seconds >= criterion.budget_seconds)
      failure = "exceeded its time budget";

    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs of %.0fs", seconds,
                  criterion.budget_seconds);
    if (failure) {
      ++failures;
      std::cout << "FAIL " << (i + 1) << "/" << criteria.size() << " " << criterion.name
                << " [" << timing << "]: " << *failure << '\n';
    } else {
      std::cout << "PASS " << (i + 1) << "/" << criteria.size() << " " << criterion.name
                << " [" << timing << "]\n";
    }
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/"
            << criteria.size() << " acceptance criteria passed\n";
  return failures == 0 ? 0 : 1;
}
