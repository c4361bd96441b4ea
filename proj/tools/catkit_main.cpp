// Command line front end for the catkit library.
//
// Exit codes: 0 success, 1 verification failure or internal inconsistency,
// 2 usage or input error, 3 network error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <catkit/catkit.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNetworkError = 3;

catkit::IntSeq resolve_input(const std::string& input, long long n) {
  if (input == "catalan") {
    catkit::IntSeq a(static_cast<std::size_t>(n) + 1);
    for (long long i = 0; i <= n; ++i)
      a[static_cast<std::size_t>(i)] = catkit::catalan(i);
    return a;
  }
  if (input.starts_with("shifted:")) {
    const std::string arg = input.substr(8);
    std::size_t used = 0;
    long long k = 0;
    try {
      k = std::stoll(arg, &used);
    } catch (const std::exception&) {
      throw catkit::domain_error("bad shift amount '" + arg + "'");
    }
    if (used != arg.size() || k < 0)
      throw catkit::domain_error("bad shift amount '" + arg + "'");
    return catkit::shifted_catalan(k, n + 1);
  }
  if (input.starts_with("file:")) {
    catkit::IntSeq a = catkit::load_sequence(input.substr(5));
    if (static_cast<long long>(a.size()) < n + 1)
      throw catkit::domain_error("file holds " + std::to_string(a.size()) +
                                 " terms, need " + std::to_string(n + 1));
    a.resize(static_cast<std::size_t>(n) + 1);
    return a;
  }
  throw catkit::domain_error("unknown input '" + input +
                             "' (expected catalan, shifted:<k>, or file:<path>)");
}

int cmd_transform(const std::string& input, long long n, const std::string& mode,
                  const std::string& format) {
  const catkit::TransformMode m = mode == "direct"     ? catkit::TransformMode::direct
                                  : mode == "reversed" ? catkit::TransformMode::reversed
                                                       : throw catkit::domain_error(
                                                             "unknown mode '" + mode + "'");
  const catkit::IntSeq b = catkit::catalan_transform(resolve_input(input, n), m);
  if (format == "json")
    std::cout << catkit::to_json(b) << '\n';
  else if (format == "csv")
    std::cout << catkit::to_csv(b) << '\n';
  else
    throw catkit::domain_error("unknown format '" + format + "'");
  return kExitOk;
}

int cmd_enumerate(const std::string& descriptor, bool count_only) {
  const catkit::FamilySpec spec = catkit::parse_family(descriptor);
  if (count_only) {
    std::cout << catkit::count_family(spec).str() << '\n';
    return kExitOk;
  }
  catkit::for_each_member(spec, [](const catkit::ConstrainedSeq& u) {
    std::cout << "(" << u.str() << ")\n";
  });
  return kExitOk;
}

int cmd_biject(const std::optional<std::string>& dyck,
               const std::optional<std::string>& seq, int k) {
  if (dyck.has_value() == seq.has_value())
    throw catkit::domain_error("pass exactly one of --dyck or --seq");
  if (dyck) {
    const catkit::ConstrainedSeq v =
        catkit::dyck_to_seq(catkit::parse_path(*dyck), k);
    std::cout << "(" << v.str() << ")\n";
  } else {
    const catkit::Path p =
        catkit::seq_to_dyck(catkit::ConstrainedSeq::parse(*seq), k);
    std::cout << p.str() << '\n';
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::optional<int> max_n) {
  const std::vector<catkit::VerificationReport> reports =
      catkit::run_suites(suite, max_n);
  nlohmann::json doc = nlohmann::json::array();
  bool all_passed = true;
  for (const catkit::VerificationReport& report : reports) {
    doc.push_back(report.to_json());
    std::cerr << report.summary();
    all_passed = all_passed && report.passed();
  }
  std::cout << (reports.size() == 1 ? doc[0].dump(2) : doc.dump(2)) << '\n';
  return all_passed ? kExitOk : kExitVerificationFailure;
}

int cmd_oeis(const std::optional<std::string>& terms,
             const std::optional<std::string>& fetch, const std::string& source) {
  const catkit::OeisSource src = source == "fixtures" ? catkit::OeisSource::fixtures
                                 : source == "network"
                                     ? catkit::OeisSource::network
                                     : throw catkit::domain_error("unknown source '" +
                                                                  source + "'");
  if (terms.has_value() == fetch.has_value())
    throw catkit::domain_error("pass exactly one of --terms or --fetch");
  const auto terms_node = [](const catkit::IntSeq& seq) {
    nlohmann::json arr = nlohmann::json::array();
    for (const catkit::Natural& term : seq) arr.push_back(term.str());
    return arr;
  };
  catkit::OeisClient client;
  if (terms) {
    const catkit::IntSeq probe = catkit::parse_sequence(*terms);
    if (probe.empty()) throw catkit::domain_error("empty term list");
    const std::vector<catkit::OeisEntry> hits = client.search_by_terms(probe, src);
    nlohmann::json doc = nlohmann::json::array();
    for (const catkit::OeisEntry& entry : hits) {
      doc.push_back({{"a_number", entry.a_number},
                     {"name", entry.name},
                     {"terms", terms_node(entry.terms)}});
    }
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
  }
  const catkit::OeisEntry entry = client.fetch(*fetch, src);
  nlohmann::json doc = {{"a_number", entry.a_number},
                        {"name", entry.name},
                        {"terms", terms_node(entry.terms)}};
  std::cout << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Catalan transform toolkit"};
  app.require_subcommand(1);

  // transform
  std::string tr_input = "catalan";
  long long tr_n = 10;
  std::string tr_mode = "direct";
  std::string tr_format = "json";
  CLI::App* transform =
      app.add_subcommand("transform", "Apply the transform to a sequence prefix");
  transform->add_option("--input", tr_input, "catalan, shifted:<k>, or file:<path>");
  transform->add_option("--n", tr_n, "Largest index to produce")
      ->check(CLI::NonNegativeNumber);
  transform->add_option("--mode", tr_mode, "direct or reversed");
  transform->add_option("--format", tr_format, "json or csv");

  // enumerate
  std::string en_family;
  bool en_count_only = false;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "List or count a constrained family");
  enumerate->add_option("--family", en_family, "A:n, B:n:k, D:n:s, F:n:k, or R:m:bound")
      ->required();
  enumerate->add_flag("--count-only", en_count_only, "Print only the member count");

  // biject
  std::optional<std::string> bj_dyck;
  std::optional<std::string> bj_seq;
  int bj_k = 0;
  CLI::App* biject =
      app.add_subcommand("biject", "Map a path to its sequence or back");
  biject->add_option("--dyck", bj_dyck, "Path word over U/D to map forward");
  biject->add_option("--seq", bj_seq, "Comma separated sequence to map back");
  biject->add_option("--k", bj_k, "Forced leading upsteps")->check(CLI::NonNegativeNumber);

  // verify
  std::string vf_suite = "all";
  std::optional<int> vf_max_n;
  CLI::App* verify = app.add_subcommand("verify", "Run exhaustive certification suites");
  verify->add_option("--suite", vf_suite,
                     "theorem1, prop2, prop4, prop5, theorem5, theorem6, identities, "
                     "remark, or all");
  verify->add_option("--max-n", vf_max_n, "Override the suite's primary sweep cap")
      ->check(CLI::NonNegativeNumber);

  // oeis
  std::optional<std::string> oe_terms;
  std::optional<std::string> oe_fetch;
  std::string oe_source = "fixtures";
  CLI::App* oeis = app.add_subcommand("oeis", "Search or fetch catalogued sequences");
  oeis->add_option("--terms", oe_terms, "Comma separated terms to search for");
  oeis->add_option("--fetch", oe_fetch, "A-number to fetch");
  oeis->add_option("--source", oe_source, "fixtures or network");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (transform->parsed())
      return cmd_transform(tr_input, tr_n, tr_mode, tr_format);
    if (enumerate->parsed()) return cmd_enumerate(en_family, en_count_only);
    if (biject->parsed()) return cmd_biject(bj_dyck, bj_seq, bj_k);
    if (verify->parsed()) return cmd_verify(vf_suite, vf_max_n);
    if (oeis->parsed()) return cmd_oeis(oe_terms, oe_fetch, oe_source);
    std::cerr << "error: no subcommand\n";
    return kExitInputError;
  } catch (const catkit::network_error& e) {
    std::cerr << "network error: " << e.what() << '\n';
    return kExitNetworkError;
  } catch (const catkit::not_found_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const catkit::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const catkit::integrity_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerificationFailure;
  }
}
