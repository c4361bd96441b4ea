#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <string>

#include <catkit/exactnum.hpp>
#include <catkit/seq_io.hpp>

namespace {

using catkit::IntSeq;
using catkit::Natural;

IntSeq nats(std::initializer_list<unsigned long long> values) {
  IntSeq out;
  for (auto v : values) out.push_back(Natural(v));
  return out;
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("catkit_io_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

}  // namespace

TEST_CASE("to_json and to_csv formatting") {
  CHECK(catkit::to_json(nats({1, 2, 30})) == R"(["1","2","30"])");
  CHECK(catkit::to_json(IntSeq{}) == "[]");
  CHECK(catkit::to_csv(nats({1, 2, 30})) == "1,2,30");
  CHECK(catkit::to_csv(IntSeq{}).empty());
  CHECK(catkit::to_csv(nats({7})) == "7");
}

TEST_CASE("parse_sequence accepts both formats") {
  CHECK(catkit::parse_sequence(R"(["1","2","30"])") == nats({1, 2, 30}));
  CHECK(catkit::parse_sequence("[1,2,30]") == nats({1, 2, 30}));
  CHECK(catkit::parse_sequence(R"([1,"2",30])") == nats({1, 2, 30}));
  CHECK(catkit::parse_sequence("1,2,30") == nats({1, 2, 30}));
  CHECK(catkit::parse_sequence(" 1 , 2 ,30 ") == nats({1, 2, 30}));
  CHECK(catkit::parse_sequence("0") == nats({0}));
  CHECK(catkit::parse_sequence("").empty());
  CHECK(catkit::parse_sequence("   \n").empty());
  CHECK(catkit::parse_sequence("[]").empty());
  CHECK(catkit::parse_sequence(" [\"5\"] \n") == nats({5}));
}

TEST_CASE("parse_sequence rejects malformed input") {
  CHECK_THROWS_AS(catkit::parse_sequence("[1.5]"), catkit::parse_error);
  CHECK_THROWS_AS(catkit::parse_sequence("[-3]"), catkit::parse_error);
  CHECK_THROWS_AS(catkit::parse_sequence(R"(["12x"])"), catkit::parse_error);
  CHECK_THROWS_AS(catkit::parse_sequence("[{}]"), catkit::parse_error);
  CHECK_THROWS_AS(catkit::parse_sequence("[1,2"), catkit::parse_error);
  CHECK_THROWS_AS(catkit::parse_sequence(R"({"a":1})"), catkit::parse_error);
  CHECK_THROWS_AS(catkit::parse_sequence("1,,2"), catkit::parse_error);
  CHECK_THROWS_AS(catkit::parse_sequence("1,2,"), catkit::parse_error);
  CHECK_THROWS_AS(catkit::parse_sequence("1;2"), catkit::parse_error);
}

TEST_CASE("round trip through both serializations") {
  IntSeq seq;
  for (long long n = 0; n <= 40; n += 8) seq.push_back(catkit::catalan(n));
  CHECK(catkit::parse_sequence(catkit::to_json(seq)) == seq);
  CHECK(catkit::parse_sequence(catkit::to_csv(seq)) == seq);
}

TEST_CASE("load_sequence reads files and reports missing ones") {
  const TempDir dir;
  const std::filesystem::path json_file = dir.path / "terms.json";
  std::ofstream(json_file) << R"(["1","1","2","5"])" << '\n';
  CHECK(catkit::load_sequence(json_file) == nats({1, 1, 2, 5}));

  const std::filesystem::path csv_file = dir.path / "terms.csv";
  std::ofstream(csv_file) << "3,1,4\n";
  CHECK(catkit::load_sequence(csv_file) == nats({3, 1, 4}));

  CHECK_THROWS_AS(catkit::load_sequence(dir.path / "absent.json"), catkit::domain_error);
}
