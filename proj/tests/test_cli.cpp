#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include <catkit/catkit.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the installed CLI through the shell, capturing stdout only.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd =
      env_prefix + std::string(CATKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = ::fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.out.append(buffer.data(), got);
  const int status = ::pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string fixtures_env() {
  return std::string("CATKIT_FIXTURES='") + CATKIT_REPO_FIXTURES + "' ";
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("catkit_cli_" + std::to_string(::getpid()) + "_" +
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

TEST_CASE("cli transform") {
  const RunResult json = run_cli("transform --n 7");
  CHECK(json.exit_code == 0);
  CHECK(json.out == "[\"1\",\"1\",\"3\",\"11\",\"44\",\"185\",\"804\",\"3579\"]\n");

  const RunResult csv = run_cli("transform --n 7 --mode reversed --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out == "1,1,3,11,44,185,804,3579\n");

  // Shifted input agrees with the in-process computation.
  const catkit::IntSeq expected = catkit::catalan_transform(
      catkit::shifted_catalan(2, 7), catkit::TransformMode::direct);
  const RunResult shifted = run_cli("transform --input shifted:2 --n 6 --format csv");
  CHECK(shifted.exit_code == 0);
  CHECK(shifted.out == catkit::to_csv(expected) + "\n");

  CHECK(run_cli("transform --n 0").out == "[\"1\"]\n");

  CHECK(run_cli("transform --input shifted:x --n 3").exit_code == 2);
  CHECK(run_cli("transform --input nope --n 3").exit_code == 2);
  CHECK(run_cli("transform --n 3 --mode sideways").exit_code == 2);
  CHECK(run_cli("transform --n 3 --format yaml").exit_code == 2);
  CHECK(run_cli("transform --n -1").exit_code == 2);
}

TEST_CASE("cli transform file input") {
  const TempDir dir;
  const std::filesystem::path file = dir.path / "input.json";
  std::ofstream(file) << R"(["1","1","2","5"])" << '\n';

  const RunResult ok = run_cli("transform --input file:" + file.string() +
                               " --n 3 --format csv");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "1,1,3,11\n");

  CHECK(run_cli("transform --input file:" + file.string() + " --n 9").exit_code == 2);
  CHECK(run_cli("transform --input file:" + (dir.path / "absent.json").string() +
                " --n 2")
            .exit_code == 2);
}

TEST_CASE("cli enumerate") {
  const RunResult members = run_cli("enumerate --family B:3:0");
  CHECK(members.exit_code == 0);
  CHECK(members.out == "(1,1,1)\n(1,1,2)\n(1,1,3)\n(1,2,1)\n(1,2,3)\n");

  const RunResult count = run_cli("enumerate --family A:4 --count-only");
  CHECK(count.exit_code == 0);
  CHECK(count.out == "44\n");

  CHECK(run_cli("enumerate --family R:2:3 --count-only").out == "6\n");
  CHECK(run_cli("enumerate --family A:0").out == "()\n");

  CHECK(run_cli("enumerate --family Z:1").exit_code == 2);
  CHECK(run_cli("enumerate --family A:3:9").exit_code == 2);
  CHECK(run_cli("enumerate").exit_code == 2);
}

TEST_CASE("cli biject") {
  const RunResult forward = run_cli("biject --dyck UDUUDD --k 0");
  CHECK(forward.exit_code == 0);
  CHECK(forward.out == "(1,2,1)\n");

  const RunResult back = run_cli("biject --seq 1,2,1 --k 0");
  CHECK(back.exit_code == 0);
  CHECK(back.out == "UDUUDD\n");

  CHECK(run_cli("biject --dyck UUUDDD --k 1").out == "(1,1)\n");

  CHECK(run_cli("biject --dyck UD --seq 1 --k 0").exit_code == 2);
  CHECK(run_cli("biject --k 0").exit_code == 2);
  CHECK(run_cli("biject --dyck UDX --k 0").exit_code == 2);
  CHECK(run_cli("biject --dyck UDU --k 0").exit_code == 2);
  CHECK(run_cli("biject --seq 2,1 --k 0").exit_code == 2);
}

TEST_CASE("cli verify") {
  const RunResult single = run_cli("verify --suite theorem1 --max-n 4");
  CHECK(single.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(single.out);
  CHECK(doc.is_object());
  CHECK(doc["suite"] == "theorem1");
  CHECK(doc["overall"] == "pass");

  const RunResult all = run_cli("verify --suite all --max-n 4");
  CHECK(all.exit_code == 0);
  const nlohmann::json all_doc = nlohmann::json::parse(all.out);
  REQUIRE(all_doc.is_array());
  CHECK(all_doc.size() == 8);

  CHECK(run_cli("verify --suite bogus").exit_code == 2);
}

TEST_CASE("cli oeis") {
  const RunResult fetched = run_cli("oeis --fetch A000108", fixtures_env());
  CHECK(fetched.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(fetched.out);
  CHECK(doc["a_number"] == "A000108");
  CHECK(doc["terms"][4] == "14");

  const RunResult searched = run_cli("oeis --terms 1,2,6,21,80", fixtures_env());
  CHECK(searched.exit_code == 0);
  const nlohmann::json hits = nlohmann::json::parse(searched.out);
  REQUIRE(hits.is_array());
  REQUIRE(hits.size() == 1);
  CHECK(hits[0]["a_number"] == "A121988");

  CHECK(run_cli("oeis --fetch A999999", fixtures_env()).exit_code == 2);
  CHECK(run_cli("oeis --fetch nonsense", fixtures_env()).exit_code == 2);
  CHECK(run_cli("oeis --terms 1 --fetch A000108", fixtures_env()).exit_code == 2);
  CHECK(run_cli("oeis", fixtures_env()).exit_code == 2);
  CHECK(run_cli("oeis --terms 1,2 --source sideways", fixtures_env()).exit_code == 2);

  // Dead endpoint: networking failures are distinct from input errors.
  const RunResult dead = run_cli("oeis --fetch A000108 --source network",
                                 "OEIS_BASE_URL='http://127.0.0.1:1' ");
  CHECK(dead.exit_code == 3);
}

TEST_CASE("cli top level") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("transform --help").exit_code == 0);
}
