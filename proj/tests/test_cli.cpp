#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "brisk/cli.hpp"
#include "support.hpp"

using namespace brisk;
using namespace brisk::testing;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "brisk_cli_test";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("presentation files parse and round trip") {
  for (const char* name : {"c1", "c2", "c3", "c4", "x6", "ns", "l3", "r113", "p97", "anticomm"}) {
    CAPTURE(name);
    auto p = load_presentation(fixture_path(name));
    CHECK(parse_presentation(to_text(p)) == p);
  }
  auto c1 = load_presentation(fixture_path("c1"));
  CHECK(c1.name == "C1");
  CHECK(c1.commutative);
  CHECK(c1.generators == std::vector<std::string>{"x", "y", "z"});
  CHECK(c1.relations.size() == 4);
  auto ns = load_presentation(fixture_path("ns"));
  CHECK(ns.mode == PresentationFile::Mode::table);
  CHECK(ns.basis.size() == 3);
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse_presentation("algebra A\ncolour red\n");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);
  }
  try {
    parse_presentation("algebra A\ngenerators x, y\nrelations\nxy, yxy\n");
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 5);
  }
}

TEST_CASE("radical square too large is an input error") {
  auto path = temp_file("free", "algebra Free\ngenerators x, y, z\nrelations\n");
  auto r = cli({"layout", path, "--side", "left", "--format", "text"});
  CHECK(r.code == kExitInput);
  CHECK(has(r.err, "J² dimension 9"));
}

TEST_CASE("JSON reports") {
  auto r = cli({"analyze", fixture_path("c3"), "--format", "json"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "brisk-report/1");
  CHECK(j["bristle_type"]["left"] == 3);
  CHECK(j["bristle_type"]["right"] == 3);
  CHECK(nlohmann::json::parse(j.dump(2)) == j);
  auto n = cli({"analyze", fixture_path("ns"), "--format", "json"});
  REQUIRE(n.code == kExitOk);
  CHECK(nlohmann::json::parse(n.out)["is_short"] == false);
  auto c4 = nlohmann::json::parse(cli({"analyze", fixture_path("c4"), "--format", "json"}).out);
  CHECK(c4["bristle_type"]["left"] == "infinite");
}

TEST_CASE("output is deterministic") {
  for (const char* name : {"x6", "c2"}) {
    auto a = cli({"analyze", fixture_path(name), "--format", "json"});
    auto b = cli({"analyze", fixture_path(name), "--format", "json"});
    CHECK(a.out == b.out);
    auto s = cli({"layout", fixture_path(name), "--side", "right", "--format", "svg"});
    auto t = cli({"layout", fixture_path(name), "--side", "right", "--format", "svg"});
    CHECK(s.out == t.out);
  }
}

TEST_CASE("SVG layouts") {
  auto one = cli({"layout", fixture_path("c1"), "--side", "left", "--format", "svg"});
  REQUIRE(one.code == kExitOk);
  CHECK(has(one.out, "<svg"));
  CHECK(count(one.out, "<rect") == 1);
  CHECK(has(one.out, "⟨z⟩"));
  auto three = cli({"layout", fixture_path("c3"), "--side", "left", "--format", "svg"});
  REQUIRE(three.code == kExitOk);
  CHECK(count(three.out, "<rect") == 3);
  for (const char* label : {"⟨x⟩", "⟨y⟩", "⟨z⟩"}) CHECK(has(three.out, label));
}

TEST_CASE("exit codes") {
  CHECK(cli({"layout", fixture_path("l3"), "--side", "left"}).code == kExitNotSpecial);
  CHECK(cli({"validate", fixture_path("no_such_file")}).code == kExitInput);
  CHECK(cli({"validate", fixture_path("c1"), "--bogus"}).code == kExitInput);
  CHECK(cli({"oracle", fixture_path("c1"), "--prime", "13"}).code == kExitInput);
  CHECK(cli({"validate", fixture_path("c1")}).code == kExitOk);
}

TEST_CASE("workflow subcommands") {
  auto corpus = cli({"corpus", "run", "--dir", fixture_dir()});
  CHECK(corpus.code == kExitOk);
  CHECK(has(corpus.out, "0 invariant violations"));
  CHECK(has(corpus.out, "special, bristle type 3/3"));
  auto list = cli({"corpus", "list", "--dir", fixture_dir()});
  CHECK(has(list.out, "x6"));
  auto refl = cli({"find-reflexive", fixture_path("c3")});
  CHECK(refl.code == kExitOk);
  CHECK(has(refl.out, "reflexive: true"));
  auto oracle = cli({"oracle", fixture_path("c1"), "--prime", "7"});
  CHECK(oracle.code == kExitOk);
  CHECK(has(oracle.out, "57 points, 0 disagreements"));
  auto gp = cli({"check-gp", fixture_path("c3"), "--atom", "1,1,1"});
  CHECK(has(gp.out, "GP certified: true"));
  auto q = cli({"quiver", fixture_path("c2"), "--side", "left"});
  CHECK(q.code == kExitOk);
  CHECK_FALSE(q.out.empty());
}
