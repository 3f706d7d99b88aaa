#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "doctest.h"
#include "monoid_ramsey/cli.hpp"
#include "monoid_ramsey/errors.hpp"
#include "monoid_ramsey/families.hpp"
#include "monoid_ramsey/io.hpp"

using namespace monoid_ramsey;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("monoid tables round-trip") {
  for (const FiniteMonoid& m : {make_cyclic(3), make_max(4), make_transformation(2)}) {
    std::istringstream in(format_monoid_table(m));
    const FiniteMonoid back = parse_monoid_table(in);
    CHECK(back.size() == m.size());
    CHECK(back.neutral() == m.neutral());
    CHECK(back.table() == m.table());
  }
}

TEST_CASE("malformed tables are rejected") {
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_monoid_table(in);
  };
  CHECK_NOTHROW(parse("monoid 2 0\n0 1\n1 0\n"));
  CHECK_THROWS_AS(parse("monoid 2 0\n0 1\n1 0\n7\n"), UsageError);
  CHECK_THROWS_AS(parse("monoid 2 0\n0 1\n1\n"), UsageError);
  CHECK_THROWS_AS(parse("group 2 0\n0 1\n1 0\n"), UsageError);
  CHECK_THROWS_AS(parse("monoid 2 0\n0 1\n1 2\n"), UsageError);
  CHECK_THROWS_AS(parse("monoid 3 0\n0 1 2\n1 2 1\n2 2 2\n"), UsageError);  // not associative
  CHECK_THROWS_AS(parse("monoid 5000 0\n"), UsageError);
}

TEST_CASE("words use labels") {
  const FiniteMonoid h3 = make_max(3);
  std::istringstream in("1 2 1\n3 1 2 1");
  const Word u = parse_word(h3, in);
  CHECK(u == Word{0, 1, 0, 2, 0, 1, 0});
  CHECK(format_word(h3, u) == "1213121");
  CHECK(parse_inline_word(h3, "1,2,1,3,1,2,1") == u);
  CHECK(parse_inline_word(h3, "").empty());
  CHECK_THROWS_AS(parse_inline_word(h3, "1,4"), UsageError);
  CHECK_THROWS_AS(parse_inline_word(h3, "1,,2"), UsageError);
  CHECK_THROWS_AS(parse_inline_word(h3, "0"), UsageError);

  const FiniteMonoid z2 = make_cyclic(2);
  CHECK(parse_inline_word(z2, "0,1") == Word{0, 1});
  CHECK(format_word(z2, Word{0, 1, 0}) == "010");

  const FiniteMonoid t2 = make_transformation(2);
  CHECK(format_word(t2, Word{8, 3}) == "83");
  const FiniteMonoid h12 = make_max(12);
  CHECK(format_word(h12, Word{11, 0}) == "12,1");
}

TEST_CASE("matrix files") {
  std::istringstream in("2\n10\n01\n\n3\n111\n000\n001\n");
  const std::vector<BoolMatrix> ms = parse_matrices(in);
  REQUIRE(ms.size() == 2);
  CHECK(ms[0] == BoolMatrix::identity(2));
  CHECK(format_matrix(ms[1]) == "3\n111\n000\n001\n");
  std::istringstream bad("2\n10\n012\n");
  CHECK_THROWS_AS(parse_matrices(bad), UsageError);
  std::istringstream short_rows("3\n111\n000\n");
  CHECK_THROWS_AS(parse_matrices(short_rows), UsageError);
}

TEST_CASE("monoid specs") {
  CHECK(parse_monoid_spec("max:3").kind == MonoidSpec::Kind::kMax);
  CHECK(parse_monoid_spec("boolmat:2").parameter == 2);
  CHECK(parse_monoid_spec("transformation:2").to_string() == "transformation:2");
  CHECK(build_monoid(parse_monoid_spec("cyclic:4")).size() == 4);
  CHECK_THROWS_AS(parse_monoid_spec("max"), UsageError);
  CHECK_THROWS_AS(parse_monoid_spec("max:x"), UsageError);
  CHECK_THROWS_AS(parse_monoid_spec("free:2"), UsageError);

  const std::string path = temp_file("monoid_ramsey_z2.txt", "monoid 2 0\n0 1\n1 0\n");
  CHECK(build_monoid(parse_monoid_spec("table:" + path)).is_group());
}

TEST_CASE("cli: regular D-length and witnesses") {
  const Run d = run({"dlength", "--monoid", "boolmat:2"});
  CHECK(d.code == kExitSuccess);
  CHECK(first_line(d.out) == "4");

  const Run w = run({"witness", "--monoid", "max:3", "--k", "2"});
  CHECK(w.code == kExitSuccess);
  CHECK(first_line(w.out) == "1213121");
  CHECK(first_line(run({"witness", "--monoid", "cyclic:2", "--k", "2"}).out) == "010");
}

TEST_CASE("cli: oracle") {
  const Run r = run({"oracle", "--monoid", "max:2", "--k", "2", "--max-len", "6"});
  CHECK(r.code == kExitSuccess);
  CHECK(first_line(r.out) == "4");
  CHECK(r.out.find("counterexample: ") != std::string::npos);

  const Run open = run({"oracle", "--monoid", "max:3", "--k", "2", "--max-len", "5"});
  CHECK(open.code == kExitSuccess);
  CHECK(first_line(open.out) == "> 5");

  const Run refused = run({"oracle", "--monoid", "boolmat:3", "--k", "2", "--max-len", "10"});
  CHECK(refused.code == kExitRefused);
  CHECK_FALSE(refused.err.empty());
}

TEST_CASE("cli: decompose") {
  const Run r = run({"decompose", "--monoid", "cyclic:2", "--word", "1,1,1,1", "--k", "2"});
  CHECK(r.code == kExitSuccess);
  CHECK(r.out.find("cuts: 0 2 4") != std::string::npos);

  const Run four = run({"--json", "decompose", "--monoid", "max:2", "--word", "1,1,1,1,1,1,1,1",
                        "--k", "2", "--alg", "4", "--n", "0"});
  CHECK(four.code == kExitSuccess);
  const json doc = json::parse(four.out);
  CHECK(doc["result"]["found"] == false);

  const std::string path = temp_file("monoid_ramsey_word.txt", "1 2\n1 2\n");
  const Run from_file =
      run({"decompose", "--monoid", "max:2", "--word", path, "--k", "2", "--alg", "2"});
  CHECK(from_file.code == kExitSuccess);
  CHECK(from_file.out.find("cuts: 0 2 4") != std::string::npos);

  const Run too_short =
      run({"decompose", "--monoid", "cyclic:2", "--word", "1,1,1", "--k", "2", "--alg", "1"});
  CHECK(too_short.code == kExitUsage);
}

TEST_CASE("cli: JSON documents") {
  const Run r = run({"--json", "bounds", "--monoid", "boolmat:3", "--k", "2"});
  REQUIRE(r.code == kExitSuccess);
  const json doc = json::parse(r.out);
  CHECK(doc["command"] == "bounds");
  CHECK(doc["input"]["monoid"] == "boolmat:3");
  CHECK(doc["input"]["k"] == 2);
  CHECK(doc["result"]["regular_d_length"] == 7);
  CHECK(doc["result"]["lower"] == "128");
  CHECK(doc.contains("timing_ms"));

  const json green = json::parse(run({"--json", "green", "max:3"}).out);
  CHECK(green["command"] == "green");
  const json witness = json::parse(run({"--json", "witness", "--monoid", "max:2", "--k", "2"}).out);
  CHECK(witness["result"].is_object());
}

TEST_CASE("cli: usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"dlength"}).code == kExitUsage);
  CHECK(run({"dlength", "--monoid", "max:0"}).code == kExitUsage);
  CHECK(run({"witness", "--monoid", "max:2", "--k", "0"}).code == kExitUsage);
  CHECK(run({"green", "table:/nonexistent/file"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitSuccess);
}

TEST_CASE("cli: Boolean matrices") {
  const std::string path = temp_file("monoid_ramsey_a.txt", "4\n1010\n0101\n1010\n0101\n");
  const Run a = run({"boolmat", "analyze", path});
  CHECK(a.code == kExitSuccess);
  CHECK(a.out.find("positive sets: {1,3} {2,4}") != std::string::npos);

  const json phi = json::parse(run({"--json", "boolmat", "phi", "--n", "4"}).out);
  CHECK(phi["command"] == "boolmat phi");

  const Run fuzz1 = run({"--seed", "11", "--threads", "2", "boolmat", "fuzz", "--n", "4",
                         "--trials", "300"});
  const Run fuzz2 = run({"--seed", "11", "--threads", "2", "boolmat", "fuzz", "--n", "4",
                         "--trials", "300"});
  CHECK(fuzz1.code == kExitSuccess);
  CHECK(fuzz1.out == fuzz2.out);
}
