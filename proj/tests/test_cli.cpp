#include "doctest.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "cssemi/cli.hpp"
#include "cssemi/workspace.hpp"

using namespace cssemi;

namespace {
  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string first_line(std::string const& s) {
    return s.substr(0, s.find('\n'));
  }

  std::string read(std::string const& path) {
    std::ifstream     in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string const data_dir = CSSEMI_DATA_DIR;
}  // namespace

TEST_CASE("parsing the S2 file") {
  auto ws = parse_workspace(read(data_dir + "/s2.ws"));
  REQUIRE(ws.groups.size() == 1);
  CHECK(ws.groups[0].first == "Z2");
  REQUIRE(ws.rms.size() == 1);
  CHECK(ws.rms[0].name == "S2");
  CHECK(ws.rms[0].semigroup.size() == 8);
}

TEST_CASE("parse errors") {
  std::string const bad = "semigroup T\n"
                          "elements p q\n"
                          "table\n"
                          "q p\n"
                          "p p\n"
                          "end\n";
  try {
    parse_workspace(bad);
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 1);
    // the violating triple is named
    CHECK(e.message().find("(") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_workspace("rms R\ngroup G\nI 1\nL 1\nmatrix\ne\nend\n"),
                  UnresolvedReference);
  CHECK_THROWS_AS(
      parse_workspace("group G\nelements e\ntable\ne\nend\n"
                      "group G\nelements e\ntable\ne\nend\n"),
      DuplicateName);
  try {
    parse_workspace("group G\nelements e a\ntable\ne a\na\nend\n");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 5);
  }
  CHECK_THROWS_AS(parse_workspace("group G\nelements e\ntable\ne\n"), ParseError);
  CHECK_THROWS_AS(parse_workspace("widget W\n"), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
  auto ws = parse_workspace("# header\n\ngroup G # trailing\nelements e\n"
                            "table\ne\nend\n");
  CHECK(ws.groups.size() == 1);
}

TEST_CASE("serialization round-trips") {
  auto ws = parse_workspace(builtin_corpus());
  CHECK(parse_workspace(serialize_workspace(ws)) == ws);
  CHECK(ws.find_rms("S4") != nullptr);
  CHECK(ws.find_graph("Matching2") != nullptr);
  auto s4 = parse_workspace(read(data_dir + "/s4.ws"));
  CHECK(parse_workspace(serialize_workspace(s4)) == s4);
}

TEST_CASE("documented commands") {
  auto h = run({"homogeneous", "S2", "--method", "brute"});
  CHECK(h.code == 0);
  CHECK(first_line(h.out) == "true");
  auto c = run({"classify", "S4"});
  CHECK(first_line(c.out) == "Homogeneous(case 4)");
  auto i = run({"isomorphic", "S2", "S3"});
  CHECK(i.code == 1);
  CHECK(first_line(i.out) == "false");
  auto f = run({"-f", data_dir + "/s3.ws", "classify", "S3"});
  CHECK(f.code == 0);
  CHECK(first_line(f.out) == "Homogeneous(case 3)");
}

TEST_CASE("errors exit with code 2") {
  CHECK(run({"classify", "Nothing"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"-f", data_dir + "/missing.ws", "classify", "S2"}).code == 2);
  CHECK(run({"classify", "Mono"}).code == 2);
}

TEST_CASE("json reports") {
  using nlohmann::json;
  struct Case {
    std::vector<std::string> args;
    std::vector<std::string> keys;
  };
  std::vector<Case> cases{
      {{"multiply", "S2", "1:e:2", "2:e:1"}, {"product"}},
      {{"normalize", "S2", "--row", "2", "--col", "2"}, {"semigroup", "u", "v"}},
      {{"egens", "S4"}, {"gp", "generated", "size"}},
      {{"green", "Mono"}, {"classes", "completely_simple", "regular"}},
      {{"coordinatize", "RB22"}, {"group", "semigroup", "iso"}},
      {{"automorphisms", "S2"}, {"count", "method"}},
      {{"isomorphic", "S2", "S2"}, {"isomorphic", "result"}},
      {{"homogeneous", "S2"}, {"homogeneous", "result"}},
      {{"homogeneous", "S2", "--method", "decompose"}, {"characteristic"}},
      {{"classify", "S3"}, {"verdict", "case", "reason", "normalization"}},
      {{"screen", "S4"}, {"pass", "violations"}},
      {{"graph", "S4"}, {"gamma_p", "gamma_s"}},
      {{"graph-classify", "Matching2"}, {"pattern"}},
      {{"age", "RB22", "--max", "4"}, {"members", "count", "hp"}},
      {{"jep", "RB22", "--max", "4"}, {"holds", "result"}},
      {{"ap", "RB22", "--max", "2"}, {"holds", "amalgams"}},
      {{"grow-generic", "--group", "Z2", "--sub", "e,a", "--level", "1"},
       {"semigroup", "gp", "seed_defects"}},
      {{"sweep", "--max-group", "2", "--max-index", "2"},
       {"instances", "disagreements"}},
  };
  for (auto& cs : cases) {
    cs.args.push_back("--json");
    CAPTURE(cs.args[0]);
    auto r = run(cs.args);
    CHECK(r.code != 2);
    auto j = json::parse(r.out);
    CHECK(j.at("schema_version") == "1");
    CHECK(j.at("command") == cs.args[0]);
    for (auto const& k : cs.keys) {
      CHECK(j.contains(k));
    }
    if (j.contains("result")) {
      CHECK(r.code == (j["result"].get<bool>() ? 0 : 1));
    }
  }
}

TEST_CASE("amalgamate from a file") {
  std::string const text = "group Z2\nelements e a\ntable\ne a\na e\nend\n"
                           "rms C\ngroup Z2\nI 1\nL 1\nmatrix\ne\nend\n"
                           "rms W1\ngroup Z2\nI 2\nL 1\nmatrix\ne e\nend\n"
                           "rms W2\ngroup Z2\nI 1\nL 2\nmatrix\ne\ne\nend\n";
  std::string const path = "cli_amalgam_test.ws";
  {
    std::ofstream out(path);
    out << text;
  }
  auto ok = run({"-f", path, "amalgamate", "C", "W1", "W2", "--json"});
  CHECK(ok.code == 0);
  auto j = nlohmann::json::parse(ok.out);
  CHECK(j.at("t").at("I").size() == 2);
  CHECK(j.at("t").at("L").size() == 2);
  // W1 with itself meets outside the core
  CHECK(run({"-f", path, "amalgamate", "C", "W1", "W1"}).code == 2);
  std::remove(path.c_str());
}
