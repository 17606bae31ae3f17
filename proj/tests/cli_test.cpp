#include <doctest.h>

#include <fstream>
#include <sstream>

#include "trefoil/cli.hpp"
#include "trefoil/continued_fraction.hpp"
#include "trefoil/error.hpp"
#include "trefoil/long_knot.hpp"
#include "trefoil/word.hpp"

using namespace trefoil;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string line(const std::string& s) { return s + "\n"; }

}  // namespace

TEST_CASE("fraction commands") {
  CHECK(run({"op", "0/1", "1/0"}).out == line("1/1"));
  CHECK(run({"op", "-1/1", "1/0"}).out == line("0/1"));
  CHECK(run({"op", "--inverse", "1/1", "1/0"}).out == line("0/1"));
  CHECK(run({"pow", "1/3", "1/0", "2"}).out == line("7/3"));
  CHECK(run({"pow", "1/3", "0/1", "-2"}).out == line("1/5"));
  CHECK(run({"matrix", "0/1"}).out == line("[[1,0],[-1,1]]"));
  CHECK(run({"--json", "op", "0/1", "1/0"}).out == line(to_json(parse_frac("1/1")).dump()));
  CHECK(run({"--json", "matrix", "2/3"}).out == line(to_json(transvection_matrix(parse_frac("2/3"))).dump()));
}

TEST_CASE("word commands") {
  CHECK(run({"normalize", "aba"}).out == line("b"));
  CHECK(run({"normalize", "abA"}).out == line("bAA"));
  CHECK(run({"word2frac", "bAAAbb"}).out == line("7/3"));
  CHECK(run({"frac2word", "7/3"}).out == line("bAAAbb"));
  CHECK(run({"frac2word", "1/0"}).out == line("b"));
  QWord w = parse_word("abAB");
  CHECK(run({"--json", "normalize", "abAB"}).out == line(word_report_json("abAB", normalize(w), word_to_frac(w)).dump()));
  Result traced = run({"normalize", "--trace", "abA"});
  CHECK(traced.code == 0);
  CHECK(traced.out.find("fixup") != std::string::npos);
  CHECK(traced.out.substr(traced.out.size() - 4) == "bAA\n");
}

TEST_CASE("continued fraction commands") {
  CHECK(run({"cf", "expand", "7/3"}).out == line("[2;3]"));
  CHECK(run({"cf", "eval", "[-1;2]"}).out == line("-1/2"));
  CHECK(run({"--json", "cf", "expand", "-7/3"}).out == line(to_json(cf_expand(parse_frac("-7/3"))).dump()));
  Result infinite = run({"cf", "expand", "1/0"});
  CHECK(infinite.code == 2);
  CHECK(infinite.out.empty());
  CHECK(infinite.err.find("error") == 0);
  CHECK(run({"cf", "eval", "[2;1]"}).code == 2);
  CHECK(run({"cf", "eval", "[2;"}).code == 1);
}

TEST_CASE("axioms command") {
  Result r = run({"axioms", "dihedral:7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("quandle: yes") != std::string::npos);
  CHECK(run({"axioms", "alexander:3:t+1"}).out.find("quandle: yes") != std::string::npos);
  CHECK(run({"axioms", "conj:symmetric:3"}).out.find("quandle: yes") != std::string::npos);
  CHECK(run({"axioms", "core:quaternion"}).out.find("quandle: yes") != std::string::npos);
  CHECK(run({"axioms", "aut:dihedral:4:inner=3"}).out.find("quandle: yes") != std::string::npos);
  CHECK(run({"axioms", "aut:cyclic:5:0,2,4,1,3"}).out.find("quandle: yes") != std::string::npos);
  CHECK(run({"axioms", "symplectic:5:0,1;-1,0"}).out.find("quandle: yes") != std::string::npos);
  Result z2 = run({"--json", "axioms", "symplectic:2:1"});
  auto j = nlohmann::json::parse(z2.out);
  CHECK(j["rack"] == false);
  CHECK(j["quandle"] == false);
  CHECK(j["size"] == 2);
  CHECK(run({"axioms", "alexander:4:t^2+2t"}).code == 2);
  CHECK(run({"axioms", "aut:cyclic:3:1,2,0"}).code == 2);
  CHECK(run({"axioms", "bogus:3"}).code == 1);
  CHECK(run({"axioms", "dihedral:x"}).code == 1);

  const std::string path = "cli_test_table.json";
  std::ofstream(path) << R"({"size": 2, "table": [[0, 0], [1, 1]]})";
  CHECK(run({"axioms", "file:" + path}).out.find("quandle: yes") != std::string::npos);
  std::remove(path.c_str());
  CHECK(run({"axioms", "file:/nonexistent/table.json"}).code == 1);
}

TEST_CASE("orbit command") {
  CHECK(run({"orbit", "1/1", "--bound", "1"}).out == line("1/1: reached at depth 1 by ab"));
  CHECK(run({"orbit", "11/2", "--bound", "5"}).out == line("11/2: not reached within bound 5"));
  Result dot = run({"orbit", "7/3", "--bound", "3", "--dot"});
  CHECK(dot.out.rfind("digraph", 0) == 0);
  auto j = nlohmann::json::parse(run({"--json", "orbit", "0/1", "7/3", "--bound", "10"}).out);
  CHECK(j[0]["depth"] == 0);
  CHECK(j[1]["reached"] == true);
  CHECK(word_to_frac(parse_word(j[1]["witness"].get<std::string>())) == parse_frac("7/3"));
  CHECK(run({"orbit", "1/1", "--bound", "0"}).code == 2);
  CHECK(run({"orbit", "1/1"}).code == 1);
}

TEST_CASE("long knot commands") {
  Result op = run({"long", "op", "1", "1"});
  CHECK(op.out == "g_prime: 1\nx: a\neps: 1\n");
  CoveredElement p = qt_new(BraidElement(parse_braid_word("aB"))), q = qt_new(BraidElement(parse_braid_word("bA")));
  CHECK(run({"--json", "long", "op", "aB", "bA"}).out == line(to_json(qt_op(p, q)).dump()));
  CHECK(run({"--json", "long", "op", "--inverse", "aB", "bA"}).out == line(to_json(qt_op_inv(p, q)).dump()));
  CHECK(run({"--json", "long", "act", "aB", "b"}).out ==
        line(to_json(pi1_act(p, BraidElement(parse_braid_word("b")))).dump()));
  CHECK(run({"long", "fiber", "aB", "AAAAbaabaB"}).out == line("1"));
  CHECK(run({"--json", "long", "lambda", "-2", ""}).out == line(to_json(lambda_act(-2, qt_new(BraidElement()))).dump()));
  CHECK(run({"long", "op", "a", "1"}).code == 2);
  CHECK(run({"long", "fiber", "1", "aB"}).code == 2);
  CHECK(run({"long", "op", "ax", "1"}).code == 1);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"op", "1/2"}).code == 1);
  CHECK(run({"op", "1/2", "0/0"}).code == 1);
  CHECK(run({"normalize", "Ab"}).code == 1);
  CHECK(run({"pow", "1/2", "1/3", "two"}).code == 1);
  Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("normalize") != std::string::npos);
}

TEST_CASE("selftest subset") {
  Result r = run({"selftest", "--only", "1,4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS   1") == 0);
  CHECK(r.out.find("2/2 criteria passed") != std::string::npos);
  CHECK(run({"selftest", "--only", "10"}).code == cli::kExitSelftestFailed);
  CHECK(run({"selftest", "--only", "11"}).code == 1);
}
