#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <random>
#include <sstream>
#include <sys/wait.h>

#include "idealis/cli.hpp"
#include "idealis/error.hpp"
#include "oracles.hpp"

using namespace idealis;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
};

Outcome run_binary(const std::string& args, const std::string& env = "") {
  const std::string cmd = (env.empty() ? "" : "env " + env + " ") + std::string(IDEALIS_BIN) + " " + args + " 2>&1";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(IDEALIS_EXAMPLES) + "/" + name; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> table_rows(const std::string& text) {
  std::vector<std::string> out;
  for (const std::string& l : lines(text)) {
    if (!l.empty() && l[0] != '#' && l.rfind("n\t", 0) != 0) out.push_back(l);
  }
  return out;
}

}  // namespace

TEST(Parse, Examples) {
  const InputObject fig1 = parse_input(R"({"ring": 4, "ideal": [[2,0,3,1],[0,3,0,2]]})");
  EXPECT_EQ(std::get<MonomialIdeal>(fig1), MonomialIdeal(4, {{2, 0, 3, 1}, {0, 3, 0, 2}}));
  const InputObject c5 = parse_input(R"({"graph": 5, "edges": [[1,2],[2,3],[3,4],[4,5],[5,1]]})");
  EXPECT_EQ(std::get<Graph>(c5).edges().size(), 5u);
  EXPECT_THROW(parse_input(R"({"ring": 0, "ideal": []})"), ParseError);
  const InputObject s = parse_input(R"({"ring": 3, "ideal": ["x1^2*x3", "x2", "1"]})");
  EXPECT_TRUE(std::get<MonomialIdeal>(s).is_unit());
  EXPECT_EQ(parse_monomial("x1^2*x3", 3), (Monomial{2, 0, 1}));
  EXPECT_THROW(parse_monomial("x4", 3), InvalidArgument);
}

TEST(Parse, ErrorsCarryPositions) {
  try {
    parse_input("{\n  \"ring\": 3,\n  \"ideal\": [[1,0,0],\n            [0,1]]\n}\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 13u);
  }
  try {
    parse_input("{\"ring\": 2,\n \"ideal\": [[1,0],]\n}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_input(R"({"complex": 3, "facets": [[1,2],[1]]})"), ParseError);
  EXPECT_THROW(parse_input(R"({"graph": 3, "edges": [[1,1]]})"), ParseError);
  EXPECT_THROW(parse_input(R"({"ring": 2, "ideal": [[1,-1]]})"), ParseError);
  EXPECT_THROW(parse_input(R"({"ring": 2, "ideal": [], "extra": 1})"), ParseError);
}

TEST(Parse, RoundTrip) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 50; ++t) {
    const InputObject i = oracle::random_ideal(rng, 4, 5, 4);
    EXPECT_EQ(parse_input(emit(i)), i);
  }
  for (const Graph& g : oracle::connected_graphs(5)) {
    EXPECT_EQ(parse_input(emit(g)), InputObject(g));
    const InputObject h = Hypergraph::from_graph(g);
    EXPECT_EQ(parse_input(emit(h)), h);
  }
  for (const SimplicialComplex& c : oracle::complexes(4)) EXPECT_EQ(parse_input(emit(c)), InputObject(c));
  EXPECT_EQ(parse_input(emit(MonomialIdeal::zero(3))), InputObject(MonomialIdeal::zero(3)));
}

TEST(Cli, DepthOfFigureOne) {
  const Outcome r = run_binary("depth --input " + data("fig1.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(table_rows(r.out), (std::vector<std::string>{"1\t2\t3\tno\tx4;x1,x2;x1,x4;x2,x3;x3,x4"}));
}

TEST(Cli, StabClosureOfFinalExample) {
  const Outcome r = run_binary("stab --family closure --n-max 4 --input " + data("example3.json"));
  EXPECT_EQ(r.code, 0);
  std::vector<std::string> cm;
  for (const std::string& row : table_rows(r.out)) {
    std::istringstream in(row);
    std::string n, depth, dim, flag;
    in >> n >> depth >> dim >> flag;
    cm.push_back(flag);
  }
  EXPECT_EQ(cm, (std::vector<std::string>{"yes", "yes", "no", "no"}));
  EXPECT_NE(r.out.find("# limit_depth\t0"), std::string::npos);
}

TEST(Cli, AssOfFiveCycle) {
  const Outcome r = run_binary("ass --n-max 3 --input " + data("c5.json"));
  EXPECT_EQ(r.code, 0);
  const auto rows = table_rows(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1].find("x1,x2,x3,x4,x5"), std::string::npos);
  EXPECT_NE(rows[2].find("x1,x2,x3,x4,x5"), std::string::npos);
}

TEST(Cli, ByteIdenticalAcrossRunsAndThreads) {
  for (const char* args : {"stab --n-max 3 --input ", "closure --format json --input ", "verify-theorems --n-max 3 --input "}) {
    const std::string tail = std::string(args) + data("fig1.json");
    const Outcome a = run_binary(tail), b = run_binary(tail);
    const Outcome single = run_binary(tail, "IDEALIS_THREADS=1");
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, single.out);
  }
}

TEST(Cli, JsonIsParseable) {
  const Outcome r = run_binary("stab --format json --n-max 2 --input " + data("c5.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"observed_astab\""), std::string::npos);
  EXPECT_NE(r.out.find("\"bounds\""), std::string::npos);
}

TEST(Cli, VerifyTheoremsPasses) {
  for (const char* f : {"fig1.json", "fig2.json", "c5.json", "example3.json", "fig1_complex.json", "hyper.json"}) {
    const Outcome r = run_binary("verify-theorems --n-max 3 --input " + data(f));
    EXPECT_EQ(r.code, 0) << f << "\n" << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << r.out;
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_binary("--help").code, 0);
  EXPECT_EQ(run_binary("").code, 1);
  EXPECT_EQ(run_binary("frobnicate --input " + data("fig1.json")).code, 1);
  EXPECT_EQ(run_binary("depth --input " + data("fig1.json") + " --n-max 0").code, 1);
  EXPECT_EQ(run_binary("depth --input " + data("fig1.json") + " --char 4").code, 1);
  EXPECT_EQ(run_binary("symbolic --input " + data("fig1.json")).code, 1);

  const Outcome arity = run_binary("depth --input " + data("bad_arity.json"));
  EXPECT_EQ(arity.code, 2);
  EXPECT_NE(arity.out.find("line 4, column 13"), std::string::npos) << arity.out;
  EXPECT_EQ(run_binary("depth --input " + data("bad_ring.json")).code, 2);
  const Outcome syntax = run_binary("depth --input " + data("bad_syntax.json"));
  EXPECT_EQ(syntax.code, 2);
  EXPECT_NE(syntax.out.find("line 2"), std::string::npos) << syntax.out;
  EXPECT_EQ(run_binary("depth --input /nonexistent/file.json").code, 2);
}

TEST(Cli, RefusalExitCode) {
  JobSpec job;
  job.analysis = Analysis::depth;
  std::vector<Monomial> gens;
  std::vector<Exponent> e(40, 0);
  e[0] = 1;
  gens.emplace_back(e);
  const InputObject big = MonomialIdeal(40, gens);
  EXPECT_THROW(run(job, big), Refusal);
}
