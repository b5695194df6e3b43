#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "diagram_forge/cli.hpp"

using namespace diagram_forge;

namespace {

  struct Result {
    int code;
    std::string out;
    std::string err;
  };

  Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(std::move(args), out, err);
    return {code, out.str(), err.str()};
  }

  std::string spec(std::string const& name) {
    return std::string(DF_SPECS) + "/" + name;
  }

  std::string golden(std::string const& name) {
    std::ifstream in(std::string(DF_GOLDEN) + "/" + name, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

}  // namespace

TEST(Cli, CheckInverseSpec) {
  auto r = run_cli({"check", spec("E.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "inverse: ok, degrees ok\n");
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, CheckDegreeRaisingArrow) {
  auto r = run_cli({"check", spec("bad_degree.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("[degree] f"), std::string::npos);
}

TEST(Cli, CheckReedySpecs) {
  EXPECT_EQ(run_cli({"check", spec("reedy_small.json")}).code, 0);
  EXPECT_EQ(run_cli({"check", "builtin:delta:3"}).code, 0);
  auto bad = run_cli({"check", spec("reedy_swapped.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("[factorization] i∘s"), std::string::npos);
}

TEST(Cli, InputErrorsExitTwo) {
  for (auto const& args : std::vector<std::vector<std::string>>{
           {"check", "/nonexistent.json"},
           {"check", spec("cycle.json")},
           {"check", "builtin:unknown"},
           {"frobnicate"},
           {},
           {"emit"},
           {"emit", "--semisimplicial", "2", "--simplicial", "2"},
           {"emit", "builtin:E", "--format", "lean"},
           {"dcat"},
           {"dcat", "--general", "builtin:E"},
           {"strictify", spec("bad_degree.json")},
           {"nerve", "builtin:E", "--coslice", "nowhere"},
       }) {
    auto r = run_cli(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "<none>" : args[0]);
    EXPECT_TRUE(r.out.empty());
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(Cli, CheckWithWordBound) {
  EXPECT_EQ(run_cli({"--max-word-length", "1", "check", spec("E.json")}).code, 2);
  EXPECT_EQ(run_cli({"--max-word-length", "4", "check", spec("E.json")}).code, 0);
}

TEST(Cli, VersionAndHelp) {
  auto v = run_cli({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "diagram-forge 0.1.0\n");
  auto h = run_cli({"--help"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("strictify"), std::string::npos);
}

TEST(Cli, Nerve) {
  auto r = run_cli({"nerve", "builtin:E"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("chains: 9\n"), std::string::npos);
  EXPECT_NE(r.out.find("  [2] (w,v)\n"), std::string::npos);
  auto t = run_cli({"nerve", "builtin:E", "--identities", "1"});
  EXPECT_NE(t.out.find("chains: 10\n"), std::string::npos);
  auto d = run_cli({"nerve", "builtin:E", "--dot", "--label-edges"});
  EXPECT_EQ(d.out.rfind("digraph \"nerve\" {", 0), 0u);
  auto k = run_cli({"nerve", "builtin:E", "--coslice", "z"});
  EXPECT_NE(k.out.find("coslice under z: 2 objects"), std::string::npos);
  auto kd = run_cli({"nerve", "builtin:E", "--coslice", "z", "--dot"});
  EXPECT_EQ(kd.out.rfind("digraph \"coslice\" {", 0), 0u);
}

TEST(Cli, EmitFormats) {
  EXPECT_EQ(run_cli({"emit", "builtin:E"}).out, golden("reedy_E.txt"));
  EXPECT_EQ(run_cli({"emit", spec("E.json"), "--kind", "weak", "--format", "text"}).out, golden("weak_E.txt"));
  EXPECT_EQ(run_cli({"emit", "--semisimplicial", "2", "--format", "text"}).out, golden("semisimplicial_2.txt"));
  EXPECT_EQ(run_cli({"emit", "--simplicial", "2", "--format", "agda", "--module", "Simplicial2"}).out,
            golden("simplicial_2.agda"));
  EXPECT_EQ(run_cli({"emit", "--general", "2", "--level-names", "h"}).out, golden("general_terminal_2.txt"));
  EXPECT_EQ(run_cli({"emit", "builtin:E", "--kind", "strict"}).out, golden("strict_E.txt"));
  auto j = run_cli({"emit", "builtin:E", "--format", "json"});
  EXPECT_EQ(parse_schema_json(j.out).size(), 3u);
  auto sj = run_cli({"emit", "builtin:E", "--kind", "strict", "--format", "json"});
  auto doc = nlohmann::json::parse(sj.out);
  EXPECT_EQ(doc.at("fibers").size(), 3u);
}

TEST(Cli, EmitToFile) {
  std::string path = ::testing::TempDir() + "df_emit_out.txt";
  auto r = run_cli({"emit", "builtin:E", "-o", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), golden("reedy_E.txt"));
  std::remove(path.c_str());
}

TEST(Cli, Strictify) {
  auto r = run_cli({"strictify", "builtin:E"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("-- z: 5 new, 4 matching"), std::string::npos);
  EXPECT_NE(r.out.find("M^A_z :≡ (x : X), (y : Y), (δ_u : u(y) = x), (δ_v : v(y) = x)"), std::string::npos);
  auto a = run_cli({"strictify", "builtin:E", "--format", "agda", "--module", "StrictE"});
  EXPECT_EQ(a.out.rfind("module StrictE where", 0), 0u);
}

TEST(Cli, Dcat) {
  auto r = run_cli({"dcat", "--level", "2", "--check"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("objects: 7\n"), std::string::npos);
  EXPECT_NE(r.out.find("(1,2)  degree 3"), std::string::npos);
  EXPECT_NE(r.out.find("dcat: ok"), std::string::npos);
  auto g = run_cli({"dcat", "--general", "builtin:delta:2", "--check"});
  EXPECT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("morphisms: 35"), std::string::npos);
  auto o = run_cli({"dcat", "--general", "builtin:delta:1", "--opfibration"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.out.find("dcat: 6 violation(s)"), std::string::npos);
  auto d = run_cli({"dcat", "--level", "1", "--dot"});
  EXPECT_EQ(d.out.rfind("digraph \"dcat\" {", 0), 0u);
}

TEST(Cli, Deterministic) {
  auto a = run_cli({"emit", "--simplicial", "3", "--format", "json"});
  auto b = run_cli({"emit", "--simplicial", "3", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
}
