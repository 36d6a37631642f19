#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "corpus.hpp"
#include "fcover_tools/commands.hpp"
#include "fcover_tools/formats.hpp"

namespace fcover {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

std::string data(const std::string& name) {
  return std::string(FCOVER_TEST_DATA) + "/" + name;
}

struct Run {
  int code;
  std::string out, err;
  Json report() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "fcover");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_path(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "fcover_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Same tables once elements are matched through witness words.
void expect_isomorphic(const PGeneratedMonoid& a, const PGeneratedMonoid& b) {
  ASSERT_EQ(a.size(), b.size());
  ASSERT_EQ(a.alphabet(), b.alphabet());
  std::vector<Element> to_b(a.size());
  for (Element x = 0; x < a.size(); ++x) to_b[x] = eval_word(b, a.witness(x));
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      ASSERT_EQ(to_b[a.monoid()->mul(x, y)], b.monoid()->mul(to_b[x], to_b[y]));
    }
    ASSERT_EQ(to_b[a.monoid()->inv(x)], b.monoid()->inv(to_b[x]));
  }
  for (Letter p = 0; p < a.alphabet().size(); ++p) {
    ASSERT_EQ(to_b[a.gen(p)], b.gen(p));
  }
}

TEST(Formats, ParsesConcreteSpecs) {
  const auto m = io::parse_monoid(slurp(data("i2.txt")));
  EXPECT_EQ(m.size(), 7u);
  EXPECT_EQ(m.alphabet().size(), 2u);
  EXPECT_EQ(io::parse_monoid(slurp(data("trivial.txt"))).size(), 1u);
  EXPECT_EQ(io::parse_monoid(slurp(data("semilattice.txt"))).size(), 2u);
}

TEST(Formats, ParseErrorsNameTheLine) {
  try {
    io::parse_monoid(slurp(data("bad_gen.txt")));
    FAIL() << "expected a parse error";
  } catch (const io::ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(io::parse_monoid("carrier 2\n"), io::ParseError);
  EXPECT_THROW(io::parse_monoid("format=1\ncarrier 2\ngen a: 0->1\n"),
               io::ParseError);
  EXPECT_THROW(io::parse_monoid("format=1\ncarrier 2\nbogus\n"), io::ParseError);
}

TEST(Formats, AbstractTables) {
  const std::string text =
      "format=1\n"
      "table 2\n"
      "mul 0: 0 1\n"
      "mul 1: 1 1\n"
      "gen e = 1\n"
      "inv e e\n";
  const auto m = io::parse_monoid(text);
  EXPECT_EQ(m.size(), 2u);
  EXPECT_TRUE(m.monoid()->is_idempotent(m.gen(0)));
}

TEST(Formats, MonoidRoundTripOnCorpus) {
  for (const auto& [name, m] : testing::full_corpus()) {
    SCOPED_TRACE(name);
    const std::string text = io::dump_monoid(m);
    const auto back = io::parse_monoid(text);
    expect_isomorphic(m, back);
    EXPECT_EQ(io::dump_monoid(back), text);
  }
}

TEST(Formats, GraphAndGroupoidRoundTrip) {
  const auto file = io::parse_groupoid(slurp(data("z2z3.groupoid")));
  EXPECT_EQ(file.groupoid.size(), 6u);
  const auto text = io::dump_groupoid(file.groupoid);
  const auto back = io::parse_groupoid(text);
  EXPECT_EQ(back.groupoid.size(), 6u);
  EXPECT_EQ(io::dump_groupoid(back.groupoid), text);

  const auto g = io::parse_graph(slurp(data("one_loop.graph")));
  EXPECT_EQ(g.graph.num_edges(), 2u);
  EXPECT_EQ(io::parse_graph(io::dump_graph(g.graph)).graph.einv(0), 1u);
}

TEST(Formats, Fnv1a) {
  EXPECT_EQ(io::fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(io::fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(Budget, Parsing) {
  const auto b = cli::parse_budget("max_group_order=6,max_candidates=10,time_ms=50");
  EXPECT_EQ(b.max_group_order, 6u);
  EXPECT_EQ(b.max_candidates, 10u);
  ASSERT_TRUE(b.time_cap.has_value());
  EXPECT_EQ(b.time_cap->count(), 50);
  EXPECT_EQ(cli::parse_budget("").max_candidates, SearchBudget{}.max_candidates);
  EXPECT_THROW(cli::parse_budget("speed=3"), Error);
  EXPECT_THROW(cli::parse_budget("max_candidates=x"), Error);
  EXPECT_THROW(cli::parse_budget("max_candidates"), Error);
}

TEST(Budget, EnvironmentVariable) {
  ::setenv("FCOVER_BUDGET", "max_candidates=0", 1);
  const auto r = run({"cover", data("i2.txt"), "--mode", "f-inverse"});
  ::unsetenv("FCOVER_BUDGET");
  EXPECT_EQ(r.code, cli::kSearchExhausted);
  ::setenv("FCOVER_BUDGET", "nonsense", 1);
  EXPECT_EQ(run({"cover", data("i2.txt")}).code, cli::kUsageError);
  ::unsetenv("FCOVER_BUDGET");
}

TEST(Check, ExitCodes) {
  EXPECT_EQ(run({"check", "--e-unitary", data("z3.txt")}).code, cli::kOk);
  const auto r = run({"check", "--f-inverse", data("i2.txt")});
  EXPECT_EQ(r.code, cli::kPredicateFalse);
  EXPECT_EQ(r.report()["result"], "false");
  EXPECT_TRUE(r.report().contains("witnesses"));

  const auto bad = run({"check", "--e-unitary", data("bad_gen.txt")});
  EXPECT_EQ(bad.code, cli::kUsageError);
  EXPECT_EQ(bad.report()["error"]["line"], 3);
  EXPECT_NE(bad.err.find("line 3"), std::string::npos);

  EXPECT_EQ(run({"check", data("z3.txt")}).code, cli::kUsageError);
  EXPECT_EQ(run({"check", "--e-unitary", data("missing.txt")}).code,
            cli::kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsageError);
}

TEST(Cover, EUnitaryAndFInverse) {
  const auto e = run({"cover", "--mode", "e-unitary", data("i2.txt")});
  EXPECT_EQ(e.code, cli::kOk);
  EXPECT_EQ(e.report()["flags"]["e_unitary"], true);

  const auto f = run({"cover", "--mode", "f-inverse", data("semilattice.txt")});
  EXPECT_EQ(f.code, cli::kOk);
  const auto j = f.report();
  EXPECT_EQ(j["flags"]["f_inverse"], true);
  EXPECT_EQ(j["flags"]["idempotent_separating"], true);
  EXPECT_EQ(j["flags"]["surjective"], true);
  for (const auto& lemma : j["lemmas"]) EXPECT_EQ(lemma["failures"], 0);

  EXPECT_EQ(run({"cover", "--mode", "f-inverse", "--budget", "0", data("i2.txt")})
                .code,
            cli::kSearchExhausted);
  EXPECT_EQ(run({"cover", "--mode", "sideways", data("i2.txt")}).code,
            cli::kUsageError);
}

TEST(Cover, EmittedDumpChecksOut) {
  const auto path = temp_path("i2.cover");
  const auto r = run({"cover", "--mode", "f-inverse", data("i2.txt"),
                      "--emit-cover", path.string()});
  ASSERT_EQ(r.code, cli::kOk);
  const auto c = run({"check", "--cover", "--f-inverse", path.string()});
  EXPECT_EQ(c.code, cli::kOk) << c.err;
  const auto dump = io::parse_cover(slurp(path));
  expect_isomorphic(dump.target, io::parse_monoid(slurp(data("i2.txt"))));
}

TEST(Cover, ReportsAreDeterministic) {
  const auto a = run({"cover", "--mode", "f-inverse", data("z3.txt")});
  const auto b = run({"cover", "--mode", "f-inverse", data("z3.txt")});
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.report().contains("timings"));
  const auto t = run({"cover", "--mode", "f-inverse", "--timings", data("z3.txt")});
  EXPECT_TRUE(t.report().contains("timings"));
  const auto j = a.report();
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["tool_version"], "0.1.0");
  EXPECT_EQ(j["input"]["digest"],
            "fnv1a64:" + io::fnv1a_hex(slurp(data("z3.txt"))));
}

TEST(Cover, ReportFile) {
  const auto path = temp_path("report.json");
  const auto r = run({"cover", data("z3.txt"), "--report", path.string()});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(Json::parse(slurp(path))["result"], "ok");
}

TEST(Groupoid, CertifyAndSearch) {
  EXPECT_EQ(run({"groupoid", "--certify", data("z2z3.groupoid")}).code, cli::kOk);
  const auto p = run({"groupoid", "--certify", data("parallel.groupoid")});
  EXPECT_EQ(p.code, cli::kPredicateFalse);
  EXPECT_TRUE(p.report()["witnesses"].contains("two_acyclic"));

  const auto path = temp_path("found.groupoid");
  const auto s = run({"groupoid", "--search", data("one_loop.graph"),
                      "--emit-groupoid", path.string()});
  EXPECT_EQ(s.code, cli::kOk);
  EXPECT_TRUE(s.report()["witness"].contains("dump"));
  EXPECT_EQ(run({"groupoid", "--certify", path.string()}).code, cli::kOk);

  EXPECT_EQ(run({"groupoid", "--search", "--budget", "0", data("one_loop.graph")})
                .code,
            cli::kSearchExhausted);
  EXPECT_EQ(run({"groupoid", data("one_loop.graph")}).code, cli::kUsageError);
}

}  // namespace
}  // namespace fcover
