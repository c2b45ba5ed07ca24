#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "gaugelat/errors.hpp"
#include "recipe.hpp"

using namespace gaugelat;
using namespace gaugelat::cli;

namespace {

const char* kSmall = R"(command = butterfly
# a comment
[lattice]
N = 12   # trailing comment
L = 1.66
d = 0.1
[model]
lambda = 1.66
[sweep]
filter = symmetric
p = 0:3
[output]
name = small
formats = csv, json
)";

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::contract_violation;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Recipe, ParseSerializeRoundTrip) {
  const Recipe r = Recipe::parse(kSmall);
  EXPECT_EQ(r.get("lattice", "N"), "12");
  EXPECT_EQ(r.get("", "command"), "butterfly");
  const Recipe again = Recipe::parse(r.serialize());
  EXPECT_EQ(again, r);
  EXPECT_EQ(again.serialize(), r.serialize());
  EXPECT_EQ(again.hash(), r.hash());
  EXPECT_EQ(r.hash().size(), 16u);
}

TEST(Recipe, HashIgnoresLayoutButNotValues) {
  Recipe a = Recipe::parse("[m]\nb = 2\na = 1\n");
  const Recipe b = Recipe::parse("# x\n[m]\na=1\n\n  b   =   2\n");
  EXPECT_EQ(a.hash(), b.hash());
  a.set("m", "a", "1.0");
  EXPECT_NE(a.hash(), b.hash());
}

TEST(Recipe, Fnv1aKnownValues) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Recipe, MalformedInputNamesTheLine) {
  try {
    Recipe::parse("a = 1\n[s]\njunk line\n", "r.recipe");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::validation_error);
    EXPECT_NE(std::string(e.what()).find("r.recipe:3"), std::string::npos);
  }
  EXPECT_EQ(kind_of([] { Recipe::parse("a = 1\na = 2\n"); }), ErrorKind::validation_error);
  EXPECT_EQ(kind_of([] { Recipe::load("/nonexistent/x.recipe"); }), ErrorKind::io_error);
}

TEST(Recipe, ReaderListsEveryProblem) {
  const Recipe r = Recipe::parse("[s]\nx = abc\nn = 1.5\nr = 1:5:0\nextra = 1\n");
  RecipeReader rd(r);
  rd.real("s", "x", 0);
  rd.integer("s", "n", 0);
  rd.integers("s", "r", {});
  try {
    rd.finish();
    FAIL();
  } catch (const Error& e) {
    const std::string w = e.what();
    EXPECT_EQ(e.kind(), ErrorKind::validation_error);
    for (const char* field : {"s.x", "s.n", "s.r", "s.extra"}) EXPECT_NE(w.find(field), std::string::npos) << w;
  }
}

TEST(Recipe, IntegerRanges) {
  const Recipe r = Recipe::parse("[s]\na = 0:4\nb = 1:9:3\nc = 2, 7\nd =\n");
  RecipeReader rd(r);
  EXPECT_EQ(rd.integers("s", "a", {}), (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(rd.integers("s", "b", {}), (std::vector<int>{1, 4, 7}));
  EXPECT_EQ(rd.integers("s", "c", {}), (std::vector<int>{2, 7}));
  EXPECT_TRUE(rd.integers("s", "d", {5}).empty());
  EXPECT_NO_THROW(rd.finish());
}

TEST(Cli, RerunIsByteIdentical) {
  const Recipe r = Recipe::parse(kSmall);
  RunOptions one;
  one.threads = 1;
  RunOptions two;
  two.threads = 2;
  const auto a = build_artifacts("butterfly", r, one);
  const auto b = build_artifacts("butterfly", r, two);
  ASSERT_EQ(a.size(), 2u);  // csv + manifest
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].file, b[i].file);
    EXPECT_EQ(a[i].contents, b[i].contents);
  }
  EXPECT_EQ(a[0].file, "small_butterfly.csv");
  EXPECT_EQ(a[1].file, "small_manifest.json");
  EXPECT_NE(a[1].contents.find(r.hash()), std::string::npos);
}

TEST(Cli, EmptySweepWritesHeaderOnly) {
  Recipe r = Recipe::parse(kSmall);
  r.set("sweep", "p", "");
  RunOptions o;
  o.formats = {"csv"};
  const auto a = build_artifacts("butterfly", r, o);
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].contents, "p,eigen_index,energy\n");
}

TEST(Cli, SinglePointSweep) {
  Recipe r = Recipe::parse(kSmall);
  r.set("sweep", "p", "5");
  RunOptions o;
  o.formats = {"csv"};
  const auto a = build_artifacts("butterfly", r, o);
  std::istringstream in(a[0].contents);
  std::string line;
  int rows = -1;
  while (std::getline(in, line)) {
    ++rows;
    if (rows > 0) EXPECT_EQ(line.rfind("5,", 0), 0u);
  }
  EXPECT_EQ(rows, 12);  // symmetric band of 12 dimers
}

TEST(Cli, ValidationErrors) {
  Recipe r = Recipe::parse(kSmall);
  r.set("sweep", "p", "40");
  r.set("sweep", "filter", "sideways");
  r.set("model", "bogus", "1");
  try {
    build_artifacts("butterfly", r, {});
    FAIL();
  } catch (const Error& e) {
    const std::string w = e.what();
    EXPECT_EQ(e.kind(), ErrorKind::validation_error);
    EXPECT_NE(w.find("sweep.p"), std::string::npos) << w;
    EXPECT_NE(w.find("sweep.filter"), std::string::npos) << w;
    EXPECT_NE(w.find("model.bogus"), std::string::npos) << w;
  }
  EXPECT_EQ(kind_of([] { build_artifacts("fractal", Recipe::parse(kSmall), {}); }), ErrorKind::validation_error);
  EXPECT_EQ(kind_of([] {
              RunOptions o;
              o.formats = {"csv"};
              Recipe h = Recipe::parse(preset_text("harper"));
              build_artifacts("harper-check", h, o);
            }),
            ErrorKind::validation_error);
}

TEST(Cli, UnwritableOutputDirectory) {
  const auto base = std::filesystem::temp_directory_path() / "gaugelat_cli_test";
  std::filesystem::create_directories(base);
  const auto blocker = base / "file";
  std::ofstream(blocker) << "x";
  RunOptions o;
  o.out_dir = blocker / "sub";
  EXPECT_EQ(kind_of([&] { run_command("butterfly", Recipe::parse(kSmall), o); }), ErrorKind::io_error);

  o.out_dir = base / "out";
  const RunResult res = run_command("butterfly", Recipe::parse(kSmall), o);
  ASSERT_EQ(res.written.size(), 2u);
  const auto built = build_artifacts("butterfly", Recipe::parse(kSmall), o);
  EXPECT_EQ(slurp(res.written[0]), built[0].contents);
  std::filesystem::remove_all(base);
}

TEST(Cli, PresetsParseAndValidate) {
  const auto names = preset_names();
  EXPECT_GE(names.size(), 9u);
  for (const std::string& n : names) {
    const Recipe r = Recipe::parse(preset_text(n), n);
    const std::string cmd = r.get("", "command");
    EXPECT_NE(std::find(command_names().begin(), command_names().end(), cmd), command_names().end()) << n;
  }
  EXPECT_EQ(kind_of([] { preset_text("nope"); }), ErrorKind::lookup_error);
}

TEST(Cli, SmallPresetsRun) {
  for (const char* n : {"harper", "table1"}) {
    const Recipe r = Recipe::parse(preset_text(n), n);
    EXPECT_NO_THROW(build_artifacts(r.get("", "command"), r, {})) << n;
  }
}
