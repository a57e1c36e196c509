#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(FTD_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("ftdesign_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, Help) { EXPECT_EQ(run("--help"), 0); }

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("sieve --v 8"), 2);
  EXPECT_EQ(run("eliminate --n 3 --q 6 --class c1p --i 1"), 2);
  EXPECT_EQ(run("eliminate --n 3 --q 2 --class c9"), 2);
  EXPECT_EQ(run("--format xml sieve --v 8 --r-divisor 42"), 2);
  EXPECT_EQ(run("search --group nosuch --k 3"), 2);
}

TEST(Cli, Sieve) {
  const fs::path d = scratch("sieve");
  EXPECT_EQ(run("sieve --v 8 --r-divisor 42 --out " + (d / "s.json").string()), 0);
  EXPECT_NE(slurp(d / "s.json").find("\"tuples\""), std::string::npos);
  EXPECT_EQ(run("sieve --v 144 --r-divisor 78 --budget 2"), 2);  // truncated
  EXPECT_EQ(run("sieve --v 8 --r-divisor 42 --format tsv --out " + (d / "s.tsv").string()), 0);
  EXPECT_EQ(slurp(d / "s.tsv").rfind("v\tb\tr\tk\tlambda\n", 0), 0u);
}

TEST(Cli, Eliminate) {
  const fs::path d = scratch("elim");
  EXPECT_EQ(run("eliminate --family psl --n 6 --q 2 --class c2 --m 2 --t 3 --out " + (d / "e.json").string()), 0);
  EXPECT_NE(slurp(d / "e.json").find("15554560"), std::string::npos);
}

TEST(Cli, SweepExitCodes) {
  EXPECT_EQ(run("sweep --family psl --n-min 5 --n-max 6 --q-min 2 --q-max 3 --classes c2 --out /dev/null"), 0);
  EXPECT_EQ(run("sweep --family psl --n-min 6 --n-max 5"), 2);
}

TEST(Cli, SearchAndVerify) {
  const fs::path d = scratch("search");
  ASSERT_EQ(run("search --group pgl2_7 --k 4 --emit-dir " + d.string() + " --out " + (d / "r.json").string()), 0);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(d))
    if (e.path().extension() == ".design") files.push_back(e.path());
  ASSERT_EQ(files.size(), 2u);
  for (const auto& f : files) EXPECT_EQ(run("verify --design " + f.string() + " --out /dev/null"), 0);

  // Replace the last block by a 4-set that is not a block: still parses,
  // no longer a design.
  std::string text = slurp(files[0]);
  text.erase(text.rfind("block"));
  for (const char* cand : {"block 0 1 2 3\n", "block 0 1 2 4\n", "block 0 1 2 5\n"})
    if (slurp(files[0]).find(cand) == std::string::npos) {
      text += cand;
      break;
    }
  std::ofstream(d / "bad.design") << text;
  EXPECT_EQ(run("verify --design " + (d / "bad.design").string() + " --out /dev/null"), 1);
  std::ofstream(d / "garbage.design") << "not a design\n";
  EXPECT_EQ(run("verify --design " + (d / "garbage.design").string()), 2);
  EXPECT_EQ(run("search --group pgl2_7 --k 4 --params 8,28,14,4,6"), 2);
}
