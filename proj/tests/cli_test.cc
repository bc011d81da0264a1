#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "sentcomp/corpus_io.h"

namespace {

namespace fs = std::filesystem;

const fs::path kData = SENTCOMP_DATA_DIR;
const std::string kCli = SENTCOMP_CLI_PATH;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::random_device rd;
    root_ = fs::temp_directory_path() / ("sentcomp_cli_" + std::to_string(rd()));
    fs::create_directories(root_);
  }
  void TearDown() override { fs::remove_all(root_); }

  // Runs the CLI with stdout and stderr captured under root_; returns the exit code.
  int run(const std::string& args, const std::string& env = "") {
    const std::string command = env + (env.empty() ? "" : " ") + "'" + kCli + "' " + args +
                                " >'" + (root_ / "stdout").string() + "' 2>'" +
                                (root_ / "stderr").string() + "'";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string out() const { return sentcomp::read_file(root_ / "stdout"); }
  std::string err() const { return sentcomp::read_file(root_ / "stderr"); }
  std::string path(const std::string& name) const { return "'" + (root_ / name).string() + "'"; }
  std::string corpus() const { return "'" + (kData / "corpus_es").string() + "'"; }

  fs::path root_;
};

TEST_F(CliTest, FullRunSucceeds) {
  ASSERT_EQ(run("train " + corpus() + " " + path("m.lm")), 0) << err();
  EXPECT_NE(out().find("tokens\t"), std::string::npos);
  EXPECT_NE(out().find("3-grams\t"), std::string::npos);
  ASSERT_EQ(run("compress " + corpus() + " " + path("m.lm") + " " + path("out")), 0) << err();
  ASSERT_EQ(run("evaluate " + corpus() + " " + path("out/All") + " " + path("out/First") + " " +
                path("out/Random") + " --refs '" + (kData / "refs_es").string() + "' -o " +
                path("report.txt")),
            0)
      << err();
  const std::string table = out();
  EXPECT_NE(table.find("ROUGE-SU4"), std::string::npos);
  EXPECT_NE(table.find("\nAll "), std::string::npos);
  EXPECT_NE(table.find("\nFirst "), std::string::npos);
  EXPECT_NE(table.find("\nRandom "), std::string::npos);
  EXPECT_EQ(sentcomp::read_file(root_ / "report.txt"), table);
  EXPECT_TRUE(fs::exists(root_ / "report.txt.jsonl"));
}

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(run(""), 1);
  EXPECT_EQ(run("train"), 1);
  EXPECT_EQ(run("--bogus train " + corpus() + " " + path("m.lm")), 1);
  EXPECT_EQ(run("--order 0 train " + corpus() + " " + path("m.lm")), 1);
  EXPECT_NE(err().find("order"), std::string::npos);
  EXPECT_EQ(run("--systems all,best train " + corpus() + " " + path("m.lm")), 1);
  EXPECT_EQ(run("--rate 1.5 train " + corpus() + " " + path("m.lm")), 1);
  EXPECT_EQ(run("--order abc train " + corpus() + " " + path("m.lm")), 1);
  EXPECT_FALSE(fs::exists(root_ / "m.lm"));
}

TEST_F(CliTest, DataErrorsExitTwo) {
  fs::create_directories(root_ / "empty");
  EXPECT_EQ(run("train " + path("empty") + " " + path("m.lm")), 2);
  EXPECT_NE(err().find("no .txt documents"), std::string::npos);
  EXPECT_EQ(run("compress " + corpus() + " " + path("missing.lm") + " " + path("out")), 2);
  sentcomp::write_file(root_ / "bad.lm", "not a model\n");
  EXPECT_EQ(run("compress " + corpus() + " " + path("bad.lm") + " " + path("out")), 2);

  ASSERT_EQ(run("train " + corpus() + " " + path("m.lm")), 0);
  ASSERT_EQ(run("--systems first compress " + corpus() + " " + path("m.lm") + " " + path("out")), 0);
  fs::remove(root_ / "out" / "First" / "cuento_faro.txt");
  EXPECT_EQ(run("evaluate " + corpus() + " " + path("out/First") + " -o " + path("r.txt")), 2);
  EXPECT_NE(err().find("cuento_faro"), std::string::npos);
}

TEST_F(CliTest, RandomSeedRunsAreByteIdentical) {
  ASSERT_EQ(run("train " + corpus() + " " + path("m.lm")), 0);
  ASSERT_EQ(run("--systems random --seed 42 compress " + corpus() + " " + path("m.lm") + " " + path("a")), 0);
  ASSERT_EQ(run("--systems random --seed 42 --jobs 3 compress " + corpus() + " " + path("m.lm") + " " + path("b")), 0);
  for (const fs::path& file : sentcomp::list_documents(root_ / "a" / "Random")) {
    EXPECT_EQ(sentcomp::read_file(file),
              sentcomp::read_file(root_ / "b" / "Random" / file.filename()));
  }
  EXPECT_EQ(sentcomp::read_file(root_ / "a" / "Random.selections.jsonl"),
            sentcomp::read_file(root_ / "b" / "Random.selections.jsonl"));
}

TEST_F(CliTest, EnvironmentAndConfigFileOverrides) {
  ASSERT_EQ(run("train " + corpus() + " " + path("m4.lm"), "SENTCOMP_ORDER=4"), 0);
  EXPECT_EQ(sentcomp::read_file(root_ / "m4.lm").rfind("sentcomp-ngram\torder=4\t", 0), 0u);

  sentcomp::write_file(root_ / "exp.conf", "order=2\nlambda=0.25\n");
  ASSERT_EQ(run("--config " + path("exp.conf") + " train " + corpus() + " " + path("m2.lm")), 0)
      << err();
  const std::string header = sentcomp::read_file(root_ / "m2.lm");
  EXPECT_EQ(header.rfind("sentcomp-ngram\torder=2\t", 0), 0u);
  EXPECT_NE(header.substr(0, header.find('\n')).find("lambdas=0.25"), std::string::npos);

  // A flag on the command line wins over the file.
  ASSERT_EQ(run("--config " + path("exp.conf") + " --order 3 --lambda 0.5 train " + corpus() +
                " " + path("m3.lm")),
            0);
  EXPECT_EQ(sentcomp::read_file(root_ / "m3.lm").rfind("sentcomp-ngram\torder=3\t", 0), 0u);

  // The file wins over the environment.
  ASSERT_EQ(run("--config " + path("exp.conf") + " train " + corpus() + " " + path("m5.lm"),
                "SENTCOMP_ORDER=4"),
            0);
  EXPECT_EQ(sentcomp::read_file(root_ / "m5.lm").rfind("sentcomp-ngram\torder=2\t", 0), 0u);

  ASSERT_EQ(run("--systems first compress " + corpus() + " " + path("m3.lm") + " " + path("out"),
                "SENTCOMP_SYSTEMS=all"),
            0);
  EXPECT_TRUE(fs::exists(root_ / "out" / "First"));
  EXPECT_FALSE(fs::exists(root_ / "out" / "All"));
  ASSERT_EQ(run("compress " + corpus() + " " + path("m3.lm") + " " + path("out2"),
                "SENTCOMP_SYSTEMS=all SENTCOMP_DUMP_CANDIDATES=1"),
            0);
  EXPECT_TRUE(fs::exists(root_ / "out2" / "All"));
  EXPECT_FALSE(fs::exists(root_ / "out2" / "Random"));
  EXPECT_TRUE(fs::exists(root_ / "out2" / "candidates.jsonl"));
}

TEST_F(CliTest, KmaxWarningKeepsGoing) {
  ASSERT_EQ(run("train " + corpus() + " " + path("m.lm")), 0);
  ASSERT_EQ(run("--kmax 1 --systems all compress " + corpus() + " " + path("m.lm") + " " + path("out")), 0);
  EXPECT_NE(err().find("warning:"), std::string::npos);
  EXPECT_EQ(out().find("over_kmax\t0"), std::string::npos);
}

}  // namespace
