#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "blocklang/io.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;
using blocklang::read_file;
using blocklang::write_file;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = blocklang::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("blocklang_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    const std::string p = path(name);
    write_file(p, content);
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ConvertMinDfa) {
  const auto in = file("ex1.blk", "BLK1 2 4\n1011011100011110\n");
  const Outcome r = run({"convert", in, "--to", "min-dfa"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("AUT1 2 4 ranked\n", 0), 0u);
  EXPECT_NE(r.err.find("states 11\n"), std::string::npos);
  EXPECT_NE(r.err.find("dsc 12\n"), std::string::npos);
  EXPECT_NE(r.err.find("widths 1,3,4,2,1\n"), std::string::npos);
}

TEST_F(Cli, ConvertMinNfaToFile) {
  const auto in = file("ex1.blk", "BLK1 2 4\n1011011100011110\n");
  const Outcome r = run({"convert", in, "--to", "min-nfa", "--solver", "exact", "-o", path("ex1.aut")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("states 9\n"), std::string::npos);
  EXPECT_NE(r.out.find("certified yes\n"), std::string::npos);
  EXPECT_EQ(read_file(path("ex1.aut")).rfind("AUT1 2 4 ranked\n", 0), 0u);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run({"convert", file("zero.blk", "BLK1 2 2\n0000\n"), "--to", "min-dfa"}).code, 2);
  EXPECT_EQ(run({"convert", file("bad.blk", "BLK1 2 2\n000\n")}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"witness", "nope", "--ell", "3"}).code, 1);
  const auto big = file("big.blk", "BLK1 2 6\n" + std::string("1011000111010010110001110100101101100011011010011101001001101101") + "\n");
  EXPECT_EQ(run({"convert", big, "--to", "min-nfa", "--budget", "1"}).code, 3);
  const Outcome ok = run({"convert", big, "--to", "min-nfa", "--budget", "1", "--allow-uncertified"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.err.find("certified no"), std::string::npos);
}

TEST_F(Cli, BudgetFromEnvironment) {
  const auto big = file("big.blk", "BLK1 2 6\n" + std::string("1011000111010010110001110100101101100011011010011101001001101101") + "\n");
  ::setenv("BLOCKSET_BUDGET", "1", 1);
  const int code = run({"convert", big, "--to", "min-nfa"}).code;
  ::unsetenv("BLOCKSET_BUDGET");
  EXPECT_EQ(code, 3);
}

TEST_F(Cli, Ops) {
  const auto a = file("a.blk", "BLK1 2 2\n1100\n");
  const auto b = file("b.blk", "BLK1 2 2\n1010\n");
  EXPECT_EQ(run({"op", "and", a, b}).out, "BLK1 2 2\n1000\n");
  EXPECT_EQ(run({"op", "or", a, b}).out, "BLK1 2 2\n1110\n");
  EXPECT_EQ(run({"op", "not", a}).out, "BLK1 2 2\n0011\n");
  EXPECT_EQ(run({"op", "and", a, file("c.blk", "BLK1 2 3\n10000000\n")}).code, 1);

  const auto full = file("full4.blk", "BLK1 2 4\n1111111111111111\n");
  EXPECT_EQ(run({"op", "remove-word", full, "--word", "aaaa"}).out, "BLK1 2 4\n0111111111111111\n");

  const auto r = file("r.blk", "BLK1 2 3\n10011000\n");
  EXPECT_EQ(run({"op", "reverse", r}).out, "BLK1 2 3\n11000010\n");

  ASSERT_EQ(run({"witness", "palindrome", "--k", "2", "--d", "2", "-o", path("pal.blk")}).code, 0);
  EXPECT_EQ(run({"op", "reverse", path("pal.blk")}).out, read_file(path("pal.blk")));

  const Outcome star = run({"op", "star", file("ex1.blk", "BLK1 2 4\n1011011100011110\n")});
  EXPECT_EQ(star.code, 0);
  EXPECT_EQ(star.out.rfind("AUT1 2 - general\n", 0), 0u);
}

TEST_F(Cli, WitnessAndSc) {
  EXPECT_EQ(run({"witness", "max", "--ell", "5"}).out, "BLK1 2 5\n10000100110000101010011011100001\n");
  ASSERT_EQ(run({"witness", "palindrome", "--k", "2", "--d", "2", "-o", path("pal.blk")}).code, 0);
  const Outcome nfa = run({"convert", path("pal.blk"), "--to", "min-nfa", "-o", path("pal.aut")});
  EXPECT_NE(nfa.out.find("states 10\n"), std::string::npos);
  const Outcome sc = run({"sc", path("pal.blk")});
  EXPECT_EQ(sc.code, 0);
  EXPECT_NE(sc.out.find("nsc 10"), std::string::npos);
  EXPECT_NE(sc.out.find("nfa-deterministic yes"), std::string::npos);
}

TEST_F(Cli, VerifyAndSelftest) {
  const auto full = file("full4.blk", "BLK1 2 4\n1111111111111111\n");
  const Outcome v = run({"verify", "remove-word", full, "--word", "aaaa"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("tight=yes"), std::string::npos);
  const Outcome t = run({"verify", "table2", "--max-ell", "3"});
  EXPECT_EQ(t.code, 0) << t.out << t.err;
  EXPECT_EQ(t.out.find("FAIL"), std::string::npos);
  const Outcome s = run({"selftest", "--samples", "20", "--seed", "3"});
  EXPECT_EQ(s.code, 0) << s.out;
  EXPECT_EQ(s.out.find("FAIL"), std::string::npos);
}

TEST_F(Cli, SolveCover) {
  const auto in = file("inst.cov", "COV1 4\ntarget 1011\ntarget 0111\ntarget 0001\ntarget 1110\n"
                                   "cand 1010\ncand 0110\ncand 0001\ncand 1000\ncand 0100\ncand 0010\ncand 1100\n");
  const Outcome r = run({"solve-cover", in});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE((r.out + r.err).find("3"), std::string::npos);
}
