#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + PERMPOLY_CLI_PATH + std::string(" ") + args + " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, Params) {
  auto r = run("params --m 3 --k 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("r=2 m'=1 sigma=4"), std::string::npos);
  r = run("params --m 5 --k 3");
  EXPECT_NE(r.out.find("r=2 m'=1"), std::string::npos);
  EXPECT_EQ(run("params --m 4 --k 2").code, 2);
  r = run("--format json params --m 3 --k 2");
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["r"], 2);
  EXPECT_EQ(j["flags"].size(), 8u);
}

TEST(Cli, Eval) {
  EXPECT_EQ(run("eval h --m 2 --k 1 --alpha 0 --gamma 0 --x 2").out, "2\n");
  // X^3 + X at X in GF(8) mod X^3 + X + 1.
  EXPECT_EQ(run("eval dickson --m 3 --n 3 --x 2").out, "1\n");
  auto r = run("eval dickson --m 3 --n 3 --x 2 --method closed --cross-check");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");
  EXPECT_EQ(run("eval phi --m 2 --k 1 --z inf").out, "0\n");
  EXPECT_EQ(run("eval phi --m 2 --z 1").out, "inf\n");
  EXPECT_EQ(run("eval w1 --m 3 --k 1 --z inf").out, "inf\n");
  EXPECT_EQ(run("eval tau --m 3 --v 1 --x 0").out, "1\n");
  EXPECT_EQ(run("eval g --m 5 --k 1 --x 1b").out, "1b\n");
  EXPECT_EQ(run("eval h --m 3 --k 2 --x 8").code, 2);
  EXPECT_EQ(run("eval h --m 3 --k 2 --x zz").code, 2);
  EXPECT_EQ(run("eval psi --m 3 --x 1").code, 2);
  EXPECT_EQ(run("eval h --m 3 --x 1").code, 2);
  r = run("--format json eval tk --m 4 --k 3 --x 1");
  EXPECT_EQ(nlohmann::json::parse(r.out)["value"], "1");
}

TEST(Cli, Sweep) {
  auto r = run("sweep --m 2");
  EXPECT_EQ(r.code, 0);
  auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], "m,k,r,m',alpha,gamma,predicted,observed,t0_image,t1_image,agree");
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(rows[i].substr(rows[i].size() - 4), "true");

  r = run("sweep --m 3");
  rows = lines(r.out);
  EXPECT_EQ(rows.size(), 9u);
  EXPECT_EQ(rows[5], "3,2,2,1,0,0,false,false,T0,T0,true");

  r = run("sweep --m-min 2 --m-max 8 --alpha 1 --gamma 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 1u + 1 + 2 + 2 + 4 + 2 + 6 + 4);

  // Non-coprime k are skipped, not errors.
  r = run("sweep --m 6 --k-min 1 --k-max 5");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 1u + 8);

  r = run("--format json sweep --m 4");
  for (const auto& line : lines(r.out)) EXPECT_TRUE(nlohmann::json::parse(line)["agree"].get<bool>());
  EXPECT_EQ(run("sweep --m-min 5 --m-max 3").code, 2);
}

TEST(Cli, SweepIsDeterministic) {
  EXPECT_EQ(run("sweep --m-max 9").out, run("--workers 3 sweep --m-max 9").out);
}

TEST(Cli, Expand) {
  EXPECT_EQ(run("expand --m 2 --k 1 --alpha 0 --gamma 0").out, "1\n");
  EXPECT_EQ(run("expand --m 3 --k 2 --alpha 0 --gamma 0").out, "3,6,15,18\n");
  const auto reduced = run("expand --m 3 --k 2 --reduce").out;
  EXPECT_EQ(reduced, "1,3,4,6\n");
  EXPECT_EQ(run("expand --m 4 --k 2").code, 2);
  const auto j = nlohmann::json::parse(run("--format json expand --m 3 --k 2").out);
  EXPECT_EQ(j["exponents"][3], "18");
}

TEST(Cli, Verify) {
  auto r = run("verify --suite nobauer --m-max 4");
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["check"], "nobauer");
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["tested"], 3 * 15 + 7 * 63 + 15 * 255);

  r = run("verify --suite zsumexp --m-max 2");
  EXPECT_EQ(r.code, 0);
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["tested"], 14);

  r = run("verify --suite all --m-max 6");
  EXPECT_EQ(r.code, 0);
  for (const auto& line : lines(r.out)) {
    const auto o = nlohmann::json::parse(line);
    EXPECT_TRUE(o["passed"].get<bool>()) << line;
    EXPECT_TRUE(o["counterexample"].is_null());
  }
  EXPECT_EQ(run("verify --suite lemma9").code, 2);
  r = run("--format csv verify --suite hprop --m-max 3");
  EXPECT_EQ(lines(r.out).size(), 1u + 3);
}

TEST(Cli, OutputFileAndFieldTable) {
  const std::string dir = PERMPOLY_TEST_TMP;
  const std::string out = dir + "/cli_out.csv";
  EXPECT_EQ(run("--out " + out + " sweep --m 3").code, 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "m,k,r,m',alpha,gamma,predicted,observed,t0_image,t1_image,agree");

  const std::string table = dir + "/cli_table.txt";
  {
    std::ofstream t(table);
    t << "m=3 poly=0xd\n";
  }
  // X^3 + X over X^3 + X^2 + 1 at X: X^3 = X^2 + 1, so the value is X^2 + X + 1.
  EXPECT_EQ(run("eval dickson --m 3 --n 3 --x 2", "PERMPOLY_FIELD_TABLE=" + table).out, "7\n");
  EXPECT_EQ(run("sweep --m 3", "PERMPOLY_FIELD_TABLE=" + table).code, 0);
  {
    std::ofstream t(table);
    t << "m=4 poly=0x15\n";
  }
  EXPECT_EQ(run("sweep --m 3", "PERMPOLY_FIELD_TABLE=" + table).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("--format yaml sweep --m 3").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}
