#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(JACRING_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

using Json = nlohmann::ordered_json;

}  // namespace

TEST(Cli, BettiJson) {
  auto r = run("betti -p 3 -q 4 --json");
  ASSERT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["betti"], Json({1, 1, 2, 1}));
  EXPECT_EQ(j["manifest"]["command"], "betti");
  EXPECT_EQ(j["manifest"]["parameters"]["p"], 3);
}

TEST(Cli, GrmPrintsBothSeries) {
  auto r = run("grm -p 3 -q 4");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("holds"), std::string::npos);
  EXPECT_NE(r.out.find("1+2t+t^2+t^3"), std::string::npos);
  EXPECT_NE(r.out.find("1+t+2t^2+t^3"), std::string::npos);
}

TEST(Cli, PlanarDefaultRow) {
  auto r = run("planar --family 4,2q,s -q 3 -s 7 --json");
  ASSERT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["evidence"]["fake_betti"], Json({1, 3, 4, 4, 4, 2, 1, 0, 0}));
  EXPECT_EQ(j["evidence"]["total_dim"], 19);
  EXPECT_EQ(j["parameters"]["convention"], "strict");
}

TEST(Cli, NormalizedConventionExitsInconclusive) {
  EXPECT_EQ(run("planar -q 3 -s 7 --convention paper").code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_NE(run("betti -p 3").code, 0);
  EXPECT_NE(run("frobnicate").code, 0);
  EXPECT_EQ(run("grm -p 2 -q 4").code, 3);
}

TEST(Cli, CsvProjection) {
  auto r = run("dyck -p 3 -q 4 --csv");
  EXPECT_EQ(r.out, "size,count\n0,1\n1,1\n2,2\n3,1\n");
}

TEST(Cli, ByteIdenticalAcrossRerunsAndCache) {
  auto dir = std::filesystem::temp_directory_path() / "jacring_cli_cache_test";
  std::filesystem::remove_all(dir);
  const std::string args = "filtration -p 3 -q 5 --json --cache-dir " + dir.string();
  auto a = run(args), b = run(args), c = run("filtration -p 3 -q 5 --json");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  EXPECT_TRUE(std::filesystem::exists(dir / "results"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, OutWritesManifest) {
  auto out = std::filesystem::temp_directory_path() / "jacring_cli_out.json";
  auto r = run("hilbert -p 3 -q 5 --out " + out.string());
  ASSERT_EQ(r.code, 0);
  std::ifstream in(out), min(out.string() + ".manifest.json");
  ASSERT_TRUE(in && min);
  auto j = Json::parse(in), m = Json::parse(min);
  EXPECT_EQ(j["manifest"], m);
  EXPECT_EQ(m["outputs"][0], out.string());
  EXPECT_EQ(j["dim"], 7);
  std::filesystem::remove(out);
  std::filesystem::remove(out.string() + ".manifest.json");
}

TEST(Cli, BatchWithJobsMatchesSerial) {
  auto a = run("batch --command dyck --max-sum 11 --json");
  auto b = run("batch --command dyck --max-sum 11 --json --jobs 3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out)["results"].size(), 11u);
}

TEST(Cli, PropsSeeded) {
  auto a = run("props --seed 5 --json"), b = run("props --seed 5 --json");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
