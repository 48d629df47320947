#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <string>

#include "wedderburn/report.hpp"
#include "wedderburn/verify.hpp"

using namespace wedderburn;
using json = nlohmann::json;

namespace {

struct Output {
  int status = 0;
  std::string out;
};

// stdout of the CLI; stderr is folded in when `with_stderr`
Output cli(const std::string& args, bool with_stderr = false) {
  std::string cmd = std::string(WEDDERBURN_CLI) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  Output r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& f) { return std::string(WEDDERBURN_DATA) + "/" + f; }

}  // namespace

TEST(GroupFile, PermutationsAndCatalogForms) {
  EXPECT_EQ(report::load_group(data("s3.json")).order(), 6);
  EXPECT_EQ(report::load_group(data("q8.json")).order(), 8);
  EXPECT_EQ(report::load_group(data("a4.json")).order(), 12);
  EXPECT_EQ(report::load_group(data("sl23.json")).order(), 24);
  EXPECT_EQ(report::group_from_json(json::parse(R"({"catalog": "C", "params": [5]})")).order(), 5);
  // a single 3-cycle generates C3
  auto G = report::group_from_json(json::parse(R"({"name": "t", "degree": 3, "permutations": [[[1, 2, 3]]]})"));
  EXPECT_EQ(G.order(), 3);
  EXPECT_TRUE(G.abelian());
}

TEST(GroupFile, StrictParsing) {
  auto bad = [](const char* s) {
    try {
      report::group_from_json(json::parse(s));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidTable;  // not thrown
  };
  EXPECT_EQ(bad(R"({"degree": 3, "permutations": [], "colour": 1})"), ErrorKind::BadInput);
  EXPECT_EQ(bad(R"({"catalog": "Q8", "params": [], "name": "q"})"), ErrorKind::BadInput);
  EXPECT_EQ(bad(R"({"degree": 3, "permutations": [[[1, 4]]]})"), ErrorKind::NonBijective);
  EXPECT_EQ(bad(R"({"degree": 3, "permutations": [[[1, 2], [2, 3]]]})"), ErrorKind::NonBijective);
  EXPECT_EQ(bad(R"({"degree": "three", "permutations": []})"), ErrorKind::BadInput);
  EXPECT_EQ(bad(R"({"catalog": "Z", "params": []})"), ErrorKind::UnknownName);
  EXPECT_THROW(report::group_from_json(json::parse(R"({"catalog": "SL23"})"), 10), Error);
}

TEST(Render, CsvQuotesAndPretty) {
  json rows = json::array({{{"a", 1}, {"b", "x,y"}}, {{"a", 2}, {"c", json::array({1, 2})}}});
  EXPECT_EQ(report::to_csv(rows), "a,b,c\n1,\"x,y\",\n2,,\"[1,2]\"\n");
  auto p = report::to_pretty({{"k", "v"}, {"rows", rows}});
  EXPECT_NE(p.find("k: v"), std::string::npos);
  EXPECT_NE(p.find("[1]"), std::string::npos);
}

TEST(Report, ScalarEncoding) {
  auto Q = CyclotomicField(4, {1});
  EXPECT_EQ(Q.to_json(Q.from_ratio(-3, 4)), json("-3/4"));
  auto j = Q.to_json(Q.zeta(1));
  EXPECT_EQ(j["zeta"], 4);
  EXPECT_EQ(j["coeffs"], json::array({"0", "1"}));
  auto F = FiniteField::ambient(3, 8);  // GF(9)
  EXPECT_TRUE(F.to_json(F.from_int(2)).is_number());
  EXPECT_TRUE(F.to_json(F.zeta(1)).is_array());
}

TEST(Cli, PcisOfQ8OverQ) {
  auto r = cli("pcis --catalog Q8 --field Q");
  ASSERT_EQ(r.status, 0);
  auto j = json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 5u);
  for (auto& e : j["rows"]) EXPECT_TRUE(e["checks"]["idempotent"].get<bool>());
  EXPECT_EQ(j["rows"][4]["coeffs"], json::parse(R"([[0, "1/2"], [1, "-1/2"]])"));
}

TEST(Cli, BermanSL23CaseC) {
  auto r = cli("berman --catalog SL23 --field Q --subgroup auto");
  ASSERT_EQ(r.status, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["subgroup"]["order"], 8);
  int c_with_s2 = 0;
  for (auto& row : j["rows"]) {
    EXPECT_TRUE(row["checks"]["ok"].get<bool>());
    if (row["case"] == "C" && row["s"] == 2) {
      ++c_with_s2;
      EXPECT_EQ(row["d"], 2);
      EXPECT_EQ(row["k"], 1);
      EXPECT_EQ(row["split"].size(), 2u);
    }
  }
  EXPECT_EQ(c_with_s2, 1);
}

TEST(Cli, VerifyCyclicTwelveOverGF5) {
  auto r = cli("verify --catalog C 12 --field \"GF(5)\"");
  ASSERT_EQ(r.status, 0);
  auto j = json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  for (auto& s : {"fclasses", "pcis", "audit", "structure", "berman"}) EXPECT_TRUE(j["suites"][s]["ok"].get<bool>()) << s;
  auto again = cli("verify --catalog C 12 --field \"GF(5)\"");
  EXPECT_EQ(r.out, again.out);
}

TEST(Cli, FormatsAndSubcommands) {
  auto csv = cli("classes --catalog D 4 --format csv");
  ASSERT_EQ(csv.status, 0);
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "index,members,order,representative,size");
  auto pretty = cli("wedderburn --catalog Q8 --field Q --format pretty --pci 4");
  ASSERT_EQ(pretty.status, 0);
  EXPECT_NE(pretty.out.find("certificate: definite-quaternion"), std::string::npos);
  auto ct = json::parse(cli("chartable --catalog C 4").out);
  EXPECT_EQ(ct["rows"].size(), 4u);
  bool saw_zeta = false;
  for (auto& row : ct["rows"])
    for (auto& p : row["pretty"]) saw_zeta = saw_zeta || p == "zeta4^1";
  EXPECT_TRUE(saw_zeta);
  auto fct = json::parse(cli("fchartable --catalog C 4 --field Q").out);
  EXPECT_EQ(fct["rows"].size(), 3u);
  auto fc = json::parse(cli("fclasses --catalog C7:C3 --field Q").out);
  EXPECT_EQ(fc["rows"].size(), 3u);
  // C7 over Q: the trivial pci is case C (no zeta_3 in Q), the faithful one induces 3 rho
  auto ind = json::parse(cli("induce --catalog C7:C3 --field Q --all").out);
  ASSERT_EQ(ind["rows"].size(), 2u);
  std::multiset<std::string> cases;
  for (auto& row : ind["rows"]) {
    cases.insert(row["case"].get<std::string>());
    if (row["case"] == "1") {
      EXPECT_EQ(row["shape"], "p_rho");
      EXPECT_EQ(row["constituents"][0]["multiplicity"], 3);
    }
  }
  EXPECT_EQ(cases, (std::multiset<std::string>{"1", "C"}));
  auto one = json::parse(cli("induce --catalog C7:C3 --field Q --pci 0").out);
  EXPECT_EQ(one["rows"].size(), 1u);
}

TEST(Cli, OutFileAndGroupFile) {
  std::string path = ::testing::TempDir() + "wedderburn_cli_out.json";
  auto r = cli("fclasses --group " + data("s3.json") + " --field Q --out " + path);
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  auto j = json::parse(in);
  EXPECT_EQ(j["group"], "S3");
  EXPECT_EQ(j["rows"].size(), 3u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("").status, 2);
  EXPECT_EQ(cli("classes").status, 2);
  EXPECT_EQ(cli("classes --catalog C 4 --group x.json").status, 2);
  EXPECT_EQ(cli("pcis --catalog C 4 --format xml").status, 2);
  EXPECT_EQ(cli("pcis --catalog C four").status, 2);
  EXPECT_EQ(cli("pcis --catalog Q8 --pci 9").status, 2);
  EXPECT_EQ(cli("classes --catalog C 4 --bogus").status, 2);
  EXPECT_EQ(cli("classes --help").status, 0);

  auto e = cli("pcis --catalog C 6 --field \"GF(3)\"", true);
  EXPECT_EQ(e.status, 1);
  EXPECT_EQ(json::parse(e.out)["error"], "NonCoprime");
  EXPECT_EQ(cli("classes --catalog Nope").status, 1);
  EXPECT_EQ(cli("classes --catalog SL23 --max-order 10").status, 1);
  EXPECT_EQ(cli("berman --catalog C 1").status, 1);
}

TEST(Cli, SeedFromEnvironment) {
  auto a = cli("verify --catalog Q8 --field Q --level fast --seed 4");
  auto b = cli("verify --catalog Q8 --field Q --level fast");
  std::string env = "WEDDERBURN_SEED=4 ";
  FILE* p = popen((env + WEDDERBURN_CLI + " verify --catalog Q8 --field Q --level fast --seed 9").c_str(), "r");
  ASSERT_NE(p, nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  pclose(p);
  EXPECT_EQ(json::parse(a.out)["seed"], 4);
  EXPECT_EQ(json::parse(b.out)["seed"], 0);
  EXPECT_EQ(out, a.out);
  EXPECT_EQ(cli("verify --catalog Q8 --level fast", false).status, 0);
}
