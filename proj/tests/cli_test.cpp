#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "graduation/cli/commands.hpp"

using namespace graduation;
using namespace graduation::cli;

namespace {

const std::string tmp_dir = GRADUATION_TEST_TMP;

std::string write_tmp(const std::string& name, const std::string& content) {
  const std::string path = tmp_dir + "/" + name;
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = tmp_dir + "/cli_stdout.txt";
  const std::string cmd = std::string(GRADUATION_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out_path)};
}

std::string integers_csv(int from, int to) {
  std::string s;
  for (int i = from; i <= to; ++i) s += std::to_string(i) + "\n";
  return s;
}

}  // namespace

// ---- CSV ingestion --------------------------------------------------------

TEST(CsvInput, IncomesWithAndWithoutHeader) {
  std::istringstream plain("1\n2.5\n\n3e2\n");
  EXPECT_EQ(read_incomes(plain), (std::vector<double>{1, 2.5, 300}));
  std::istringstream header("income\r\n4\r\n5\r\n");
  EXPECT_EQ(read_incomes(header), (std::vector<double>{4, 5}));
}

TEST(CsvInput, MalformedRowReportsLine) {
  std::istringstream bad("income\n1\n2\nabc\n");
  try {
    read_incomes(bad);
    FAIL() << "expected input_error";
  } catch (const input_error& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  std::istringstream negative("1\n-2\n");
  EXPECT_THROW(read_incomes(negative), input_error);
  std::istringstream two_fields("1,2\n");
  EXPECT_THROW(read_incomes(two_fields), input_error);
}

TEST(CsvInput, GroupedRows) {
  std::istringstream in("count,mean\n3,1.5\n2,4\n");
  const auto bins = read_grouped(in);
  ASSERT_EQ(bins.size(), 2u);
  EXPECT_EQ(bins[0].count, 3);
  EXPECT_EQ(bins[1].mean, 4.0);
  std::istringstream unsorted("3,5\n2,4\n");
  try {
    read_grouped(unsorted);
    FAIL() << "expected input_error";
  } catch (const input_error& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream fractional("2.5,4\n");
  EXPECT_THROW(read_grouped(fractional), input_error);
}

// ---- commands, in process --------------------------------------------------

TEST(Commands, ExactExamples) {
  EXPECT_EQ(cmd_exact("1", 100).results["gini_exact"], "1/3");
  EXPECT_EQ(cmd_exact("0", 50).results["gini_exact"], "0");
  EXPECT_EQ(cmd_exact("2", 2).results["gini_exact"], "3/5");
  try {
    cmd_exact("1.5", 10);
    FAIL();
  } catch (const command_error& e) {
    EXPECT_EQ(e.exit_code(), exit_usage);
    EXPECT_NE(std::string(e.what()).find("model"), std::string::npos);
  }
}

TEST(Commands, GraduateExamples) {
  const auto norway = cmd_graduate(0.25);
  EXPECT_NEAR(norway.results["m"].get<double>(), 0.667, 5e-4);
  EXPECT_EQ(norway.results["bracket"], "between sub-linear and linear");

  const auto moscow = cmd_graduate(0.521);
  EXPECT_NEAR(moscow.results["m"].get<double>(), 2.175, 5e-4);
  const std::string note = moscow.results["note"];
  EXPECT_NE(note.find("2.742"), std::string::npos);
  EXPECT_NE(note.find("2.175"), std::string::npos);

  const auto rsa = cmd_graduate(0.65);
  EXPECT_NEAR(rsa.results["m"].get<double>(), 3.714, 5e-4);
  EXPECT_EQ(rsa.results["classification"], "tetradic");
  EXPECT_EQ(rsa.results["matches"].size(), 3u);

  EXPECT_THROW(cmd_graduate(1.2), command_error);
}

TEST(Commands, SampleGiniExamples) {
  const auto linear = cmd_sample_gini(write_tmp("lin.csv", integers_csv(1, 100)), Convention::sample);
  EXPECT_NEAR(linear.results["gini"].get<double>(), 1.0 / 3.0, 1e-12);
  const auto equal = cmd_sample_gini(write_tmp("eq.csv", "4\n4\n4\n"), Convention::sample);
  EXPECT_EQ(equal.results["gini"].get<double>(), 0.0);
  const auto top = cmd_sample_gini(write_tmp("top.csv", "0\n0\n0\n7\n"), Convention::sample);
  EXPECT_NEAR(top.results["gini"].get<double>(), 1.0, 1e-15);
  EXPECT_NEAR(top.results["gini_population"].get<double>(), 0.75, 1e-15);
}

TEST(Commands, SampleGiniWritesLorenzPoints) {
  const std::string lorenz = tmp_dir + "/lorenz.csv";
  cmd_sample_gini(write_tmp("l13.csv", "3\n1\n"), Convention::sample, lorenz);
  EXPECT_EQ(slurp(lorenz), "p,L\n0,0\n0.5,0.25\n1,1\n");
}

TEST(Commands, GroupedExamples) {
  const auto two = cmd_grouped(write_tmp("g2.csv", "1,1\n1,3\n"), Convention::sample);
  EXPECT_NEAR(two.results["lower"].get<double>(), 0.5, 1e-15);
  EXPECT_NEAR(two.results["upper"].get<double>(), 0.5, 1e-15);
  const auto one = cmd_grouped(write_tmp("g1.csv", "10,5\n"), Convention::sample);
  EXPECT_EQ(one.results["lower"].get<double>(), 0.0);
  EXPECT_EQ(one.results["upper"].get<double>(), 0.0);
}

TEST(Commands, GroupedDecilesBracketMicrodata) {
  const auto s = sample({DistributionKind::lognormal, 0.7, 1.0}, 1000, 3);
  std::vector<double> v(s.values().begin(), s.values().end());
  std::sort(v.begin(), v.end());
  std::string micro;
  std::string grouped;
  for (int d = 0; d < 10; ++d) {
    double sum = 0.0;
    for (int i = d * 100; i < (d + 1) * 100; ++i) sum += v[i];
    char buf[64];
    std::snprintf(buf, sizeof buf, "100,%.17g\n", sum / 100.0);
    grouped += buf;
  }
  for (double x : v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g\n", x);
    micro += buf;
  }
  const double g = cmd_sample_gini(write_tmp("m.csv", micro), Convention::sample).results["gini"];
  const auto b = cmd_grouped(write_tmp("d.csv", grouped), Convention::sample);
  EXPECT_LE(b.results["lower"].get<double>(), g);
  EXPECT_GE(b.results["upper"].get<double>(), g);
}

TEST(Commands, CountriesTable) {
  const auto doc = cmd_countries();
  const auto& rows = doc.results["countries"];
  ASSERT_EQ(rows.size(), 12u);
  const auto row = [&](const std::string& name) {
    for (const auto& r : rows) {
      if (r["name"] == name) return r;
    }
    return Json();
  };
  EXPECT_EQ(row("Norway")["gini"], 0.25);
  EXPECT_EQ(row("Norway")["m"], 0.667);
  EXPECT_EQ(row("Russia")["m"], 1.466);
  EXPECT_EQ(row("Russia")["bracket"], "between linear and quadratic");
  EXPECT_EQ(row("Namibia")["m"], 4.826);
  EXPECT_NE(row("Namibia")["note"].get<std::string>().find("0.75"), std::string::npos);
}

TEST(Commands, DegreeTable) {
  const auto three = cmd_table(3).results["rows"];
  ASSERT_EQ(three.size(), 3u);
  EXPECT_EQ(three[0]["gini_exact"], "1/3");
  EXPECT_EQ(three[1]["gini_exact"], "1/2");
  EXPECT_EQ(three[2]["gini_exact"], "3/5");
  EXPECT_EQ(cmd_table(10).results["rows"][9]["gini_exact"], "5/6");
  EXPECT_EQ(cmd_table(1).results["rows"].size(), 1u);
  EXPECT_THROW(cmd_table(0), command_error);
}

TEST(Commands, CountryRoundTrip) {
  for (const auto& rec : bundled_countries()) {
    const double m = cmd_graduate(rec.gini).results["m"];
    EXPECT_NEAR(asymptotic_gini(m), rec.gini, 1e-9) << rec.name;
  }
}

TEST(Commands, ReportDigestTracksInputs) {
  const auto a = cmd_exact("3", 10);
  const auto b = cmd_exact("3", 11);
  EXPECT_NE(a.inputs_digest(), b.inputs_digest());
  EXPECT_EQ(a.inputs_digest(), cmd_exact("3", 10).inputs_digest());
}

// ---- the binary ------------------------------------------------------------

TEST(CliBinary, ExitCodes) {
  EXPECT_EQ(run_cli("exact -m 2 -n 2").exit_code, 0);
  EXPECT_EQ(run_cli("exact -m 2.5 -n 2").exit_code, 2);
  EXPECT_EQ(run_cli("graduate 1.5").exit_code, 2);
  EXPECT_EQ(run_cli("nonsense").exit_code, 2);
  EXPECT_EQ(run_cli("sample-gini " + tmp_dir + "/does-not-exist.csv").exit_code, 3);
  EXPECT_EQ(run_cli("sample-gini " + write_tmp("bad.csv", "1\n2\nx\n")).exit_code, 4);
  EXPECT_EQ(run_cli("sample-gini " + write_tmp("zero.csv", "0\n0\n")).exit_code, 5);
  EXPECT_EQ(run_cli("grouped " + write_tmp("unsorted.csv", "1,5\n1,3\n")).exit_code, 4);
}

TEST(CliBinary, OutputIsDeterministic) {
  const std::string file = write_tmp("det.csv", integers_csv(1, 50));
  for (const std::string& args : std::vector<std::string>{
           "--format json sample-gini " + file, "countries", "--seed 9 simulate --kind lognormal --shape 1 --count 5000",
        "--format json graduate 0.423", "table --max-m 10"}) {
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    EXPECT_EQ(first.exit_code, 0) << args;
    EXPECT_EQ(first.out, second.out) << args;
    EXPECT_FALSE(first.out.empty()) << args;
  }
}

TEST(CliBinary, JsonCarriesSameFieldsAsTable) {
  const auto json = run_cli("--format json exact -m 1 -n 100");
  const auto table = run_cli("exact -m 1 -n 100");
  const auto doc = Json::parse(json.out);
  EXPECT_EQ(doc["results"]["gini_exact"], "1/3");
  for (const auto& [key, value] : doc["results"].items()) {
    EXPECT_NE(table.out.find("results." + key + ":"), std::string::npos) << key;
  }
}

TEST(CliBinary, PopulationConventionFlag) {
  const std::string file = write_tmp("conv.csv", "0\n0\n0\n8\n");
  const auto doc = Json::parse(run_cli("--format json --convention population sample-gini " + file).out);
  EXPECT_NEAR(doc["results"]["gini"].get<double>(), 0.75, 1e-15);
}
