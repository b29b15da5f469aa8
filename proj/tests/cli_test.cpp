#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "commands.hpp"

using superosc::cli::run_cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

// Column `col` of every data row, as doubles.
std::vector<double> column(const std::string& csv, std::size_t col) {
  std::vector<double> out;
  const auto rows = lines(csv);
  for (std::size_t i = 1; i < rows.size(); ++i) out.push_back(std::stod(split(rows[i]).at(col)));
  return out;
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

// Checks one verify report against the documented schema.
void expect_report_schema(const nlohmann::json& j) {
  ASSERT_TRUE(j.is_object());
  EXPECT_EQ(j.size(), 5u);
  ASSERT_TRUE(j.contains("identity") && j["identity"].is_string());
  ASSERT_TRUE(j.contains("params") && j["params"].is_object());
  ASSERT_TRUE(j.contains("order") && j["order"].is_number_integer());
  ASSERT_TRUE(j.contains("status") && j["status"].is_string());
  const std::string status = j["status"];
  EXPECT_TRUE(status == "verified" || status == "mismatch" ||
              status == "printed_form_mismatch_corrected_form_verified");
  ASSERT_TRUE(j.contains("first_divergence"));
  const auto& d = j["first_divergence"];
  if (status == "verified") {
    EXPECT_TRUE(d.is_null());
  } else {
    ASSERT_TRUE(d.is_object());
    EXPECT_EQ(d.size(), 3u);
    EXPECT_TRUE(d["v"].is_number_integer());
    EXPECT_TRUE(d["lhs"].is_string());
    EXPECT_TRUE(d["rhs"].is_string());
  }
}

}  // namespace

TEST(CliCoeffs, Golden) {
  const Result r = run({"coeffs", "--n", "2", "--a", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "k,c\n0,4\n1,-4\n2,1\n");
  EXPECT_EQ(run({"coeffs", "--n", "2", "--a", "3"}).out, r.out);
  EXPECT_EQ(run({"coeffs", "--n", "0"}).out, "k,c\n0,1\n");
  EXPECT_EQ(run({"coeffs", "--n", "3", "--k", "5"}).out, "k,c\n");
  EXPECT_EQ(run({"coeffs", "--n", "2"}).out,
            "k,c\n0,1/4 + 1/2*x + 1/4*x^2\n1,1/2 - 1/2*x^2\n2,1/4 - 1/2*x + 1/4*x^2\n");
  EXPECT_EQ(run({"coeffs", "--n", "4", "--k-min", "1", "--k-max", "2", "--a", "1/2"}).out,
            "k,c\n1,27/64\n2,27/128\n");
  EXPECT_EQ(run({"coeffs", "--n", "2", "--a", "3", "--format", "json"}).out,
            "{\"k\":0,\"c\":\"4\"}\n{\"k\":1,\"c\":\"-4\"}\n{\"k\":2,\"c\":\"1\"}\n");
}

TEST(CliCoeffs, UsageErrors) {
  EXPECT_EQ(run({"coeffs", "--n", "2", "--k", "1", "--k-min", "0"}).code, 2);
  EXPECT_EQ(run({"coeffs", "--n", "2", "--a", "1/0"}).code, 2);
  EXPECT_EQ(run({"coeffs", "--n", "2", "--a", "0.5"}).code, 2);
  EXPECT_EQ(run({"coeffs"}).code, 2);
  EXPECT_EQ(run({"coeffs", "--n", "2", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliEval, Columns) {
  const Result r = run({"eval", "--n", "20", "--a", "1", "--x-min", "-2", "--x-max", "2", "--samples", "21"});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  EXPECT_EQ(rows.front(), "x,re_f,im_f,re_limit,im_limit,abs_error");
  EXPECT_EQ(rows.size(), 22u);
  EXPECT_LT(max_of(column(r.out, 5)), 1e-12);
  EXPECT_EQ(rows[11], "0,1,0,1,0,0");
  EXPECT_EQ(run({"eval", "--n", "4", "--x-min", "1", "--x-max", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "--n", "4", "--samples", "1"}).code, 2);
}

TEST(CliEval, DoublingNHalvesError) {
  const double e100 = max_of(column(run({"eval", "--n", "100", "--a", "2"}).out, 5));
  const double e200 = max_of(column(run({"eval", "--n", "200", "--a", "2"}).out, 5));
  EXPECT_GT(e100 / e200, 1.8);
  EXPECT_LT(e100 / e200, 2.2);
}

TEST(CliVerify, JsonSchemaAndExitCodes) {
  const Result r = run({"verify", "--suite", "recurrence", "--max-n", "10"});
  EXPECT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  EXPECT_EQ(rows.size(), 65u);
  for (const auto& line : rows) {
    const auto j = nlohmann::json::parse(line);
    expect_report_schema(j);
    EXPECT_EQ(j["status"], "verified");
  }

  const Result s1 = run({"verify", "--suite", "s1-m1"});
  EXPECT_EQ(s1.code, 0);
  bool flagged = false;
  for (const auto& line : lines(s1.out)) {
    const auto j = nlohmann::json::parse(line);
    expect_report_schema(j);
    EXPECT_NE(j["status"], "mismatch");
    flagged |= j["status"] == "printed_form_mismatch_corrected_form_verified";
  }
  EXPECT_TRUE(flagged);

  EXPECT_EQ(run({"verify", "--suite", "no-such"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "s1-m1", "--strict"}).code, 1);
  EXPECT_EQ(run({"verify", "--suite", "recurrence", "--strict"}).code, 0);
}

TEST(CliVerify, CsvAndListing) {
  const Result r = run({"verify", "--suite", "16a", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "identity,params,order,status,v,lhs,rhs\n"
            "16a,a=0,12,verified,,,\n16a,a=1,12,verified,,,\n"
            "16a,a=2,12,verified,,,\n16a,a=3,12,verified,,,\n");
  const Result list = run({"verify", "--list"});
  EXPECT_EQ(list.code, 0);
  EXPECT_NE(list.out.find("\"identity\":\"hermite-conv\""), std::string::npos);
}

TEST(CliGenfun, MZeroSeriesIsG) {
  const Result s2 = run({"genfun", "--series", "s2", "--k", "2", "--alphas", "1", "--order", "6"});
  const Result g = run({"genfun", "--series", "g", "--k", "2", "--order", "6"});
  EXPECT_EQ(s2.code, 0);
  EXPECT_EQ(s2.out, g.out);
  EXPECT_EQ(lines(g.out)[3], "2,1/4 - 1/2*x + 1/4*x^2");
  EXPECT_EQ(run({"genfun", "--series", "s2", "--m", "1", "--k", "0"}).code, 2);
  EXPECT_EQ(run({"genfun", "--m", "1", "--k", "2", "--alphas", "1"}).code, 2);
}

TEST(CliTables, Goldens) {
  EXPECT_EQ(run({"stirling", "--c-max", "3"}).out,
            "c,d,s2\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,1\n2,2,1\n3,0,0\n3,1,1\n3,2,3\n3,3,1\n");
  EXPECT_EQ(run({"hermite", "--n-max", "3"}).out, "n,h\n0,1\n1,2*z\n2,-2 + 4*z^2\n3,-12*z + 8*z^3\n");
  EXPECT_EQ(run({"hermite", "--n", "2"}).out, "n,h\n2,-2 + 4*z^2\n");
  EXPECT_EQ(run({"bernstein", "--v", "3", "--y", "1/2"}).out, "k,b\n0,1/8\n1,3/8\n2,3/8\n3,1/8\n");
  EXPECT_EQ(run({"bernstein", "--v", "1"}).out, "k,b\n0,1 - y\n1,y\n");
}

TEST(CliSupershift, Sweeps) {
  const Result z = run({"supershift", "--kind", "z", "--m", "2", "--p", "1", "--a", "1.5", "--n-list", "50,100,200"});
  ASSERT_EQ(z.code, 0);
  const auto ze = column(z.out, 1);
  ASSERT_EQ(ze.size(), 3u);
  EXPECT_GT(ze[0], ze[1]);
  EXPECT_GT(ze[1], ze[2]);

  const Result dpf = run({"supershift", "--kind", "dpf", "--a", "1", "--p", "2"});
  for (double e : column(dpf.out, 1)) EXPECT_LT(e, 1e-12);

  // y with g = identity and h = 1 is F_n itself.
  for (const char* n : {"50", "100"}) {
    const Result y = run({"supershift", "--kind", "y", "--g", "0,1", "--h", "1", "--a", "2", "--n-list", n});
    const Result e = run({"eval", "--n", n, "--a", "2"});
    EXPECT_NEAR(column(y.out, 1)[0], max_of(column(e.out, 5)), 1e-12);
  }

  const Result values = run({"supershift", "--kind", "y", "--g", "0,0,1", "--h", "1,1", "--weight-arg", "real",
                             "--a", "1.5", "--n-list", "10", "--samples", "3", "--x-min", "-0.5", "--x-max", "0.5", "--values"});
  const auto rows = lines(values.out);
  EXPECT_EQ(rows.front(), "n,x,re_value,im_value,re_limit,im_limit,abs_error");
  EXPECT_EQ(rows.size(), 4u);
  EXPECT_EQ(split(rows[2])[4], "2.5");

  EXPECT_EQ(run({"supershift", "--g", "x"}).code, 2);
  EXPECT_EQ(run({"supershift", "--kind", "w"}).code, 2);
  EXPECT_EQ(run({"supershift", "--weight-arg", "complex"}).code, 2);
  EXPECT_EQ(run({"supershift", "--x-min", "1", "--x-max", "0"}).code, 2);
}

TEST(CliOutput, WritesFile) {
  const std::string path = ::testing::TempDir() + "superosc_cli_out.csv";
  const Result r = run({"coeffs", "--n", "2", "--a", "3", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path, std::ios::binary);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, "k,c\n0,4\n1,-4\n2,1\n");
  std::remove(path.c_str());
  EXPECT_EQ(run({"coeffs", "--n", "2", "--out", "/nonexistent-dir/x.csv"}).code, 2);
}
