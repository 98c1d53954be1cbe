#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

const std::string kBin = LZ_DYSON_BIN;

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const fs::path out_path = fs::temp_directory_path() / "lz_cli_stdout.txt";
  const std::string cmd = kBin + " " + args + " > " + out_path.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

std::vector<double> parse_row(const std::string& line) {
  std::vector<double> values;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) values.push_back(std::stod(cell));
  return values;
}

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("no subcommand or bad flags exit with code 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("--bogus").exit_code == 2);
  CHECK(run("evolve --no-such-flag 1").exit_code == 2);
  CHECK(run("evolve").exit_code == 2);  // gamma missing
}

TEST_CASE("evolve emits a self-describing trajectory") {
  const RunResult r = run("evolve --gamma 0 --tau-max 10");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() > 3);
  CHECK(lines[0] == "# lz-dyson evolve gamma=0 method=expmid step=0.002 tau-max=10");
  CHECK(lines[1] == "tau,re_a,im_a,re_b,im_b,norm");
  for (std::size_t i = 2; i < lines.size(); i += 997) {
    const auto row = parse_row(lines[i]);
    REQUIRE(row.size() == 6);
    const double mod_a = std::hypot(row[1], row[2]);
    CHECK(std::abs(mod_a - 1.0) <= 1e-9);
    CHECK(std::abs(row[5] - 1.0) <= 1e-9);
  }
}

TEST_CASE("evolve final row approaches the closed form") {
  const fs::path out = temp_file("lz_evolve.csv");
  const RunResult r =
      run("evolve --gamma 0.5 --tau-max 60 --output " + out.string());
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(slurp(out));
  const auto row = parse_row(lines.back());
  REQUIRE(row.size() == 6);
  const double p_end = row[1] * row[1] + row[2] * row[2];
  CHECK(std::abs(p_end - 0.20788) <= 2e-2);
  fs::remove(out);
}

TEST_CASE("validation failures exit 2 and write nothing") {
  const fs::path out = temp_file("lz_should_not_exist.csv");
  fs::remove(out);
  CHECK(run("evolve --gamma -1 --output " + out.string()).exit_code == 2);
  CHECK_FALSE(fs::exists(out));
  CHECK(run("evolve --gamma 0.5 --tau-max -2 --output " + out.string()).exit_code == 2);
  CHECK_FALSE(fs::exists(out));
  CHECK(run("evolve --gamma 0.5 --method euler --output " + out.string()).exit_code == 2);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("single-point sweep at gamma zero is exact") {
  const RunResult r = run("sweep --gamma-min 0 --gamma-max 0");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[1] == "gamma,p_numeric,p_analytic,abs_error");
  CHECK(lines[2] == "0,1,1,0");
}

TEST_CASE("sweep rejects an empty range") {
  CHECK(run("sweep --gamma-min 1 --gamma-max 0.5").exit_code == 2);
  CHECK(run("sweep --gamma-min 1").exit_code == 2);
  CHECK(run("sweep").exit_code == 2);
  CHECK(run("sweep --gammas 0.5 --gamma-min 0").exit_code == 2);  // exclusive
  CHECK(run("sweep --gammas 0.1,-0.5").exit_code == 2);
}

TEST_CASE("sweep over the benchmark gammas stays within 1e-2") {
  const RunResult r = run("sweep --gammas 0.1,0.5,1,2");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 6);
  double worst = 0.0;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto row = parse_row(lines[i]);
    REQUIRE(row.size() == 4);
    CHECK(std::abs(row[2] - std::exp(-std::numbers::pi * row[0])) <= 1e-12);
    worst = std::max(worst, row[3]);
  }
  CHECK(worst < 1e-2);
  // rows come out sorted by gamma
  CHECK(parse_row(lines[2])[0] == 0.1);
  CHECK(parse_row(lines[5])[0] == 2.0);
}

TEST_CASE("sweep range generation is inclusive") {
  const RunResult r = run("sweep --gamma-min 0 --gamma-max 0.2 --gamma-step 0.1 --tau-max 10");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 5);  // banner + header + 3 rows
}

TEST_CASE("dyson subcommand emits the term table") {
  const RunResult r = run("dyson --order 1");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[1] == "n,re_numeric,im_numeric,analytic,abs_error");
  const auto row = parse_row(lines[2]);
  REQUIRE(row.size() == 5);
  CHECK(row[0] == 1.0);
  CHECK(row[4] < 0.016);

  const RunResult r2 = run("dyson --order 2");
  REQUIRE(r2.exit_code == 0);
  CHECK(parse_row(lines_of(r2.out)[2])[4] < 0.04);
}

TEST_CASE("dyson order validation") {
  CHECK(run("dyson --order 5").exit_code == 2);
  CHECK(run("dyson --order 0").exit_code == 2);
  CHECK(run("dyson --order 3").exit_code == 2);           // slow order is gated
  CHECK(run("dyson --order 3 --expensive").exit_code == 0);
}

TEST_CASE("series emits partial sums converging to the limit") {
  const RunResult r = run("series --gamma 0.5 --order 25");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2 + 26);
  CHECK(lines[1] == "k,partial_sum,limit,abs_error");
  const auto last = parse_row(lines.back());
  CHECK(last[0] == 25.0);
  CHECK(std::abs(last[1] - 0.45593812776599624) <= 1e-12);
  CHECK(last[3] <= 1e-12);
}

TEST_CASE("verify subcommand contract") {
  CHECK(run("verify").exit_code == 0);  // fresh build, defaults
  CHECK(run("verify --only analytic").exit_code == 0);
  CHECK(run("verify --only linalg2").exit_code == 0);
  CHECK(run("verify --only nosuchmodule").exit_code == 2);
  CHECK(run("verify --epsilon 1 --omega 50").exit_code == 2);
  // deliberately coarse step breaks the rk4 norm check
  CHECK(run("verify --only propagator --step 0.5").exit_code == 1);
}

TEST_CASE("identical invocations produce byte-identical files") {
  const fs::path a = temp_file("lz_sweep_a.csv");
  const fs::path b = temp_file("lz_sweep_b.csv");
  REQUIRE(run("sweep --gammas 0.1,0.5,1 --tau-max 20 --output " + a.string()).exit_code == 0);
  REQUIRE(run("sweep --gammas 0.1,0.5,1 --tau-max 20 --output " + b.string()).exit_code == 0);
  const std::string content_a = slurp(a);
  CHECK(!content_a.empty());
  CHECK(content_a == slurp(b));
  fs::remove(a);
  fs::remove(b);

  const fs::path c = temp_file("lz_dyson_a.csv");
  const fs::path d = temp_file("lz_dyson_b.csv");
  REQUIRE(run("dyson --order 1 --output " + c.string()).exit_code == 0);
  REQUIRE(run("dyson --order 1 --output " + d.string()).exit_code == 0);
  CHECK(slurp(c) == slurp(d));
  fs::remove(c);
  fs::remove(d);
}

TEST_CASE("config file supplies defaults, flags override") {
  const fs::path cfg = temp_file("lz_cfg.txt");
  {
    std::ofstream out(cfg);
    out << "# comment line\n";
    out << "gamma=0.25\n";
    out << "tau-max = 5\n";
  }
  {
    const RunResult r = run("evolve --config " + cfg.string());
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    CHECK(lines[0] == "# lz-dyson evolve gamma=0.25 method=expmid step=0.002 tau-max=5");
  }
  {
    const RunResult r = run("evolve --gamma 0.5 --config " + cfg.string());
    REQUIRE(r.exit_code == 0);
    CHECK(lines_of(r.out)[0] ==
          "# lz-dyson evolve gamma=0.5 method=expmid step=0.002 tau-max=5");
  }
  {
    {
      std::ofstream out(cfg);
      out << "gamma=not_a_number\n";
    }
    const RunResult bad = run("evolve --config " + cfg.string());
    CHECK(bad.exit_code == 2);
  }
  {
    {
      std::ofstream out(cfg);
      out << "unknown-key=3\n";
    }
    CHECK(run("evolve --gamma 1 --config " + cfg.string()).exit_code == 2);
  }
  CHECK(run("evolve --gamma 1 --config /no/such/file.cfg").exit_code == 2);
  fs::remove(cfg);
}
