#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::path(TEST_WORK_DIR) / "cli";

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Result run(const std::string& args) {
  fs::create_directories(kWork);
  const fs::path out = kWork / "stdout.txt";
  const fs::path err = kWork / "stderr.txt";
  const std::string cmd = std::string("\"") + SEMICIRCLE_CLI + "\" " + args + " >\"" + out.string() +
                          "\" 2>\"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::vector<std::vector<std::string>> data_rows(const std::string& csv, bool skip_header) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv);
  std::string line;
  bool header = skip_header;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST(Cli, SpectrumSmallestSize) {
  const auto r = run("spectrum --dist shifted_exponential --n 2 --seed 7");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = data_rows(r.out, false);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_LE(std::stod(rows[0][0]), std::stod(rows[1][0]));
  EXPECT_NE(r.out.find("# "), std::string::npos);
}

TEST(Cli, SpectrumIsByteIdenticalAcrossRuns) {
  const auto a = run("spectrum --dist shifted_poisson --n 40 --seed 3");
  const auto b = run("spectrum --dist shifted_poisson --n 40 --seed 3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto c = run("spectrum --dist shifted_poisson --n 40 --seed 4");
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, SpectrumWritesMatrix) {
  const fs::path m = kWork / "matrix.csv";
  const fs::path s = kWork / "spec.csv";
  const auto r = run("spectrum --dist log_tail_heavy --n 5 --seed 1 --out \"" + s.string() +
                     "\" --matrix-out \"" + m.string() + "\"");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(data_rows(slurp(m), false).size(), 5u);
  EXPECT_EQ(data_rows(slurp(s), false).size(), 5u);
}

TEST(Cli, FigureDensityShape) {
  const auto r = run("figure --fig 1 --seed 1");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = data_rows(r.out, true);
  ASSERT_EQ(rows.size(), 601u);
  for (const auto& row : rows) ASSERT_EQ(row.size(), 4u);
  EXPECT_NE(r.out.find("x,kde_n50,kde_n800,semicircle_pdf"), std::string::npos);
}

TEST(Cli, FigureCdfMonotoneInDirectory) {
  const fs::path dir = kWork / "figs";
  fs::remove_all(dir);
  const auto r = run("figure --fig 3 --seed 2 --out \"" + dir.string() + "\"");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = data_rows(slurp(dir / "figure3.csv"), true);
  ASSERT_EQ(rows.size(), 601u);
  for (std::size_t col : {1u, 2u, 3u}) {
    double prev = -1.0;
    for (const auto& row : rows) {
      const double v = std::stod(row[col]);
      EXPECT_GE(v, prev);
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
      prev = v;
    }
  }
}

TEST(Cli, FigureRejectsUnknownId) {
  const auto r = run("figure --fig 5");
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ConvergenceShape) {
  const auto r = run("convergence --dist standard_normal --n 20 --replicates 1 --seed 1");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = data_rows(r.out, true);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][0], "replicate");
  EXPECT_EQ(rows[1][0], "median");
  EXPECT_EQ(rows[0].size(), 8u);
}

TEST(Cli, ConvergenceFromConfigFile) {
  const fs::path cfg = kWork / "exp.ini";
  fs::create_directories(kWork);
  std::ofstream(cfg) << "dist=shifted_exponential\nsizes=20,30\nreplicates=2\nkernel=cauchy\n"
                        "bandwidth=0.25\ngrid=-3,3,61\n";
  const auto r = run("convergence --config \"" + cfg.string() + "\" --seed 5");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = data_rows(r.out, true);
  ASSERT_EQ(rows.size(), 2u * 2u + 2u);
  EXPECT_EQ(rows[0][4], "0.25");
  EXPECT_EQ(rows[0][3], "5");
  EXPECT_NE(r.out.find("kernel=cauchy"), std::string::npos);
}

TEST(Cli, ConvergenceRejectsBadConfig) {
  EXPECT_EQ(run("convergence --replicates 0").code, 1);
  EXPECT_EQ(run("convergence --dist nope").code, 1);
  EXPECT_EQ(run("convergence --grid 3,1,10").code, 1);
  EXPECT_EQ(run("convergence --bandwidth -1").code, 1);
}

TEST(Cli, IdentityCheckPasses) {
  for (const char* args : {"identity-check --n 50 --seed 1", "identity-check --n 2 --seed 1"}) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << args << "\n" << r.err;
    EXPECT_NE(r.out.find("max_abs_difference="), std::string::npos);
  }
}

TEST(Cli, IdentityCheckReadsSpectrumFile) {
  const fs::path s = kWork / "id_spec.csv";
  ASSERT_EQ(run("spectrum --n 30 --seed 2 --out \"" + s.string() + "\"").code, 0);
  EXPECT_EQ(run("identity-check --spectrum \"" + s.string() + "\" --bandwidth 0.2").code, 0);

  const fs::path bad = kWork / "corrupt.csv";
  std::ofstream(bad) << "0.25\n1.5\nbroken\n";
  const auto r = run("identity-check --spectrum \"" + bad.string() + "\" --bandwidth 0.2");
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.err.find("corrupt.csv:3"), std::string::npos) << r.err;
  EXPECT_NE(run("identity-check --spectrum \"" + (kWork / "absent.csv").string() + "\"").code, 0);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("nonsense").code, 1);
  EXPECT_EQ(run("spectrum --n 1").code, 1);
  EXPECT_EQ(run("spectrum --dist cauchy").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}
