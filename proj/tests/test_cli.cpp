// End-to-end checks of the command line tool; each case spawns the built
// binary.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("netlines_cli_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

struct RunOutcome {
  int exit_code = -1;
  std::string output;
};

RunOutcome run_cli(const std::string& args) {
  const std::string command = std::string(NETLINES_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buffer;
  RunOutcome r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe)) {
    r.output.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text) n += c == '\n' ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("gen parity writes the full truth table") {
  TempDir dir;
  const std::string out = dir.file("parity4.csv");
  const RunOutcome r = run_cli("gen parity --n 4 --out " + out);
  CHECK(r.exit_code == 0);
  CHECK(count_lines(read_file(out)) == 16);
}

TEST_CASE("gen clumps is byte-reproducible under a fixed seed") {
  TempDir dir;
  const std::string a = dir.file("a.csv");
  const std::string b = dir.file("b.csv");
  CHECK(run_cli("gen clumps --n 25 --k 3 --p 600 --seed 1 --out " + a).exit_code == 0);
  CHECK(run_cli("gen clumps --n 25 --k 3 --p 600 --seed 1 --out " + b).exit_code == 0);
  const std::string bytes = read_file(a);
  CHECK(bytes == read_file(b));
  CHECK(count_lines(bytes) == 600);
}

TEST_CASE("train solves xor with two hidden units and predict replays it") {
  TempDir dir;
  const std::string data = dir.file("xor.csv");
  {
    std::ofstream out(data);
    out << "1,1,1\n1,-1,-1\n-1,1,-1\n-1,-1,1\n";
  }
  const std::string model = dir.file("xor.model");
  const RunOutcome train =
      run_cli("train --data " + data + " --emax 0 --hmax 10 --out " + model);
  CHECK(train.exit_code == 0);
  CHECK(train.output.find("H=2") != std::string::npos);

  const RunOutcome predict = run_cli("predict --model " + model + " --data " + data);
  CHECK(predict.exit_code == 0);
  CHECK(predict.output == "1\n-1\n-1\n1\n");

  const RunOutcome with_conf = run_cli("predict --model " + model + " --data " +
                                       data + " --confidence 0.5");
  CHECK(with_conf.exit_code == 0);
  // one prediction and two unit confidences per row
  std::istringstream lines(with_conf.output);
  std::string line;
  while (std::getline(lines, line)) {
    CHECK(std::count(line.begin(), line.end(), ',') == 2);
  }

  // the saved model reloads into an identical file
  const std::string copy = dir.file("copy.model");
  const RunOutcome eval =
      run_cli("eval --model " + model + " --data " + data);
  CHECK(eval.exit_code == 0);
  CHECK(eval.output.find("eps=0.000000") != std::string::npos);
  (void)copy;
}

TEST_CASE("train is reproducible and refuses missing files") {
  TempDir dir;
  const std::string data = dir.file("blob.csv");
  {
    std::ofstream out(data);
    std::mt19937_64 rng(3);
    std::normal_distribution<double> gauss(0.0, 0.3);
    for (int i = 0; i < 15; ++i) {
      out << -2.0 + gauss(rng) << ',' << gauss(rng) << ",-1\n";
      out << 2.0 + gauss(rng) << ',' << gauss(rng) << ",1\n";
    }
  }
  const std::string m1 = dir.file("m1");
  const std::string m2 = dir.file("m2");
  CHECK(run_cli("train --data " + data + " --seed 5 --out " + m1).exit_code == 0);
  CHECK(run_cli("train --data " + data + " --seed 5 --out " + m2).exit_code == 0);
  CHECK(read_file(m1) == read_file(m2));

  const RunOutcome missing =
      run_cli("train --data " + dir.file("nope.csv") + " --out " + dir.file("m"));
  CHECK(missing.exit_code == 2);
  CHECK_FALSE(std::filesystem::exists(dir.file("m")));

  const std::string bad = dir.file("bad.csv");
  {
    std::ofstream out(bad);
    out << "1,2,1\n1,2\n";
  }
  const RunOutcome parse =
      run_cli("train --data " + bad + " --out " + dir.file("m"));
  CHECK(parse.exit_code == 3);
  CHECK(parse.output.find("line 2") != std::string::npos);
}

TEST_CASE("eval protocols run from the command line") {
  TempDir dir;
  const std::string data = dir.file("tri.csv");
  {
    std::ofstream out(data);
    std::mt19937_64 rng(4);
    std::normal_distribution<double> gauss(0.0, 0.2);
    for (int i = 0; i < 8; ++i) {
      out << -3.0 + gauss(rng) << ",a\n";
      out << 0.0 + gauss(rng) << ",b\n";
      out << 3.0 + gauss(rng) << ",c\n";
    }
  }
  const std::string report = dir.file("report.csv");
  const RunOutcome loo = run_cli("eval --data " + data +
                                 " --loo --multiclass ton --seed 2 --report " +
                                 report);
  CHECK(loo.exit_code == 0);
  CHECK(loo.output.find("runs=24") != std::string::npos);
  CHECK(count_lines(read_file(report)) == 25);  // header + one row per fit

  const RunOutcome holdout = run_cli(
      "eval --data " + data + " --holdout 18 --repeats 3 --multiclass wta --seed 2");
  CHECK(holdout.exit_code == 0);
  CHECK(holdout.output.find("runs=3") != std::string::npos);
}

TEST_CASE("ton-ensemble training reports the committee") {
  TempDir dir;
  const std::string data = dir.file("tri.csv");
  {
    std::ofstream out(data);
    std::mt19937_64 rng(6);
    std::normal_distribution<double> gauss(0.0, 0.2);
    for (int i = 0; i < 6; ++i) {
      out << -3.0 + gauss(rng) << ",0.1,a\n";
      out << 0.0 + gauss(rng) << ",-0.1,b\n";
      out << 3.0 + gauss(rng) << ",0.2,c\n";
    }
  }
  const std::string model = dir.file("ens.model");
  const RunOutcome train = run_cli("train --data " + data +
                                   " --multiclass ton-ensemble --ensemble 3 "
                                   "--seed 7 --out " +
                                   model);
  CHECK(train.exit_code == 0);
  const std::string text = read_file(model);
  CHECK(text.find("kind ensemble") != std::string::npos);
  CHECK(text.find("tons 3") != std::string::npos);
}
