#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CliResult {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const std::filesystem::path err_path =
      std::filesystem::temp_directory_path() /
      ("banet_cli_err_" + std::to_string(++counter) + ".txt");
  const std::string command =
      std::string(BANET_CLI_PATH) + " " + args + " 2>" + err_path.string();
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
    result.out.append(buffer, got);
  }
  const int rc = pclose(pipe);
  result.status = WEXITSTATUS(rc);
  result.err = slurp(err_path);
  std::filesystem::remove(err_path);
  return result;
}

std::filesystem::path write_file(const std::string& name, const std::string& text) {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

int line_count(const std::string& text) {
  int lines = 0;
  for (char c : text) lines += c == '\n';
  return lines;
}

}  // namespace

TEST_CASE("cli spacetime") {
  const CliResult r = run_cli(
      "spacetime --spec \"circulant n=4 coeffs=3,0\" --seed 1000 --steps 4 "
      "--format text");
  CHECK(r.status == 0);
  CHECK(r.out == "#...\n##..\n#.#.\n####\n....\n");
  CHECK(r.err.empty());

  const CliResult pbm = run_cli(
      "spacetime --spec \"circulant n=4 coeffs=3,0\" --seed unit:0 --steps 1 "
      "--format pbm");
  CHECK(pbm.status == 0);
  CHECK(pbm.out == "P1\n4 2\n1000\n1100\n");

  // file input with comment lines works too
  const auto spec_file = write_file(
      "cli_spec.txt", "# a circulant network\ncirculant n=4 coeffs=3,0\n");
  const CliResult from_file =
      run_cli("spacetime " + spec_file.string() + " --seed 1000 --steps 2");
  CHECK(from_file.status == 0);
  CHECK(from_file.out == "#...\n##..\n#.#.\n");
}

TEST_CASE("cli circulant enum and step") {
  const CliResult r = run_cli("circulant enum --n 5 --k 2");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "circulant n=5 coeffs=4,0\n"
        "circulant n=5 coeffs=4,1\n"
        "circulant n=5 coeffs=4,2\n"
        "circulant n=5 coeffs=4,3\n");

  const CliResult s = run_cli(
      "circulant step --spec \"circulant n=4 coeffs=3,0\" --seed 1000 --steps 3");
  CHECK(s.status == 0);
  CHECK(s.out == "1111\n");
}

TEST_CASE("cli step and orbit") {
  const auto ban = write_file("cli_net3.ban", "circulant n=3 coeffs=2,0\n");
  const CliResult step =
      run_cli("step " + ban.string() + " --schedule \"{0}{1,2}\" --seed 100");
  CHECK(step.status == 0);
  CHECK(step.out == "110\n");

  const CliResult orb = run_cli("orbit " + ban.string() + " --seed 100");
  CHECK(orb.status == 0);
  CHECK(orb.out == "transient=1 period=3 cycle=110,101,011\n");
}

TEST_CASE("cli show echoes a loadable canonical form") {
  const auto ban = write_file("cli_show.ban", "n=2\n0: x0 ^ x1\n1: x0 ^ x1\n");
  const CliResult r = run_cli("show " + ban.string());
  CHECK(r.status == 0);
  CHECK(r.out.find("n=2\n0: x0 ^ x1\n1: x0 ^ x1\n") == 0);
  CHECK(r.out.find("# arcs: (0,0) (0,1) (1,0) (1,1)") != std::string::npos);
  CHECK(r.out.find("# network: non-monotone") != std::string::npos);
  // commented analysis keeps the output parseable as .ban text
  const auto echoed = write_file("cli_show_echo.ban", r.out);
  CHECK(run_cli("show " + echoed.string()).status == 0);
}

TEST_CASE("cli graph emits dot") {
  const auto ban = write_file("cli_neg.ban", "n=1\n0: !x0\n");
  const CliResult r = run_cli("graph " + ban.string() + " --mode parallel");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "digraph transitions {\n"
        "  \"0\";\n"
        "  \"1\";\n"
        "  \"0\" -> \"1\";\n"
        "  \"1\" -> \"0\";\n"
        "}\n");
}

TEST_CASE("cli attractor reports") {
  const auto ban = write_file("cli_xor.ban", "n=2\n0: x0 ^ x1\n1: x0 ^ x1\n");
  const CliResult text = run_cli("attractors " + ban.string() + " --mode asynchronous");
  CHECK(text.status == 0);
  CHECK(text.out ==
        "n=2 mode=asynchronous attractors=2\n"
        "attractor 0: stable configuration size=1 members=00\n"
        "attractor 1: stable oscillation size=3 members=10,01,11\n");

  const CliResult json =
      run_cli("attractors " + ban.string() + " --mode general --format json");
  CHECK(json.status == 0);
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["mode"] == "general");
  CHECK(doc["attractors"].size() == 1);

  // identical invocations produce identical bytes
  CHECK(run_cli("attractors " + ban.string() + " --mode general --format json").out ==
        json.out);
}

TEST_CASE("cli error paths: one diagnostic line, nothing on stdout") {
  const CliResult unknown = run_cli("frobnicate");
  CHECK(unknown.status == 2);
  CHECK(unknown.out.empty());
  CHECK(line_count(unknown.err) == 1);

  const CliResult missing = run_cli("show /nonexistent/net.ban");
  CHECK(missing.status == 1);
  CHECK(missing.out.empty());
  CHECK(line_count(missing.err) == 1);

  const auto bad = write_file("cli_bad.ban", "n=2\n0: x9\n1: x0\n");
  const CliResult syntax = run_cli("show " + bad.string());
  CHECK(syntax.status == 1);
  CHECK(syntax.out.empty());
  CHECK(line_count(syntax.err) == 1);
  CHECK(syntax.err.find("2:4") != std::string::npos);  // line:column

  const CliResult badseed = run_cli(
      "circulant step --spec \"circulant n=4 coeffs=3,0\" --seed 10 --steps 1");
  CHECK(badseed.status == 1);
  CHECK(line_count(badseed.err) == 1);

  const CliResult badflag = run_cli("circulant enum --n 5");
  CHECK(badflag.status == 2);
  CHECK(badflag.out.empty());
  CHECK(line_count(badflag.err) == 1);

  // capacity errors fail the analysis, not the usage
  const CliResult cap = run_cli("scan-sensitivity --size 9");
  CHECK(cap.status == 1);
  CHECK(line_count(cap.err) == 1);
}

TEST_CASE("cli power-two suite and scan exit codes") {
  const CliResult suite = run_cli("circulant verify --p 2");
  CHECK(suite.status == 0);
  CHECK(suite.out.find("result: PASS") != std::string::npos);

  const CliResult scan = run_cli("scan-sensitivity --size 1");
  CHECK(scan.status == 0);
  CHECK(scan.out == "scan-sensitivity size=1 candidates=4 hits=0\n");
}

TEST_CASE("cli output carries no colour escapes") {
  const CliResult r = run_cli("circulant enum --n 4 --k 2");
  CHECK(r.out.find('\x1b') == std::string::npos);
}
