// Exercises the installed command surface end to end: spawns the binary,
// captures stdout, checks exit codes and golden bytes.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string g_tool;
int g_failures = 0;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string command = g_tool + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    std::cerr << "cannot spawn: " << command << "\n";
    std::exit(2);
  }
  std::string output;
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    std::cerr << "FAIL: " << what << "\n";
    ++g_failures;
  }
}

void expect_contains(const RunResult& result, const std::string& needle,
                     const std::string& what) {
  expect(result.output.find(needle) != std::string::npos,
         what + " (missing '" + needle + "')");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream(path, std::ios::binary) << content;
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: cli_driver <tool> <golden-dir>\n";
    return 2;
  }
  g_tool = argv[1];
  const std::string golden_dir = argv[2];
  const auto temp =
      std::filesystem::temp_directory_path() / "modcanon-cli-test";
  std::filesystem::create_directories(temp);

  // tile: greedy success, canonical document bytes.
  const auto tiled = run("tile -a 0,1,4 -p 2");
  expect(tiled.exit_code == 0, "tile exits 0");
  expect(tiled.output == read_file(golden_dir + "/b2_canon.json"),
         "tile document matches the golden bytes");

  // tile: parse errors.
  expect(run("tile -a bogus -p 2").exit_code == 2, "bad pattern exits 2");
  expect(run("tile -a 1,2 -p 2").exit_code == 2, "pattern without 0 exits 2");
  expect(run("tile -a 0,1 -p 9").exit_code == 2, "composite modulus exits 2");
  expect(run("bogus-command").exit_code == 2, "unknown subcommand exits 2");

  // tile: stuck without fallback, lifted with it.
  expect(run("tile -a 0,1,3 -p 3").exit_code == 3, "stuck exits 3");
  const auto lifted = run("tile -a 0,1,3 -p 3 --fallback --format text");
  expect(lifted.exit_code == 0, "fallback exits 0");
  expect_contains(lifted, "n       24", "fallback period");
  expect_contains(lifted, "compact no", "fallback is not compact");

  // construct matches tile up to provenance.
  const auto constructed = run("construct -k 2 --verify --format text");
  expect(constructed.exit_code == 0, "construct exits 0");
  expect_contains(constructed, "entries {0,2,5,6,8,9,10}", "construct entries");
  expect_contains(constructed, "n       15", "construct period");

  // table1.
  const auto table = run("table1 --max 8 --format text");
  expect(table.exit_code == 0, "table exits 0");
  expect(table.output == "2\t3\n3\t7\n4\t15\n5\t21\n6\t63\n7\t127\n8\t63\n",
         "table values");

  // verify: valid, tampered, malformed.
  const std::string doc_path = (temp / "canon.json").string();
  write_file(doc_path, tiled.output);
  const auto verified = run("verify " + doc_path);
  expect(verified.exit_code == 0, "verify exits 0");
  expect_contains(verified, "valid", "verify report");

  std::string tampered = tiled.output;
  const auto pos = tampered.find("    2,\n");
  if (pos != std::string::npos) tampered.erase(pos, 7);
  const std::string tampered_path = (temp / "tampered.json").string();
  write_file(tampered_path, tampered);
  expect(run("verify " + tampered_path).exit_code == 1, "tampered doc exits 1");

  const std::string malformed_path = (temp / "malformed.json").string();
  write_file(malformed_path, "{not json");
  expect(run("verify " + malformed_path).exit_code == 2, "malformed doc exits 2");

  // verify under a different modulus fails.
  expect(run("verify " + doc_path + " -p 3").exit_code == 1,
         "wrong modulus exits 1");

  // verify reports the informational facts.
  const auto z7_verified = run("verify " + golden_dir + "/rt2c_z7.json");
  expect(z7_verified.exit_code == 0, "z7 canon verifies");
  expect_contains(z7_verified, "vuza: yes", "z7 canon is non-periodic");
  const auto exact_verified = run("verify " + golden_dir + "/exact_z16.json");
  expect(exact_verified.exit_code == 0, "exact canon verifies");
  expect_contains(exact_verified, "vuza: no", "exact canon is periodic");

  // construct at the smallest order.
  const auto k1 = run("construct -k 1 --format text");
  expect(k1.exit_code == 0, "construct k=1 exits 0");
  expect_contains(k1, "entries {0}", "construct k=1 entries");
  expect_contains(k1, "n       3", "construct k=1 period");

  // render text and svg.
  const std::string exact_path = golden_dir + "/exact_z16.json";
  const auto grid = run("render " + exact_path);
  expect(grid.exit_code == 0, "render exits 0");
  expect_contains(grid, "  0 ##..##..........", "rendered first voice");
  expect_contains(grid, " 10 ..........##..##", "rendered last voice");
  const auto svg = run("render " + exact_path + " --style svg");
  expect(svg.exit_code == 0, "svg render exits 0");
  expect_contains(svg, "<svg", "svg header");

  const auto b2_grid = run("render " + doc_path);
  expect_contains(b2_grid, "    ######3##33####", "aggregate donset digits");

  // vuza-n.
  const auto admissible = run("vuza-n 72 --format text");
  expect_contains(admissible, "admissible", "72 admissible");
  const auto forbidden = run("vuza-n 12 --format text");
  expect_contains(forbidden, "forbidden, form p^a q", "12 forbidden");

  // oracle.
  const auto minimal = run("oracle minimal -a 0,1,4 -p 2 --format text");
  expect(minimal.exit_code == 0, "oracle minimal exits 0");
  expect_contains(minimal, "entries {0,2,5,6,8,9,10}", "oracle entries");
  const auto census = run("oracle census -n 4 --format text");
  expect(census.exit_code == 0, "census exits 0");
  expect_contains(census, "{0,1} | {0,2}", "census pair");
  expect_contains(census, "3 tilings of Z_4", "census count");

  // pattern from a file.
  const std::string pattern_path = (temp / "pattern.txt").string();
  write_file(pattern_path, "0, 1, 4\n");
  const auto from_file = run("tile -a @" + pattern_path + " -p 2 --format text");
  expect(from_file.exit_code == 0, "pattern file exits 0");
  expect_contains(from_file, "n       15", "pattern file result");

  // output to a file.
  const std::string out_path = (temp / "out.json").string();
  const auto piped = run("tile -a 0,1,4 -p 2 -o " + out_path);
  expect(piped.exit_code == 0, "file output exits 0");
  expect(read_file(out_path) == tiled.output, "file output bytes");

  std::filesystem::remove_all(temp);
  if (g_failures == 0) {
    std::cout << "cli driver: all checks passed\n";
    return 0;
  }
  std::cout << "cli driver: " << g_failures << " checks failed\n";
  return 1;
}
