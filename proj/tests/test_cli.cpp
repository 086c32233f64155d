#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(KNOTFIBER_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf;
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
    res.output.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("generate then decide a solid torus core") {
  auto path = temp_file("kf_cli_st.tri");
  RunResult gen =
      run("generate solid_torus --knot core -o " + path.string());
  REQUIRE(gen.exit_code == 0);
  RunResult dec = run("decide " + path.string() + " --knot core");
  CHECK(dec.exit_code == 0);
  CHECK(dec.output.find("verdict: Realizable") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("no knot in the ball is realizable") {
  auto path = temp_file("kf_cli_ball.tri");
  REQUIRE(run("generate ball -o " + path.string()).exit_code == 0);
  RunResult dec = run("decide " + path.string() + " --knot contractible");
  CHECK(dec.exit_code == 0);
  CHECK(dec.output.find("verdict: NotRealizable") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("homology of the punctured lens space shows the torsion") {
  auto path = temp_file("kf_cli_lens.tri");
  REQUIRE(run("generate lens_punctured --p 3 --q 1 -o " + path.string())
              .exit_code == 0);
  RunResult hom = run("homology " + path.string());
  CHECK(hom.exit_code == 0);
  CHECK(hom.output.find("torsion [3]") != std::string::npos);
  RunResult rel = run("homology " + path.string() + " --rel-boundary");
  CHECK(rel.output.find("torsion [3]") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("validate reports failure with exit code 1") {
  auto path = temp_file("kf_cli_bad.tri");
  FILE* f = std::fopen(path.string().c_str(), "w");
  REQUIRE(f);
  std::fputs("format 1\nvertices 6\ntet 0 1 2 3\ntet 0 1 2 4\ntet 0 1 2 5\n",
             f);
  std::fclose(f);
  RunResult val = run("validate " + path.string());
  CHECK(val.exit_code == 1);
  CHECK(val.output.find("valid: no") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("parse errors exit with code 2") {
  auto path = temp_file("kf_cli_garbage.tri");
  FILE* f = std::fopen(path.string().c_str(), "w");
  REQUIRE(f);
  std::fputs("this is not a triangulation\n", f);
  std::fclose(f);
  RunResult val = run("validate " + path.string());
  CHECK(val.exit_code == 2);
  std::filesystem::remove(path);
  RunResult missing = run("decide /does/not/exist.tri --knot k");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("unknown knots exit with code 2") {
  auto path = temp_file("kf_cli_st2.tri");
  REQUIRE(run("generate solid_torus --knot core -o " + path.string())
              .exit_code == 0);
  RunResult dec = run("decide " + path.string() + " --knot nonsense");
  CHECK(dec.exit_code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("output is byte-identical across runs") {
  auto path = temp_file("kf_cli_det.tri");
  REQUIRE(run("generate s1xs2_punctured --knot core -o " + path.string())
              .exit_code == 0);
  RunResult a = run("decide " + path.string() + " --knot core");
  RunResult b = run("decide " + path.string() + " --knot core");
  CHECK(a.output == b.output);
  RunResult ja = run("--json homology " + path.string() + " --mod2");
  RunResult jb = run("--json homology " + path.string() + " --mod2");
  CHECK(ja.output == jb.output);
  CHECK(ja.output.find("\"ring\": \"Z2\"") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("generated files round-trip byte-identically") {
  auto p1 = temp_file("kf_cli_rt1.tri");
  auto p2 = temp_file("kf_cli_rt2.tri");
  REQUIRE(run("generate handlebody --genus 2 --handle 1 -o " + p1.string())
              .exit_code == 0);
  REQUIRE(run("generate handlebody --genus 2 --handle 1 -o " + p2.string())
              .exit_code == 0);
  std::ifstream f1(p1), f2(p2);
  std::string s1((std::istreambuf_iterator<char>(f1)),
                 std::istreambuf_iterator<char>());
  std::string s2((std::istreambuf_iterator<char>(f2)),
                 std::istreambuf_iterator<char>());
  CHECK(s1 == s2);
  CHECK(!s1.empty());
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}

TEST_CASE("framing subcommands") {
  CHECK(run("framing twist --class 0 --turns 1").output == "sigma: 1\n");
  CHECK(run("framing twist --class 1 --turns 2").output == "sigma: 1\n");
  CHECK(run("framing cable --class 0").output == "sigma: 1\n");
  CHECK(run("framing cable --class 1").output == "sigma: 1\n");
  RunResult ext = run("framing extend --kappa2 101 --target 1");
  CHECK(ext.exit_code == 0);
  CHECK(ext.output.find("extension_exists: yes") != std::string::npos);
  RunResult no = run("framing extend --kappa2 000 --target 1");
  CHECK(no.output.find("extension_exists: no") != std::string::npos);
}
