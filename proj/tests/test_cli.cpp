#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifdef _WIN32
#error "the CLI harness assumes a POSIX shell"
#endif
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const fs::path& work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::current_path() / "cli_work";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  fs::path out = work_dir() / "stdout.txt";
  fs::path err = work_dir() / "stderr.txt";
  std::string cmd = std::string(FOLIA_BIN) + " " + args + " > " +
                    out.string() + " 2> " + err.string();
  int raw = std::system(cmd.c_str());
  RunResult r;
  if (WIFEXITED(raw))
    r.code = WEXITSTATUS(raw);
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string wpath(const std::string& rel) {
  return (work_dir() / rel).string();
}

void write_text(const std::string& rel, const std::string& text) {
  std::ofstream os(work_dir() / rel, std::ios::binary);
  os << text;
}

}  // namespace

TEST_CASE("build constructs and saves a hyperbolic leaf") {
  RunResult r = run("build --construction h2 --out " + wpath("h2"));
  CHECK(r.code == 0);
  CHECK(r.out.find("construction: h2") != std::string::npos);
  CHECK(r.out.find("oracle: tower") != std::string::npos);
  CHECK(r.out.find("kernel: ") != std::string::npos);
  CHECK(r.out.find("segments: core + 4 spikes") != std::string::npos);
  CHECK(r.out.find("kappa: min=") != std::string::npos);
  std::string leaf = slurp(work_dir() / "h2" / "leaf.txt");
  CHECK(leaf.rfind("h2leaf v1\n", 0) == 0);
}

TEST_CASE("build constructs a euclidean leaf with its own defaults") {
  RunResult r = run("build --geometry e2 --out " + wpath("e2"));
  CHECK(r.code == 0);
  CHECK(r.out.find("oracle: gentle") != std::string::npos);
  CHECK(r.out.find("segments: parabola + 3 spikes") != std::string::npos);
  std::string leaf = slurp(work_dir() / "e2" / "leaf.txt");
  CHECK(leaf.rfind("e2leaf v1\n", 0) == 0);
}

TEST_CASE("invalid parameters exit with the validation code") {
  RunResult r = run("build --construction h2 --delta 0.9");
  CHECK(r.code == 2);
  CHECK(r.err.find("validation error") != std::string::npos);
  CHECK(r.err.find("delta") != std::string::npos);
}

TEST_CASE("infeasible growth exits with the construction code") {
  RunResult r = run("build --geometry e2 --oracle tower --out " +
                    wpath("e2tower"));
  CHECK(r.code == 3);
  CHECK(r.err.find("construction error") != std::string::npos);
  CHECK(r.err.find("unreachable under the curvature budget") !=
        std::string::npos);
}

TEST_CASE("config files feed the build and flags keep precedence") {
  write_text("build.ini", "# sample config\ndelta = 0.2\nn-max = 1\n");
  RunResult r = run("build --config " + wpath("build.ini") + " --out " +
                    wpath("cfg"));
  CHECK(r.code == 0);
  CHECK(r.out.find("anchors: 2 ") != std::string::npos);
  CHECK(r.out.find("segments: core + 1 spikes") != std::string::npos);

  RunResult pre = run("build --config " + wpath("build.ini") +
                      " --n-max 2 --out " + wpath("cfg2"));
  CHECK(pre.code == 0);
  CHECK(pre.out.find("anchors: 3 ") != std::string::npos);

  write_text("bad_key.ini", "delta = 0.2\nbogus = 3\n");
  RunResult bad = run("build --config " + wpath("bad_key.ini"));
  CHECK(bad.code == 2);
  CHECK(bad.err.find("unknown config key: bogus") != std::string::npos);

  write_text("bad_val.ini", "delta = zero point two\n");
  RunResult badval = run("build --config " + wpath("bad_val.ini"));
  CHECK(badval.code == 2);
  CHECK(badval.err.find("not a number") != std::string::npos);

  RunResult missing = run("build --config " + wpath("no_such.ini"));
  CHECK(missing.code == 2);
  CHECK(missing.err.find("cannot open config file") != std::string::npos);
}

TEST_CASE("distortion writes the pinned csv and is byte deterministic") {
  REQUIRE(run("build --construction h2 --out " + wpath("src")).code == 0);
  std::string leaf = wpath("src/leaf.txt");

  RunResult a = run("distortion " + leaf + " --out " + wpath("da"));
  RunResult b = run("distortion " + leaf + " --out " + wpath("db"));
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  CHECK(a.out.find("rows: 5 (saturated: 0)") != std::string::npos);

  std::string csv = slurp(work_dir() / "da" / "distortion.csv");
  CHECK(csv.rfind("n,theta,d_ambient,log_d_leaf,saturated\n", 0) == 0);
  CHECK(csv.find("\n0,0.1,") != std::string::npos);
  int lines = 0;
  for (char ch : csv)
    if (ch == '\n') ++lines;
  CHECK(lines == 6);

  CHECK(csv == slurp(work_dir() / "db" / "distortion.csv"));
  CHECK(slurp(work_dir() / "da" / "distortion.svg") ==
        slurp(work_dir() / "db" / "distortion.svg"));
  CHECK(slurp(work_dir() / "da" / "distortion.svg").rfind("<svg", 0) == 0);
}

TEST_CASE("emit selects which artifacts are written") {
  std::string leaf = wpath("src/leaf.txt");
  RunResult csv_only =
      run("distortion " + leaf + " --out " + wpath("dc") + " --emit csv");
  CHECK(csv_only.code == 0);
  CHECK(fs::exists(work_dir() / "dc" / "distortion.csv"));
  CHECK_FALSE(fs::exists(work_dir() / "dc" / "distortion.svg"));

  RunResult with_leaf =
      run("distortion " + leaf + " --out " + wpath("dl") + " --emit csv,leaf");
  CHECK(with_leaf.code == 0);
  CHECK(slurp(work_dir() / "dl" / "leaf.txt") == slurp(leaf));

  RunResult bogus =
      run("distortion " + leaf + " --out " + wpath("dx") + " --emit png");
  CHECK(bogus.code == 2);
  CHECK(bogus.err.find("unknown emit flag") != std::string::npos);
}

TEST_CASE("distortion rejects missing leaves") {
  RunResult noarg = run("distortion");
  CHECK(noarg.code == 2);
  RunResult nofile = run("distortion " + wpath("nowhere.txt"));
  CHECK(nofile.code == 2);
  CHECK(nofile.err.find("cannot open leaf file") != std::string::npos);
}

TEST_CASE("checks report verdicts on named curves") {
  RunResult mono = run("check monotone circle");
  CHECK(mono.code == 0);
  CHECK(mono.out.find("winding: ") != std::string::npos);
  CHECK(mono.out.find("verdict: pass") != std::string::npos);

  RunResult bound = run("check expbound horocycle");
  CHECK(bound.code == 0);
  CHECK(bound.out.find("verdict: pass") != std::string::npos);

  RunResult cross = run("check intersect figure_eight");
  CHECK(cross.code == 0);
  CHECK(cross.out.find("crossing: s=") != std::string::npos);
  CHECK(cross.out.find("1 crossing(s) found") != std::string::npos);

  RunResult clean = run("check intersect circle");
  CHECK(clean.code == 0);
  CHECK(clean.out.find("none found") != std::string::npos);

  RunResult curv = run("check curvature geodesic");
  CHECK(curv.code == 0);
  CHECK(curv.out.find("kappa: min=") != std::string::npos);
}

TEST_CASE("checks on saved leaves honor applicability") {
  std::string h2 = wpath("src/leaf.txt");
  RunResult bound = run("check expbound " + h2);
  CHECK(bound.code == 0);
  CHECK(bound.out.find("verdict: inapplicable (kappa exceeds 1)") !=
        std::string::npos);

  RunResult curv = run("check curvature " + h2);
  CHECK(curv.code == 0);
  CHECK(curv.out.find("verdict: pass") != std::string::npos);

  REQUIRE(run("build --geometry e2 --out " + wpath("e2src")).code == 0);
  std::string e2 = wpath("e2src/leaf.txt");
  RunResult mono = run("check monotone " + e2);
  CHECK(mono.code == 0);
  CHECK(mono.out.find("verdict: inapplicable") != std::string::npos);

  RunResult e2bound = run("check expbound " + e2);
  CHECK(e2bound.code == 0);
  CHECK(e2bound.out.find("verdict: inapplicable") != std::string::npos);

  RunResult e2curv = run("check curvature " + e2);
  CHECK(e2curv.code == 0);
  CHECK(e2curv.out.find("verdict: pass") != std::string::npos);
}

TEST_CASE("bad invocations exit with the validation code") {
  CHECK(run("").code == 2);
  CHECK(run("--frobnicate").code == 2);
  CHECK(run("build --frobnicate").code == 2);

  RunResult unknown_check = run("check sanity circle");
  CHECK(unknown_check.code == 2);
  CHECK(unknown_check.err.find("unknown check name") != std::string::npos);

  RunResult unknown_curve = run("check monotone klein_bottle");
  CHECK(unknown_curve.code == 2);
  CHECK(unknown_curve.err.find("unknown test curve") != std::string::npos);

  CHECK(run("--help").code == 0);
  CHECK(run("build --help").code == 0);
}
