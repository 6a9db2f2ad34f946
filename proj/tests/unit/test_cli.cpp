#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <fracwave/specfun.hpp>

#include "fracwave_cli/format.hpp"
#include "fracwave_cli/runner.hpp"
#include "fracwave_cli/scenario.hpp"

namespace fs = std::filesystem;
using namespace fracwave;
using namespace fracwave::cli;

namespace {

struct Run {
  int code = -1;
  std::string output;
};

// runs the fracwave executable with stderr merged into stdout
Run invoke(const std::string& args) {
  const std::string cmd = std::string(FRACWAVE_EXE) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.output.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("fracwave_cli_" + std::to_string(::getpid()) + "_" +
                                                 std::to_string(counter_++))) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

const char* kSmall = R"(# small diffusion run
[scenario]
name = small
nu = 0.6
times = 0.5, 1
[grid]
x_min = 0
x_max = 2
dx = 0.25
[signal.f]
kind = box
left = -1
right = 1
[signal.g]
kind = zero
)";

}  // namespace

TEST_CASE("scenario text form") {
  const Scenario s = parse_scenario(kSmall);
  CHECK(s.name == "small");
  CHECK(s.kind == ScenarioKind::Cauchy);
  CHECK(s.order.nu() == 0.6);
  CHECK(s.times == std::vector<double>{0.5, 1.0});
  CHECK(s.dx == 0.25);
  CHECK(s.f.describe() == "box left=-1 right=1 height=1");
  CHECK(s.g.is_zero());

  const Scenario a = parse_scenario("[scenario]\nalpha = 1.5\n");
  CHECK(a.order.nu() == 0.75);

  SUBCASE("round trip of every builtin") {
    for (const auto& b : list_scenarios()) {
      const auto s0 = builtin_scenario(b.name);
      REQUIRE(s0.has_value());
      s0->validate();
      const std::string text = to_text(*s0);
      CHECK(to_text(parse_scenario(text)) == text);
    }
  }

  SUBCASE("rejected input") {
    CHECK_THROWS_AS(parse_scenario("[scenario]\nspeed = 3\n"), ScenarioError);
    CHECK_THROWS_AS(parse_scenario("[nonsense]\n"), ScenarioError);
    CHECK_THROWS_AS(parse_scenario("[grid]\ndx = fast\n"), ScenarioError);
    CHECK_THROWS_AS(parse_scenario("[signal.f]\nkind = triangle\n"), ScenarioError);
    Scenario bad = parse_scenario(kSmall);
    bad.dx = -0.01;
    try {
      bad.validate();
      FAIL("validate accepted a negative dx");
    } catch (const ScenarioError& e) {
      CHECK(std::string(e.what()).find("invalid grid") != std::string::npos);
    }
    bad = parse_scenario(kSmall);
    bad.times = {0.0};
    CHECK_THROWS_AS(bad.validate(), ScenarioError);
  }
}

TEST_CASE("builtin catalogue") {
  const auto all = list_scenarios();
  std::vector<std::string> names;
  for (const auto& b : all) names.push_back(b.name);
  for (const char* n : {"fig5-mwright", "fig6-delta-nu065", "fig7-delta-nu075", "fig8-delta-nu085",
                        "fig9-box-nu050", "fig10-box-nu075", "fig11-box-nu100"}) {
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  }
  CHECK(names.size() == 7);
  CHECK_FALSE(builtin_scenario("fig12").has_value());
  CHECK(builtin_scenario("fig7-delta-nu075")->order.nu() == 0.75);
  CHECK(builtin_scenario("fig9-box-nu050")->times == std::vector<double>{0.5, 1.0});
}

TEST_CASE("runs are deterministic and re-runnable from their CSV") {
  TempDir d1, d2, d3;
  Scenario s = parse_scenario(kSmall);
  s.output_dir = d1.path();
  const auto r1 = run_scenario(s);
  s.output_dir = d2.path();
  const auto r2 = run_scenario(s);
  REQUIRE(r1.files.size() == r2.files.size());
  CHECK(r1.files.size() == 5);
  for (std::size_t i = 0; i < r1.files.size(); ++i) {
    CHECK(r1.files[i].filename() == r2.files[i].filename());
    CHECK(slurp(r1.files[i]) == slurp(r2.files[i]));
  }

  const fs::path csv = d1.path() / "small" / "u_t1.csv";
  const std::string text = slurp(csv);
  CHECK(text.rfind("# fracwave ", 0) == 0);
  CHECK(text.find("#| [scenario]") != std::string::npos);
  CHECK(text.find("\nx,u\n") != std::string::npos);

  const Run rerun = invoke("run " + csv.string() + " --out " + d3.path().string() + " -q");
  CHECK(rerun.code == 0);
  CHECK(slurp(d3.path() / "small" / "u_t1.csv") == text);
}

TEST_CASE("oracle output") {
  TempDir d;
  Scenario s = parse_scenario(kSmall);
  s.output_dir = d.path();
  s.oracle = true;
  s.oracle_dx = 0.05;
  s.oracle_dt = 0.01;
  const auto r = run_scenario(s);
  REQUIRE(r.oracle.size() == 2);
  for (const auto& st : r.oracle) {
    CHECK(st.linf > 0.0);
    CHECK(st.linf < 2e-2);
    CHECK(st.l2 <= st.linf * std::sqrt(2.0) + 1e-15);
  }
  CHECK(fs::exists(d.path() / "small" / "oracle_t0.5.csv"));
  CHECK(fs::exists(d.path() / "small" / "oracle_t1.svg"));
  CHECK(slurp(d.path() / "small" / "summary.txt").find("oracle t = 1: linf = ") != std::string::npos);
}

TEST_CASE("command line") {
  const Run list = invoke("list");
  CHECK(list.code == 0);
  CHECK(list.output.find("fig10-box-nu075") != std::string::npos);

  const Run m = invoke("eval mwright --nu 0.5 --z 1");
  CHECK(m.code == 0);
  CHECK(std::stod(m.output) == doctest::Approx(std::exp(-0.25) / std::sqrt(std::acos(-1.0))).epsilon(1e-12));

  const Run g = invoke("eval green --nu 0.75 --x 0 --t 1 --kind second");
  CHECK(g.code == 0);
  CHECK(std::stod(g.output) == doctest::Approx(0.55163132566041863).epsilon(1e-12));

  const Run show = invoke("show fig9-box-nu050");
  CHECK(show.code == 0);
  CHECK(to_text(parse_scenario(show.output)) == show.output);

  const Run version = invoke("--version");
  CHECK(version.code == 0);
  CHECK(version.output.find("fracwave ") == 0);

  SUBCASE("exit codes") {
    TempDir d;
    std::string bad = kSmall;
    bad.replace(bad.find("dx = 0.25"), 9, "dx = -0.01");
    write_file(d.path() / "bad.ini", bad);
    const Run r = invoke("run " + (d.path() / "bad.ini").string() + " --out " + d.path().string());
    CHECK(r.code == 1);
    CHECK(r.output.find("error[validation]") != std::string::npos);
    CHECK(r.output.find("invalid grid") != std::string::npos);

    CHECK(invoke("run no-such-scenario").code == 1);
    CHECK(invoke("frobnicate").code == 1);
    CHECK(invoke("eval mwright --nu 1.5 --z 1").code == 1);
    CHECK(invoke("eval green --nu 0.5 --x 0 --t -1").code == 1);

    const Run nc = invoke("eval mwright --nu 0.95 --z 1 --tol 1e-300");
    CHECK(nc.code == 2);
    CHECK(nc.output.find("error[nonconvergent]") != std::string::npos);

    write_file(d.path() / "blocker", "not a directory");
    write_file(d.path() / "ok.ini", kSmall);
    const Run io = invoke("run " + (d.path() / "ok.ini").string() + " --out " + (d.path() / "blocker").string());
    CHECK(io.code == 3);
    CHECK(io.output.find("error[io]") != std::string::npos);
  }
}

TEST_CASE("number formatting") {
  CHECK(format_exact(0.1) == "0.10000000000000001");
  CHECK(format_exact(-0.0) == "0");
  CHECK(format_short(0.75) == "0.75");
  const std::vector<double> v{0.5, 1.0};
  CHECK(format_list(v) == "0.5, 1");
}
