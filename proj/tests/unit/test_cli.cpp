#include <doctest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "radwave/errors.hpp"
#include "run_config.hpp"

using namespace radwave::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    const fs::path p = fs::temp_directory_path() / ("radwave_cli_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(RADWAVE_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("config parsing") {
    RunConfig c = RunConfig::parse("# comment\n\n n = 5 \nfamily=gaussian\n");
    CHECK(c.integer("n", 3) == 5);
    CHECK(c.str("family", "x") == "gaussian");
    CHECK(c.num("tol", 1e-10) == 1e-10);
    CHECK(c.values().at("tol") == "1e-10");
    CHECK_THROWS_AS(RunConfig::parse("n 5\n"), radwave::ConfigError);
    CHECK_THROWS_AS(RunConfig::parse("=5\n"), radwave::ConfigError);
    RunConfig bad = RunConfig::parse("n=five\n");
    CHECK_THROWS_AS(bad.num("n", 1.0), radwave::ConfigError);
    RunConfig frac = RunConfig::parse("levels=2.5\n");
    CHECK_THROWS_AS(frac.integer("levels", 1), radwave::ConfigError);
}

TEST_CASE("unused keys are rejected and the manifest lists resolved values") {
    RunConfig c;
    c.set_assignment("p=3");
    c.set("typo", "1");
    c.num("p", 2.0);
    c.num("kappa", 0.5);
    CHECK_THROWS_AS(c.reject_unused(), radwave::ConfigError);
    const std::string m = c.manifest("constants");
    CHECK(m.find("command=constants\n") != std::string::npos);
    CHECK(m.find("kappa=0.5\n") != std::string::npos);
    CHECK(m.find("version=") != std::string::npos);
}

TEST_CASE("number formatting round-trips") {
    for (double x : {0.1, 1.0 / 3.0, 1e-300, 12345.678, -2.5}) {
        CHECK(std::stod(format_number(x)) == x);
    }
    CHECK(format_number(-0.0) == "0");
}

TEST_CASE("constants command output") {
    const fs::path dir = scratch_dir() / "constants";
    RunConfig c;
    c.set("out", dir.string());
    c.set("m", "2:3");
    c.set("p", "3");
    std::ostringstream log;
    CHECK(run_command("constants", c, log) == kOk);
    const std::string csv = slurp(dir / "constants.csv");
    CHECK(csv.rfind("m,eta_m,zeta_m,delta,C1m,C2m,Em,p,kappa0,n,p0\n", 0) == 0);
    CHECK(csv.find("\n2,1,1,2,2,") != std::string::npos);
    CHECK(csv.find(",3,1,5,") != std::string::npos);  // p = 3 gives kappa0 = 1

    RunConfig e;
    e.set("out", (dir / "empty").string());
    e.set("m", "5:4");
    CHECK(run_command("constants", e, log) == kOk);
    CHECK(slurp(dir / "empty" / "constants.csv") ==
          "m,eta_m,zeta_m,delta,C1m,C2m,Em,p,kappa0,n,p0\n");
}

TEST_CASE("exit codes") {
    const fs::path dir = scratch_dir();
    CHECK(run_cli("verify theta --m 2 --grid 16x16 --out " + (dir / "theta").string()) == 0);
    CHECK(run_cli("verify theta --m 2 --set nonsense=1 --out " + (dir / "x").string()) == 1);
    CHECK(run_cli("verify") == 1);
    CHECK(run_cli("frobnicate") == 1);
    {
        std::ofstream bad(dir / "bad.cfg");
        bad << "this line has no equals sign\n";
    }
    CHECK(run_cli("constants --config " + (dir / "bad.cfg").string()) == 1);
    CHECK(run_cli("verify lower-odd --grid 6x6 --set g_scale=-1 --out " + (dir / "neg").string()) ==
          2);
    CHECK(fs::exists(dir / "neg" / "violations.csv"));
    CHECK(run_cli("iterate --kappa 3 --p 2 --set R=0 --out " + (dir / "r0").string()) == 1);
}

TEST_CASE("manifest round-trip reproduces byte-identical csv") {
    const fs::path dir = scratch_dir();
    const fs::path a = dir / "rt_a", b = dir / "rt_b";
    REQUIRE(run_cli("free --n 5 --set nr=4 --set nt=3 --set center=5 --out " + a.string()) == 0);
    REQUIRE(run_cli("free --config " + (a / "manifest.txt").string() + " --out " + b.string()) ==
            0);
    CHECK(slurp(a / "free.csv") == slurp(b / "free.csv"));

    REQUIRE(run_cli("sweep --set R=100 --set apex_r=1000 --set apex_t=300 --set levels=16 "
                    "--set max_iters=5 --set kappas=1,2 --out " +
                    a.string()) == 0);
    REQUIRE(run_cli("sweep --config " + (a / "manifest.txt").string() + " --out " + b.string()) ==
            0);
    CHECK(slurp(a / "trajectories.csv") == slurp(b / "trajectories.csv"));
    CHECK(slurp(a / "sweep.csv") == slurp(b / "sweep.csv"));
    fs::remove_all(dir);
}
