#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "hyperrough/cli/commands.hpp"
#include "hyperrough/cli/config.hpp"
#include "hyperrough/cli/csv.hpp"
#include "hyperrough/errors.hpp"
#include "hyperrough/model.hpp"
#include "json.hpp"

using namespace hyperrough;
using namespace hyperrough::cli;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("hyperrough_cli_" + std::to_string(::getpid())) / name;
    fs::remove_all(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::vector<double>> read_rows(const fs::path& p) {
    std::ifstream in(p);
    std::string line;
    std::getline(in, line);  // metadata
    std::getline(in, line);  // columns
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

RunConfig small(const std::string& name) {
    RunConfig c;
    c.steps = 100;
    c.paths = 200;
    c.out_dir = scratch(name);
    return c;
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(HYPERROUGH_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("config text overrides defaults and ignores comments") {
    const auto c = parse_config("# run\nN = 500\nH=-0.3, -0.49\n\nlambda=4 # faster\nseed=7\nu_grid=1,2\n");
    CHECK(c.steps == 500);
    CHECK(c.hursts == std::vector<double>{-0.3, -0.49});
    CHECK(c.model.lambda == 4.0);
    CHECK(c.seed == 7);
    CHECK(c.u_grid == std::vector<double>{1.0, 2.0});
    CHECK(c.model.v0 == 0.1);
}

TEST_CASE("config errors name the field") {
    auto field_of = [](const std::string& text) {
        try {
            parse_config(text).validate();
        } catch (const ConfigError& e) {
            return e.field();
        }
        return std::string("none");
    };
    CHECK(field_of("bogus=1") == "bogus");
    CHECK(field_of("N=abc") == "N");
    CHECK(field_of("N=1") == "N");
    CHECK(field_of("H=-0.5") == "H");
    CHECK(field_of("H=0.1,x") == "H");
    CHECK(field_of("paths=0") == "paths");
    CHECK(field_of("nu=nan") == "nu");
    CHECK(field_of("lambda=-2") == "lambda");
    CHECK(field_of("no equals sign") == "no equals sign");
    CHECK(field_of("N=100") == "none");
    CHECK_THROWS_AS(load_config("/nonexistent/config.txt"), IoError);
}

TEST_CASE("config hash ignores output location and threads only") {
    RunConfig a, b;
    b.out_dir = "elsewhere";
    b.threads = 7;
    CHECK(config_hash(a) == config_hash(b));
    CHECK(config_hash(a).size() == 16);
    b.seed = 43;
    CHECK(config_hash(a) != config_hash(b));
}

TEST_CASE("reals are written with 17 significant digits") {
    CHECK(format_real(0.1) == "0.10000000000000001");
    CHECK(format_real(-2.0) == "-2");
    CHECK(format_real(1e-300) == "1e-300");
    CHECK(format_real(1.0 / 3.0) == "0.33333333333333331");
    CHECK(process_tag(-0.49) == "H-0.49");
    CHECK(process_tag(-0.5) == "limit");
}

TEST_CASE("simulate writes one file per process, reproducibly") {
    auto c = small("simulate");
    const auto files = cmd_simulate(c);
    CHECK(files.size() == c.hursts.size() + 1);
    std::vector<std::string> first;
    for (const auto& f : files) first.push_back(slurp(f));
    CHECK(first[0].rfind("# schema_version=1,config_hash=" + config_hash(c) + ",seed=42\nt,X,M,residual\n", 0) == 0);
    const auto again = cmd_simulate(c);
    for (std::size_t i = 0; i < files.size(); ++i) CHECK(slurp(again[i]) == first[i]);

    // Residual column equals G0 + M - (1 + lambda) X recomputed from the other columns.
    const auto rows = read_rows(c.out_dir / "path_H-0.25.csv");
    REQUIRE(rows.size() == c.steps + 1);
    for (const auto& r : rows) {
        const double expected = g0n_eval(c.model, -0.25, r[0]) + r[2] - 11.0 * r[1];
        CHECK(r[3] == doctest::Approx(expected).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("converge report is identical across thread counts") {
    auto c = small("converge1");
    c.threads = 1;
    const auto one = slurp(cmd_converge(c).front());
    c.out_dir = scratch("converge3");
    c.threads = 3;
    const auto three = slurp(cmd_converge(c).front());
    CHECK(one == three);
    const auto report = nlohmann::json::parse(one);
    CHECK(report["schema_version"] == 1);
    bool has_limit = false;
    for (const auto& r : report["records"]) {
        CHECK(r.contains("stderr"));
        if (r["H"] == -0.5) has_limit = true;
        // A 0/1 verdict; at this sample size the heavy-tailed M^2 makes it noisy.
        if (r["metric"] == "moment_checks_pass") CHECK((r["value"] == 0.0 || r["value"] == 1.0));
        if (r["metric"] == "mean_x_terminal") CHECK(r["value"].get<double>() == doctest::Approx(0.1).epsilon(0.1));
        if (r["metric"] == "non_monotone_paths") CHECK(r["value"] == 0.0);
    }
    CHECK(has_limit);
}

TEST_CASE("cf surfaces are aligned and equal one at the origin") {
    auto c = small("cf");
    c.hursts = {-0.499};
    c.u_grid = {-1.0, 0.0, 2.0};
    c.v_grid = {0.0, 1.0};
    const auto files = cmd_cf(c);
    REQUIRE(files.size() == 2);
    for (const auto& f : files) {
        const auto rows = read_rows(f);
        REQUIRE(rows.size() == 6);
        const auto& origin = rows[2];
        CHECK(origin[0] == 0.0);
        CHECK(origin[1] == 0.0);
        for (std::size_t col = 2; col < 8; col += 2) {
            CHECK(origin[col] == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(origin[col + 1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
        }
        for (const auto& r : rows) {
            // Riccati column at H = -0.499 tracks the limit column.
            CHECK(std::hypot(r[4] - r[6], r[5] - r[7]) < 0.01);
        }
    }
}

TEST_CASE("density files carry normalized histograms and the limiting reference") {
    auto c = small("density");
    c.hursts = {-0.3};
    c.bins = 20;
    const auto files = cmd_density(c);
    REQUIRE(files.size() == 2);
    std::ifstream in(files[0]);
    std::string line;
    std::getline(in, line);
    std::getline(in, line);
    CHECK(line == "component,center,density,reference");
    double mass_x = 0.0;
    int rows = 0;
    std::vector<double> centers;
    while (std::getline(in, line)) {
        ++rows;
        std::stringstream ss(line);
        std::string label, center, density, reference;
        std::getline(ss, label, ',');
        std::getline(ss, center, ',');
        std::getline(ss, density, ',');
        std::getline(ss, reference, ',');
        if (label == "X") {
            mass_x += std::stod(density);
            centers.push_back(std::stod(center));
        }
    }
    CHECK(rows == 40);
    CHECK(mass_x * (centers[1] - centers[0]) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("riccati-check writes one row per Hurst index") {
    auto c = small("riccati");
    c.hursts = {-0.3, -0.499};
    const auto rows = read_rows(cmd_riccati_check(c).front());
    REQUIRE(rows.size() == 2);
    CHECK(rows[1][6] < rows[0][6]);
}

TEST_CASE("command dispatch and exit codes") {
    CHECK_THROWS_AS(run_command("nope", RunConfig{}), ConfigError);
    CHECK(exit_code(ConfigError("N", "bad")) == 1);
    CHECK(exit_code(NumericalError("x")) == 2);
    CHECK(exit_code(DomainError("x")) == 2);
    CHECK(exit_code(IoError("x")) == 3);
}

TEST_CASE("binary exit codes") {
    const fs::path out = scratch("binary");
    CHECK(run_cli("simulate --N 20 --out " + out.string()) == 0);
    CHECK(fs::exists(out / "path_limit.csv"));
    CHECK(run_cli("simulate --N 1 --out " + out.string()) == 1);
    CHECK(run_cli("simulate --H 0.1,oops --out " + out.string()) == 1);
    CHECK(run_cli("nonsense") == 1);
    CHECK(run_cli("simulate --N 20 --out /proc/forbidden/dir") == 3);

    const fs::path cfg = out / "run.cfg";
    std::ofstream(cfg) << "N = 30\nH = -0.2\n";
    CHECK(run_cli("simulate --config " + cfg.string() + " --out " + (out / "cfg").string()) == 0);
    CHECK(read_rows(out / "cfg" / "path_H-0.2.csv").size() == 31);
    CHECK(run_cli("simulate --config " + (out / "missing.cfg").string()) == 3);
}
