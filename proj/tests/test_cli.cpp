#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include "fcslab/catalog.hpp"

// Exercises the installed command surface by running the real binary.
// FCSLAB_CLI_PATH is injected by the build.

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path p = fs::temp_directory_path() /
                     ("fcslab_cli_test_" + std::to_string(static_cast<unsigned>(::getpid())));
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
    fs::path out = scratch_dir() / "stdout.txt";
    fs::path err = scratch_dir() / "stderr.txt";
    std::string command = env + (env.empty() ? "" : " ") + FCSLAB_CLI_PATH + " " + args + " >" +
                          out.string() + " 2>" + err.string();
    int status = std::system(command.c_str());
    RunResult result;
    result.code = WEXITSTATUS(status);
    result.out = slurp(out);
    result.err = slurp(err);
    return result;
}

fs::path ring_file(const std::string& name) {
    fs::path path = scratch_dir() / (name + ".json");
    if (!fs::exists(path)) fcslab::save_ring(fcslab::catalog_ring(name), path.string());
    return path;
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("validate") {
    CHECK(run_cli("validate " + ring_file("Z6").string()).code == 0);

    fs::path corrupt = scratch_dir() / "corrupt.json";
    {
        std::ofstream f(corrupt);
        f << "{\"name\":\"bad\",\"order\":4,\"one\":1,"
             "\"add\":[[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],"
             "\"mul\":[[0,0,0,0],[0,1,2,3],[0,2,0,2],[0,3,1,1]]}";
    }
    RunResult bad = run_cli("validate " + corrupt.string());
    CHECK(bad.code == 1);
    CHECK(bad.err.find("witness") != std::string::npos);

    CHECK(run_cli("validate /nonexistent/r.json").code == 2);
}

TEST_CASE("info prints the structural summary") {
    RunResult r = run_cli("info " + ring_file("Z4").string());
    CHECK(r.code == 0);
    CHECK(r.out.find("local: yes") != std::string::npos);
    CHECK(r.out.find("radical (2): {0,2}  nilpotency: 2") != std::string::npos);
}

TEST_CASE("classify") {
    RunResult csv = run_cli("classify " + ring_file("Z4").string());
    CHECK(csv.code == 0);
    CHECK(csv.out.find("# summary unimodular_I=12 unimodular_II=0 covered=4 outlier_free=0 "
                       "outlier_nonfree=0") != std::string::npos);
    // header comment + column row + 16 vectors + 2 summary comments
    CHECK(count_lines(csv.out) == 20);

    RunResult json = run_cli("classify " + ring_file("T2_GF2").string() + " --format json");
    CHECK(json.code == 0);
    CHECK(json.out.find("\"outlier_free\": 6") != std::string::npos);

    RunResult right =
        run_cli("classify " + ring_file("T2_GF2").string() + " --side right --format json");
    CHECK(right.out.find("\"side\": \"right\"") != std::string::npos);
    CHECK(right.out.find("\"outlier_free\": 6") != std::string::npos);

    CHECK(run_cli("classify " + ring_file("Z4").string() + " --format xml").code == 2);
}

TEST_CASE("fcs listing") {
    RunResult r = run_cli("fcs " + ring_file("T2_GF2").string() + " --intersections");
    CHECK(r.code == 0);
    CHECK(r.out.find("fcs: 21  nonunimodular: 3") != std::string::npos);
    CHECK(r.out.find("generator=(2,4)") != std::string::npos);
}

TEST_CASE("verify") {
    RunResult one = run_cli("verify " + ring_file("Z4").string());
    CHECK(one.code == 0);
    CHECK(one.out.find("0 fail") != std::string::npos);

    RunResult json = run_cli("verify " + ring_file("Z6").string() + " --format json");
    CHECK(json.code == 0);
    CHECK(json.out.find("\"ring\": \"Z6\"") != std::string::npos);
    CHECK(json.out.find("\"fail\": 0") != std::string::npos);

    CHECK(run_cli("verify /nonexistent/r.json").code == 2);
    CHECK(run_cli("verify").code == 2);
}

TEST_CASE("verify --catalog passes and is the integration gate") {
    RunResult r = run_cli("verify --catalog");
    CHECK(r.code == 0);
    CHECK(r.out.find("catalog: 29 rings, 0 with failures") != std::string::npos);
}

TEST_CASE("scan respects --max-order and filters") {
    RunResult r = run_cli("scan --catalog --max-order 4");
    CHECK(r.code == 0);
    // Z2, Z3, Z4, GF4, Z2[x]_x2, Z2xZ2 -> 6 rows below the two header lines
    CHECK(count_lines(r.out) == 8);
    CHECK(r.out.find("T2_GF2") == std::string::npos);
    int order4 = 0;
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("ring,", 0) == 0) continue;
        std::vector<std::string> fields;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) fields.push_back(cell);
        REQUIRE(fields.size() >= 8);
        if (fields[1] == "4") ++order4;
        CHECK(fields[6] == "0");  // outliers_left
        CHECK(fields[7] == "0");  // outliers_right
    }
    CHECK(order4 == 4);

    // the ternions plus the two rings whose outliers are all non-free
    RunResult outliers = run_cli("scan --catalog --find outliers");
    CHECK(count_lines(outliers.out) == 7);
    CHECK(outliers.out.find("T2_GF2") != std::string::npos);
    CHECK(outliers.out.find("T2_GF3") != std::string::npos);
    CHECK(outliers.out.find("T2_GF4") != std::string::npos);
    CHECK(outliers.out.find("Z2[xy]_xy2") != std::string::npos);
    CHECK(outliers.out.find("Z2xZ2[xy]_xy2") != std::string::npos);
    CHECK(outliers.out.find("Z6") == std::string::npos);
    CHECK(outliers.out.find("GF8") == std::string::npos);

    // only the ternions exhibit non-unimodular free cyclic submodules
    RunResult nu = run_cli("scan --catalog --find nonunimodular-fcs");
    CHECK(nu.out.find("T2_GF2") != std::string::npos);
    CHECK(nu.out.find("M2_GF2") == std::string::npos);
    CHECK(nu.out.find("Z2[xy]_xy2") == std::string::npos);
    CHECK(count_lines(nu.out) == 5);
}

TEST_CASE("scan of a directory keeps going past broken files") {
    fs::path dir = scratch_dir() / "scandir";
    fs::create_directories(dir);
    fcslab::save_ring(fcslab::catalog_ring("Z4"), (dir / "a_z4.json").string());
    {
        std::ofstream f(dir / "b_broken.json");
        f << "{\"name\":\"oops\"}";
    }
    RunResult r = run_cli("scan " + dir.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("Z4,4,yes,") != std::string::npos);
    CHECK(r.out.find("b_broken,0,,") != std::string::npos);
    CHECK(r.out.find("malformed ring file") != std::string::npos);
}

TEST_CASE("scan workers do not change the output") {
    RunResult serial = run_cli("scan --catalog --max-order 16 --workers 1");
    RunResult parallel = run_cli("scan --catalog --max-order 16 --workers 8");
    CHECK(serial.code == 0);
    CHECK(parallel.code == 0);
    CHECK(serial.out == parallel.out);
}

TEST_CASE("scan json output") {
    RunResult r = run_cli("scan --catalog --max-order 8 --out json");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"ring\": \"T2_GF2\"") != std::string::npos);
    CHECK(r.out.find("\"nonunimodular_fcs_left\": 3") != std::string::npos);
}

TEST_CASE("catalog listing and export") {
    RunResult list = run_cli("catalog");
    CHECK(list.code == 0);
    CHECK(count_lines(list.out) == 29);
    CHECK(list.out.find("T2_GF2  order=8  units=2") != std::string::npos);

    fs::path dir = scratch_dir() / "exported";
    RunResult exp = run_cli("catalog --export " + dir.string());
    CHECK(exp.code == 0);
    CHECK(run_cli("validate " + (dir / "M2_GF2.json").string()).code == 0);
}

TEST_CASE("the order cap guards plane analyses") {
    RunResult capped = run_cli("classify " + ring_file("Z6").string(), "FCSLAB_ORDER_CAP=4");
    CHECK(capped.code == 2);
    CHECK(capped.err.find("FCSLAB_ORDER_CAP") != std::string::npos);

    RunResult raised = run_cli("classify " + ring_file("Z6").string(), "FCSLAB_ORDER_CAP=100");
    CHECK(raised.code == 0);

    RunResult junk = run_cli("classify " + ring_file("Z6").string(), "FCSLAB_ORDER_CAP=junk");
    CHECK(junk.code == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("classify").code == 2);
    CHECK(run_cli("scan").code == 2);
    CHECK(run_cli("--help").code == 0);
}
