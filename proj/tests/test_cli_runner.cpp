#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    const std::string cmd =
        std::string(MERIDIAN4_BIN) + " " + args + " >cli_stdout.txt 2>cli_stderr.txt";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp("cli_stdout.txt");
    r.err = slurp("cli_stderr.txt");
    return r;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

const std::string kSphere =
    "--curve=great '--profile=circle:1,-1.5707963267948966,0' --u=0.2:2.9 --v=0:6.28";

}  // namespace

TEST_CASE("classify reports the planar case with exit 0") {
    const RunResult r = run("classify " + kSphere + " --nu=17 --nv=17");
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(j["case"] == "PlanarCaseI");
    CHECK(j["max_residual"].get<double>() <= 1e-10);
    CHECK(j["grid"]["nu"] == 17);
}

TEST_CASE("classify rejects the counterexample with exit 2") {
    const RunResult r = run(
        "classify --curve=spiral:0.2 '--profile=fromf:0.5*sin(u)+2' "
        "--u=0:3 --v=0.5:2.5 --nu=41 --nv=41");
    REQUIRE(r.exit_code == 2);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["case"] == "NotWeingarten");
    CHECK(j["max_residual"].get<double>() >= 1e-4);
}

TEST_CASE("classify returns exit 3 when the evidence is ambiguous") {
    const RunResult r = run(
        "classify --curve=spiral:0.2 '--profile=fromf:0.5*cosh(u/2)+0.05*sin(u)' "
        "--u=-1:1 --v=0.5:2.5 --nu=17 --nv=17 --tol-ode=0.01");
    REQUIRE(r.exit_code == 3);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["case"] == "Indeterminate");
}

TEST_CASE("malformed input exits 1 with a diagnostic") {
    const RunResult r = run("classify --curve=great '--profile=helix:1' --u=0:1 --v=0:1");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("error:") != std::string::npos);

    const RunResult unknown = run("frobnicate");
    CHECK(unknown.exit_code != 0);
}

TEST_CASE("curvature CSV is exact, complete, and byte-stable") {
    const std::string args = "curvature " + kSphere + " --nu=10 --nv=10 --out=curv.csv";
    REQUIRE(run(args).exit_code == 0);
    const std::string first = slurp("curv.csv");
    REQUIRE(run(args).exit_code == 0);
    CHECK(slurp("curv.csv") == first);

    const auto rows = lines_of(first);
    REQUIRE(rows.size() == 101);
    CHECK(rows[0] == "u,v,K,H,H1,H2,kappa,kappa_alpha,residual");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto fields = split(rows[i], ',');
        REQUIRE(fields.size() == 9);
        // unit sphere: K = H = 1 to the last bit, and the residual vanishes
        CHECK(std::abs(std::strtod(fields[2].c_str(), nullptr) - 1.0) <= 1e-14);
        CHECK(std::abs(std::strtod(fields[3].c_str(), nullptr) - 1.0) <= 1e-14);
        CHECK(std::abs(std::strtod(fields[8].c_str(), nullptr)) <= 1e-12);
    }
}

TEST_CASE("mesh OBJ has the advertised counts and lies on the sphere") {
    const RunResult r =
        run("mesh " + kSphere + " --nu=10 --nv=12 --out=mesh.obj --project=3");
    REQUIRE(r.exit_code == 0);
    const auto rows = lines_of(slurp("mesh.obj"));
    REQUIRE(!rows.empty());
    CHECK(rows[0] == "# meridian surface mesh, dropped coordinate: x3");
    std::size_t n_verts = 0, n_faces = 0;
    for (const std::string& line : rows) {
        if (line.rfind("v ", 0) == 0) {
            ++n_verts;
            const auto f = split(line.substr(2), ' ');
            REQUIRE(f.size() == 3);
            // x3 == 0 on this surface, so the remaining coordinates are a
            // point of the unit sphere: (f cos v, f sin v, g)
            const double x = std::strtod(f[0].c_str(), nullptr);
            const double y = std::strtod(f[1].c_str(), nullptr);
            const double z = std::strtod(f[2].c_str(), nullptr);
            CHECK(std::abs(std::sqrt(x * x + y * y + z * z) - 1.0) <= 1e-9);
        } else if (line.rfind("f ", 0) == 0) {
            ++n_faces;
            const auto f = split(line.substr(2), ' ');
            REQUIRE(f.size() == 4);
            for (const std::string& idx : f) {
                const long k = std::strtol(idx.c_str(), nullptr, 10);
                CHECK(k >= 1);
                CHECK(k <= 120);
            }
        }
    }
    CHECK(n_verts == 120);   // closed 10 x 12 grid
    CHECK(n_faces == 9 * 11);

    const RunResult bad = run("mesh " + kSphere + " --out=mesh.obj --project=5");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("verify prints family checks, audits, and a machine block") {
    const RunResult r = run("verify --family=iib --nu=17 --nv=17");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("VERIFY PASS") != std::string::npos);
    CHECK(r.out.find("0.3828523990343") != std::string::npos);
    CHECK(r.out.find("violates unit speed") != std::string::npos);
    CHECK(r.out.find("the radical is the slope g'") != std::string::npos);

    const std::size_t brace = r.out.find("{\n");
    REQUIRE(brace != std::string::npos);
    const nlohmann::json j = nlohmann::json::parse(r.out.substr(brace));
    CHECK(j["family"] == "CircleFamily_IIb");
    CHECK(j["passed"] == true);

    const RunResult bad = run("verify --family=iv");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("verify honors explicit parameters") {
    const RunResult r = run("verify --family=iiib --A=0.8 --b=1.5 --c=0.2 --nu=17 --nv=17");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("VERIFY PASS") != std::string::npos);
}
