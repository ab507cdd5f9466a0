#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "curvarc/contour.hpp"
#include "curvarc/correspondence.hpp"
#include "curvarc/io.hpp"
#include "curvarc/vec2.hpp"
#include "helpers.hpp"

using namespace curvarc;
namespace fs = std::filesystem;

namespace {

const char* kCli = CURVARC_CLI_PATH;
const char* kFixtures = CURVARC_FIXTURE_DIR;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("curvarc-cli-" + std::to_string(static_cast<unsigned>(::getpid())) + "-" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }

    static int& counter() {
        static int n = 0;
        return n;
    }
};

int run(const std::string& args) {
    const std::string cmd = std::string(kCli) + " " + args;
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    return WEXITSTATUS(status);
}

std::string fixture(const std::string& name) { return (fs::path(kFixtures) / name).string(); }

std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void spit(const std::string& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

}  // namespace

TEST_CASE("cli help exits zero and no subcommand exits one") {
    TempDir dir;
    CHECK(run("--help > " + dir.file("help.txt") + " 2>&1") == 0);
    CHECK(run("> " + dir.file("none.txt") + " 2>&1") == 1);
    CHECK(run("frobnicate > /dev/null 2>&1") == 1);
}

TEST_CASE("cli resample reproduces square corners and midpoints") {
    TempDir dir;
    const std::string out = dir.file("sq8.json");
    CHECK(run("resample --input " + fixture("square.json") + " --n 8 --output " + out +
              " > /dev/null 2>&1") == 0);
    const PlanarContour r = read_contour(out);
    REQUIRE(r.size() == 8);
    CHECK(r.closed());
    const Vec2 expected[] = {{0, 0},   {0.5, 0}, {1, 0}, {1, 0.5},
                             {1, 1},   {0.5, 1}, {0, 1}, {0, 0.5}};
    for (std::size_t i = 0; i < 8; ++i) CHECK(distance(r[i], expected[i]) < 1e-12);
}

TEST_CASE("cli output bytes are deterministic") {
    TempDir dir;
    const std::string cmd = "resample --input " + fixture("ellipse.json") +
                            " --n 64 --mode spline --output ";
    CHECK(run(cmd + dir.file("a.json") + " > /dev/null 2>&1") == 0);
    CHECK(run(cmd + dir.file("b.json") + " > /dev/null 2>&1") == 0);
    const std::string a = slurp(dir.file("a.json"));
    CHECK(!a.empty());
    CHECK(a == slurp(dir.file("b.json")));
}

TEST_CASE("cli weighted resample avoids the flat diameter") {
    TempDir dir;
    const std::string out = dir.file("semi.json");
    CHECK(run("resample --input " + fixture("semicircle_diameter.json") +
              " --n 50 --weight-c 0 --output " + out + " > /dev/null 2>&1") == 0);
    const PlanarContour r = read_contour(out);
    REQUIRE(r.size() == 50);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const bool inside_diameter =
            std::abs(r[i].y) < 1e-9 && r[i].x > -1.0 + 1e-5 && r[i].x < 1.0 - 1e-5;
        CHECK_FALSE(inside_diameter);
    }
}

TEST_CASE("cli curvature emits the square profile") {
    TempDir dir;
    const std::string out = dir.file("prof.csv");
    CHECK(run("curvature --input " + fixture("square.json") + " --output " + out +
              " > /dev/null 2>&1") == 0);
    const std::string text = slurp(out);
    std::istringstream in(text);
    std::string header;
    std::getline(in, header);
    CHECK(header == "s,kappa");
    double s, kappa;
    char comma;
    int rows = 0;
    double expected_s[] = {0.0, 0.25, 0.5, 0.75};
    while (in >> s >> comma >> kappa) {
        REQUIRE(rows < 4);
        CHECK(std::abs(s - expected_s[rows]) < 1e-12);
        CHECK(std::abs(kappa - testutil::kPi / 2) < 1e-12);
        ++rows;
    }
    CHECK(rows == 4);
}

TEST_CASE("cli curvature transforms the parameter axis on request") {
    TempDir dir;
    const std::string arc = dir.file("arc.csv");
    const std::string cur = dir.file("cur.csv");
    const std::string base = "curvature --input " + fixture("ellipse.json") + " --output ";
    CHECK(run(base + arc + " > /dev/null 2>&1") == 0);
    CHECK(run(base + cur + " --param curvature > /dev/null 2>&1") == 0);
    CHECK(slurp(arc) != slurp(cur));

    // The transformed axis still starts at 0 and stays inside [0, 1].
    std::istringstream in(slurp(cur));
    std::string line;
    std::getline(in, line);
    double prev = -1.0;
    bool monotone = true;
    while (std::getline(in, line)) {
        const double s = std::stod(line.substr(0, line.find(',')));
        if (s < prev) monotone = false;
        prev = s;
        CHECK(s >= 0.0);
        CHECK(s <= 1.0);
    }
    CHECK(monotone);
}

TEST_CASE("cli angle export and reconstruct roundtrip the square") {
    TempDir dir;
    const std::string angles = dir.file("angles.csv");
    const std::string back = dir.file("back.json");
    CHECK(run("curvature --input " + fixture("square.json") + " --output " +
              dir.file("prof.csv") + " --angles-out " + angles + " > /dev/null 2>&1") == 0);
    CHECK(run("reconstruct --angles " + angles + " --closed --output " + back +
              " > /dev/null 2>&1") == 0);
    const PlanarContour sq = read_contour(fixture("square.json"));
    const PlanarContour r = read_contour(back);
    REQUIRE(r.size() == sq.size());
    for (std::size_t i = 0; i < sq.size(); ++i) CHECK(distance(r[i], sq[i]) < 1e-12);
}

TEST_CASE("cli reconstruct accepts uniform-edge-length angle lists") {
    TempDir dir;
    const std::string angles = dir.file("turns.csv");
    std::ostringstream text;
    text << "turning_angle\n";
    for (int i = 0; i < 4; ++i) text << "1.5707963267948966\n";
    spit(angles, text.str());
    const std::string out = dir.file("square.json");
    CHECK(run("reconstruct --angles " + angles + " --closed --uniform-edge-length 0.25 "
              "--start 1,1 --heading 0 --output " + out + " > /dev/null 2>&1") == 0);
    const PlanarContour r = read_contour(out);
    REQUIRE(r.size() == 4);
    CHECK(distance(r[0], {1.0, 1.0}) < 1e-15);
    CHECK(distance(r[1], {1.25, 1.0}) < 1e-12);
    CHECK(distance(r[2], {1.25, 1.25}) < 1e-12);
    CHECK(distance(r[3], {1.0, 1.25}) < 1e-12);
}

TEST_CASE("cli landmarks place cardinal points on the circle") {
    TempDir dir;
    const std::string out = dir.file("lm.json");
    CHECK(run("landmarks --input " + fixture("circle.json") +
              " --n 4 --weight-c 0 --weight-lambda 1 --anchor-s 0 --output " + out +
              " > /dev/null 2>&1") == 0);
    const LandmarkSet lm = read_landmarks(out);
    REQUIRE(lm.size() == 4);
    CHECK(lm.source_s[0] == 0.0);
    CHECK(distance(lm.points[0], {1, 0}) < 1e-12);
    CHECK(distance(lm.points[1], {0, 1}) < 1e-3);
    CHECK(distance(lm.points[2], {-1, 0}) < 1e-3);
    CHECK(distance(lm.points[3], {0, -1}) < 1e-3);
}

TEST_CASE("cli landmarks transfer onto a second contour") {
    TempDir dir;
    const std::string out1 = dir.file("lm1.json");
    const std::string out2 = dir.file("lm2.json");
    CHECK(run("landmarks --input " + fixture("circle.json") + " --input2 " +
              fixture("ellipse.json") + " --n 6 --anchor-s 0 --anchor2-s 0 --output " + out1 +
              " --output2 " + out2 + " > /dev/null 2>&1") == 0);
    const LandmarkSet a = read_landmarks(out1);
    const LandmarkSet b = read_landmarks(out2);
    CHECK(a.size() == 6);
    CHECK(b.size() == 6);
    CHECK(a.source_s[0] == 0.0);
    CHECK(b.source_s[0] == 0.0);
}

TEST_CASE("cli landmarks auto anchor lands on the curvature peak") {
    TempDir dir;
    const std::string out = dir.file("lm.json");
    CHECK(run("landmarks --input " + fixture("ellipse.json") +
              " --n 4 --anchor-auto --output " + out + " > /dev/null 2>&1") == 0);
    const LandmarkSet lm = read_landmarks(out);
    REQUIRE(lm.size() == 4);
    // The ellipse curvature peaks at the major-axis ends.
    CHECK(std::abs(std::abs(lm.points[0].x) - 2.0) < 1e-3);
    CHECK(std::abs(lm.points[0].y) < 1e-2);
}

TEST_CASE("cli landmarks report against a reference") {
    TempDir dir;
    const std::string out = dir.file("lm.json");
    const std::string base = "landmarks --input " + fixture("circle.json") +
                             " --n 4 --anchor-s 0 --output ";
    CHECK(run(base + out + " > /dev/null 2>&1") == 0);
    const std::string report = dir.file("report.txt");
    CHECK(run(base + dir.file("again.json") + " --reference " + out + " > " + report +
              " 2>&1") == 0);
    const std::string text = slurp(report);
    CHECK(text.find("mean 0 max 0") != std::string::npos);
}

TEST_CASE("cli svg outputs are written") {
    TempDir dir;
    const std::string svg = dir.file("c.svg");
    CHECK(run("resample --input " + fixture("square.json") + " --n 8 --output " +
              dir.file("o.json") + " --svg " + svg + " > /dev/null 2>&1") == 0);
    const std::string text = slurp(svg);
    CHECK(text.find("<svg") != std::string::npos);
    CHECK(text.find("</svg>") != std::string::npos);
}

TEST_CASE("cli input errors exit with code one") {
    TempDir dir;
    CHECK(run("resample --input " + dir.file("missing.json") + " --n 8 --output " +
              dir.file("o.json") + " > /dev/null 2>&1") == 1);
    CHECK(run("landmarks --input " + fixture("circle.json") + " --n 4 --output " +
              dir.file("o.json") + " > /dev/null 2>&1") == 1);  // no anchor
    spit(dir.file("open.csv"), "0,0\n1,0\n");
    CHECK(run("landmarks --input " + dir.file("open.csv") + " --n 4 --anchor-s 0 --output " +
              dir.file("o.json") + " > /dev/null 2>&1") == 1);  // open contour
}

TEST_CASE("cli zero total weight exits with code two") {
    TempDir dir;
    spit(dir.file("line.csv"), "0,0\n1,0\n2,0\n3,0\n");
    CHECK(run("resample --input " + dir.file("line.csv") + " --n 5 --weight-c 0 --output " +
              dir.file("o.json") + " > /dev/null 2>&1") == 2);
}

TEST_CASE("cli count mismatch exits with code three") {
    TempDir dir;
    const std::string four = dir.file("four.json");
    CHECK(run("landmarks --input " + fixture("circle.json") + " --n 4 --anchor-s 0 --output " +
              four + " > /dev/null 2>&1") == 0);
    CHECK(run("landmarks --input " + fixture("circle.json") + " --n 6 --anchor-s 0 --output " +
              dir.file("six.json") + " --reference " + four + " > /dev/null 2>&1") == 3);
}

TEST_CASE("cli csv closed flag wraps the contour") {
    TempDir dir;
    spit(dir.file("tri.csv"), "0,0\n2,0\n1,2\n");
    const std::string out = dir.file("tri.json");
    CHECK(run("resample --input " + dir.file("tri.csv") + " --closed --n 3 --output " + out +
              " > /dev/null 2>&1") == 0);
    CHECK(read_contour(out).closed());
}
