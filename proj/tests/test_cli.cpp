#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ghsimplex/cli.hpp"
#include "ghsimplex/metric_io.hpp"
#include "ghsimplex/metric_space.hpp"

namespace fs = std::filesystem;
using ghs::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args, ghs::cli::Environment env = {}) {
    args.insert(args.begin(), "ghsimplex");
    std::ostringstream out, err;
    const int code = run(args, out, err, env);
    return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(GHS_FIXTURE_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

fs::path scratch_dir() {
    const auto dir = fs::temp_directory_path() / "ghsimplex-cli-tests";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("validate") {
    auto r = cli({"validate", "-i", fixture("e1.csv")});
    CHECK(r.code == 0);
    CHECK(r.out == "n=3 diam=2 eps=1 OK\n");

    r = cli({"validate", "-i", fixture("triangle_violation.csv")});
    CHECK(r.code == 2);
    CHECK(r.out.find("INVALID") == 0);
    CHECK(r.out.find("(p, q, r)") != std::string::npos);

    r = cli({"validate", "-i", fixture("triangle_violation.csv"), "--no-triangle-check"});
    CHECK(r.code == 0);

    CHECK(cli({"validate", "-i", fixture("missing.csv")}).code == 3);
    CHECK(cli({"validate"}).code == 1);

    r = cli({"validate", "-i", fixture("e1.csv"), "--format", "json"});
    CHECK(r.out == R"({"n":3,"diam":2.0,"eps":1.0,"valid":true})"
                   "\n");
}

TEST_CASE("distance") {
    auto r = cli({"distance", "-i", fixture("e1.csv"), "--m", "2", "--lambda", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "2dGH=1 dGH=0.5 branch=partition-enum argmin={{a,b},{c}}\n");

    r = cli({"distance", "-i", fixture("e1.csv"), "--m", "5", "--lambda", "1"});
    CHECK(r.out.find("2dGH=1 ") == 0);
    CHECK(r.out.find("branch=bigger-simplex") != std::string::npos);

    r = cli({"distance", "-i", fixture("point.csv"), "--m", "3", "--lambda", "2"});
    CHECK(r.out.find("2dGH=2 ") == 0);

    CHECK(cli({"distance", "-i", fixture("e1.csv"), "--m", "2"}).code == 1);
    CHECK(cli({"distance", "-i", fixture("e1.csv"), "--m", "2", "--lambda", "0"}).code == 1);
    CHECK(cli({"distance", "-i", fixture("triangle_violation.csv"), "--m", "2", "--lambda", "1"}).code == 2);
}

TEST_CASE("distance refuses past the cap") {
    const auto dir = scratch_dir();
    const auto path = (dir / "big.csv").string();
    CHECK(cli({"generate", "--kind", "random-metric", "--n", "14", "--seed", "3", "-o", path}).code == 0);
    const std::vector<std::string> args{"distance", "-i", path, "--m", "5", "--lambda", "30"};
    auto with = [&](std::vector<std::string> extra) {
        auto a = args;
        a.insert(a.end(), extra.begin(), extra.end());
        return a;
    };
    CHECK(cli(with({"--cap", "100"})).code == 4);
    CHECK(cli(args, {std::string("100")}).code == 4);
    CHECK(cli(with({"--cap", "100000000"}), {std::string("100")}).code == 0);
    CHECK(cli(args, {std::string("zero")}).code == 1);
}

TEST_CASE("characteristics") {
    auto r = cli({"characteristics", "-i", fixture("e1.csv"), "--m", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "m=2 diam=2 eps=1 alpha-=1 alpha+=2 d-=1 d+=2 case=1 mst-check=OK\n");

    r = cli({"characteristics", "-i", fixture("simplex5.csv"), "--m", "3"});
    CHECK(r.out == "m=3 diam=2 eps=2 alpha-=2 alpha+=2 d-=2 d+=2 case=DmEqualsDiam mst-check=OK\n");

    r = cli({"characteristics", "-i", fixture("e1.csv"), "--m", "1"});
    CHECK(r.out.find("alpha-=inf alpha+=inf d-=2 d+=2") != std::string::npos);

    r = cli({"characteristics", "--preset", "circle-m2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("case=DmEqualsDiam mst-check=n/a") != std::string::npos);

    CHECK(cli({"characteristics", "-i", fixture("e1.csv"), "--m", "4"}).code == 1);
    CHECK(cli({"characteristics", "--preset", "nope"}).code == 1);

    const auto dir = scratch_dir();
    const auto bad = dir / "bad_chars.json";
    std::ofstream(bad) << R"({"m":2,"diam":2,"alpha_minus":3,"alpha_plus":2,"d_minus":1,"d_plus":2})";
    CHECK(cli({"characteristics", "-i", bad.string()}).code == 2);
    const auto good = dir / "good_chars.json";
    std::ofstream(good) << R"({"m":2,"diam":2,"eps":1,"alpha_minus":1,"alpha_plus":2,"d_minus":1,"d_plus":2})";
    r = cli({"characteristics", "-i", good.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("case=1") != std::string::npos);
}

TEST_CASE("sweep goldens") {
    const std::vector<std::string> e1_args{"sweep", "-i", fixture("e1.csv"), "--m", "2", "--lambda-min", "0.5",
                                           "--lambda-max", "5", "--lambda-step", "0.5", "--format", "csv"};
    const std::vector<std::string> circle_args{"sweep", "--preset", "circle-m2", "--lambda-min", "0.5", "--lambda-max",
                                               "4", "--lambda-step", "0.5", "--format", "csv"};
    for (const auto& [args, golden] : {std::pair{e1_args, "sweep_e1_m2.csv"}, std::pair{circle_args, "sweep_circle_m2.csv"}}) {
        const auto expected = slurp(fs::path(GHS_GOLDEN_DIR) / golden);
        REQUIRE_FALSE(expected.empty());
        for (const char* threads : {"1", "2", "4"}) {
            auto a = args;
            a.insert(a.end(), {"--threads", threads});
            const auto r = cli(a);
            CHECK(r.code == 0);
            CHECK(r.out == expected);
        }
    }
}

TEST_CASE("sweep rows are well formed") {
    auto r = cli({"sweep", "-i", fixture("e1.csv"), "--m", "2", "--lambda-min", "0.25", "--lambda-max", "6",
                  "--lambda-step", "0.25", "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "lambda,lo,hi,exact,case,region");
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        std::istringstream fields(line);
        std::string lambda, lo, hi, exact;
        std::getline(fields, lambda, ',');
        std::getline(fields, lo, ',');
        std::getline(fields, hi, ',');
        std::getline(fields, exact, ',');
        CHECK(std::stod(lo) <= std::stod(hi));
        if (exact == "true") CHECK(lo == hi);
        ++rows;
    }
    CHECK(rows == 24);

    r = cli({"sweep", "-i", fixture("e1.csv"), "--m", "2", "--lambda", "3", "--format", "json"});
    CHECK(r.out == R"({"m":2,"rows":[{"lambda":3.0,"lo":1.0,"hi":2.0,"exact":false,"case":"1","region":"Middle","value":1.0}]})"
                   "\n");

    CHECK(cli({"sweep", "-i", fixture("e1.csv"), "--m", "2", "--lambda-min", "2", "--lambda-max", "1",
               "--lambda-step", "0.5"})
              .code == 1);
    CHECK(cli({"sweep", "-i", fixture("e1.csv"), "--m", "2"}).code == 1);
}

TEST_CASE("oracle-check") {
    auto r = cli({"oracle-check", "-i", fixture("e1.csv"), "--m", "2", "--lambda", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "formula=1 oracle=1 delta=0 branch=partition-enum PASS\n");

    r = cli({"oracle-check", "-i", fixture("e1.csv"), "--m", "5", "--lambda", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("branch=bigger-simplex PASS") != std::string::npos);

    const auto dir = scratch_dir();
    const auto path = (dir / "six.csv").string();
    CHECK(cli({"generate", "--kind", "random-metric", "--n", "6", "--seed", "17", "--real", "-o", path}).code == 0);
    const auto x = ghs::validate(ghs::read_matrix_file(path));
    r = cli({"oracle-check", "-i", path, "--m", "7", "--lambda", std::to_string(x.diam())});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);

    CHECK(cli({"oracle-check", "-i", fixture("simplex5.csv"), "--m", "5", "--lambda", "1", "--cap", "10"}).code == 4);
}

TEST_CASE("generate") {
    const auto dir = scratch_dir();

    auto r = cli({"generate", "--kind", "simplex", "--n", "4", "--lambda", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "0,1,2,3\n0,2,2,2\n2,0,2,2\n2,2,0,2\n2,2,2,0\n");

    const auto a = (dir / "r1.csv").string();
    const auto b = (dir / "r2.csv").string();
    CHECK(cli({"generate", "--kind", "random-metric", "--n", "6", "--seed", "42", "-o", a}).code == 0);
    CHECK(cli({"generate", "--kind", "random-metric", "--n", "6", "--seed", "42", "-o", b}).code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(cli({"validate", "-i", a}).code == 0);

    r = cli({"generate", "--kind", "circle-sample", "--n", "8", "-o", (dir / "c.json").string()});
    CHECK(r.code == 0);
    CHECK(r.err.find("sample != continuum") != std::string::npos);
    const auto circle = ghs::validate(ghs::read_matrix_file((dir / "c.json").string()));
    for (std::size_t k = 0; k < 8; ++k) CHECK(circle(0, k) == doctest::Approx(2 * std::sin(k * M_PI / 8)));

    for (const std::string kind : {"simplex", "random-metric", "lp-points", "circle-sample"}) {
        const auto p = (dir / ("rt-" + kind + ".csv")).string();
        CHECK(cli({"generate", "--kind", kind, "--n", "5", "--lambda", "1.5", "--real", "-o", p}).code == 0);
        CHECK(cli({"validate", "-i", p}).code == 0);
    }
    r = cli({"generate", "--kind", "lp-points", "--n", "5", "--p", "inf", "--dim", "3", "--seed", "9", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"dist\"") != std::string::npos);

    CHECK(cli({"generate", "--kind", "torus", "--n", "4"}).code == 1);
    CHECK(cli({"generate", "--kind", "simplex", "--n", "4"}).code == 1);
    CHECK(cli({"generate", "--kind", "simplex"}).code == 1);
}

TEST_CASE("usage") {
    CHECK(cli({}).code == 1);
    CHECK(cli({"frobnicate"}).code == 1);
    CHECK(cli({"--help"}).code == 0);
}
