#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

// Runs the command-line tool, capturing stdout; stderr is discarded unless
// merge_stderr is set.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    std::string cmd = std::string(ELLINV_BIN) + " " + args +
                      (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int count_occurrences(const std::string& text, const std::string& needle) {
    int count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("invert-point reports the image, the radius and all oracle routes") {
    RunResult r = run_cli("invert-point --a 2.5 --b 1.5 --point 3.72,1.6");
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(rec["input"][0].get<double>() == doctest::Approx(3.72));
    CHECK(rec["image"][0].get<double>() ==
          doctest::Approx(1.1098111013993432).epsilon(1e-12));
    CHECK(rec["image"][1].get<double>() ==
          doctest::Approx(0.47733810812874977).epsilon(1e-12));
    CHECK(rec["w"].get<double>() == doctest::Approx(2.2118404712391796).epsilon(1e-12));
    CHECK(rec["oracles"].contains("ray"));
    CHECK(rec["oracles"].contains("polar"));
    CHECK(rec["oracles"].contains("squash"));
    CHECK(rec["max_deviation"].get<double>() <= 1e-12);
}

TEST_CASE("invert-point sends the center to infinity and fixes the boundary") {
    RunResult center = run_cli("invert-point --a 2.5 --b 1.5 --point 0,0");
    REQUIRE(center.exit_code == 0);
    CHECK(json::parse(center.out)["image"].get<std::string>() == "infinity");

    RunResult fixed = run_cli("invert-point --a 2.5 --b 1.5 --point 2.5,0");
    REQUIRE(fixed.exit_code == 0);
    json rec = json::parse(fixed.out);
    CHECK(rec["image"][0].get<double>() == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(rec["image"][1].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("invert-point rejects bad input with the right exit codes") {
    CHECK(run_cli("invert-point --a -1 --b 1.5 --point 1,1").exit_code == 2);
    CHECK(run_cli("invert-point --a 2.5 --b 1.5 --point 1,2,3").exit_code == 1);
    CHECK(run_cli("invert-point --a 2.5 --b 1.5").exit_code == 1);
    CHECK(run_cli("no-such-command").exit_code == 1);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("invert-curve maps a vertical line to an ellipse through the center") {
    RunResult r = run_cli("invert-curve --a 2 --b 1 --curve \"1,0:1;0,0:-2\"");
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(rec["input_canonical"].get<std::string>() == "1,0:1;0,0:-2");
    CHECK(rec["image_canonical"].get<std::string>() == "2,0:1;0,2:4;1,0:-2");
    CHECK(rec["class"].get<std::string>() == "EllipseThroughCenter");
    CHECK(rec["degree"].get<int>() == 2);

    // feeding the image back recovers the original line exactly
    RunResult back =
        run_cli("invert-curve --a 2 --b 1 --curve \"" +
                rec["image_canonical"].get<std::string>() + "\"");
    REQUIRE(back.exit_code == 0);
    CHECK(json::parse(back.out)["image_canonical"].get<std::string>() ==
          "1,0:1;0,0:-2");
}

TEST_CASE("invert-curve leaves lines through the center alone") {
    RunResult r = run_cli("invert-curve --a 2 --b 1 --curve \"1,0:2;0,1:-3\"");
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(rec["image_canonical"].get<std::string>() == "1,0:2;0,1:-3");
    CHECK(rec["class"].get<std::string>() == "LineThroughCenter");
}

TEST_CASE("invert-curve classifies the image of a circle through the center as cubic") {
    RunResult r = run_cli("invert-curve --a 2 --b 1 --curve \"2,0:1;0,2:1;1,0:-2\"");
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(rec["class"].get<std::string>() == "Cubic");
    CHECK(rec["image_canonical"].get<std::string>() == "3,0:1;1,2:4;2,0:-2;0,2:-2");
}

TEST_CASE("invert-curve distinguishes domain errors from parse errors") {
    CHECK(run_cli("invert-curve --a 2 --b 1 --curve \"3,0:1;0,0:-1\"").exit_code == 2);
    CHECK(run_cli("invert-curve --a 2 --b 1 --curve garbage").exit_code == 1);
    CHECK(run_cli("invert-curve --a 2 --b 1").exit_code == 1);
}

TEST_CASE("decimal semi-axes enter the exact layer as true decimals") {
    // with a=2.5, b=1.5: a^2 = 25/4 and b^2 = 9/4 exactly, so the image of
    // x = 2 is (225/16)x - (9/2)x^2 - (25/2)y^2 = 0 with small integers
    RunResult r = run_cli("invert-curve --a 2.5 --b 1.5 --curve \"1,0:1;0,0:-2\"");
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(rec["image_canonical"].get<std::string>() == "2,0:72;0,2:200;1,0:-225");
    CHECK(rec["class"].get<std::string>() == "EllipseThroughCenter");
}

TEST_CASE("chain emits CSV with the height identity in the ratio column") {
    RunResult r = run_cli("chain --ab 1 --r 0.6666666667 --k 1 -n 5");
    REQUIRE(r.exit_code == 0);
    std::istringstream is(r.out);
    std::string header;
    std::getline(is, header);
    CHECK(header == "n,cx,cy,rx,ry,h,ratio");
    std::string line;
    int rows = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        ++rows;
        double ratio = std::stod(line.substr(line.rfind(',') + 1));
        CHECK(ratio == doctest::Approx(2.0).epsilon(1e-9));
    }
    CHECK(rows == 5);
}

TEST_CASE("chain SVG contains the three base arcs plus one outline per element") {
    RunResult r = run_cli("chain --k 0.6 -n 10 --format svg --out /tmp/ellinv_chain.svg");
    REQUIRE(r.exit_code == 0);
    std::string svg = slurp("/tmp/ellinv_chain.svg");
    CHECK(svg.rfind("<svg ", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count_occurrences(svg, "Z\"") == 13);
    // the verification report goes to standard output when --out is used
    CHECK(r.out.find("worst tangency residual") != std::string::npos);
}

TEST_CASE("chain JSON embeds the verification report") {
    RunResult r = run_cli("chain --format json -n 4");
    REQUIRE(r.exit_code == 0);
    json rec = json::parse(r.out);
    CHECK(rec["elements"].size() == 4);
    CHECK(rec["report"]["ok"].get<bool>());
    CHECK(rec["report"]["worst_tangency"].get<double>() <= 1e-9);
    for (const auto& el : rec["elements"])
        CHECK(el["ratio"].get<double>() == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("chain validates its spec through the exit code") {
    CHECK(run_cli("chain -n 0").exit_code == 2);
    CHECK(run_cli("chain --r 1.5").exit_code == 2);
    CHECK(run_cli("chain --format bogus").exit_code == 1);
}

TEST_CASE("every figure id renders an SVG document") {
    for (const std::string id :
         {"inversion", "perpendicular", "concurrent", "parallel", "homothetic",
          "line-image", "circle-image", "parabola-image", "hyperbola-image", "chain"}) {
        RunResult r = run_cli("figure " + id);
        CAPTURE(id);
        CHECK(r.exit_code == 0);
        CHECK(r.out.rfind("<svg ", 0) == 0);
        CHECK(r.out.find("</svg>") != std::string::npos);
        CHECK(r.out.find("<path ") != std::string::npos);
    }
    CHECK(run_cli("figure does-not-exist").exit_code == 1);
    CHECK(run_cli("figure").exit_code == 1);
}

TEST_CASE("config files supply defaults and flags override them") {
    {
        std::ofstream cfg("/tmp/ellinv_cfg.json");
        cfg << R"({"a": "2", "b": 1, "point": "3,0"})";
    }
    RunResult r = run_cli("invert-point --config /tmp/ellinv_cfg.json");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["image"][0].get<double>() ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-12));

    RunResult over = run_cli("invert-point --config /tmp/ellinv_cfg.json --a 2.5");
    REQUIRE(over.exit_code == 0);
    CHECK(json::parse(over.out)["image"][0].get<double>() ==
          doctest::Approx(6.25 / 3.0).epsilon(1e-12));
}

TEST_CASE("config parsing failures exit with code 1") {
    {
        std::ofstream cfg("/tmp/ellinv_bad_key.json");
        cfg << R"({"a": 2, "bogus": 1})";
    }
    CHECK(run_cli("invert-point --point 1,1 --config /tmp/ellinv_bad_key.json")
              .exit_code == 1);
    {
        std::ofstream cfg("/tmp/ellinv_bad_json.json");
        cfg << "{not json";
    }
    CHECK(run_cli("invert-point --point 1,1 --config /tmp/ellinv_bad_json.json")
              .exit_code == 1);
    CHECK(run_cli("invert-point --point 1,1 --config /tmp/ellinv_missing.json")
              .exit_code == 1);
}

TEST_CASE("figure output can be written to a file") {
    RunResult r = run_cli("figure line-image --a 2.5 --b 1.5 --out /tmp/ellinv_line.svg");
    REQUIRE(r.exit_code == 0);
    std::string svg = slurp("/tmp/ellinv_line.svg");
    CHECK(svg.rfind("<svg ", 0) == 0);
    // ellipse outline, input line, image curve (split at the center cut)
    CHECK(count_occurrences(svg, "<path ") >= 3);
}
