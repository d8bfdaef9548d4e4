#include "doctest.h"

#include "toric_ic/cli.hpp"
#include "toric_ic/error.hpp"
#include "toric_ic/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace toric;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

struct Run {
    int code;
    std::string out, err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

int parse_error_line(const std::string& text) {
    try {
        parse_input_text(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("parse vrep with rays and comments") {
    auto in = parse_input_text("# cone\nvrep 3\n0 0 0\n\nrays\n1 0 1  # first\n0 1 1\n1 1 1\n");
    CHECK(in.kind == InputKind::vrep);
    CHECK(in.ambient_dim == 3);
    CHECK(in.vrep.vertices.size() == 1);
    CHECK(in.vrep.rays.size() == 3);
    CHECK(to_polytope(in).facets().size() == 3);
}

TEST_CASE("parse hrep and rationals") {
    auto in = parse_input_text("hrep 2\n1 0 0\n0 1 0\n-1 -1 -5/2\n");
    CHECK(in.kind == InputKind::hrep);
    CHECK(in.hrep.rows.size() == 3);
    auto p = to_polytope(in);
    CHECK(p.vertices().size() == 3);
    CHECK(p.is_compact());
}

TEST_CASE("parse support becomes the newton polytope") {
    auto in = parse_input_text("support 2\n0 0\n3 0\n0 3\n1 1\n1 1\n");
    CHECK(in.kind == InputKind::support);
    CHECK(in.support.exponents.size() == 4);
    CHECK(to_polytope(in).vertices().size() == 3);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error_line("") == 1);
    CHECK(parse_error_line("polygon 2\n0 0\n") == 1);
    CHECK(parse_error_line("vrep zero\n") == 1);
    CHECK(parse_error_line("vrep 0\n") == 1);
    CHECK(parse_error_line("vrep 2\n0 0\n1\n") == 3);
    CHECK(parse_error_line("vrep 2\n0 0\n1 x\n") == 3);
    CHECK(parse_error_line("vrep 2\n0 0\nrays\n1 0\nrays\n") == 5);
    CHECK(parse_error_line("vrep 2\n0 0\nrays\n0 0\n") == 4);
    CHECK(parse_error_line("vrep 2\n0 0\nrays\n1/2 1\n") == 4);
    CHECK(parse_error_line("hrep 2\n0 0 1\n") == 2);
    CHECK(parse_error_line("hrep 2\n1 0\n") == 2);
    CHECK(parse_error_line("support 2\n1 1/2\n") == 2);
    CHECK(parse_error_line("# header only\nvrep 2\n") == 2);
}

TEST_CASE("missing file is an invalid argument") {
    try {
        parse_input("/nonexistent/file.vrep");
        FAIL("expected an error");
    } catch (const ParseError&) {
        FAIL("not a parse error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_argument);
    }
}

TEST_CASE("format_vrep round trips") {
    auto in = parse_input(fixture("square_cone.vrep"));
    auto again = parse_input_text(format_vrep(in.vrep));
    CHECK(again.vrep.vertices == in.vrep.vertices);
    CHECK(again.vrep.rays == in.vrep.rays);
}

TEST_CASE("exact json values") {
    CHECK(exact(Integer(-7)) == Report(-7));
    CHECK(exact(Integer("123456789012345678901234567890")) == Report("123456789012345678901234567890"));
    CHECK(exact(Rat(3, 4)) == Report("3/4"));
    CHECK(exact(Rat(5)) == Report("5"));
}

TEST_CASE("exit codes") {
    auto none = run_cli({});
    CHECK(none.code == 1);
    CHECK(none.err.find("Usage") != std::string::npos);

    auto unknown = run_cli({"frobnicate", fixture("square.vrep")});
    CHECK(unknown.code == 1);

    auto missing = run_cli({"faces", "/nonexistent/file.vrep"});
    CHECK(missing.code == 1);
    CHECK(!missing.err.empty());

    auto ok = run_cli({"faces", fixture("square.vrep")});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("f_vector") != std::string::npos);

    auto unbounded = run_cli({"ehrhart", fixture("square_cone.vrep")});
    CHECK(unbounded.code == 1);

    auto no_functional = run_cli({"blowup", fixture("square_cone.vrep")});
    CHECK(no_functional.code == 1);

    auto outside = run_cli({"blowup", fixture("square_cone.vrep"), "--functional", "1,-1,0"});
    CHECK(outside.code == 1);
}

TEST_CASE("parse error reported with line") {
    const auto path = std::filesystem::temp_directory_path() / "toric_ic_bad.vrep";
    {
        std::ofstream f(path);
        f << "vrep 2\n0 0\n1\n";
    }
    auto r = run_cli({"faces", path.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("line 3") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("json output round trips") {
    for (const char* cmd : {"faces", "fan", "stalks", "ih", "ehrhart", "prime-cut"}) {
        auto r = run_cli({"--format", "json", cmd, fixture("octahedron.vrep")});
        REQUIRE(r.code == 0);
        auto j = Report::parse(r.out);
        CHECK(j["command"] == cmd);
        CHECK(j["input"]["kind"] == "vrep");
        CHECK(Report::parse(j.dump()) == j);
    }
}

TEST_CASE("ih on the octahedron") {
    auto r = run_cli({"--format", "json", "ih", fixture("octahedron.vrep")});
    REQUIRE(r.code == 0);
    auto j = Report::parse(r.out)["report"];
    CHECK(j["class"]["coeffs"] == Report::parse("[1,5,5,1]"));
    CHECK(j["betti"] == Report::parse("[1,0,5,0,5,0,1]"));
}

TEST_CASE("hypersurface on the plane cubic") {
    auto r = run_cli({"--format", "json", "hypersurface", fixture("cubic.support")});
    REQUIRE(r.code == 0);
    auto j = Report::parse(r.out)["report"];
    CHECK(j["genus"] == 1);
    CHECK(r.out.find("uv - u - v - 8") != std::string::npos);
}

TEST_CASE("text output to a file") {
    const auto path = std::filesystem::temp_directory_path() / "toric_ic_out.txt";
    auto r = run_cli({"--out", path.string(), "faces", fixture("triangle.vrep")});
    REQUIRE(r.code == 0);
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str().find("command: faces") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("check passes on every fixture") {
    for (const auto& entry : std::filesystem::directory_iterator(FIXTURES_DIR)) {
        CAPTURE(entry.path().string());
        auto r = run_cli({"--format", "json", "check", entry.path().string()});
        CHECK(r.code == 0);
        auto j = Report::parse(r.out);
        REQUIRE(j.contains("checks"));
        for (const auto& c : j["checks"]) {
            CAPTURE(c.dump());
            CHECK(c["status"] != "fail");
        }
    }
}
