#include "cli.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = mtp::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("mtp_cli_test_" + name);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("prove exit codes") {
    const Result ok = run({"prove", "x^3*cos(x) - sin(x)^3 + (1/15)*x^7", "--upper", "pi/2"});
    CHECK(ok.code == 0);
    CHECK(ok.out.rfind("status=proven", 0) == 0);
    const Result no = run({"prove", "sin(x) - x", "--upper", "1"});
    CHECK(no.code == 1);
    CHECK(no.out.find("status=disproven") != std::string::npos);
    const Result hard = run({"prove", "x - sin(x)", "--budget", "0"});
    CHECK(hard.code == 1);
    CHECK(hard.out.find("status=not-proven") != std::string::npos);
    CHECK(run({"prove", "x - x"}).code == 1);
}

TEST_CASE("usage and parse errors exit with 2") {
    const Result bad = run({"prove", "tan(x)"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("position 0") != std::string::npos);
    CHECK(run({"prove", "x + * 2"}).err.find("position 4") != std::string::npos);
    CHECK(run({"prove", "cos(x)^2", "--method", "method-c"}).code == 2);
    CHECK(run({"prove", "x", "--method", "method-b"}).code == 2);
    CHECK(run({"prove", "x", "--upper", "2"}).code == 2);
    CHECK(run({"prove", "x", "--upper", "one"}).code == 2);
    CHECK(run({"prove", "x", "--open", "--closed"}).code == 2);
    CHECK(run({"prove", "a*x", "--param", "a=1"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"verify", temp_path("missing.json").string()}).code == 2);
    CHECK(run({"reproduce", "nothing"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verbose trace") {
    const Result r = run({"prove", "cos(x)^2*(17*x^4 + 420*x^2 + 4095) + 59*x^6 - 962*x^4 + 3675*x^2 - 4095",
                          "--upper", "1551414/1000000", "-v"});
    CHECK(r.code == 0);
    CHECK(r.out.find("khat: 1 (method-c)") != std::string::npos);
    CHECK(r.out.find("try s=0 k=1") != std::string::npos);
}

TEST_CASE("certificates written by prove verify, and mutations do not") {
    const auto path = temp_path("yang.json");
    const std::vector<std::string> args{"prove", "4*t*(a-1)*cos(t)^2 - 2*a*sin(t)*cos(t) - 2*t*(a-2)",
                                        "--param", "a=1..3/2", "--cert", path.string()};
    REQUIRE(run(args).code == 0);
    const std::string first = read(path);
    REQUIRE(run(args).code == 0);
    CHECK(read(path) == first);
    const Result v = run({"verify", path.string()});
    CHECK(v.code == 0);
    CHECK(v.out == "verified\n");

    const auto pos = first.find("\"tp\"");
    REQUIRE(pos != std::string::npos);
    std::string mutated = first;
    const auto digit = mutated.find_first_of("123456789", pos);
    mutated[digit] = mutated[digit] == '9' ? '8' : static_cast<char>(mutated[digit] + 1);
    const auto bad = temp_path("yang_bad.json");
    std::ofstream(bad, std::ios::binary) << mutated;
    const Result rv = run({"verify", bad.string()});
    CHECK(rv.code == 1);
    CHECK(rv.out.rfind("rejected", 0) == 0);
    std::filesystem::remove(path);
    std::filesystem::remove(bad);
}

TEST_CASE("reproduce the built-in cases") {
    for (const char* name : {"mortici", "pade-left", "pade-right", "yang-param"}) {
        const Result r = run({"reproduce", name});
        CHECK_MESSAGE(r.code == 0, name << "\n" << r.out << r.err);
        CHECK(r.out.find("MISMATCH") == std::string::npos);
    }
    const Result q = run({"reproduce", "pade-left"});
    CHECK(q.out.find("[match]") != std::string::npos);
}

TEST_CASE("reproduce reports golden mismatches") {
    const auto dir = temp_path("golden");
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "mortici.txt") << "poly tp\nshift 9\nscale 1/1728000\ncoeffs 20000 0 -1560 0 60 0 1\n";
    const Result r = run({"reproduce", "mortici", "--golden-dir", dir.string()});
    CHECK(r.code == 1);
    CHECK(r.out.find("MISMATCH") != std::string::npos);
    std::filesystem::remove_all(dir);
}

}
