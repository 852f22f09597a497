// Drives the installed CLI binary end to end through a shell; the binary
// path is injected by the build.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(CHARN_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer;
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t got = std::fread(buffer.data(), 1, buffer.size(), pipe))
        output.append(buffer.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

fs::path temp_dir() {
    const fs::path dir = fs::temp_directory_path() / "charn_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int count_data_lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int data = 0;
    while (std::getline(in, line))
        if (!line.empty() && line.front() != '#') ++data;
    return data;
}

}  // namespace

TEST_CASE("simulate is deterministic and headered") {
    const fs::path a = temp_dir() / "sim_a.txt";
    const fs::path b = temp_dir() / "sim_b.txt";
    const std::string args = "simulate --model ar1 --zeta 0 --n 100 --seed 7 --output ";
    CHECK(run(args + a.string()).exit_code == 0);
    CHECK(run(args + b.string()).exit_code == 0);
    const std::string ca = slurp(a);
    CHECK(ca == slurp(b));
    CHECK(ca.rfind("# charn simulate seed=7", 0) == 0);
    CHECK(count_data_lines(ca) == 101);
}

TEST_CASE("simulate writes n+1 observations for arch1") {
    const fs::path p = temp_dir() / "sim_arch.txt";
    const auto r = run("simulate --model arch1 --zeta 1 --n 200 --seed 5 --output " + p.string());
    CHECK(r.exit_code == 0);
    CHECK(count_data_lines(slurp(p)) == 201);
}

TEST_CASE("simulated output round-trips through the test command") {
    const fs::path p = temp_dir() / "roundtrip.txt";
    REQUIRE(run("simulate --model ar1 --zeta 0 --n 200 --seed 21 --output " + p.string())
                .exit_code == 0);
    const auto r = run("test --variant ar-arch --alpha 0.05 --input " + p.string());
    CHECK((r.exit_code == 0 || r.exit_code == 3));
    CHECK(r.output.find("statistic") != std::string::npos);
}

TEST_CASE("gaussian AR(1) data at alpha 5% usually passes (fixed seed)") {
    const fs::path p = temp_dir() / "null_data.txt";
    REQUIRE(run("simulate --model ar1 --zeta 0 --n 200 --seed 1 --output " + p.string())
                .exit_code == 0);
    const auto r = run("test --variant ar-arch --alpha 0.05 --input " + p.string());
    CHECK(r.exit_code == 0);
}

TEST_CASE("clearly skewed innovations are rejected (fixed seed)") {
    const fs::path p = temp_dir() / "skew_data.txt";
    REQUIRE(run("simulate --model ar1 --zeta 1 --n 500 --seed 2 --output " + p.string())
                .exit_code == 0);
    const auto r = run("test --variant ar --alpha 0.05 --input " + p.string());
    CHECK(r.exit_code == 3);
}

TEST_CASE("the arch variant prints the 0.6198 critical value at alpha 0.02") {
    const fs::path p = temp_dir() / "arch_data.txt";
    REQUIRE(run("simulate --model arch1 --zeta 0 --n 100 --seed 3 --output " + p.string())
                .exit_code == 0);
    const auto r = run("test --variant arch --alpha 0.02 --input " + p.string());
    CHECK(r.output.find("0.6198") != std::string::npos);
}

TEST_CASE("untabulated alpha fails without --interpolate and runs with it") {
    const fs::path p = temp_dir() / "alpha_data.txt";
    REQUIRE(run("simulate --model ar1 --zeta 0 --n 100 --seed 4 --output " + p.string())
                .exit_code == 0);
    CHECK(run("test --variant ar --alpha 0.07 --input " + p.string()).exit_code == 2);
    const auto ok = run("test --variant ar --alpha 0.07 --interpolate --input " + p.string());
    CHECK((ok.exit_code == 0 || ok.exit_code == 3));
}

TEST_CASE("empty input is a usage error with a diagnostic") {
    const fs::path p = temp_dir() / "empty.txt";
    std::ofstream(p).close();
    const auto r = run("test --variant ar --input " + p.string());
    CHECK(r.exit_code == 1);
}

TEST_CASE("malformed input is a data error") {
    const fs::path p = temp_dir() / "bad.txt";
    {
        std::ofstream out(p);
        out << "value\n1.0\n2.0\nnot_a_number\n";
        for (int i = 0; i < 30; ++i) out << i << ".5\n";
    }
    const auto r = run("test --variant ar --input " + p.string());
    CHECK(r.exit_code == 2);
}

TEST_CASE("too few observations is a usage error") {
    const fs::path p = temp_dir() / "short.txt";
    {
        std::ofstream out(p);
        for (int i = 0; i < 12; ++i) out << i * 0.1 << "\n";
    }
    CHECK(run("test --variant ar --input " + p.string()).exit_code == 1);
}

TEST_CASE("missing input file and unknown flags are usage errors") {
    CHECK(run("test --variant ar --input /nonexistent/file.txt").exit_code == 1);
    CHECK(run("test --no-such-flag").exit_code == 1);
    CHECK(run("").exit_code == 1);
}

TEST_CASE("json report parses and carries the decision") {
    const fs::path p = temp_dir() / "json_data.txt";
    REQUIRE(run("simulate --model ar1 --zeta 0 --n 100 --seed 6 --output " + p.string())
                .exit_code == 0);
    const auto r = run("test --variant linear-ar1 --format json --input " + p.string());
    const auto parsed = nlohmann::json::parse(r.output);
    CHECK(parsed["variant"] == "linear-ar1");
    CHECK(parsed.contains("statistic"));
    CHECK(parsed["diagnostics"].contains("theta_hat"));
    CHECK(parsed["reject"].is_boolean());
}

TEST_CASE("the input parser accepts comments, csv headers and columns") {
    const fs::path p = temp_dir() / "formats.txt";
    {
        std::ofstream out(p);
        out << "# a comment\nvalue\n";
        for (int i = 0; i < 15; ++i) out << 0.1 * i << "\n";
        out << "1.5, 2.5\n3.5 4.5\n# trailing comment\n0.25\n";
    }
    // 15 + 4 + 1 observations > 21: parses cleanly and runs
    const auto r = run("test --variant ar --input " + p.string());
    CHECK((r.exit_code == 0 || r.exit_code == 3));
}

TEST_CASE("mc-table reps 1 yields degenerate rates in csv") {
    const auto r = run("mc-table --preset table3 --reps 1 --seed 1 --quiet");
    CHECK(r.exit_code == 0);
    std::istringstream in(r.output);
    std::string line;
    std::getline(in, line);
    CHECK(line == "model,test,zeta,n,R,alpha,rejection_rate,stderr,errors");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        const auto rate_pos = line.find(",0.05,");
        REQUIRE(rate_pos != std::string::npos);
        const std::string tail = line.substr(rate_pos + 6);
        CHECK((tail.rfind("0,", 0) == 0 || tail.rfind("1,", 0) == 0));
    }
    CHECK(rows == 32);
}

TEST_CASE("mc-table json output parses") {
    const auto r = run("mc-table --preset table3 --reps 1 --seed 1 --format json --quiet");
    CHECK(r.exit_code == 0);
    const auto parsed = nlohmann::json::parse(r.output);
    CHECK(parsed.size() == 32);
}
