#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(GENSEQ_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval prints plain values") {
    RunResult r = run_cli("eval -i 2 -k 3 -r 1 -s 1 -n 7");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "7\n");

    r = run_cli("eval -i 1 -k 2 -r 1 -s 1 --kind l -n 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "3\n");
}

TEST_CASE("eval csv range") {
    RunResult r = run_cli("eval -i 1 -k 2 -r 1 -s 1 -n -1..4 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "n,value\n-1,1\n0,1\n1,2\n2,3\n3,5\n4,8\n");
}

TEST_CASE("eval json round-trips") {
    RunResult r = run_cli("eval -i 1 -k 2 -n 0..3 --format json");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.output);
    CHECK(doc["values"].size() == 4);
    CHECK(json::parse(doc.dump()) == doc);
}

TEST_CASE("eval backends agree through the pipeline") {
    std::string reference;
    for (const char* backend : {"recurrence", "closed", "genfun", "matrix", "tilings"}) {
        RunResult r = run_cli(std::string("eval -i 2 -k 4 -r 2 -s 1 -n -1..10 --backend ") +
                              backend);
        CAPTURE(backend);
        CHECK(r.exit_code == 0);
        if (reference.empty()) {
            reference = r.output;
        } else {
            CHECK(r.output == reference);
        }
    }
}

TEST_CASE("eval rejects hypothesis violations with exit 2") {
    RunResult r = run_cli("eval -i 2 -k 1 -n 3 --backend closed");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("k >= i") != std::string::npos);

    r = run_cli("eval -i 2 -k 2 -n 3 --kind l");
    CHECK(r.exit_code == 2);

    r = run_cli("eval -i 1 -k 1 -n 3 --backend matrix");
    CHECK(r.exit_code == 2);  // the step matrix needs k >= 2

    r = run_cli("eval -i 0 -k 2 -n 3");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("i must be >= 1") != std::string::npos);
}

TEST_CASE("tilings count and render") {
    RunResult r = run_cli("tilings -i 2 -k 3 -n 7 --count-only");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "7\n");

    r = run_cli("tilings -i 1 -k 2 -n -1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "\n");  // the single empty tiling renders as one empty line

    r = run_cli("tilings -i 1 -k 2 -n 4 --type l --count-only");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "7\n");

    r = run_cli("tilings -i 1 -k 2 -n 2 --type l");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "[i:1][i:1][i:1]\n[i:1][k:1]\n[k:1][i:1]\n");

    r = run_cli("tilings -i 1 -k 2 -n 4 --limit 3");
    CHECK(r.exit_code == 0);
    CHECK(std::count(r.output.begin(), r.output.end(), '\n') == 3);

    r = run_cli("tilings -i 2 -k 2 -n 3 --type l --count-only");
    CHECK(r.exit_code == 2);  // type-L needs k > i
}

TEST_CASE("verify single identity and unknown id") {
    RunResult r = run_cli("verify --identity ID-2R2 --nmax 20");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("failed=0") != std::string::npos);

    r = run_cli("verify --identity NOPE");
    CHECK(r.exit_code == 2);

    r = run_cli("verify --identity ID-BREAK --imax 2 --kmax 3 --rmax 2 --smax 2 --nmax 12 "
                "--format json");
    CHECK(r.exit_code == 0);
    json doc = json::parse(r.output);
    CHECK(doc["identity"] == "ID-BREAK");
    CHECK(doc["failed"] == 0);
}

TEST_CASE("genfun coefficients") {
    RunResult r = run_cli("genfun -i 1 -k 2 --coeffs 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 1 2 3 5 8\n");

    r = run_cli("genfun -i 2 -k 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "numerator: 1 1 0\ndenominator: 1 0 -1 -1\n");
}

TEST_CASE("matrix subcommand") {
    RunResult r = run_cli("matrix -i 1 -k 2 --cassini 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n");

    r = run_cli("matrix -i 1 -k 2 --power 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "13 8\n8 5\n");

    r = run_cli("matrix -i 1 -k 3 --det");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1\n");

    r = run_cli("matrix -i 1 -k 3 --det-a");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "-1\n");

    r = run_cli("matrix -i 1 -k 2 --det --cassini 1");
    CHECK(r.exit_code == 2);

    r = run_cli("matrix -i 2 -k 3 --cassini 1");
    CHECK(r.exit_code == 2);  // the closed form needs i = 1
}

TEST_CASE("oeis regression against the bundled references") {
    RunResult r = run_cli(std::string("oeis Fibonacci --bfile ") + GENSEQ_DATA_DIR +
                          "/fibonacci.txt --range 1..30");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("failed=0") != std::string::npos);

    r = run_cli(std::string("oeis Padovan --bfile ") + GENSEQ_DATA_DIR + "/padovan.txt");
    CHECK(r.exit_code == 0);

    r = run_cli("oeis Fibonacci --bfile /nonexistent.txt");
    CHECK(r.exit_code == 2);

    r = run_cli(std::string("oeis NotASequence --bfile ") + GENSEQ_DATA_DIR +
                "/fibonacci.txt");
    CHECK(r.exit_code == 2);
}

TEST_CASE("regression failures exit 1") {
    std::string path = "/tmp/genseq_bad_bfile.txt";
    FILE* f = fopen(path.c_str(), "w");
    REQUIRE(f != nullptr);
    fputs("1 1\n2 1\n3 2\n4 99\n", f);
    fclose(f);
    RunResult r = run_cli("oeis Fibonacci --bfile " + path + " --range 1..4");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("failed=1") != std::string::npos);
    CHECK(r.output.find("mismatch at 4") != std::string::npos);
    remove(path.c_str());
}

TEST_CASE("usage errors exit 2") {
    RunResult r = run_cli("eval -i 1 -k 2");  // missing -n
    CHECK(r.exit_code == 2);
    r = run_cli("eval -i 1 -k 2 -n bogus");
    CHECK(r.exit_code == 2);
    r = run_cli("nonsense");
    CHECK(r.exit_code == 2);
}

}  // TEST_SUITE
