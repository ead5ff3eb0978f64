#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run(const std::string& args) {
    const std::string out_path = "/tmp/hyperstrata_cli_out.txt";
    std::string cmd =
        std::string(HYPERSTRATA_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(status);
    r.out = slurp(out_path);
    return r;
}

std::string data(const std::string& name) {
    return std::string(HYPERSTRATA_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("enumerate subcommand row counts and exit codes") {
    RunResult comps = run("enumerate --kind compositions --n 6 --l 4 --format table");
    CHECK(comps.exit_code == 0);
    int rows = 0;
    for (char c : comps.out) rows += c == '\n';
    CHECK(rows == 10);

    RunResult parts = run("enumerate --kind partitions --n 4 --l 2 --format table");
    CHECK(parts.exit_code == 0);
    rows = 0;
    for (char c : parts.out) rows += c == '\n';
    CHECK(rows == 2);

    RunResult minmax = run("enumerate --kind minmax --n 8 --s 4");
    CHECK(minmax.exit_code == 0);
    CHECK(minmax.out.find("p_min") != std::string::npos);

    CHECK(run("enumerate --kind compositions --n 4 --l 9").exit_code == 2);
    CHECK(run("enumerate --kind nonsense --n 4 --l 2").exit_code == 2);
}

TEST_CASE("poset subcommand reports and exit codes") {
    RunResult ok =
        run("poset --facets [[1,1,2,2],[1,1,3,1],[1,2,1,2],[1,2,2,1]] --n 6 --s 4");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("\"potential\": true") != std::string::npos);
    CHECK(ok.out.find("\"f\": [") != std::string::npos);
    CHECK(ok.out.find("\"shelling\"") != std::string::npos);

    RunResult bad = run("poset --facets [[1,1,1,3]] --n 6 --s 4");
    CHECK(bad.exit_code == 3);
    CHECK(bad.out.find("\"potential\": false") != std::string::npos);

    RunResult dot = run(
        "poset --facets [[1,1,2,2],[1,1,3,1],[1,2,1,2],[1,2,2,1]] --n 6 --s 4 --format dot");
    CHECK(dot.exit_code == 0);
    CHECK(dot.out.find("digraph") != std::string::npos);

    CHECK(run("poset --facets [[1,2]] --n 6 --s 4").exit_code == 2);
}

TEST_CASE("bounds subcommand") {
    RunResult r = run("bounds --n 8 --s 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"covering_upper\": 3") != std::string::npos);
    CHECK(r.out.find("\"covering_lower_recursive\": 1") != std::string::npos);
    CHECK(run("bounds --n 3 --s 9").exit_code == 2);
}

TEST_CASE("cover enumerate matches the golden canonical census") {
    RunResult r = run("cover enumerate --n 6 --s 4 --up-to-reversal");
    CHECK(r.exit_code == 0);
    CHECK(r.out == slurp(data("golden_cover_6_4_canonical.json")));
}

TEST_CASE("cover solve matches the golden solutions") {
    RunResult r64 = run("cover solve --n 6 --s 4 --method exact");
    CHECK(r64.exit_code == 0);
    CHECK(r64.out == slurp(data("golden_cover_6_4_solve.json")));

    RunResult r84 = run("cover solve --n 8 --s 4 --method exact");
    CHECK(r84.exit_code == 0);
    CHECK(r84.out == slurp(data("golden_cover_8_4_solve.json")));
}

TEST_CASE("cover check verdicts") {
    RunResult yes = run("cover check --n 6 --s 4 --partitions 2,2,1,1");
    CHECK(yes.exit_code == 0);
    CHECK(yes.out.find("\"covering\": true") != std::string::npos);
    RunResult no = run("cover check --n 6 --s 4 --partitions 3,1,1,1");
    CHECK(no.exit_code == 0);
    CHECK(no.out.find("\"covering\": false") != std::string::npos);
}

TEST_CASE("scale guard surfaces as a domain error") {
    CHECK(run("cover enumerate --n 10 --s 4").exit_code == 2);
}

TEST_CASE("realize on the fixed examples") {
    RunResult h = run("realize --poly " + data("example1_H.json") + " --s 3 --seed 7");
    CHECK(h.exit_code == 0);
    CHECK(h.out.find("\"generic\": false") != std::string::npos);
    CHECK(h.out.find("\"degenerate\"") != std::string::npos);

    RunResult g = run("realize --poly " + data("example1_G.json") + " --s 3 --seed 7");
    CHECK(g.exit_code == 0);
    CHECK(g.out.find("\"generic\": true") != std::string::npos);
    CHECK(g.out.find("\"ok\": true") != std::string::npos);

    // starved budget reports incompleteness
    RunResult starved =
        run("realize --poly " + data("example1_G.json") + " --s 3 --newton-iters 1");
    CHECK(starved.exit_code == 4);
    CHECK(run("realize --poly /nonexistent.json --s 3").exit_code == 2);
}

TEST_CASE("reduce on the worked system") {
    RunResult r = run("reduce --system " + data("system_example.json") + " --partitions 2,1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"pattern\"") != std::string::npos);
    CHECK(r.out.find("\"certificate\"") != std::string::npos);
    RunResult mm = run("reduce --system " + data("system_example.json") + " --use-minmax");
    CHECK(mm.exit_code == 0);
    CHECK(run("reduce --system " + data("system_example.json")).exit_code == 2);
}

TEST_CASE("byte-identical output across repeats and worker counts") {
    RunResult a = run("cover enumerate --n 6 --s 4");
    RunResult b = run("cover enumerate --n 6 --s 4");
    RunResult c = run("cover enumerate --n 6 --s 4 --jobs 3");
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);

    std::string realize_cmd = "realize --poly " + data("example1_G.json") + " --s 3 --seed 11";
    RunResult r1 = run(realize_cmd);
    RunResult r2 = run(realize_cmd);
    RunResult r3 = run(realize_cmd + " --jobs 2");
    CHECK(r1.out == r2.out);
    CHECK(r1.out == r3.out);
}
