// End-to-end checks of the rigibound binary: exit codes, output formats,
// pipelines between subcommands.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string &args, const std::string &env = "") {
    const std::string cmd = (env.empty() ? "" : env + " ") +
                            std::string(RIGIBOUND_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

class TempDir {
public:
    TempDir() {
        path_ = fs::temp_directory_path() /
                ("rigibound_test_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter_++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    fs::path file(const std::string &name, const std::string &content) const {
        const fs::path p = path_ / name;
        std::ofstream(p) << content;
        return p;
    }
    const fs::path &path() const { return path_; }

private:
    fs::path path_;
    static inline int counter_ = 0;
};

const char *kPrism = "6 9\n1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n1 4\n2 5\n3 6\n";
const char *kK4 = "4 6\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";

std::string k64_doc() {
    std::string s = "10 24\n";
    for (int u = 1; u <= 6; ++u)
        for (int v = 7; v <= 10; ++v)
            s += std::to_string(u) + " " + std::to_string(v) + "\n";
    return s;
}

} // namespace

TEST_CASE("check: prism is laman, K4 is not") {
    TempDir tmp;
    const auto prism = tmp.file("prism.txt", kPrism);
    const RunResult ok = run("check " + prism.string());
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("laman: yes") != std::string::npos);
    CHECK(ok.out.find("2-cliques: 9") != std::string::npos);

    const auto k4 = tmp.file("k4.txt", kK4);
    const RunResult bad = run("check " + k4.string());
    CHECK(bad.exit_code == 3);
    CHECK(bad.out.find("maxwell count violated") != std::string::npos);
}

TEST_CASE("check: triangle-free d=3 announces the K2' fallback") {
    TempDir tmp;
    const auto k64 = tmp.file("k64.txt", k64_doc());
    const RunResult r = run("check --dim 3 " + k64.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("maxwell(necessary): pass") != std::string::npos);
    CHECK(r.out.find("3-cliques: 0") != std::string::npos);
    CHECK(r.out.find("fallback K2' profile available") != std::string::npos);
}

TEST_CASE("check: parse errors exit 2") {
    TempDir tmp;
    const auto bad = tmp.file("bad.txt", "2 1\n1 1\n");
    CHECK(run("check " + bad.string()).exit_code == 2);
    CHECK(run("check " + (tmp.path() / "missing.txt").string()).exit_code == 2);
    CHECK(run("nonsense-subcommand").exit_code == 2);
}

TEST_CASE("bound: prism JSON carries the documented numbers") {
    TempDir tmp;
    const auto prism = tmp.file("prism.txt", kPrism);
    const RunResult r = run("bound --format json " + prism.string());
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);

    REQUIRE(j.at("bounds").contains("best_index"));
    const auto &best = j.at("cliques").at(j.at("bounds").at("best_index").get<int>());
    CHECK(best.at("exact_count") == "2");
    CHECK(best.at("orientation_bound") == "32");
    CHECK(best.at("permanent") == "32");
    CHECK(j.at("bounds").at("borcea_streinu") == "70");
    CHECK(j.at("bounds").at("bezout").get<double>() == doctest::Approx(256.0));
    CHECK(j.at("bounds").at("closed_form").at("exact") == "64");
    // Fixed edge (1,2) is among the reported fixtures in lexicographic order.
    CHECK(j.at("cliques").at(0).at("fixture") == json::array({1, 2}));
}

TEST_CASE("bound: rigidity failure exits 3 unless forced") {
    TempDir tmp;
    const auto k4 = tmp.file("k4.txt", kK4);
    CHECK(run("bound " + k4.string()).exit_code == 3);
    CHECK(run("bound --force " + k4.string()).exit_code == 0);
}

TEST_CASE("bound: explicit clique selection") {
    TempDir tmp;
    const auto prism = tmp.file("prism.txt", kPrism);
    const RunResult r = run("bound --clique 1,2 --format json " + prism.string());
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j.at("cliques").size() == 1);
    CHECK(j.at("cliques").at(0).at("exact_count") == "2");
}

TEST_CASE("bound: --clique all reports every fixture like best does") {
    TempDir tmp;
    const auto prism = tmp.file("prism.txt", kPrism);
    const RunResult all = run("bound --clique all --format json " + prism.string());
    REQUIRE(all.exit_code == 0);
    const json j = json::parse(all.out);
    CHECK(j.at("cliques").size() == 9);
    CHECK(j.at("bounds").contains("best_index"));
}

TEST_CASE("bound: identical runs give byte-identical JSON") {
    TempDir tmp;
    const auto prism = tmp.file("prism.txt", kPrism);
    const RunResult a = run("bound --format json " + prism.string());
    const RunResult b = run("bound --format json " + prism.string());
    CHECK(a.out == b.out);
}

TEST_CASE("bound: worker count from RIGIBOUND_THREADS does not change output") {
    TempDir tmp;
    const auto prism = tmp.file("prism.txt", kPrism);
    const RunResult one =
        run("bound --format json " + prism.string(), "RIGIBOUND_THREADS=1");
    const RunResult four =
        run("bound --format json " + prism.string(), "RIGIBOUND_THREADS=4");
    CHECK(one.exit_code == 0);
    CHECK(one.out == four.out);
}

TEST_CASE("bound: an impossible time limit yields a partial report, exit 4") {
    TempDir tmp;
    const auto big = tmp.path() / "big.txt";
    // Side-28 incidence matrix: 2^28 Gray steps cannot finish in 50 ms.
    REQUIRE(run("gen --n 16 --seed 1 --out " + big.string()).exit_code == 0);
    const RunResult r = run("bound --clique 1,2 --time-limit 0.05 --format json " +
                            big.string());
    CHECK(r.exit_code == 4);
    const json j = json::parse(r.out);
    bool timeout_flag = false;
    for (const auto &f : j.at("flags"))
        if (f.get<std::string>().rfind("timeout:", 0) == 0)
            timeout_flag = true;
    CHECK(timeout_flag);
    // Cheap closed forms still appear in the partial report.
    CHECK(j.at("bounds").contains("closed_form"));
    CHECK(j.at("bounds").contains("borcea_streinu"));
}

TEST_CASE("table1: default range matches the published values") {
    const RunResult text = run("table1");
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("3.7764") != std::string::npos);
    CHECK(text.out.find("6.8399") != std::string::npos);
    CHECK(text.out.find("327.45") != std::string::npos);

    const RunResult csv = run("table1 --format csv --max-d 12");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("d,this,bm,bezout", 0) == 0);
    CHECK(csv.out.find("\n12,") != std::string::npos);
}

TEST_CASE("gen feeds check") {
    TempDir tmp;
    const auto out = tmp.path() / "gen.txt";
    const RunResult g = run("gen --n 8 --seed 7 --out " + out.string());
    CHECK(g.exit_code == 0);
    std::ifstream in(out);
    std::string line1, line2;
    std::getline(in, line1);
    std::getline(in, line2);
    CHECK(line1.find("seed=7") != std::string::npos); // seed echoed as a comment
    CHECK(line2 == "8 13");

    CHECK(run("check " + out.string()).exit_code == 0);
    CHECK(run("gen --n 3 --dim 3").exit_code == 2); // below base size
}

TEST_CASE("compare sweeps a directory and flags nothing") {
    TempDir tmp;
    for (int seed = 0; seed < 6; ++seed) {
        const auto gen = run("gen --n " + std::to_string(5 + seed) + " --seed " +
                             std::to_string(seed) + " --out " +
                             (tmp.path() / ("g" + std::to_string(seed) + ".txt")).string());
        REQUIRE(gen.exit_code == 0);
    }
    tmp.file("unreadable.txt", "not a graph\n");

    const RunResult r = run("compare " + tmp.path().string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("file,", 0) == 0);
    // Header plus one row per generated file; the bad file is skipped.
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 7);
    // The trailing violations column stays empty on a sound corpus.
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line); // header
    while (std::getline(lines, line))
        CHECK(line.back() == ',');
}

TEST_CASE("compare on an empty directory emits just the header") {
    TempDir tmp;
    const RunResult r = run("compare " + tmp.path().string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("file,", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
}

TEST_CASE("compare exercises the K2' profile on K_{6,4}") {
    TempDir tmp;
    tmp.file("k64.txt", k64_doc());
    const RunResult r = run("compare --dim 3 --time-limit 120 " + tmp.path().string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find(",yes,") != std::string::npos); // profile column
}
