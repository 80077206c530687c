// End-to-end checks of the command-line tool: exit-code contract, document
// emission, verify round-trips, and environment handling.  The binary path
// comes from the NONEF_BIN environment variable set by CMake.

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string bin() {
    const char* b = std::getenv("NONEF_BIN");
    REQUIRE(b != nullptr);
    return b;
}

std::string workdir() {
    const char* d = std::getenv("NONEF_TEST_TMP");
    return d ? d : "/tmp";
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string out_path = workdir() + "/cli_out.txt";
    std::string cmd = env + " " + bin() + " " + args + " > " + out_path + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(rc);
    std::ifstream in(out_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

}  // namespace

TEST_CASE("xi: certified emptiness and exit codes") {
    std::string cert = workdir() + "/xi.cert";
    auto r = run("xi --d 4 --m 2 --k 1 --seed 42 --out " + cert);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verdict: EmptyCertified") != std::string::npos);
    CHECK(r.out.find("seed: 42") != std::string::npos);

    auto v = run("verify " + cert);
    CHECK(v.exit_code == 0);

    // unique cubic through nine points, doubled
    auto c = run("xi --d 3 --m 2 --k 2 --seed 42 --quiet --out " + workdir() + "/c.cert");
    CHECK(c.exit_code == 0);

    // invalid input
    CHECK(run("xi --d 4 --m 5 --k 1 --quiet").exit_code == 2);
    CHECK(run("xi --d 4 --m 2").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("verify: tampering is detected, unreadable input rejected") {
    std::string cert = workdir() + "/tamper.cert";
    REQUIRE(run("xi --d 4 --m 2 --k 1 --seed 7 --quiet --out " + cert).exit_code == 0);
    std::string text;
    {
        std::ifstream in(cert);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    auto pos = text.find("rank: 15");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 8, "rank: 13");
    {
        std::ofstream out(cert);
        out << text;
    }
    auto v = run("verify " + cert);
    CHECK(v.exit_code == 1);
    CHECK(v.out.find("mismatch") != std::string::npos);
    CHECK(run("verify " + workdir() + "/no_such_file").exit_code == 2);
}

TEST_CASE("replay commands") {
    CHECK(run("replay m2 --d 4 --k 6 --quiet --out " + workdir() + "/a.report").exit_code == 0);
    CHECK(run("replay induction --d 6 --m 4 --k 1 --seed 3 --quiet --out " + workdir() +
              "/b.report")
              .exit_code == 0);
    CHECK(run("replay lemma --n 3 --t 1 --seed 3 --quiet --out " + workdir() + "/c.report")
              .exit_code == 0);
    CHECK(run("replay bc --d 3 --k 2 --seed 3 --quiet --out " + workdir() + "/d.report")
              .exit_code == 0);
    for (const char* f : {"a.report", "b.report", "c.report", "d.report"})
        CHECK(run("verify " + workdir() + "/" + f).exit_code == 0);
    CHECK(run("replay m2 --d 3 --k 1 --quiet").exit_code == 2);
}

TEST_CASE("cremona reductions print the terminal class and the log") {
    {
        auto r = run("cremona \"10;6,3,3,3,3,3,3\"");
        CHECK(r.exit_code == 0);
        CHECK(r.out.substr(0, 14) == "4;1,1,1,1,1,1\n");
        CHECK(std::count(r.out.begin(), r.out.end(), 'q') == 3);
    }
    {
        auto r = run("cremona \"4;3,1,1,1,1,1,1\"");
        CHECK(r.exit_code == 0);
        CHECK(r.out.substr(0, 3) == "1;\n");
    }
    {
        auto r = run("cremona \"1;\"");
        CHECK(r.exit_code == 0);
        CHECK(r.out == "1;\n");
    }
    {
        auto r = run("cremona \"10;6,3^6\" --strategy pairs");
        CHECK(r.exit_code == 0);
        CHECK(r.out.substr(0, 14) == "4;1,1,1,1,1,1\n");
    }
    CHECK(run("cremona \"not-a-class\"").exit_code == 2);
    CHECK(run("cremona \"4;1,1\" --strategy sideways").exit_code == 2);
}

TEST_CASE("dim command consumes a problem file") {
    std::string prob = workdir() + "/lemma.problem";
    {
        std::ofstream out(prob);
        out << "# specialized uniqueness configuration, n=3 t=1\n"
               "degree 4\n"
               "model T line-image n=3\n"
               "chain T h=1 m=2 x2\n"
               "oncurve T h=1 x12\n"
               "witness model-power T 1\n";
    }
    auto r = run("dim --problem " + prob + " --seed 9 --out " + workdir() + "/lemma.cert");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verdict: DimExact") != std::string::npos);
    CHECK(r.out.find("dim_upper: 0") != std::string::npos);
    CHECK(r.out.find("witness_accepted: 1") != std::string::npos);
    CHECK(run("verify " + workdir() + "/lemma.cert").exit_code == 0);
    CHECK(run("dim --problem " + workdir() + "/missing.problem").exit_code == 2);
}

TEST_CASE("seed handling: flag, environment, entropy") {
    std::string c1 = workdir() + "/s1.cert", c2 = workdir() + "/s2.cert";
    REQUIRE(run("xi --d 4 --m 2 --k 1 --quiet --out " + c1, "NONEF_SEED=1234").exit_code == 0);
    REQUIRE(run("xi --d 4 --m 2 --k 1 --quiet --out " + c2, "NONEF_SEED=1234").exit_code == 0);
    auto read = [](const std::string& path) {
        std::ifstream in(path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    auto strip_elapsed = [](std::string s) {
        auto pos = s.find("elapsed_ms:");
        if (pos != std::string::npos) s.erase(pos);
        return s;
    };
    CHECK(strip_elapsed(read(c1)) == strip_elapsed(read(c2)));
    CHECK(read(c1).find("seed: 1234") != std::string::npos);
    // --seed beats the environment
    REQUIRE(run("xi --d 4 --m 2 --k 1 --quiet --seed 99 --out " + c2, "NONEF_SEED=1234")
                .exit_code == 0);
    CHECK(read(c2).find("seed: 99") != std::string::npos);
}

TEST_CASE("thread count and kernel variant do not change the document") {
    std::string c1 = workdir() + "/t1.cert", c2 = workdir() + "/t2.cert",
                c3 = workdir() + "/t3.cert";
    REQUIRE(run("xi --d 5 --m 2 --k 2 --seed 5 --quiet --out " + c1, "NONEF_THREADS=1").exit_code ==
            0);
    REQUIRE(run("xi --d 5 --m 2 --k 2 --seed 5 --quiet --out " + c2, "NONEF_THREADS=4").exit_code ==
            0);
    REQUIRE(run("xi --d 5 --m 2 --k 2 --seed 5 --quiet --out " + c3,
                "NONEF_THREADS=4 NONEF_KERNEL=scalar")
                .exit_code == 0);
    auto strip = [](const std::string& path) {
        std::ifstream in(path);
        std::ostringstream ss;
        std::string line;
        while (std::getline(in, line))
            if (line.rfind("elapsed_ms:", 0) != 0) ss << line << "\n";
        return ss.str();
    };
    CHECK(strip(c1) == strip(c2));
    CHECK(strip(c1) == strip(c3));
}
