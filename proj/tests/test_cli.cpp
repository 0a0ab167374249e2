#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(DUFFING_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

} // namespace

TEST_CASE("exit codes")
{
    CHECK(run("coeffs -N 3").status == 0);
    CHECK(run("").status == 1);
    CHECK(run("nonsense").status == 1);
    CHECK(run("coeffs -N 500").status == 1);
    CHECK(run("freq -g -1").status == 1);
    CHECK(run("freq -g abc").status == 1);
    CHECK(run("freq -g 1 --digits 5").status == 1);
    CHECK(run("envelope --strong 0-5 --samples 3").status == 1);
    CHECK(run("selftest").status == 0);
    CHECK(run("selftest --inject-fault").status == 3);
}

TEST_CASE("output content")
{
    Run c = run("coeffs -N 2");
    CHECK(c.out.find("-21/256") != std::string::npos);
    Run f = run("freq -g 0 --format csv");
    REQUIRE(f.status == 0);
    CHECK(f.out.rfind("method,order,omega,rel_deviation,status\n", 0) == 0);
    Run b = run("b0 -N 2 --format csv");
    REQUIRE(b.status == 0);
    CHECK(b.out.find("0.851895208595852726") != std::string::npos);
}

TEST_CASE("runs are byte-identical")
{
    for (const char* args : {"coeffs -N 12 --full --format json", "freq -g 2.5 --methods exact,weak,variational -N 4",
                             "b0 -N 8 --format csv", "convergence -N 8 --fit-last 4 --format csv",
                             "envelope --samples 9 --weak 1-3 --strong 0-2"}) {
        CAPTURE(args);
        Run a = run(args);
        Run b = run(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}
