#include "qcf/identities.hpp"
#include "qcf/serialize.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

/* Run the installed binary, capturing stdout; stderr is routed to stdout
 * only when asked for. */
CliResult run_cli(const std::string& args, bool merge_stderr = false)
{
    const std::string cmd =
        std::string(QCF_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

} // namespace

TEST_CASE("cli exit code contract")
{
    SECTION("passing verification exits 0")
    {
        REQUIRE(run_cli("verify --id COR_24 --order 16").exit_code == 0);
    }
    SECTION("failing verification exits 1")
    {
        const CliResult r = run_cli("verify --id R1B_Q2 --order 1 --selftest-corrupt R1B_Q2");
        REQUIRE(r.exit_code == 1);
        const auto arr = nlohmann::json::parse(r.out);
        REQUIRE(arr.at(0).at("status") == "fail");
        REQUIRE(arr.at(0).at("first_mismatch").at("q") == 1);
    }
    SECTION("unknown id exits 2 and lists the valid ids")
    {
        const CliResult r = run_cli("verify --id NOPE", true);
        REQUIRE(r.exit_code == 2);
        REQUIRE(r.out.find("LEBESGUE") != std::string::npos);
    }
    SECTION("unknown verbs and malformed numbers exit 2")
    {
        REQUIRE(run_cli("frobnicate").exit_code == 2);
        REQUIRE(run_cli("verify --all --order banana").exit_code == 2);
        REQUIRE(run_cli("verify").exit_code == 2);
    }
}

TEST_CASE("cli verify output")
{
    SECTION("verify --all produces one pass entry per catalog id")
    {
        const CliResult r = run_cli("verify --all --order 6 --seed 3");
        REQUIRE(r.exit_code == 0);
        const auto arr = nlohmann::json::parse(r.out);
        REQUIRE(arr.size() == qcf::identities::catalog().size());
        std::string prev;
        for (const auto& entry : arr) {
            REQUIRE(entry.at("status") == "pass");
            REQUIRE(entry.at("order") == 6);
            REQUIRE(entry.at("elapsed_ms") == 0);
            const std::string id = entry.at("id");
            REQUIRE(prev < id);
            prev = id;
        }
    }
    SECTION("output bytes are reproducible for fixed arguments and seed")
    {
        const std::string args = "verify --all --order 6 --seed 3";
        REQUIRE(run_cli(args).out == run_cli(args).out);
    }
    SECTION("parallel runs keep the id ordering")
    {
        const std::string args = "verify --all --order 6 --seed 3";
        REQUIRE(run_cli(args + " --parallel").out == run_cli(args).out);
    }
    SECTION("randomized entries carry their seed")
    {
        const auto arr =
            nlohmann::json::parse(run_cli("verify --id EULER_CF_FINITE --seed 9 --order 0").out);
        REQUIRE(arr.at(0).at("seed") == 9);
    }
}

TEST_CASE("cli expand")
{
    const CliResult r = run_cli("expand --id RR_K --order 8");
    REQUIRE(r.exit_code == 0);
    const auto out = nlohmann::json::parse(r.out);
    REQUIRE(out.at("order") == 8);
    /* matches the in-process evaluation byte for byte */
    qcf::identities::BuildCtx ctx{8, nullptr};
    const qcf::QSeries expect = qcf::identities::builders::catalog_cf_series("RR_K", {}, ctx);
    REQUIRE(out.at("series") == qcf::series_to_json(expect));
    REQUIRE(run_cli("expand --id THREE_PARAM --order 4", true).exit_code == 2);
    REQUIRE(run_cli("expand --id THREE_PARAM --order 6 --a 0").exit_code == 0);
}

TEST_CASE("cli partitions and colored queries")
{
    SECTION("count partitions of 5 with parts up to 5")
    {
        const CliResult r = run_cli("partitions --k 5 --parts 1..5");
        REQUIRE(r.exit_code == 0);
        const auto out = nlohmann::json::parse(r.out);
        REQUIRE(out.at("k") == 5);
        REQUIRE(out.at("count") == 7);
    }
    SECTION("enumerate distinct partitions")
    {
        const auto out =
            nlohmann::json::parse(run_cli("partitions --k 5 --parts 1..5 --distinct --enumerate").out);
        REQUIRE(out.at("count") == 3);
        REQUIRE(out.at("partitions").size() == 3);
    }
    SECTION("colored query")
    {
        const auto out =
            nlohmann::json::parse(run_cli("colored --variant BN --n 1 --i 0 --j 1").out);
        REQUIRE(out.at("count") == 1);
    }
    SECTION("colored csv table")
    {
        const CliResult r = run_cli("colored --variant BD --table --max-n 2 --max-i 1 --max-j 1 --format csv");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.rfind("n,i,j,variant,count\n", 0) == 0);
        REQUIRE(r.out.find("1,0,1,BD,0") != std::string::npos);
    }
    SECTION("bad variant exits 2")
    {
        REQUIRE(run_cli("colored --variant XX --n 1 --i 0 --j 1", true).exit_code == 2);
    }
}

TEST_CASE("cli real evaluation")
{
    SECTION("pi at depth 1000000 lands within 1e-5")
    {
        const auto out = nlohmann::json::parse(run_cli("real --const pi --depth 1000000").out);
        const double v = out.at("value");
        REQUIRE(std::fabs(v - 3.14159265358979) < 1e-5);
    }
    SECTION("exp and log fractions")
    {
        const auto e = nlohmann::json::parse(run_cli("real --const exp --z 1 --depth 25").out);
        REQUIRE(std::fabs(double(e.at("value")) - 2.718281828459045) < 1e-12);
        const auto l =
            nlohmann::json::parse(run_cli("real --const log --z 0.333333333333333333 --depth 40").out);
        REQUIRE(std::fabs(double(l.at("value")) - std::log(2.0)) < 1e-12);
    }
    SECTION("singular value case")
    {
        const auto out = nlohmann::json::parse(run_cli("real --const rr --case e-2pi").out);
        const double delta = out.at("max_delta");
        REQUIRE(delta < 1e-8);
        const double cf = out.at("cf");
        REQUIRE(std::fabs(cf - 0.2840790438404106) < 1e-9);
    }
}

TEST_CASE("cli list")
{
    const CliResult r = run_cli("list");
    REQUIRE(r.exit_code == 0);
    const auto arr = nlohmann::json::parse(r.out);
    REQUIRE(arr.size() >= 24);
}
