#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

using json = nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    CliResult r;
    std::string cmd = std::string(RANKGEO_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json run_json(const std::string& args) {
    auto r = run_cli(args + " --format json");
    REQUIRE(r.exit_code == 0);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("field info carries the schema envelope") {
    auto doc = run_json("field info --p 2 --e 1 --n 3");
    CHECK(doc["command"] == "field info");
    CHECK(doc["field"]["p"] == 2);
    CHECK(doc["field"]["e"] == 1);
    CHECK(doc["field"]["n"] == 3);
    CHECK(doc["field"]["modulus"] == json::array({1, 1, 0, 1}));
    CHECK(doc["results"]["order"] == 8);
    CHECK(doc.contains("inputs"));
    CHECK(doc["versions"].contains("rankgeo"));
}

TEST_CASE("rank distribution of the reference code") {
    auto doc = run_json(
        "code rank-dist --p 2 --e 1 --n 3 --basis \"x\" \"x^q^1\" "
        "--scalars big");
    CHECK(doc["results"]["A"] == json::array({1, 0, 49, 14}));
}

TEST_CASE("classification of the scattered-both example") {
    auto doc = run_json(
        "linset classify --p 2 --e 1 --n 5 --fs \"x\" \"x^q^1\" \"x^q^2\"");
    CHECK(doc["results"]["scattered"] == true);
    CHECK(doc["results"]["scattered_wrt_hyperplanes"] == true);
}

TEST_CASE("symbolic dual distribution via the CLI") {
    auto doc = run_json(
        "mw dual --symbolic --k 5 --m 5 --logC 10 --A "
        "\"1;0;0;q^5-1;(q^5-1)(q^5-q^2)/(q-1);(q^5-1)(q^5-(q^5-q^2)/(q-1))\"");
    auto B = doc["results"]["B"];
    REQUIRE(B.size() == 6);
    CHECK(B[0] == "1");
    CHECK(B[1] == "0");
    CHECK(B[2] == "q^5 - 1");
}

TEST_CASE("numeric dual distribution at q=2") {
    auto doc = run_json(
        "mw dual --k 5 --m 5 --logC 10 --q-value 2 --A "
        "\"1;0;0;q^5-1;(q^5-1)(q^5-q^2)/(q-1);(q^5-1)(q^5-(q^5-q^2)/(q-1))\"");
    CHECK(doc["results"]["B"] ==
          json::array({"1", "0", "31", "4588", "17732", "10416"}));
}

TEST_CASE("poly commands") {
    auto doc = run_json(
        "poly eval --p 2 --e 1 --n 3 --fs \"x + x^q^1 + x^q^2\" --x \"g^3\"");
    REQUIRE(doc["results"]["values"].size() == 1);
    CHECK(doc["results"]["values"][0]["value"] == json::array({1, 0, 0}));

    auto rk = run_json("poly rank --p 2 --e 1 --n 3 --fs \"x + x^q^1\"");
    CHECK(rk["results"]["rank"] == 2);
    CHECK(rk["results"]["kernel_dim"] == 1);

    auto comp = run_json(
        "poly compose --p 2 --e 1 --n 4 --fs \"x^q^1\" \"x^q^3\"");
    CHECK(comp["results"]["composition"] == "x");
}

TEST_CASE("exit code distinguishes identity failure from errors") {
    auto bad = run_cli(
        "mw sum-check --n 3 --q-value 2 --A \"1;1;0;254\" --format json");
    CHECK(bad.exit_code == 2);
    auto err = run_cli("code rank-dist --p 4 --e 1 --n 3 --basis \"x\"");
    CHECK(err.exit_code == 1);
    auto parse_err = run_cli("mw gauss");
    CHECK(parse_err.exit_code == 1);
    auto ok = run_cli("mw b1 --n 4 --q-value 2 --A \"1;15;0;120;120\"");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("JSON output is byte-identical across runs") {
    const std::string args =
        "linset wt2-search --p 2 --e 1 --n 4 --trials 60 --seed 9 "
        "--target-n 0 --format json";
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto c = run_cli(
        "code rank-dist --p 3 --e 1 --n 3 --basis \"x\" \"x^q^1\" "
        "--format json");
    auto d = run_cli(
        "code rank-dist --p 3 --e 1 --n 3 --basis \"x\" \"x^q^1\" "
        "--format json");
    CHECK(c.out == d.out);
}

TEST_CASE("table format and --out") {
    auto r = run_cli("mw gauss --k 4 --m 2 --q-value 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("35") != std::string::npos);
    std::string path = "cli_out_test.json";
    auto w = run_cli("mw gauss --k 4 --m 2 --q-value 2 --format json --out " +
                     path);
    CHECK(w.exit_code == 0);
    CHECK(w.out.empty());
    FILE* f = fopen(path.c_str(), "rb");
    REQUIRE(f != nullptr);
    std::array<char, 4096> buf;
    std::size_t got = fread(buf.data(), 1, buf.size(), f);
    fclose(f);
    std::remove(path.c_str());
    auto doc = json::parse(std::string(buf.data(), got));
    CHECK(doc["results"]["gauss"] == "35");
}

TEST_CASE("explicit modulus round-trips through the report") {
    auto doc = run_json(
        "field info --p 2 --e 1 --n 3 --modulus 1 0 1 1");
    CHECK(doc["field"]["modulus"] == json::array({1, 0, 1, 1}));
}
