#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include <json.hpp>

using Json = nlohmann::ordered_json;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    Run r;
    FILE* pipe = popen((std::string(QSIEVE_BIN) + " " + args + " 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

Json run_json(const std::string& args) {
    const Run r = run("--json " + args);
    CAPTURE(r.out);
    REQUIRE(r.status == 0);
    Json j = Json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    return j["result"];
}

}  // namespace

TEST_CASE("classify and unit-genus") {
    const Json c = run_json("classify --d 129");
    CHECK(c["field"]["two_splitting"] == "split");
    CHECK(c["field"]["Q"]["Q3"] == Json::array({"3", "43"}));
    CHECK(c["unit"]["norm"] == "1");
    const Json g = run_json("unit-genus --d 6");
    CHECK(g["d0"] == "3");
    CHECK(run("unit-genus --d 2").status == 1);
}

TEST_CASE("tables CSV") {
    const Run r = run("tables");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("dtilde_class,eps_class,d0_residues\n", 0) == 0);
}

TEST_CASE("character, level, frey, irred") {
    CHECK(run_json("character --d 6")["nebentypus"]["fixed_field"] == "Q(sqrt(3))");
    CHECK(run_json("level --d 129")["levels"] == Json::array({"258", "33024"}));
    CHECK(run_json("level --d 6 --c-parity even")["levels"].size() == 2);
    const Json t = run_json("frey --d 6 --A 1 --B 5 --q 3");
    CHECK(t["a"] == "-2");
    CHECK(t["reduction"] == "good");
    CHECK(run_json("irred --d 6 --aux 3")["excluded_primes"] == Json::array({"2", "3", "97"}));
}

TEST_CASE("sieve and search") {
    const Json s = run_json("sieve --d 6 --forms tests/data/forms_d6.json --pmin 20 --pmax 100 --aux 5,7,11,13,17,19");
    REQUIRE(s.size() == 5);
    CHECK(s[0]["label"] == "L768-cm");
    CHECK(s[1]["survivors"].empty());
    const Json c = run_json("search --d 6 --H 100");
    CHECK(c.size() == 6);
    const Json g = run_json("search --d 129 --p 7 --H 30");
    bool found = false;
    for (const auto& r : g) found = found || (r["A"] == "1" && r["B"] == "1" && r["C"] == "-2" && r["p"] == "7");
    CHECK(found);
}

TEST_CASE("ellenberg") {
    const Json b = run_json("ellenberg --D 129 --kappa 1/90000 --p 64693 --trace-terms");
    CHECK(b["terms"].size() == 8);
    CHECK(b["rhs"].get<double>() > 0);
    CHECK_FALSE(run_json("ellenberg --D 129 --kappa 1/90000 --p 64693").contains("terms"));
    const Json t = run_json("ellenberg --D 129 --kappa 1/90000 --search");
    CHECK(std::stol(t["p_star"].get<std::string>()) == 64633);
    const Run bad = run("ellenberg --D 129 --search --p-lo 3 --p-hi 5");
    CHECK(bad.status == 1);
    CHECK(bad.out.find("no sign change") != std::string::npos);
}

TEST_CASE("replay and config") {
    const Run a = run("--json replay --d 6 --forms tests/data/forms_d6.json");
    const Run b = run("--json replay --d 6 --forms tests/data/forms_d6.json");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(Json::parse(a.out)["result"]["status"] == "theorem-consistent");
    const Run text = run("replay --d 11");
    CHECK(text.out.find("status: partial") != std::string::npos);

    const std::string cfg = "build_cli_test_config.json";
    std::ofstream(cfg) << R"({"aux_irred": [3, 5, 7]})";
    CHECK(run_json("--config " + cfg + " replay --d 6 --forms tests/data/forms_d6.json")["status"] == "inconsistent");
    std::ofstream(cfg) << R"({"bogus": 1})";
    const Run bad = run("--config " + cfg + " replay --d 6");
    CHECK(bad.status == 1);
    CHECK(bad.out.find("error [config]") != std::string::npos);
    std::remove(cfg.c_str());
}

TEST_CASE("usage errors") {
    CHECK(run("").status != 0);
    CHECK(run("classify").status != 0);
    CHECK(run("classify --d 12").status == 1);
    CHECK(run("frey --d 6 --A 2 --B 4 --q 5").status == 1);
}
