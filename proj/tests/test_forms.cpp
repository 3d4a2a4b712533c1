#include <doctest.h>

#include <random>

#include "qsieve/forms.hpp"
#include "oracles.hpp"

using namespace qsieve;
using namespace qsieve::oracle;

namespace {

std::string record(const std::string& ap, const std::string& cm = "null", const std::string& label = "768.a") {
    return R"([{"label": ")" + label + R"(", "level": 768, "char_conductor": 12, "char_order": 2, "field_degree": 1, "ap": )" +
           ap + R"(, "cm": )" + cm + "}]";
}

}  // namespace

TEST_CASE("parsing") {
    const auto ok = parse_forms_text(record(R"({"5": [2, 1]})"));
    REQUIRE(ok.size() == 1);
    CHECK(ok[0].level == 768);
    CHECK(ok[0].ap.at(5) == zpoly({2, 1}));
    CHECK_FALSE(ok[0].cm.has_value());
    CHECK(parse_forms_text(record(R"({"5": [2, 1]})", "-8"))[0].cm == -8);

    CHECK_THROWS_WITH_AS(parse_forms_text(record(R"({"5": [7, 1]})")), doctest::Contains("Hasse"), Error);
    CHECK_THROWS_WITH_AS(parse_forms_text(record(R"({"5": [2, 2]})")), doctest::Contains("monic"), Error);
    CHECK_THROWS_WITH_AS(parse_forms_text(record(R"({"6": [2, 1]})")), doctest::Contains("not prime"), Error);
    CHECK_THROWS_WITH_AS(parse_forms_text(record(R"({"5": [0, 0, 1]})")), doctest::Contains("field_degree"), Error);
    CHECK_THROWS_WITH_AS(parse_forms_text(R"([{"label": "x"}])"), doctest::Contains("missing key"), Error);
    CHECK_THROWS_WITH_AS(parse_forms_text("[\n{\"label\": 1,\n oops}]", "f.json"), doctest::Contains("f.json:3"), Error);
    CHECK_THROWS_WITH_AS(parse_forms_text(record(R"({"5": [2, 1], "7": [0, 0, 1]})", "null", "lbl-7")),
                         doctest::Contains("record 0 (lbl-7)"), Error);
    CHECK_THROWS_AS(parse_forms_text("{}"), Error);
}

TEST_CASE("Hasse check on complex and real roots") {
    CHECK(max_root_modulus(zpoly({5, 0, 1})) == doctest::Approx(std::sqrt(5.0)));
    CHECK(max_root_modulus(zpoly({-8, 0, 1})) == doctest::Approx(std::sqrt(8.0)));
    CHECK(max_root_modulus(zpoly({4, 1})) == doctest::Approx(4.0));
    NewformRecord f;
    f.label = "edge";
    f.field_degree = 2;
    f.ap[7] = zpoly({-28, 0, 1});  // roots ±2√7 exactly at the bound
    CHECK_NOTHROW(check_hasse(f));
    f.ap[7] = zpoly({-29, 0, 1});
    CHECK_THROWS_AS(check_hasse(f), Error);
}

TEST_CASE("serialization round trip") {
    NewformRecord f;
    f.label = "258.b";
    f.level = 258;
    f.char_conductor = 129;
    f.char_order = 2;
    f.field_degree = 2;
    f.ap[5] = zpoly({-2, 0, 1});
    f.ap[7] = zpoly({3, 1});
    f.cm = -8;
    const auto back = parse_forms_text(serialize_forms({f}));
    REQUIRE(back.size() == 1);
    CHECK(back[0].label == f.label);
    CHECK(back[0].level == f.level);
    CHECK(back[0].ap == f.ap);
    CHECK(back[0].cm == f.cm);
    CHECK(serialize_forms(back) == serialize_forms({f}));
}

TEST_CASE("trace sets agree with the enumeration oracle") {
    for (std::int64_t d : {6, 129, 5, 2, 17})
        for (std::int64_t q : {5, 7, 11, 13})
            if (d % q != 0) {
                const TraceSet ts = trace_set(make_field(d), q);
                const OracleSet os = oracle_traces(d, q);
                CHECK(ts.good == os.good);
                CHECK(ts.multiplicative == os.multiplicative);
            }
}

TEST_CASE("a_5 = 5 is discarded for every p > 19") {
    const QuadField K = make_field(6);
    for (int order : {1, 2}) {
        NewformRecord f;
        f.label = "fake";
        f.level = 768;
        f.char_order = order;
        f.ap[5] = zpoly({-5, 1});
        const SieveVerdict v = mazur_discard(K, f, {5}, 20, 1000);
        CHECK(v.certificates.at(5) == oracle_certificate(6, 5, 5, order));
        // with a quadratic character the multiplicative term also admits a_5 = ±6i, and 61 | 6⁴ − 5⁴
        CHECK(v.survivors() == (order == 1 ? std::vector<std::int64_t>{} : std::vector<std::int64_t>{61}));
        for (const auto& [p, pv] : v.by_exponent)
            if (pv.status == PStatus::discarded) CHECK(mpz_divisible_ui_p(pv.certificate.get_mpz_t(), p) == 0);
    }
}

TEST_CASE("self-match forms survive, impossible traces are discarded") {
    std::mt19937_64 rng(20240613);
    const std::vector<std::int64_t> ds = {6, 129, 5, 7, 10, 13, 17, 21};
    int made = 0;
    while (made < 20) {
        const std::int64_t d = ds[rng() % ds.size()];
        const long A = static_cast<long>(rng() % 9) - 4, B = static_cast<long>(rng() % 7) - 3;
        if (std::gcd(A, B) != 1) continue;
        std::vector<std::int64_t> aux;
        for (std::int64_t q : {5, 7, 11, 13, 17, 19})
            if (d % q != 0) aux.push_back(q);
        const QuadField K = make_field(d);
        const FreyCurve E = build_curve(A, B, K);
        NewformRecord f = self_match_form(E, aux, "self");
        f.char_order = static_cast<int>(build_nebentypus(K).order);
        const SieveVerdict v = mazur_discard(K, f, aux, 20, 1000);
        CHECK(v.survivors().size() == primes_in(20, 1000).size());
        ++made;
    }
}

TEST_CASE("impossible-trace certificates recompute") {
    const std::vector<std::int64_t> ds = {6, 129, 5, 7, 10, 13, 17, 21, 11, 2};
    for (std::size_t i = 0; i < 20; ++i) {
        const std::int64_t d = ds[i % ds.size()];
        std::vector<std::int64_t> aux;
        for (std::int64_t q : {5, 7, 11, 13})
            if (d % q != 0) aux.push_back(q);
        NewformRecord f;
        f.label = "impossible-" + std::to_string(i);
        f.level = 1;
        f.char_order = i % 2 == 0 ? 1 : 2;
        for (auto q : aux) f.ap[q] = zpoly({-(static_cast<long>(q) + 3 + static_cast<long>(i % 3)), 1});
        const SieveVerdict v = mazur_discard(make_field(d), f, aux, 20, 1000);
        CHECK(v.survivors().size() < 3);
        for (const auto& [q, B] : v.certificates)
            CHECK(B == oracle_certificate(d, q, q + 3 + static_cast<long>(i % 3), static_cast<unsigned>(f.char_order)));
        for (const auto& [p, pv] : v.by_exponent)
            if (pv.status == PStatus::discarded) {
                CHECK(pv.certificate != 0);
                CHECK(mpz_divisible_ui_p(pv.certificate.get_mpz_t(), p) == 0);
            }
    }
}

TEST_CASE("sieve contract") {
    const QuadField K = make_field(6);
    NewformRecord f;
    f.label = "768.x";
    f.level = 768;
    f.ap[5] = zpoly({2, 1});
    f.ap[7] = zpoly({-2, 1});
    CHECK_THROWS_AS(mazur_discard(K, f, {}, 20, 100), Error);
    CHECK_THROWS_AS(mazur_discard(K, f, {3}, 20, 100), Error);
    f.level = 768 * 5;
    CHECK_THROWS_AS(mazur_discard(K, f, {5}, 20, 100), Error);
    f.level = 768;
    const auto a = mazur_discard(K, f, {5, 7}, 20, 300), b = mazur_discard(K, f, {7, 5}, 20, 300);
    for (const auto& [p, pv] : a.by_exponent) {
        CHECK(pv.status == b.by_exponent.at(p).status);
        CHECK(pv.q == b.by_exponent.at(p).q);
    }
    f.cm = -8;
    for (const auto& [p, pv] : mazur_discard(K, f, {5, 7}, 20, 300).by_exponent)
        CHECK(pv.status != PStatus::survivor_unknown);
}

TEST_CASE("CM criterion") {
    NewformRecord f;
    f.cm = -8;
    CHECK(cm_criterion(f, 17, std::nullopt) == CmDecision::discard_split_cartan);
    CHECK(cm_criterion(f, 19, std::nullopt) == CmDecision::discard_split_cartan);
    CHECK(cm_criterion(f, 70007, 64690) == CmDecision::discard_ellenberg);
    CHECK(cm_criterion(f, 23, std::nullopt) == CmDecision::keep);
    CHECK(cm_criterion(f, 23, 64690) == CmDecision::keep);
    f.cm = -4;
    CHECK_FALSE(cm_supported(f));
    CHECK(cm_criterion(f, 17, std::nullopt) == CmDecision::keep);
}
