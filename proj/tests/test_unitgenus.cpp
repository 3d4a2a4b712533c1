#include "doctest.h"

#include <fstream>
#include <sstream>

#include "qsieve/unitgenus.hpp"

using namespace qsieve;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("classify_unit examples") {
    auto K6 = make_field(6);
    auto r6 = classify_unit(K6, fundamental_unit(K6));
    CHECK(r6.P_minus == std::set<std::int64_t>{3});
    CHECK(r6.d0 == 3);
    CHECK(r6.genus_case == GenusCase::d0);
    CHECK(r6.square_root * r6.square_root == Integer(3) * QuadInt::from_sqrt(6, 5, 2));
    REQUIRE(r6.eps_mod_p2cubed.has_value());
    CHECK(*r6.valuation_consistent);
    CHECK(verify_genus_congruences(K6, r6));

    auto K3 = make_field(3);
    auto r3 = classify_unit(K3, fundamental_unit(K3));
    CHECK(r3.eps == QuadInt::from_sqrt(3, 2, 1));
    CHECK(r3.P_minus == std::set<std::int64_t>{3});
    CHECK(r3.genus_case == GenusCase::two_d0);
    CHECK(r3.square_root * r3.square_root == QuadInt::from_sqrt(3, 12, 6));
    CHECK_FALSE(r3.eps_mod_p2cubed.has_value());

    auto K21 = make_field(21);
    auto u21 = fundamental_unit(K21);
    CHECK(u21.value == QuadInt::from_half_sqrt(21, 5, 1));
    auto r21 = classify_unit(K21, u21);
    CHECK(verify_genus_congruences(K21, r21));
    CHECK(r21.P_minus.size() + r21.P_plus.size() == 2);

    auto swapped = r21;
    std::swap(swapped.P_minus, swapped.P_plus);
    CHECK_FALSE(verify_genus_congruences(K21, swapped));

    auto K2 = make_field(2);
    CHECK_THROWS_WITH_AS(classify_unit(K2, fundamental_unit(K2)), "unitgenus: norm -1 unit", Error);
    FundamentalUnit fake{QuadInt::from_sqrt(6, 2, 1), 0, false};
    CHECK_THROWS_WITH_AS(classify_unit(K6, fake), "unitgenus: not a unit", Error);
}

TEST_CASE("square-class oracle for every d < 500") {
    int checked = 0;
    for (std::int64_t d = 2; d < 500; ++d) {
        if (!is_squarefree(d)) continue;
        auto K = make_field(d);
        auto u = fundamental_unit(K);
        if (u.norm != 1) continue;
        CAPTURE(d);
        auto r = classify_unit(K, u);
        const bool sq1 = (Integer(r.d0) * r.eps).sqrt().has_value();
        const bool sq2 = (Integer(2 * r.d0) * r.eps).sqrt().has_value();
        CHECK(sq1 != sq2);
        CHECK((r.genus_case == GenusCase::d0) == sq1);
        if (K.two_splitting != Splitting::ramified) CHECK(r.genus_case == GenusCase::d0);
        if (r.valuation_consistent) CHECK(*r.valuation_consistent);
        CHECK(verify_genus_congruences(K, r));
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("tables match the checked-in transcription") {
    const std::string csv = tables_csv(regenerate_all_tables());
    CHECK(csv == read_file("tests/data/tables_1_3.csv"));
}

TEST_CASE("table details") {
    auto t7 = regenerate_table(7);
    REQUIRE(!t7.empty());
    CHECK(t7.front().eps_class == "(1,0,0)");
    CHECK(t7.front().d0_residues == std::set<int>{5});

    auto t15 = regenerate_table(15);
    REQUIRE(t15.size() > 1);
    CHECK(t15[1].eps_class == "(1,0,1)");
    CHECK(t15[1].d0_residues == std::set<int>{5});

    auto t10 = regenerate_table(10);
    CHECK(t10.front().eps_class == "-1");
    CHECK(t10.front().d0_residues == std::set<int>{3});

    auto t14 = regenerate_table(14);
    REQUIRE(t14.size() == 1);
    CHECK(t14.front().d0_residues == std::set<int>{1, 3});
    CHECK(!t14.front().note.empty());

    CHECK_THROWS_AS(regenerate_table(5), Error);
    CHECK_THROWS_AS(regenerate_table(1), Error);
}
