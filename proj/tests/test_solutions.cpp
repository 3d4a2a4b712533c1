#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "qsieve/solutions.hpp"

using namespace qsieve;

namespace {

// (A, B, C) triples with 0 <= A, B <= H by brute force over both coordinates.
std::set<std::tuple<long, long, long>> brute_pm1(std::int64_t d, long H) {
    std::set<std::tuple<long, long, long>> out;
    for (long a = 0; a <= H; ++a)
        for (long b = 0; b <= H; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const Integer v = Integer(a) * a * a * a - Integer(d) * b * b;
            if (abs(v) == 1)
                for (long sa : {1L, -1L})
                    for (long sb : {1L, -1L}) out.insert({sa * a, sb * b, v.get_si()});
        }
    return out;
}

std::set<std::tuple<long, long, long>> as_set(const std::vector<SolutionRecord>& v) {
    std::set<std::tuple<long, long, long>> out;
    for (const auto& s : v) out.insert({s.A.get_si(), s.B.get_si(), s.C.get_si()});
    return out;
}

}  // namespace

TEST_CASE("C = ±1 searches") {
    const auto six = search_c_pm1(6, 100);
    CHECK(as_set(six) == std::set<std::tuple<long, long, long>>{
                             {1, 0, 1}, {-1, 0, 1}, {7, 20, 1}, {7, -20, 1}, {-7, 20, 1}, {-7, -20, 1}});
    CHECK(six.front().A == -7);
    CHECK(six.front().B == -20);
    const auto seventeen = search_c_pm1(17, 100);
    CHECK(as_set(seventeen) == std::set<std::tuple<long, long, long>>{
                                   {1, 0, 1}, {-1, 0, 1}, {2, 1, -1}, {2, -1, -1}, {-2, 1, -1}, {-2, -1, -1}});
    CHECK(as_set(search_c_pm1(7, 10000)) == std::set<std::tuple<long, long, long>>{{1, 0, 1}, {-1, 0, 1}});
    for (std::int64_t d : {2, 3, 5, 6, 10, 15, 17, 129})
        CHECK(as_set(search_c_pm1(d, 60)) == brute_pm1(d, 60));
    for (const auto& s : six) {
        CHECK(verify_solution(s));
        CHECK(s.trivial);
        CHECK(s.exponent_str() == "all");
    }
}

TEST_CASE("catalogue for 1 < d < 20") {
    const std::vector<CatalogueEntry> expected = {{1, 1, -1, 2}, {3, 4, 1, 5}, {7, 20, 1, 6}, {2, 1, 1, 15}, {2, 1, -1, 17}};
    CHECK(reproduce_catalogue(1000) == expected);
    CHECK(reproduce_catalogue(20) == expected);
    for (const auto& s : search_c_pm1(11, 1000)) CHECK(s.B == 0);
}

TEST_CASE("general search") {
    for (const auto& s : search_general(6, 5, 200)) CHECK(abs(s.C) == 1);
    // p = 7 is below the range of the d = 129 result: 1 − 129 = (−2)⁷ is a primitive solution
    std::set<std::tuple<long, long, long>> big;
    for (const auto& s : search_general(129, 7, 200))
        if (abs(s.C) > 1) big.insert({s.A.get_si(), s.B.get_si(), s.C.get_si()});
    CHECK(big == std::set<std::tuple<long, long, long>>{{1, 1, -2}, {1, -1, -2}, {-1, 1, -2}, {-1, -1, -2}});
    for (std::int64_t p : {23, 29})
        for (const auto& s : search_general(129, p, 100)) CHECK(abs(s.C) == 1);
    // d = 2 has small solutions with |C| > 1
    const auto two = search_general(2, 3, 40);
    bool found = false;
    for (const auto& s : two) {
        CHECK(verify_solution(s));
        if (abs(s.C) > 1) found = true;
    }
    CHECK(found);
    const auto any = search_general(13, 3, 5);
    CHECK(std::find(any.begin(), any.end(), SolutionRecord{1, 0, 1, std::nullopt, 13, true}) != any.end());
    CHECK_THROWS_AS(search_general(6, 4, 10), Error);
}

TEST_CASE("at most one non-trivial unit solution per sign") {
    for (std::int64_t d = 2; d < 1000; ++d) {
        if (!is_squarefree(d)) continue;
        int plus = 0, minus = 0;
        for (const auto& s : search_c_pm1(d, 3000))
            if (s.A > 0 && s.B > 0) (s.C > 0 ? plus : minus)++;
        CHECK(plus <= 1);
        CHECK(minus <= 1);
    }
}

TEST_CASE("verification rejects bad records") {
    CHECK_FALSE(verify_solution({2, 4, 0, std::nullopt, 6, true}));
    CHECK_FALSE(verify_solution({7, 20, -1, std::nullopt, 6, true}));
    CHECK(verify_solution({7, 20, 1, std::nullopt, 6, true}));
}
