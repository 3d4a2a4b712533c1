#include "doctest.h"

#include "qsieve/residue.hpp"

using namespace qsieve;

namespace {

// gcd-of-norm oracle: units of O/2^k are the elements of odd norm.
std::size_t count_odd_norm(std::int64_t d, std::int64_t m) {
    std::size_t n = 0;
    for (std::int64_t x = 0; x < m; ++x)
        for (std::int64_t y = 0; y < m; ++y)
            if (QuadInt(d, x, y).norm() % 2 != 0) ++n;
    return n;
}

}  // namespace

TEST_CASE("unit group orders") {
    auto r6 = ResidueRing::build(make_field(6), Modulus::two_power(4));
    CHECK(r6.size() == 256);
    CHECK(r6.units().size() == 128);
    CHECK(r6.units().size() == count_odd_norm(6, 16));

    auto p3 = ResidueRing::build(make_field(6), Modulus::odd_ramified(3));
    CHECK(p3.units().size() == 2);

    auto r5 = ResidueRing::build(make_field(5), Modulus::two_power(3));
    CHECK(r5.units().size() == 48);
    CHECK(r5.units().size() == count_odd_norm(5, 8));

    for (int k = 1; k <= 6; ++k) {
        CHECK(ResidueRing::build(make_field(6), Modulus::prime_above_two(k)).units().size() == (1u << (k - 1)));
        CHECK(ResidueRing::build(make_field(7), Modulus::prime_above_two(k)).units().size() == (1u << (k - 1)));
        CHECK(ResidueRing::build(make_field(17), Modulus::prime_above_two(k, 1)).units().size() == (1u << (k - 1)));
    }
    auto r129 = ResidueRing::build(make_field(129), Modulus::two_power(3));
    CHECK(r129.units().size() == 4 * 4);  // (Z/8)^x × (Z/8)^x

    CHECK_THROWS_AS(ResidueRing::build(make_field(6), Modulus::odd_ramified(5)), Error);
    CHECK_THROWS_AS(ResidueRing::build(make_field(6), Modulus::two_power(0)), Error);
}

TEST_CASE("reduction respects the ring structure") {
    for (std::int64_t d : {6, 7, 5, 129, 21}) {
        const auto K = make_field(d);
        std::vector<Modulus> mods = {Modulus::two_power(3), Modulus::prime_above_two(5)};
        if (K.two_splitting == Splitting::split) mods.push_back(Modulus::prime_above_two(4, 1));
        for (auto p : K.ramified_odd_primes) mods.push_back(Modulus::odd_ramified(p));
        for (const auto& m : mods) {
            auto R = ResidueRing::build(K, m);
            CAPTURE(d);
            CAPTURE(m.str());
            QuadInt a(d, 13, -9), b(d, -4, 27);
            CHECK(R.reduce(a * b) == R.mul(R.reduce(a), R.reduce(b)));
            CHECK(R.reduce(a + b) == R.add(R.reduce(a), R.reduce(b)));
            for (auto e = 0u; e < R.size(); ++e) CHECK(R.reduce(R.representative(e)) == e);
            for (auto u : R.units())
                for (auto v : R.units())
                    CHECK(R.norm(R.mul(u, v)) == mod(R.norm(u) * R.norm(v), R.norm_modulus()));
        }
    }
}

TEST_CASE("decompose over the mod-8 generators of Z[sqrt 6]") {
    auto R = ResidueRing::build(make_field(6), Modulus::two_power(3));
    std::vector<ResidueRing::Element> gens = {R.reduce(-1), R.reduce(5), R.reduce(QuadInt::from_sqrt(6, 1, 1))};
    CHECK(R.order(gens[0]) == 2);
    CHECK(R.order(gens[1]) == 2);
    CHECK(R.order(gens[2]) == 8);
    CHECK(decompose(R, R.one(), gens).exponents == std::vector<int>{0, 0, 0});
    auto eps = R.reduce(QuadInt::from_sqrt(6, 5, 2));
    auto e = decompose(R, eps, gens);
    CHECK(evaluate(R, e, gens) == eps);
    for (auto u : R.units()) CHECK(evaluate(R, decompose(R, u, gens), gens) == u);

    std::vector<ResidueRing::Element> short_gens = {gens[0], gens[1]};
    CHECK_THROWS_WITH_AS(decompose(R, eps, short_gens), "residue: not generated", Error);
}

TEST_CASE("decompose over the mod-8 generators for classes 3 mod 4") {
    for (std::int64_t t : {3, 7, 11, 15, 19, 23}) {
        auto R = ResidueRing::build(make_field(t), Modulus::two_power(3));
        const std::int64_t g3 = (mod(t, 16) == 3 || mod(t, 16) == 11) ? -1 : 5;
        std::vector<ResidueRing::Element> gens = {R.reduce(QuadInt::sqrt_d(t)), R.reduce(QuadInt::from_sqrt(t, 1, 2)),
                                                  R.reduce(g3)};
        CAPTURE(t);
        REQUIRE(generates_units(R, gens));
        for (auto u : R.units()) CHECK(evaluate(R, decompose(R, u, gens), gens) == u);
    }
    auto R7 = ResidueRing::build(make_field(7), Modulus::two_power(3));
    std::vector<ResidueRing::Element> g7 = {R7.reduce(QuadInt::sqrt_d(7)), R7.reduce(QuadInt::from_sqrt(7, 1, 2)),
                                            R7.reduce(5)};
    CHECK(decompose(R7, g7[0], g7).str() == "(1,0,0)");
}

TEST_CASE("rings for d congruent mod 16 are isomorphic") {
    for (auto [d1, d2] : {std::pair<std::int64_t, std::int64_t>{7, 23}, {6, 22}, {3, 19}, {2, 34}}) {
        auto R1 = ResidueRing::build(make_field(d1), Modulus::two_power(4));
        auto R2 = ResidueRing::build(make_field(d2), Modulus::two_power(4));
        REQUIRE(R1.size() == R2.size());
        bool same = true;
        for (auto a = 0u; a < R1.size(); a += 3)
            for (auto b = 0u; b < R1.size(); ++b)
                if (R1.mul(a, b) != R2.mul(a, b)) same = false;
        CHECK(same);
    }
}

TEST_CASE("norm classes") {
    auto cls = [](std::int64_t d, NormForm f) {
        return norm_classes_with_constraint(ResidueRing::build(make_field(d), Modulus::two_power(4)), f);
    };
    CHECK(cls(2, NormForm::two_n_equals_norm) == std::set<int>{1, 7});
    CHECK(cls(34, NormForm::two_n_equals_norm) == std::set<int>{1, 7});
    CHECK(cls(10, NormForm::two_n_equals_norm) == std::set<int>{3, 5});
    CHECK(cls(6, NormForm::two_n_equals_norm) == std::set<int>{5, 7});
    CHECK(cls(14, NormForm::two_n_equals_norm) == std::set<int>{1, 3});
    CHECK(cls(3, NormForm::n_equals_norm) == std::set<int>{1, 5});
    CHECK(cls(11, NormForm::n_equals_norm) == std::set<int>{1, 5});
    CHECK_THROWS_AS(norm_classes_with_constraint(ResidueRing::build(make_field(2), Modulus::two_power(3)),
                                                 NormForm::n_equals_norm),
                    Error);
}
