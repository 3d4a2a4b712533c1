#include "doctest.h"

#include <numeric>

#include "qsieve/hecke.hpp"
#include "qsieve/unitgenus.hpp"

using namespace qsieve;

namespace {

std::vector<std::int64_t> squarefree_upto(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d <= n; ++d)
        if (is_squarefree(d)) out.push_back(d);
    return out;
}

}  // namespace

TEST_CASE("nebentypus examples") {
    auto e6 = build_nebentypus(make_field(6));
    CHECK(e6.order == 2);
    CHECK(e6.conductor == 12);
    CHECK(e6.fixed_field() == "Q(sqrt(3))");
    CHECK(e6.printed_conductor == 3);

    auto e129 = build_nebentypus(make_field(129));
    CHECK(e129.order == 2);
    CHECK(e129.conductor == 129);
    CHECK(e129.fixed_field() == "Q(sqrt(129))");
    // (n/129) Kronecker symbol agrees with the product of Legendre symbols
    for (std::int64_t n = 1; n < 200; ++n) {
        if (std::gcd(n, std::int64_t{129}) != 1) continue;
        CHECK(eval_nebentypus(e129, n) == (legendre(n, 3) * legendre(n, 43) == 1 ? 0 : 2));
    }

    auto e5 = build_nebentypus(make_field(5));
    CHECK(e5.order == 4);
    CHECK(e5.local_components.at(5) == LocalCharacter::order4);
    CHECK(e5.fixed_field_degree == 4);
    CHECK(eval_nebentypus_at(e5, 5, 2) == 1);  // 2 is the smallest primitive root mod 5
    CHECK(eval_nebentypus_at(e5, 5, 4) == 2);

    CHECK(build_nebentypus(make_field(7)).order == 1);
    CHECK(build_nebentypus(make_field(7)).conductor == 1);
}

TEST_CASE("nebentypus is even") {
    for (auto d : squarefree_upto(300)) {
        CAPTURE(d);
        CHECK(eval_nebentypus(build_nebentypus(make_field(d)), -1) == 0);
    }
}

TEST_CASE("chi local data examples") {
    auto c5 = build_chi_local(make_field(5));
    CHECK(c5.conductor_exponent == 3);
    CHECK(c5.conductor_exponent_computed == 3);
    CHECK(eval_chi2(c5, QuadInt::sqrt_d(5)) == 1);

    auto c14 = build_chi_local(make_field(14));
    CHECK(c14.conductor_exponent == 0);
    CHECK(c14.conductor_exponent_computed == 0);

    auto c6 = build_chi_local(make_field(6));
    CHECK(c6.conductor_exponent == 4);
    CHECK(c6.conductor_exponent_computed == 3);
    CHECK(eval_chi2(c6, QuadInt::from_sqrt(6, 1, 1)) == 1);
    CHECK(eval_chi2(c6, QuadInt::from_int(6, -1)) == 2);
    CHECK(eval_chi2(c6, QuadInt::from_int(6, 1)) == 0);
    CHECK_THROWS_AS(eval_chi2(c6, QuadInt::sqrt_d(6)), Error);

    CHECK(build_chi_local(make_field(7)).conductor_exponent_computed == 5);
    CHECK(build_chi_local(make_field(3)).conductor_exponent_computed == 5);
    CHECK(build_chi_local(make_field(2)).conductor_exponent_computed == 4);
    CHECK(build_chi_local(make_field(10)).conductor_exponent_computed == 4);
    CHECK(build_chi_local(make_field(129)).conductor_exponent_computed == 3);
    CHECK(build_chi_local(make_field(129)).odd_conductor == 1);
}

TEST_CASE("chi_2 is a character with chi^2 = eps o norm") {
    for (std::int64_t d : {2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 21, 30, 35, 129}) {
        CAPTURE(d);
        const auto K = make_field(d);
        const auto chi = build_chi_local(K);
        const auto R = ResidueRing::build(K, Modulus::two_power(3));
        for (auto u : R.units()) {
            const QuadInt a = R.representative(u);
            const int nu = static_cast<int>(mod(a.norm().get_si(), 8));
            CHECK((2 * eval_chi2(chi, a)) % 4 == eval_nebentypus_at_two(chi.nebentypus, nu));
            for (auto v : R.units()) {
                const QuadInt b = R.representative(v);
                CHECK(eval_chi2(chi, a * b) == (eval_chi2(chi, a) + eval_chi2(chi, b)) % 4);
            }
        }
        for (auto p : K.ramified_odd_primes)
            for (std::int64_t n = 1; n < p; ++n) {
                const QuadInt a = QuadInt::from_int(d, n);
                CHECK((2 * eval_chi_odd(chi, p, a)) % 4 == eval_nebentypus_at(chi.nebentypus, p, n * n));
            }
    }
}

TEST_CASE("chi_2 restriction to rational units") {
    for (auto d : squarefree_upto(300)) {
        CAPTURE(d);
        CHECK(verify_chi2_restriction(make_field(d)));
    }
}

TEST_CASE("compatibility at -1 and at the fundamental unit") {
    int with_plus = 0;
    for (auto d : squarefree_upto(300)) {
        CAPTURE(d);
        const auto K = make_field(d);
        auto rep = verify_compatibility(K);
        CHECK(rep.at_minus_one);
        CHECK(rep.at_epsilon);
        if (rep.epsilon_skipped) continue;
        ++with_plus;
        // the formula agrees with the full product of local values
        const auto chi = build_chi_local(K);
        const auto g = classify_unit(K, fundamental_unit(K));
        int total = eval_chi2(chi, g.eps);
        for (auto p : K.ramified_odd_primes) total += eval_chi_odd(chi, p, g.eps);
        CHECK(total % 4 == (rep.chi2_epsilon + 2 * rep.minus_count) % 4);
    }
    CHECK(with_plus > 50);
    auto r6 = verify_compatibility(make_field(6));
    CHECK(r6.at_epsilon);
    CHECK_FALSE(r6.epsilon_skipped);
    CHECK(verify_compatibility(make_field(2)).epsilon_skipped);
}

TEST_CASE("case-by-case identity on the norm-constraint residues") {
    // χ₂(d0)·ε₂(d0)·δ₋₂(d0) = 1 for d0 = N(α) odd
    for (std::int64_t d : {17, 3, 11, 5, 13, 7, 23, 2, 34, 14, 46}) {
        CAPTURE(d);
        const auto K = make_field(d);
        const auto chi = build_chi_local(K);
        std::set<int> d0s = {1, 3, 5, 7};
        if (K.two_splitting == Splitting::ramified)
            d0s = norm_classes_with_constraint(ResidueRing::build(K, Modulus::two_power(4)), NormForm::n_equals_norm);
        for (int n : d0s) {
            const int v = eval_chi2(chi, QuadInt::from_int(d, n)) + eval_nebentypus_at_two(chi.nebentypus, n) +
                          delta_minus2(n);
            CHECK(v % 4 == 0);
        }
    }
}
