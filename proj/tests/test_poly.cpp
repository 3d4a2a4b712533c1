#include <doctest.h>

#include <random>

#include "qsieve/poly.hpp"

using namespace qsieve;

namespace {

// det over Q by plain Gaussian elimination with rational pivots.
Integer rational_det(const Matrix<Integer>& M) {
    const std::size_t n = M.size();
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) A[i][j] = M[i][j];
    Rational det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && A[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(A[p], A[k]);
            det = -det;
        }
        det *= A[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational f = A[i][k] / A[k][k];
            for (std::size_t j = k; j < n; ++j) A[i][j] -= f * A[k][j];
        }
    }
    REQUIRE(det.get_den() == 1);
    return det.get_num();
}

// Res(f, g) = lc(f)^deg g · det g(C), C the companion matrix of f/lc(f), evaluated over Q.
Integer companion_resultant(const ZPoly& f, const ZPoly& g) {
    const int m = degree(f), n = degree(g);
    const Rational lc = f[m];
    std::vector<std::vector<Rational>> C(m, std::vector<Rational>(m, 0));
    for (int i = 1; i < m; ++i) C[i][i - 1] = 1;
    for (int i = 0; i < m; ++i) C[i][m - 1] = -Rational(f[i]) / lc;
    auto mat_mul = [&](const auto& X, const auto& Y) {
        std::vector<std::vector<Rational>> Z(m, std::vector<Rational>(m, 0));
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k)
                for (int j = 0; j < m; ++j) Z[i][j] += X[i][k] * Y[k][j];
        return Z;
    };
    // Horner: G = g(C)
    std::vector<std::vector<Rational>> G(m, std::vector<Rational>(m, 0));
    for (int i = n; i >= 0; --i) {
        G = mat_mul(G, C);
        for (int j = 0; j < m; ++j) G[j][j] += g[i];
    }
    // det(G) by elimination
    Rational det = 1;
    for (int k = 0; k < m; ++k) {
        int p = k;
        while (p < m && G[p][k] == 0) ++p;
        if (p == m) return 0;
        if (p != k) {
            std::swap(G[p], G[k]);
            det = -det;
        }
        det *= G[k][k];
        for (int i = k + 1; i < m; ++i) {
            const Rational fct = G[i][k] / G[k][k];
            for (int j = k; j < m; ++j) G[i][j] -= fct * G[k][j];
        }
    }
    for (int i = 0; i < n; ++i) det *= lc;
    REQUIRE(det.get_den() == 1);
    return det.get_num();
}

}  // namespace

TEST_CASE("bareiss agrees with rational elimination") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int n = 1; n <= 7; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            Matrix<Integer> M(n, std::vector<Integer>(n));
            for (auto& row : M)
                for (auto& c : row) c = trial % 3 == 0 ? coef(rng) % 2 : coef(rng);  // sparse every third trial
            CHECK(determinant(M) == rational_det(M));
        }
}

TEST_CASE("sylvester resultant agrees with the companion-matrix resultant") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-6, 6);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 1 + trial % 4, n = 1 + (trial / 4) % 5;
        ZPoly f(m + 1), g(n + 1);
        for (auto& c : f) c = coef(rng);
        for (auto& c : g) c = coef(rng);
        if (f[m] == 0) f[m] = 1;
        if (g[n] == 0) g[n] = -2;
        CHECK(resultant(f, g) == companion_resultant(f, g));
    }
}

TEST_CASE("resultant against x^12 - 1") {
    const ZPoly x12 = zpoly({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1});
    for (long t : {-2L, 2L}) {
        const ZPoly f = zpoly({3, -t, 1});
        const Integer r = resultant(f, x12);
        CHECK(r == companion_resultant(f, x12));
        CHECK(support(factor(r)) == std::set<Integer>{2, 3, 19, 97});
    }
    CHECK(resultant(zpoly({5, -1, 0, 3}), zpoly({1, -7, 1, 0, 2})) == 139043);
}

TEST_CASE("resultant over Q(sqrt d) reduces to the rational case") {
    const std::int64_t d = 6;
    auto lift = [&](const ZPoly& p) {
        KPoly k;
        for (const auto& c : p) k.push_back(QuadInt::from_int(d, c));
        return k;
    };
    const ZPoly f = zpoly({2, -3, 0, 1}), g = zpoly({-1, 4, 5});
    CHECK(resultant(lift(f), lift(g)) == QuadInt::from_int(d, resultant(f, g)));
    // Res(x − α, g) = g(α)
    const QuadInt alpha = QuadInt::sqrt_d(d), one = QuadInt::from_int(d, 1), zero = QuadInt::from_int(d, 0);
    const KPoly lin = {zero - alpha, one};
    const KPoly quad = {QuadInt::from_int(d, -6), zero, one};  // x² − 6
    CHECK(resultant(lin, quad) == zero);
    const KPoly quad2 = {QuadInt::from_int(d, 1), QuadInt::from_int(d, 3), one};
    CHECK(resultant(lin, quad2) == alpha * alpha + QuadInt::from_int(d, 3) * alpha + one);
}

TEST_CASE("discriminant of a quadratic") {
    const std::int64_t d = 5;
    const QuadInt one = QuadInt::from_int(d, 1);
    const QuadInt b = QuadInt::from_sqrt(d, 1, 1), c = QuadInt::from_int(d, 3);
    const KPoly f = {c, b, one};
    CHECK(discriminant(f) == QuadRational::from(b * b - Integer(4) * c));
}

TEST_CASE("polynomial printing") {
    CHECK(to_string(zpoly({3, -2, 1})) == "x^2 - 2*x + 3");
    CHECK(to_string(zpoly({0, 1})) == "x");
    CHECK(to_string(zpoly({-1, 0, -4})) == "-4*x^2 - 1");
    CHECK(to_string(zpoly({})) == "0");
}
