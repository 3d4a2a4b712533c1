#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qsieve/quadfield.hpp"

namespace qsieve {

/// Dense univariate polynomial, constant term first.
template <class T>
using Poly = std::vector<T>;
using ZPoly = Poly<Integer>;
using KPoly = Poly<QuadInt>;

inline Integer scale_int(const Integer& t, const Integer& k) { return t * k; }
inline QuadInt scale_int(const QuadInt& t, const Integer& k) { return k * t; }
inline bool is_zero(const Integer& t) { return t == 0; }
inline bool is_zero(const QuadInt& t) { return t.x() == 0 && t.y() == 0; }

template <class T>
Poly<T> trim(Poly<T> p) {
    while (!p.empty() && is_zero(p.back())) p.pop_back();
    return p;
}

template <class T>
int degree(const Poly<T>& p) {
    return static_cast<int>(trim(p).size()) - 1;  // −1 for the zero polynomial
}

template <class T>
Poly<T> add(const Poly<T>& a, const Poly<T>& b, const T& zero) {
    Poly<T> r(std::max(a.size(), b.size()), zero);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    return trim(r);
}

template <class T>
Poly<T> sub(const Poly<T>& a, const Poly<T>& b, const T& zero) {
    Poly<T> r(std::max(a.size(), b.size()), zero);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
    return trim(r);
}

template <class T>
Poly<T> mul(const Poly<T>& a, const Poly<T>& b, const T& zero) {
    if (a.empty() || b.empty()) return {};
    Poly<T> r(a.size() + b.size() - 1, zero);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return trim(r);
}

template <class T>
Poly<T> scale(const Poly<T>& a, const T& c) {
    Poly<T> r;
    for (const auto& x : a) r.push_back(x * c);
    return trim(r);
}

template <class T>
Poly<T> derivative(const Poly<T>& a) {
    Poly<T> r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(scale_int(a[i], Integer(static_cast<unsigned long>(i))));
    return trim(r);
}

template <class T>
Poly<T> power(const Poly<T>& a, unsigned e, const T& zero, const T& one) {
    Poly<T> r{one};
    for (unsigned i = 0; i < e; ++i) r = mul(r, a, zero);
    return r;
}

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Fraction-free Gaussian elimination; `exact_div(a, b)` must return a/b, which is always exact here.
template <class T, class Div>
T bareiss_determinant(Matrix<T> M, const T& zero, const T& one, Div exact_div) {
    const std::size_t n = M.size();
    if (n == 0) return one;
    bool negate = false;
    T prev = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(M[k][k])) {
            std::size_t s = k + 1;
            while (s < n && is_zero(M[s][k])) ++s;
            if (s == n) return zero;
            std::swap(M[k], M[s]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) M[i][j] = exact_div(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
        prev = M[k][k];
    }
    T det = M[n - 1][n - 1];
    if (negate) det = zero - det;
    return det;
}

/// Sylvester matrix of f (deg m) and g (deg n): n rows of f, then m rows of g, leading coefficients first.
template <class T>
Matrix<T> sylvester(const Poly<T>& f0, const Poly<T>& g0, const T& zero) {
    const Poly<T> f = trim(f0), g = trim(g0);
    const int m = static_cast<int>(f.size()) - 1, n = static_cast<int>(g.size()) - 1;
    const int size = m + n;
    Matrix<T> S(size, std::vector<T>(size, zero));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) S[r][r + i] = f[m - i];
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) S[n + r][r + i] = g[n - i];
    return S;
}

Integer determinant(const Matrix<Integer>& M);
QuadInt determinant(const Matrix<QuadInt>& M);

/// Res(f, g) = lc(f)^deg(g) ∏_{f(α)=0} g(α); zero if either polynomial is zero.
Integer resultant(const ZPoly& f, const ZPoly& g);
QuadInt resultant(const KPoly& f, const KPoly& g);
/// disc(f) = (−1)^{n(n−1)/2} Res(f, f') / lc(f).
QuadRational discriminant(const KPoly& f);

ZPoly zpoly(std::initializer_list<long> coeffs);
Integer eval(const ZPoly& f, const Integer& x);
std::string to_string(const ZPoly& f);  // "x^2 - 2*x + 3"

}  // namespace qsieve
