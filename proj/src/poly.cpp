#include "qsieve/poly.hpp"

#include <sstream>

namespace qsieve {

Integer determinant(const Matrix<Integer>& M) {
    return bareiss_determinant<Integer>(M, Integer(0), Integer(1), [](const Integer& a, const Integer& b) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    });
}

QuadInt determinant(const Matrix<QuadInt>& M) {
    if (M.empty()) return QuadInt();
    const std::int64_t d = M[0][0].d();
    return bareiss_determinant<QuadInt>(M, QuadInt::from_int(d, 0), QuadInt::from_int(d, 1),
                                        [](const QuadInt& a, const QuadInt& b) {
                                            auto q = QuadInt::divide(a, b);
                                            if (!q) throw Error("poly", "inexact division in Bareiss elimination");
                                            return *q;
                                        });
}

Integer resultant(const ZPoly& f, const ZPoly& g) {
    if (degree(f) < 0 || degree(g) < 0) return 0;
    return determinant(sylvester(f, g, Integer(0)));
}

QuadInt resultant(const KPoly& f, const KPoly& g) {
    const std::int64_t d = !f.empty() ? f[0].d() : (!g.empty() ? g[0].d() : 0);
    if (degree(f) < 0 || degree(g) < 0) return QuadInt::from_int(d, 0);
    if (degree(f) + degree(g) == 0) return QuadInt::from_int(d, 1);
    return determinant(sylvester(f, g, QuadInt::from_int(d, 0)));
}

QuadRational discriminant(const KPoly& f0) {
    const KPoly f = trim(f0);
    const int n = degree(f);
    if (n < 1) throw Error("poly", "discriminant of a constant");
    const QuadInt r = resultant(f, derivative(f));
    QuadRational q = QuadRational::from(r) / QuadRational::from(f.back());
    if ((n * (n - 1) / 2) % 2 == 1) q = QuadRational{q.d, -q.a, -q.b};
    return q;
}

ZPoly zpoly(std::initializer_list<long> coeffs) {
    ZPoly p;
    for (long c : coeffs) p.push_back(Integer(c));
    return trim(p);
}

Integer eval(const ZPoly& f, const Integer& x) {
    Integer r = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) r = r * x + *it;
    return r;
}

std::string to_string(const ZPoly& f0) {
    const ZPoly f = trim(f0);
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
        const Integer& c = f[i];
        if (c == 0) continue;
        const Integer a = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const bool show = a != 1 || i == 0;
        if (show) os << a.get_str();
        if (i > 0) {
            if (show) os << '*';
            os << 'x';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

}  // namespace qsieve
