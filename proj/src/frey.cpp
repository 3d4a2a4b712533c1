#include "qsieve/frey.hpp"

#include <numeric>
#include <sstream>

namespace qsieve {

std::string to_string(Reduction r) {
    switch (r) {
        case Reduction::good: return "good";
        case Reduction::multiplicative: return "multiplicative";
        case Reduction::additive: return "additive";
    }
    return "?";
}

namespace {

FreyCurve make_curve(const Integer& A, const Integer& B, const QuadField& field) {
    FreyCurve E;
    E.A = A;
    E.B = B;
    E.field = field;
    E.a2 = QuadInt::from_int(field.d, 4 * A);
    E.a4 = QuadInt::from_sqrt(field.d, 2 * A * A, 2 * B);
    return E;
}

// F_q[t]/(t² − n), n the least non-residue. Elements packed as u0·q + u1.
struct Fq2 {
    std::int64_t q, n;
    std::int64_t mul(std::int64_t x, std::int64_t y) const {
        const std::int64_t x0 = x / q, x1 = x % q, y0 = y / q, y1 = y % q;
        return mod(x0 * y0 + n * (x1 * y1 % q), q) * q + mod(x0 * y1 + x1 * y0, q);
    }
    std::int64_t add(std::int64_t x, std::int64_t y) const {
        return mod(x / q + y / q, q) * q + mod(x % q + y % q, q);
    }
};

std::int64_t least_nonresidue(std::int64_t q) {
    for (std::int64_t n = 2; n < q; ++n)
        if (legendre(n, q) == -1) return n;
    throw Error("frey", "no non-residue mod " + std::to_string(q));
}

Reduction classify(bool disc_zero, bool c4_zero) {
    if (!disc_zero) return Reduction::good;
    return c4_zero ? Reduction::additive : Reduction::multiplicative;
}

// Degree-one prime: a, b already reduced into F_q.
std::pair<Reduction, std::int64_t> count_fq(std::int64_t a, std::int64_t b, std::int64_t q) {
    std::vector<char> square(q, 0);
    for (std::int64_t z = 1; z < q; ++z) square[z * z % q] = 1;
    std::int64_t pts = 1;
    for (std::int64_t x = 0; x < q; ++x) {
        const std::int64_t f = mod(((x * x % q) * x + a * (x * x % q) + b * x) % q, q);
        pts += f == 0 ? 1 : (square[f] ? 2 : 0);
    }
    const bool disc_zero = mod(b, q) == 0 || mod(a * a - 4 * b, q) == 0;
    const bool c4_zero = mod(a * a - 3 * b, q) == 0;
    return {classify(disc_zero, c4_zero), q + 1 - pts};
}

std::pair<Reduction, std::int64_t> count_fq2(std::int64_t a, std::int64_t b, const Fq2& F) {
    const std::int64_t Q = F.q * F.q;
    std::vector<char> square(Q, 0);
    for (std::int64_t z = 1; z < Q; ++z) square[F.mul(z, z)] = 1;
    std::int64_t pts = 1;
    for (std::int64_t x = 0; x < Q; ++x) {
        const std::int64_t x2 = F.mul(x, x);
        const std::int64_t f = F.add(F.add(F.mul(x2, x), F.mul(a, x2)), F.mul(b, x));
        pts += f == 0 ? 1 : (square[f] ? 2 : 0);
    }
    const std::int64_t a2 = F.mul(a, a);
    const auto neg = [&](std::int64_t z) { return mod(-(z / F.q), F.q) * F.q + mod(-(z % F.q), F.q); };
    const auto times = [&](std::int64_t k, std::int64_t z) { return F.mul(mod(k, F.q) * F.q, z); };
    const bool disc_zero = b == 0 || F.add(a2, neg(times(4, b))) == 0;
    const bool c4_zero = F.add(a2, neg(times(3, b))) == 0;
    return {classify(disc_zero, c4_zero), Q + 1 - pts};
}

TraceResult trace_raw(const FreyCurve& E, std::int64_t q) {
    if (q == 2 || !is_prime(q)) throw Error("frey", "reduction needs an odd prime, got " + std::to_string(q));
    const SplittingData sd = splitting_and_trace_data(E.field, q);
    TraceResult r;
    r.q = q;
    r.splitting = sd.type;
    if (sd.type == Splitting::inert) {
        r.residue_degree = 2;
        Fq2 F{q, least_nonresidue(q)};
        // √d = c·t with c² n ≡ d
        const std::int64_t c = sqrt_mod(mod(E.field.d, q) * inverse_mod(F.n, q) % q, q).front();
        const std::int64_t inv2 = inverse_mod(2, q);
        const std::int64_t omega = E.field.half_integral() ? inv2 * q + c * inv2 % q : c;  // packed
        auto image = [&](const QuadInt& z) {
            Integer x = z.x() % q, y = z.y() % q;
            const std::int64_t xs = mod(x.get_si(), q), ys = mod(y.get_si(), q);
            return F.add(xs * q, F.mul(ys * q, omega));
        };
        auto [red, a] = count_fq2(image(E.a2), image(E.a4), F);
        r.reduction = red;
        r.a = a;
        return r;
    }
    bool first = true;
    for (const auto& P : sd.primes) {
        auto [red, a] = count_fq(reduce_mod_prime(E.a2, P), reduce_mod_prime(E.a4, P), q);
        if (first) {
            r.reduction = red;
            r.a = a;
            first = false;
        } else {
            r.reduction_conjugate = red;
            r.a_conjugate = a;
        }
    }
    return r;
}

}  // namespace

QuadInt FreyCurve::discriminant() const {
    const QuadInt s = a2 * a2 - Integer(4) * a4;
    return Integer(16) * (a4 * a4 * s);
}

Integer FreyCurve::discriminant_norm() const { return discriminant().norm(); }

FreyCurve FreyCurve::conjugate() const { return make_curve(A, -B, field); }

std::string FreyCurve::str() const {
    return "y^2 = x^3 + " + QuadRational::from(a2).str() + "*x^2 + (" + QuadRational::from(a4).str() + ")*x";
}

FreyCurve build_curve(const Integer& A, const Integer& B, const QuadField& field) {
    if (A == 0 && B == 0) throw Error("frey", "(A, B) = (0, 0)");
    Integer g;
    mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
    if (g != 1) throw Error("frey", "non-primitive pair: gcd(A, B) = " + g.get_str());
    FreyCurve E = make_curve(A, B, field);
    Integer t = A * A * A * A - Integer(field.d) * B * B;
    Integer expect = t * t * t;
    mpz_mul_2exp(expect.get_mpz_t(), expect.get_mpz_t(), 18);
    if (E.discriminant_norm() != expect) throw Error("frey", "discriminant identity failed");
    return E;
}

QuadRational j_invariant(const FreyCurve& E) {
    const QuadRational a = QuadRational::from(E.a2), b = QuadRational::from(E.a4);
    const QuadRational three{a.d, 3, 0}, four{a.d, 4, 0}, k256{a.d, 256, 0};
    const QuadRational c = a * a - three * b;
    const QuadRational den = b * b * (a * a - four * b);
    return k256 * c * c * c / den;
}

TraceResult reduce_and_trace(const FreyCurve& E, std::int64_t q) { return trace_raw(E, q); }

TraceSet trace_set(const QuadField& field, std::int64_t q) {
    TraceSet s;
    s.q = q;
    const SplittingData sd = splitting_and_trace_data(field, q);
    s.splitting = sd.type;
    s.residue_degree = sd.type == Splitting::inert ? 2 : 1;
    for (std::int64_t A = 0; A < q; ++A)
        for (std::int64_t B = 0; B < q; ++B) {
            if (A == 0 && B == 0) continue;
            if (sd.type == Splitting::ramified && A == 0) continue;
            const TraceResult r = trace_raw(make_curve(A, B, field), q);
            auto take = [&](Reduction red, std::int64_t a) {
                if (red == Reduction::good) s.good.insert(a);
                else if (red == Reduction::multiplicative) s.multiplicative = true;
            };
            take(r.reduction, r.a);
            if (r.reduction_conjugate) take(*r.reduction_conjugate, *r.a_conjugate);
        }
    return s;
}

LevelRecipe level_recipe(const QuadField& field, std::optional<bool> c_even) {
    LevelRecipe L;
    L.d = field.d;
    L.nebentypus = build_nebentypus(field);
    for (auto p : field.Q.at(3)) L.odd_part[Integer(p)] = 1;
    for (int i : {1, 5, 7})
        for (auto p : field.Q.at(i)) L.odd_part[Integer(p)] = 2;

    switch (field.two_splitting) {
        case Splitting::split: L.e_options = {1, 8}; break;
        case Splitting::inert: L.e_options = {8}; break;
        case Splitting::ramified: L.e_options = field.d % 2 == 1 ? std::vector<int>{6, 7} : std::vector<int>{8, 9}; break;
    }

    bool big_prime = false;
    for (auto p : field.ramified_odd_primes)
        if (p > 3) big_prime = true;
    if (!big_prime) {
        if (field.d == 2) {
            L.conjectural = true;
            L.flags.push_back("no ramified prime > 3; descent for Q(sqrt(2)) is only supported by computed examples");
        } else if (field.d == 3 || field.d == 6) {
            L.flags.push_back("no ramified prime > 3; descent uses the 5-torsion discriminant (constant 5) at p = 3");
        } else {
            throw Error("frey", "level recipe needs a ramified prime > 3");
        }
    }

    const Integer odd = evaluate(L.odd_part);
    for (int e : L.e_options) {
        Integer two;
        mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(e));
        L.levels.push_back(two * odd);
    }
    if (c_even && L.e_options.size() == 2) L.selected_e = *c_even ? L.e_options[0] : L.e_options[1];
    return L;
}

KPoly division_polynomial(const FreyCurve& E, int ell) {
    const std::int64_t d = E.field.d;
    const QuadInt zero = QuadInt::from_int(d, 0), one = QuadInt::from_int(d, 1);
    const QuadInt& a = E.a2;
    const QuadInt& b = E.a4;
    auto k = [&](long n) { return QuadInt::from_int(d, n); };
    const KPoly psi3 = {zero - b * b, zero, k(6) * b, k(4) * a, k(3)};
    if (ell == 3) return psi3;
    if (ell != 5) throw Error("frey", "division polynomial only for l = 3, 5");
    // b-invariants of y² = x³ + ax² + bx
    const QuadInt b2 = k(4) * a, b4 = k(2) * b, b6 = zero, b8 = zero - b * b;
    const KPoly F = {zero, b, a, one};
    const KPoly g = {b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, k(10) * b8, k(10) * b6, k(5) * b4, b2, k(2)};
    const KPoly lhs = scale(mul(mul(F, F, zero), g, zero), k(16));
    return sub(lhs, power(psi3, 3, zero, one), zero);
}

QuadRational division_poly_constant(const FreyCurve& E, int ell) {
    const QuadInt& a = E.a2;
    const QuadInt& b = E.a4;
    const QuadInt s = a * a - Integer(4) * b;
    if (is_zero(b) || is_zero(s)) throw Error("frey", "degenerate curve (b = 0 or a^2 = 4b)");
    const QuadRational disc = discriminant(division_polynomial(E, ell));
    QuadInt norm;
    if (ell == 3) {
        norm = Integer(256 * 9) * (b.pow(4) * s.pow(2));
    } else {
        Integer c;
        mpz_ui_pow_ui(c.get_mpz_t(), 2, 88);
        Integer five;
        mpz_ui_pow_ui(five.get_mpz_t(), 5, 10);
        norm = Integer(c * five) * (b.pow(44) * s.pow(22));
    }
    return disc / QuadRational::from(norm);
}

bool isogeny_identity_check(const FreyCurve& E) {
    // With X = −F/(2x²), Y² = −F·(b − x²)²/(8x⁴) and y² = F, clear 8x⁶ on both sides of
    // Y² = X³ + a X² + b̄ X.
    const std::int64_t d = E.field.d;
    const QuadInt zero = QuadInt::from_int(d, 0), one = QuadInt::from_int(d, 1);
    const QuadInt& a = E.a2;
    const QuadInt& b = E.a4;
    const QuadInt bbar = b.conjugate();
    const KPoly F = {zero, b, a, one};
    const KPoly x2 = {zero, zero, one};
    const KPoly x4 = mul(x2, x2, zero);
    const KPoly b_minus_x2 = {b, zero, zero - one};
    const KPoly lhs = scale(mul(mul(x2, F, zero), mul(b_minus_x2, b_minus_x2, zero), zero), zero - one);
    const KPoly F2 = mul(F, F, zero);
    KPoly rhs = scale(mul(F2, F, zero), zero - one);
    rhs = add(rhs, scale(mul(x2, F2, zero), QuadInt::from_int(d, 2) * a), zero);  // 8A = 2a
    rhs = sub(rhs, scale(mul(x4, F, zero), Integer(4) * bbar), zero);             // 8(A²−rB) = 4b̄
    return lhs == rhs;
}

}  // namespace qsieve
