#include "qsieve/quadfield.hpp"

#include <cmath>
#include <sstream>

namespace qsieve {

std::string to_string(Splitting s) {
    switch (s) {
        case Splitting::split: return "split";
        case Splitting::inert: return "inert";
        case Splitting::ramified: return "ramified";
    }
    return "?";
}

QuadField make_field(std::int64_t d) {
    if (d <= 1) throw Error("quadfield", "d must be > 1, got " + std::to_string(d));
    if (!is_squarefree(d)) throw Error("quadfield", "d must be squarefree, got " + std::to_string(d));
    QuadField f;
    f.d = d;
    f.disc = mod(d, 4) == 1 ? d : 4 * d;
    switch (mod(d, 8)) {
        case 1: f.two_splitting = Splitting::split; break;
        case 5: f.two_splitting = Splitting::inert; break;
        default: f.two_splitting = Splitting::ramified; break;
    }
    for (int i : {1, 3, 5, 7}) f.Q[i] = {};
    for (const auto& [p, e] : factor_small(d)) {
        if (p == 2) continue;
        f.ramified_odd_primes.insert(p);
        f.Q[static_cast<int>(p % 8)].insert(p);
    }
    return f;
}

// ---------------------------------------------------------------- QuadInt

QuadInt::QuadInt(std::int64_t d, Integer x, Integer y) : d_(d), x_(std::move(x)), y_(std::move(y)) {}

QuadInt QuadInt::from_half_sqrt(std::int64_t d, const Integer& a2, const Integer& b2) {
    if (mod(d, 4) == 1) {
        Integer diff = a2 - b2;
        if (!mpz_even_p(diff.get_mpz_t()))
            throw Error("quadfield", "(a + b*sqrt(d))/2 not integral");
        return QuadInt(d, diff / 2, b2);
    }
    if (!mpz_even_p(a2.get_mpz_t()) || !mpz_even_p(b2.get_mpz_t()))
        throw Error("quadfield", "(a + b*sqrt(d))/2 not integral");
    return QuadInt(d, a2 / 2, b2 / 2);
}

QuadInt QuadInt::from_sqrt(std::int64_t d, const Integer& a, const Integer& b) {
    return from_half_sqrt(d, 2 * a, 2 * b);
}

std::pair<Integer, Integer> QuadInt::sqrt_coords2() const {
    if (half()) return {2 * x_ + y_, y_};
    return {2 * x_, 2 * y_};
}

QuadInt QuadInt::conjugate() const {
    if (half()) return QuadInt(d_, x_ + y_, -y_);
    return QuadInt(d_, x_, -y_);
}

Integer QuadInt::norm() const {
    if (half()) {
        Integer k = (d_ - 1) / 4;
        return x_ * x_ + x_ * y_ - k * y_ * y_;
    }
    return x_ * x_ - Integer(d_) * y_ * y_;
}

Integer QuadInt::trace() const { return half() ? Integer(2 * x_ + y_) : Integer(2 * x_); }

QuadInt operator+(const QuadInt& a, const QuadInt& b) { return QuadInt(a.d_, a.x_ + b.x_, a.y_ + b.y_); }
QuadInt operator-(const QuadInt& a, const QuadInt& b) { return QuadInt(a.d_, a.x_ - b.x_, a.y_ - b.y_); }
QuadInt operator*(const Integer& n, const QuadInt& a) { return QuadInt(a.d_, n * a.x_, n * a.y_); }

QuadInt operator*(const QuadInt& a, const QuadInt& b) {
    if (a.half()) {
        Integer k = (a.d_ - 1) / 4;
        Integer yy = a.y_ * b.y_;
        return QuadInt(a.d_, a.x_ * b.x_ + k * yy, a.x_ * b.y_ + a.y_ * b.x_ + yy);
    }
    return QuadInt(a.d_, a.x_ * b.x_ + Integer(a.d_) * a.y_ * b.y_, a.x_ * b.y_ + a.y_ * b.x_);
}

QuadInt QuadInt::unit_inverse() const {
    Integer n = norm();
    if (n == 1) return conjugate();
    if (n == -1) return -conjugate();
    throw Error("quadfield", "not a unit: " + str());
}

QuadInt QuadInt::pow(unsigned long e) const {
    QuadInt r = from_int(d_, 1), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

int QuadInt::sign() const {
    auto [a, b] = sqrt_coords2();
    int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with d b^2
    int c = cmp(a * a, Integer(d_) * b * b);
    if (c == 0) return 0;  // impossible for non-square d
    return c > 0 ? sa : sb;
}

long double QuadInt::approx() const {
    auto [a, b] = sqrt_coords2();
    return (a.get_d() + b.get_d() * std::sqrt(static_cast<long double>(d_))) / 2.0L;
}

std::optional<QuadInt> QuadInt::divide(const QuadInt& a, const QuadInt& b) {
    Integer n = b.norm();
    if (n == 0) throw Error("quadfield", "division by zero");
    QuadInt p = a * b.conjugate();
    auto [a2, b2] = p.sqrt_coords2();
    if (!mpz_divisible_p(a2.get_mpz_t(), n.get_mpz_t()) || !mpz_divisible_p(b2.get_mpz_t(), n.get_mpz_t()))
        return std::nullopt;
    Integer qa = a2 / n, qb = b2 / n;
    try {
        return from_half_sqrt(a.d_, qa, qb);
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::optional<QuadInt> QuadInt::sqrt() const {
    // w^2 = z  =>  z = Tr(w) w - N(w), so w = (z + N(w)) / Tr(w), Tr(w)^2 = Tr(z) + 2 N(w).
    Integer nz = norm();
    if (nz < 0 || !is_perfect_square(nz)) return std::nullopt;
    Integer s;
    mpz_sqrt(s.get_mpz_t(), nz.get_mpz_t());
    for (const Integer& n : {s, Integer(-s)}) {
        Integer t2 = trace() + 2 * n;
        if (!is_perfect_square(t2)) continue;
        Integer t;
        mpz_sqrt(t.get_mpz_t(), t2.get_mpz_t());
        if (t == 0) {
            // w = v*sqrt(d): z = d v^2 rational
            if (y_ != 0) continue;
            Integer q = x_;
            if (!mpz_divisible_ui_p(q.get_mpz_t(), static_cast<unsigned long>(d_))) continue;
            q /= d_;
            if (!is_perfect_square(q)) continue;
            Integer v;
            mpz_sqrt(v.get_mpz_t(), q.get_mpz_t());
            return from_sqrt(d_, 0, v);
        }
        auto w = divide(*this + from_int(d_, n), from_int(d_, t));
        if (w && (*w) * (*w) == *this) return w;
    }
    return std::nullopt;
}

std::string QuadInt::str() const {
    auto [a2, b2] = sqrt_coords2();
    bool halfc = !mpz_even_p(a2.get_mpz_t()) || !mpz_even_p(b2.get_mpz_t());
    Integer a = halfc ? a2 : Integer(a2 / 2), b = halfc ? b2 : Integer(b2 / 2);
    std::ostringstream os;
    std::string sd = "sqrt(" + std::to_string(d_) + ")";
    if (halfc) os << '(';
    if (b == 0) {
        os << a.get_str();
    } else {
        if (a != 0) os << a.get_str() << (b > 0 ? " + " : " - ");
        else if (b < 0) os << '-';
        Integer ab = abs(b);
        if (ab != 1) os << ab.get_str() << '*';
        os << sd;
    }
    if (halfc) os << ")/2";
    return os.str();
}

// ------------------------------------------------------------ QuadRational

QuadRational QuadRational::from(const QuadInt& z) {
    auto [a2, b2] = z.sqrt_coords2();
    QuadRational r{z.d(), Rational(a2, 2), Rational(b2, 2)};
    r.a.canonicalize();
    r.b.canonicalize();
    return r;
}

QuadRational operator/(const QuadRational& u, const QuadRational& v) {
    Rational n = v.norm();
    if (n == 0) throw Error("quadfield", "division by zero in K");
    QuadRational p = u * v.conjugate();
    return {u.d, p.a / n, p.b / n};
}

std::string QuadRational::str() const {
    std::ostringstream os;
    if (b == 0) return a.get_str();
    if (a != 0) os << a.get_str() << (b > 0 ? " + " : " - ");
    else if (b < 0) os << '-';
    Rational ab = abs(b);
    if (ab != 1) os << ab.get_str() << '*';
    os << "sqrt(" << d << ')';
    return os.str();
}

// ------------------------------------------------------- fundamental unit

FundamentalUnit fundamental_unit(const QuadField& field) {
    const std::int64_t d = field.d;
    const bool half = field.half_integral();
    // ξ = (P + √d)/Q with Q | d - P^2; ξ0 = ω.
    std::int64_t P = half ? 1 : 0, Q = half ? 2 : 1;
    std::int64_t root = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(d)));
    while (root * root > d) --root;
    while ((root + 1) * (root + 1) <= d) ++root;
    // convergents: p_{-1} = 1, p_{-2} = 0, q_{-1} = 0, q_{-2} = 1
    Integer p1 = 1, p2 = 0, q1 = 0, q2 = 1;
    for (int iter = 0; iter < 1000000; ++iter) {
        std::int64_t a = (P + root) / Q;  // Q > 0 throughout for ω
        Integer pn = a * p1 + p2, qn = a * q1 + q2;
        p2 = p1;
        q2 = q1;
        p1 = pn;
        q1 = qn;
        // candidate p - q·ω̄ written over {1, ω}
        QuadInt cand = half ? QuadInt(d, pn - qn, qn) : QuadInt(d, pn, qn);
        Integer n = cand.norm();
        if (n == 1 || n == -1) {
            FundamentalUnit u;
            u.value = cand;
            u.norm = static_cast<int>(n.get_si());
            u.totally_positive = cand.totally_positive();
            return u;
        }
        P = a * Q - P;
        Q = (d - P * P) / Q;
    }
    throw Error("quadfield", "continued fraction did not terminate");
}

// -------------------------------------------------------------- splitting

std::string PrimeIdeal::str() const {
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) os << ", ";
        os << generators[i].str();
    }
    os << '>';
    return os.str();
}

SplittingData splitting_and_trace_data(const QuadField& field, std::int64_t q) {
    if (!is_prime(q)) throw Error("quadfield", std::to_string(q) + " is not prime");
    const std::int64_t d = field.d;
    const bool half = field.half_integral();
    SplittingData out;
    auto gen = [&](const Integer& a, const Integer& b) { return QuadInt::from_sqrt(d, a, b); };
    if (q == 2) {
        out.type = field.two_splitting;
        if (out.type == Splitting::split) {
            for (std::int64_t r : {0, 1}) {
                PrimeIdeal P{2, 1, {QuadInt::from_int(d, 2), QuadInt(d, -r, 1)}, r};
                out.primes.push_back(P);
            }
        } else if (out.type == Splitting::inert) {
            out.primes.push_back(PrimeIdeal{2, 2, {QuadInt::from_int(d, 2)}, std::nullopt});
        } else if (mod(d, 4) == 2) {
            out.primes.push_back(PrimeIdeal{2, 1, {QuadInt::from_int(d, 2), gen(0, 1)}, 0});
        } else {
            out.primes.push_back(PrimeIdeal{2, 1, {QuadInt::from_int(d, 2), gen(1, 1)}, 1});
        }
        return out;
    }
    const std::int64_t inv2 = inverse_mod(2, q);
    auto omega_of_root = [&](std::int64_t r) { return half ? mod((1 + r) * inv2, q) : mod(r, q); };
    if (d % q == 0) {
        out.type = Splitting::ramified;
        out.primes.push_back(PrimeIdeal{q, 1, {QuadInt::from_int(d, q), gen(0, 1)}, omega_of_root(0)});
        return out;
    }
    if (legendre(d, q) == 1) {
        out.type = Splitting::split;
        for (std::int64_t r : sqrt_mod(d, q))
            out.primes.push_back(PrimeIdeal{q, 1, {QuadInt::from_int(d, q), gen(-r, 1)}, omega_of_root(r)});
        return out;
    }
    out.type = Splitting::inert;
    out.primes.push_back(PrimeIdeal{q, 2, {QuadInt::from_int(d, q)}, std::nullopt});
    return out;
}

std::int64_t reduce_mod_prime(const QuadInt& z, const PrimeIdeal& P) {
    if (!P.omega_image) throw Error("quadfield", "reduction needs a degree-one prime");
    Integer v = z.x() + z.y() * Integer(*P.omega_image);
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(P.q));
    return r.get_si();
}

}  // namespace qsieve
