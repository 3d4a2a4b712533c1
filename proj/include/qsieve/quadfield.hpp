#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qsieve/arith.hpp"

namespace qsieve {

enum class Splitting { split, inert, ramified };
std::string to_string(Splitting s);

/// K = Q(√d), d > 1 squarefree. Immutable after construction.
struct QuadField {
    std::int64_t d = 0;
    std::int64_t disc = 0;  // fundamental discriminant D
    Splitting two_splitting = Splitting::ramified;
    std::set<std::int64_t> ramified_odd_primes;
    std::map<int, std::set<std::int64_t>> Q;  // keys 1,3,5,7

    /// ω = (1+√d)/2 when d ≡ 1 (mod 4), else √d.
    bool half_integral() const { return mod(d, 4) == 1; }
    /// ω² = ω + k (half-integral basis) or ω² = k (k = d).
    std::int64_t omega_k() const { return half_integral() ? (d - 1) / 4 : d; }
    /// d̃ = D/4 for even discriminants (equals d); undefined for odd D.
    std::int64_t d_tilde() const { return d; }
    std::size_t count(int i) const { return Q.at(i).size(); }

    bool operator==(const QuadField& o) const { return d == o.d; }
};

QuadField make_field(std::int64_t d);

/// x + y·ω in O_K. Carries d so values stay self-contained.
class QuadInt {
public:
    QuadInt() = default;
    QuadInt(std::int64_t d, Integer x, Integer y);
    static QuadInt from_int(std::int64_t d, const Integer& n) { return QuadInt(d, n, 0); }
    /// (a + b√d)/2; throws if the result is not integral.
    static QuadInt from_half_sqrt(std::int64_t d, const Integer& a2, const Integer& b2);
    /// a + b√d.
    static QuadInt from_sqrt(std::int64_t d, const Integer& a, const Integer& b);
    static QuadInt sqrt_d(std::int64_t d) { return from_sqrt(d, 0, 1); }

    std::int64_t d() const { return d_; }
    const Integer& x() const { return x_; }
    const Integer& y() const { return y_; }
    bool half() const { return mod(d_, 4) == 1; }

    /// Coordinates over {1, √d} scaled by 2: value = (a2 + b2·√d)/2.
    std::pair<Integer, Integer> sqrt_coords2() const;

    QuadInt conjugate() const;
    Integer norm() const;
    Integer trace() const;
    bool is_unit() const { return abs(norm()) == 1; }
    /// Inverse of a unit (norm ±1).
    QuadInt unit_inverse() const;
    QuadInt pow(unsigned long e) const;
    /// Sign of the real value under √d > 0.
    int sign() const;
    bool totally_positive() const { return sign() > 0 && conjugate().sign() > 0; }
    bool is_rational() const { return y_ == 0; }
    long double approx() const;

    QuadInt operator-() const { return QuadInt(d_, -x_, -y_); }
    friend QuadInt operator+(const QuadInt& a, const QuadInt& b);
    friend QuadInt operator-(const QuadInt& a, const QuadInt& b);
    friend QuadInt operator*(const QuadInt& a, const QuadInt& b);
    friend QuadInt operator*(const Integer& n, const QuadInt& a);
    friend bool operator==(const QuadInt& a, const QuadInt& b) {
        return a.d_ == b.d_ && a.x_ == b.x_ && a.y_ == b.y_;
    }
    /// Exact division; nullopt if b does not divide a in O_K.
    static std::optional<QuadInt> divide(const QuadInt& a, const QuadInt& b);
    /// Is this element a square in O_K? Root returned on success.
    std::optional<QuadInt> sqrt() const;

    std::string str() const;  // "5 + 2*sqrt(6)" style, half-integers as "(a + b*sqrt(d))/2"

private:
    std::int64_t d_ = 0;
    Integer x_ = 0, y_ = 0;
};

/// Exact element of K = Q(√d): a + b√d with rational a, b.
struct QuadRational {
    std::int64_t d = 0;
    Rational a = 0, b = 0;

    static QuadRational from(const QuadInt& z);
    QuadRational conjugate() const { return {d, a, -b}; }
    Rational norm() const { return a * a - Rational(d) * b * b; }
    friend QuadRational operator+(const QuadRational& u, const QuadRational& v) { return {u.d, u.a + v.a, u.b + v.b}; }
    friend QuadRational operator-(const QuadRational& u, const QuadRational& v) { return {u.d, u.a - v.a, u.b - v.b}; }
    friend QuadRational operator*(const QuadRational& u, const QuadRational& v) {
        return {u.d, u.a * v.a + Rational(u.d) * u.b * v.b, u.a * v.b + u.b * v.a};
    }
    friend QuadRational operator/(const QuadRational& u, const QuadRational& v);
    friend bool operator==(const QuadRational& u, const QuadRational& v) {
        return u.d == v.d && u.a == v.a && u.b == v.b;
    }
    bool is_zero() const { return a == 0 && b == 0; }
    std::string str() const;
};

struct FundamentalUnit {
    QuadInt value;
    int norm = 0;
    bool totally_positive = false;
};

/// Smallest unit > 1, from the continued-fraction expansion of ω.
FundamentalUnit fundamental_unit(const QuadField& field);

/// Prime ideal above a rational prime, with generators over O_K.
struct PrimeIdeal {
    std::int64_t q = 0;
    int residue_degree = 1;
    std::vector<QuadInt> generators;
    /// For degree-1 primes: image of ω in Z/q (the reduction map O_K -> F_q).
    std::optional<std::int64_t> omega_image;
    std::string str() const;
};

struct SplittingData {
    Splitting type = Splitting::inert;
    std::vector<PrimeIdeal> primes;
};

SplittingData splitting_and_trace_data(const QuadField& field, std::int64_t q);

/// Reduction of z modulo a degree-one prime (using omega_image).
std::int64_t reduce_mod_prime(const QuadInt& z, const PrimeIdeal& P);

}  // namespace qsieve
