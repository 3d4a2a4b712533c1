#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qsieve {

/// Error raised by any module; `module()` names the stage that failed so
/// pipeline reports can tag it.
class Error : public std::runtime_error {
public:
    Error(std::string module, const std::string& what)
        : std::runtime_error(module + ": " + what), module_(std::move(module)) {}
    const std::string& module() const noexcept { return module_; }

private:
    std::string module_;
};

using Integer = mpz_class;
using Rational = mpq_class;

/// Prime -> exponent, ascending by prime.
using Factorization = std::map<Integer, unsigned>;

std::string to_string(const Integer& n);
std::string to_string(const Factorization& f);  // "2^7*3^5*5^2"
Integer evaluate(const Factorization& f);
std::set<Integer> support(const Factorization& f);

// Small-integer helpers (arguments fit comfortably in 64 bits).
bool is_prime(std::int64_t n);
bool is_squarefree(std::int64_t n);
std::int64_t next_prime(std::int64_t n);  // smallest prime > n
std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi);  // inclusive
std::map<std::int64_t, unsigned> factor_small(std::int64_t n);
std::int64_t mod(std::int64_t a, std::int64_t m);  // result in [0, m)
std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m);
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);
int legendre(std::int64_t a, std::int64_t p);  // p odd prime
int kronecker(std::int64_t D, std::int64_t q);  // q prime, D a discriminant
std::int64_t primitive_root(std::int64_t p);   // smallest
std::int64_t divisor_count(std::int64_t n);
int v2(std::int64_t n);                         // 2-adic valuation, n != 0
std::vector<std::int64_t> sqrt_mod(std::int64_t a, std::int64_t p);  // sorted roots

// Big-integer helpers.
bool is_probable_prime(const Integer& n);
/// Complete factorization of |n| (n != 0): trial division, then Pollard-Brent.
Factorization factor(const Integer& n);
int valuation(const Integer& n, const Integer& p);
bool is_perfect_square(const Integer& n);
/// Exact k-th root if n is a perfect k-th power (sign handled for odd k).
bool exact_root(const Integer& n, unsigned long k, Integer& root);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace qsieve
