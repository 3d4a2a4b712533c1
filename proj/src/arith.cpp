#include "qsieve/arith.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace qsieve {

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Factorization& f) {
    if (f.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, e] : f) {
        if (!first) os << '*';
        first = false;
        os << p.get_str();
        if (e > 1) os << '^' << e;
    }
    return os.str();
}

Integer evaluate(const Factorization& f) {
    Integer r = 1;
    for (const auto& [p, e] : f) {
        Integer pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        r *= pe;
    }
    return r;
}

std::set<Integer> support(const Factorization& f) {
    std::set<Integer> s;
    for (const auto& kv : f) s.insert(kv.first);
    return s;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::int64_t i = 5; i * i <= n; i += 6)
        if (n % i == 0 || n % (i + 2) == 0) return false;
    return true;
}

std::map<std::int64_t, unsigned> factor_small(std::int64_t n) {
    std::map<std::int64_t, unsigned> f;
    if (n < 0) n = -n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    }
    if (n > 1) ++f[n];
    return f;
}

bool is_squarefree(std::int64_t n) {
    if (n == 0) return false;
    for (const auto& [p, e] : factor_small(n))
        if (e > 1) return false;
    return true;
}

std::int64_t next_prime(std::int64_t n) {
    std::int64_t c = n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    if (hi < 2) return out;
    lo = std::max<std::int64_t>(lo, 2);
    // Segmented sieve would be overkill; ranges here are at most a few 10^5.
    std::vector<bool> comp(static_cast<std::size_t>(hi + 1), false);
    for (std::int64_t i = 2; i * i <= hi; ++i)
        if (!comp[i])
            for (std::int64_t j = i * i; j <= hi; j += i) comp[j] = true;
    for (std::int64_t i = lo; i <= hi; ++i)
        if (!comp[i]) out.push_back(i);
    return out;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
    __int128 r = 1 % m, x = mod(b, m);
    while (e > 0) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return static_cast<std::int64_t>(r);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    std::int64_t g = m, x = 0, x1 = 1, a1 = mod(a, m);
    while (a1 != 0) {
        std::int64_t q = g / a1;
        std::tie(g, a1) = std::make_pair(a1, g - q * a1);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) throw Error("arith", "no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
    return mod(x, m);
}

int legendre(std::int64_t a, std::int64_t p) {
    std::int64_t r = mod(a, p);
    if (r == 0) return 0;
    return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int kronecker(std::int64_t D, std::int64_t q) {
    if (q == 2) {
        if (D % 2 == 0) return 0;
        std::int64_t r = mod(D, 8);
        return (r == 1 || r == 7) ? 1 : -1;
    }
    return legendre(D, q);
}

std::int64_t primitive_root(std::int64_t p) {
    if (p == 2) return 1;
    auto f = factor_small(p - 1);
    for (std::int64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (const auto& [q, e] : f)
            if (pow_mod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw Error("arith", "no primitive root mod " + std::to_string(p));
}

std::int64_t divisor_count(std::int64_t n) {
    std::int64_t t = 1;
    for (const auto& [p, e] : factor_small(n)) t *= e + 1;
    return t;
}

int v2(std::int64_t n) {
    if (n == 0) throw Error("arith", "v2(0)");
    int k = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++k;
    }
    return k;
}

std::vector<std::int64_t> sqrt_mod(std::int64_t a, std::int64_t p) {
    std::vector<std::int64_t> roots;
    a = mod(a, p);
    for (std::int64_t x = 0; x < p; ++x)
        if (static_cast<__int128>(x) * x % p == a) roots.push_back(x);
    return roots;
}

bool is_probable_prime(const Integer& n) {
    Integer a = abs(n);
    return mpz_probab_prime_p(a.get_mpz_t(), 30) > 0;
}

namespace {

Integer pollard_brent(const Integer& n, std::mt19937_64& rng) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    std::uniform_int_distribution<unsigned long> dist(1, 1UL << 40);
    while (true) {
        Integer y = dist(rng) % n, c = dist(rng) % n, g = 1, q = 1, x, ys;
        if (c == 0) c = 1;
        const unsigned long m = 128;
        unsigned long r = 1;
        auto f = [&](const Integer& v) {
            Integer t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer diff = abs(x - y);
                    q = (q * diff) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = f(ys);
                Integer diff = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const Integer& n, Factorization& out, std::mt19937_64& rng) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Integer root;
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k < 64; ++k)
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                Factorization sub;
                factor_into(root, sub, rng);
                for (const auto& [p, e] : sub) out[p] += e * static_cast<unsigned>(k);
                return;
            }
    }
    Integer d = pollard_brent(n, rng);
    factor_into(d, out, rng);
    factor_into(n / d, out, rng);
}

}  // namespace

Factorization factor(const Integer& n) {
    if (n == 0) throw Error("arith", "factor(0)");
    Factorization f;
    Integer m = abs(n);
    for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
        if (m == 1) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++f[Integer(p)];
            m /= p;
        }
    }
    std::mt19937_64 rng(0x5eedULL);
    factor_into(m, f, rng);
    return f;
}

int valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw Error("arith", "valuation of 0");
    int k = 0;
    Integer m = n;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++k;
    }
    return k;
}

bool is_perfect_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool exact_root(const Integer& n, unsigned long k, Integer& root) {
    if (k == 0) return false;
    if (n < 0) {
        if (k % 2 == 0) return false;
        Integer m = -n;
        if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), k) == 0) return false;
        root = -root;
        return true;
    }
    return mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace qsieve
