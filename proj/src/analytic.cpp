#include "qsieve/analytic.hpp"

#include <cmath>
#include <numbers>
#include <optional>

namespace qsieve {

namespace {

constexpr Real pi = std::numbers::pi_v<Real>;

void require(bool ok, const std::string& what) {
    if (!ok) throw Error("analytic", what);
}

Real tau(std::int64_t n) {
    Real t = 1;
    for (const auto& [prime, e] : factor(Integer(static_cast<long>(n)))) t *= e + 1;
    return t;
}

std::string fmt(Real v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6Lg", v);
    return buf;
}

}  // namespace

Real bound_A(std::int64_t N, std::int64_t Q, Real x, std::int64_t D) {
    require(N > 0 && Q > 0 && D > 0 && N % Q == 0, "bound_A needs positive N, Q, D with Q | N");
    require(x >= 71, "bound_A needs x >= 71, got x = " + fmt(x));
    const Real n = static_cast<Real>(N), q = static_cast<Real>(Q), d = static_cast<Real>(D);
    const Real decay = std::exp(-2 * pi / x);
    const Real L = std::log(x * x * n / q);
    const Real first = 12 * std::sqrt(d) * decay / (n * pi) * ((std::log(d * n / q) + 1) * L + L * L / 2);
    const Real second = 2 * pi / n * std::sqrt(q / n) * tau(N / Q) * std::log(x) * decay;
    return first + second;
}

Real bound_B(std::int64_t N, std::int64_t Q, Real x, std::int64_t D) {
    require(x > 0, "bound_B needs x > 0");
    const Real d = static_cast<Real>(D), n = static_cast<Real>(N);
    const Real y = d * d * n / x;
    require(y >= 71, "bound_B: D^2 N / x = " + fmt(y) + " < 71; use a smaller x (smaller kappa)");
    Real v = bound_A(N, Q, y, D);
    if (Q == N) v += pi / 3 * std::sqrt(d) / x * tau(D) * std::exp(-2 * pi * x / (n * d * d));
    return v;
}

BoundBreakdown rhs_final(std::int64_t p, Real kappa, std::int64_t D) {
    require(p >= 3 && is_prime(p), "rhs_final needs an odd prime p, got " + std::to_string(p));
    require(kappa > 0, "rhs_final needs kappa > 0");
    BoundBreakdown b;
    b.p = p;
    b.kappa = kappa;
    b.D = D;
    const Real pr = static_cast<Real>(p);
    b.x = kappa * pr * pr;
    const std::int64_t p2 = p * p;
    b.main_term = (pr - 2) / (pr - 1) * std::exp(-2 * pi / b.x);
    auto term = [&](const std::string& name, auto f) {
        try {
            b.terms.emplace_back(name, f());
        } catch (const Error& e) {
            throw Error("analytic", name + " at p = " + std::to_string(p) + ": " + e.what());
        }
    };
    term("A_{2p^2,1}", [&] { return bound_A(2 * p2, 1, b.x, D); });
    term("A_{2p^2,p^2}", [&] { return bound_A(2 * p2, p2, b.x, D); });
    term("A_{2p,1}", [&] { return bound_A(2 * p, 1, b.x, D); });
    term("A_{2p,p}", [&] { return bound_A(2 * p, p, b.x, D); });
    term("B_{2p^2,2p^2}", [&] { return bound_B(2 * p2, 2 * p2, b.x, D); });
    term("B_{2p^2,2}", [&] { return bound_B(2 * p2, 2, b.x, D); });
    term("B_{2p,2p}", [&] { return bound_B(2 * p, 2 * p, b.x, D); });
    term("B_{2p,2}", [&] { return bound_B(2 * p, 2, b.x, D); });
    Real total = 0;
    for (const auto& [name, v] : b.terms) total += v;
    b.rhs = b.main_term - total;
    return b;
}

namespace {

bool positive(std::int64_t p, Real kappa, std::int64_t D) {
    try {
        return rhs_final(p, kappa, D).rhs > 0;
    } catch (const Error&) {
        return false;
    }
}

std::int64_t prime_at_or_after(std::int64_t n) { return is_prime(n) ? n : next_prime(n); }

}  // namespace

ThresholdResult threshold_search(Real kappa, std::int64_t D, std::int64_t p_lo, std::int64_t p_hi) {
    require(p_lo >= 3 && p_lo < p_hi, "threshold_search needs 3 <= p_lo < p_hi");
    ThresholdResult r;
    r.kappa = kappa;
    r.D = D;
    p_lo = prime_at_or_after(p_lo);
    std::int64_t top = p_hi;
    while (!is_prime(top)) --top;
    p_hi = top;
    if (p_lo >= p_hi || positive(p_lo, kappa, D) || !positive(p_hi, kappa, D))
        throw Error("analytic", "no sign change of rhs on [" + std::to_string(p_lo) + ", " + std::to_string(p_hi) + "]");

    // Monotonicity is checked on a sample grid over the part of the range where all guards hold.
    std::int64_t valid_lo = p_lo;
    for (std::int64_t lo = p_lo, hi = p_hi; lo <= hi;) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        bool ok = true;
        try {
            rhs_final(std::min(prime_at_or_after(mid), p_hi), kappa, D);
        } catch (const Error&) {
            ok = false;
        }
        if (ok) {
            valid_lo = mid;
            hi = mid - 1;
        } else {
            lo = mid + 1;
        }
    }
    Real previous = -1e300L;
    const int samples = 40;
    for (int i = 0; i <= samples; ++i) {
        const std::int64_t p = std::min(prime_at_or_after(valid_lo + (p_hi - valid_lo) * i / samples), p_hi);
        const Real v = rhs_final(p, kappa, D).rhs;
        if (v < previous) throw Error("analytic", "rhs is not increasing near p = " + std::to_string(p));
        previous = v;
    }
    r.monotone_samples = samples + 1;

    // bisection over n ↦ rhs(first prime ≥ n), monotone like rhs itself
    auto at = [&](std::int64_t n) { return positive(prime_at_or_after(n), kappa, D); };
    std::int64_t lo = p_lo, hi = p_hi;  // at(lo) false, at(hi) true
    while (hi - lo > 1) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        (at(mid) ? hi : lo) = mid;
    }
    const std::int64_t p = prime_at_or_after(hi);
    r.p_star = p;

    // 20 primes above p*, spread geometrically up to p_hi
    const Real ratio = static_cast<Real>(p_hi) / static_cast<Real>(p);
    for (int i = 1; i <= 20; ++i) {
        const Real t = static_cast<Real>(p) * std::pow(ratio, static_cast<Real>(i) / 20);
        const std::int64_t q = std::min(prime_at_or_after(static_cast<std::int64_t>(t) + 1), p_hi);
        if (!positive(q, kappa, D)) throw Error("analytic", "rhs not positive at sampled p = " + std::to_string(q));
        r.checked_above.push_back(q);
    }
    return r;
}

KappaChoice kappa_search(std::int64_t D, const std::vector<Real>& grid, std::int64_t p_lo, std::int64_t p_hi) {
    require(!grid.empty(), "empty kappa grid");
    std::optional<KappaChoice> best;
    std::string last_error;
    for (Real k : grid) {
        try {
            const ThresholdResult t = threshold_search(k, D, p_lo, p_hi);
            if (!best || t.p_star < best->threshold.p_star) best = KappaChoice{k, t};
        } catch (const Error& e) {
            last_error = e.what();
        }
    }
    if (!best) throw Error("analytic", "no kappa in the grid gives a threshold (" + last_error + ")");
    return *best;
}

bool two_splits_gate(const QuadField& field) { return mod(field.d, 8) == 1; }

std::pair<Real, Real> second_bound_check(Real X, std::int64_t n_max) {
    require(X >= 32, "second bound needs X >= 32");
    const std::int64_t start = static_cast<std::int64_t>(std::ceil(X * X));
    require(n_max >= start, "n_max below X^2");
    std::vector<std::uint16_t> tau(static_cast<std::size_t>(n_max) + 1, 0);
    for (std::int64_t a = 1; a <= n_max; ++a)
        for (std::int64_t m = a; m <= n_max; m += a) ++tau[static_cast<std::size_t>(m)];
    Real sum = 0;
    for (std::int64_t n = n_max; n >= start; --n)  // small terms first
        sum += static_cast<Real>(tau[static_cast<std::size_t>(n)]) / std::pow(static_cast<Real>(n), 1.5L);
    return {sum, 6 * std::log(X) / X};
}

std::pair<Real, Real> divisor_sum_check(std::int64_t N, std::int64_t Q, Real x, std::int64_t D) {
    require(N % Q == 0, "divisor_sum_check needs Q | N");
    const std::int64_t step = N / Q;
    const Real d = static_cast<Real>(D), n = static_cast<Real>(N), q = static_cast<Real>(Q);
    Real direct = 0;
    for (std::int64_t c = step; static_cast<Real>(c) < x * x; c += step)
        direct += (std::log(d * static_cast<Real>(c)) + 1) / static_cast<Real>(c);
    const Real L = std::log(x * x * n / q);
    const Real closed = q / n * ((std::log(d * n / q) + 1) * L + L * L / 2);
    return {direct, closed};
}

std::pair<Real, Real> geometric_guard_check(Real x) { return {1 / (1 - std::exp(-2 * pi / x)), x / 6}; }

}  // namespace qsieve
