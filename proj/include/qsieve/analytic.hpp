#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qsieve/quadfield.hpp"

namespace qsieve {

using Real = long double;

/// Bound on |A_{N,Q}(x)| (valid for N ≠ Q; used as printed at Q = N). Needs Q | N and x ≥ 71.
Real bound_A(std::int64_t N, std::int64_t Q, Real x, std::int64_t D);
/// |A_{N,Q}(D²N/x)| plus, when Q = N, the term (π/3)(√D/x)τ(D)e^{−2πx/(ND²)}.
Real bound_B(std::int64_t N, std::int64_t Q, Real x, std::int64_t D);

struct BoundBreakdown {
    std::int64_t p = 0;
    Real kappa = 0, x = 0;
    std::int64_t D = 0;
    std::vector<std::pair<std::string, Real>> terms;  // fixed order, see rhs_final
    Real main_term = 0;
    Real rhs = 0;
};

/// ((p−2)/(p−1))e^{−2π/x} minus the eight A/B terms at levels 2p² and 2p, x = κp².
BoundBreakdown rhs_final(std::int64_t p, Real kappa, std::int64_t D);

struct ThresholdResult {
    std::int64_t p_star = 0;
    Real kappa = 0;
    std::int64_t D = 0;
    std::vector<std::int64_t> checked_above;  // sampled primes > p* with rhs > 0
    int monotone_samples = 0;
};

/// Least prime p* in [p_lo, p_hi] with rhs_final > 0; guard failures count as non-positive.
ThresholdResult threshold_search(Real kappa, std::int64_t D, std::int64_t p_lo, std::int64_t p_hi);

struct KappaChoice {
    Real kappa = 0;
    ThresholdResult threshold;
};
KappaChoice kappa_search(std::int64_t D, const std::vector<Real>& grid, std::int64_t p_lo, std::int64_t p_hi);

/// The Ellenberg-type threshold is only available when 2 splits in K.
bool two_splits_gate(const QuadField& field);

// Spot checks of the intermediate inequalities; each returns (direct value, closed-form bound).
std::pair<Real, Real> second_bound_check(Real X, std::int64_t n_max);
std::pair<Real, Real> divisor_sum_check(std::int64_t N, std::int64_t Q, Real x, std::int64_t D);
/// (1 − e^{−2π/x})⁻¹ and x/6.
std::pair<Real, Real> geometric_guard_check(Real x);

}  // namespace qsieve
