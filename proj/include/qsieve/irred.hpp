#pragma once

#include <set>
#include <vector>

#include "qsieve/frey.hpp"

namespace qsieve {

struct AuxTraceData {
    std::int64_t q = 0;
    int residue_degree = 1;
    std::set<std::int64_t> traces;
    bool multiplicative = false;
    std::vector<std::pair<std::int64_t, Factorization>> resultants;  // per trace: Res(x² − t x + q^f, x¹² − 1)
    std::set<Integer> support;  // primes surviving this q: resultant primes, q itself, and q^{12f} − 1 if multiplicative
};

struct IrredBound {
    std::int64_t d = 0;
    Integer unit_lcm;
    Factorization unit_lcm_factors;
    std::vector<AuxTraceData> aux_data;
    std::set<Integer> excluded_primes;
};

/// lcm(|N(ε¹² − 1)|, |N(ε̄¹² − 1)|), checked against a second expansion path.
Integer unit_lcm_bound(const QuadField& field);

/// Prime divisors of Res(x² − t x + q^f, x¹² − 1) over the given traces.
std::set<Integer> trace_resultants(std::int64_t q, int residue_degree, const std::set<std::int64_t>& traces);
Integer trace_resultant(std::int64_t q, int residue_degree, std::int64_t trace);

std::vector<std::int64_t> default_aux_primes(const QuadField& field);

/// excluded = {2, 3} ∪ (support(unit_lcm) ∩ ⋂_q support_q).
IrredBound irreducible_outside(const QuadField& field, std::vector<std::int64_t> aux);

}  // namespace qsieve
