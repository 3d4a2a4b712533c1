#pragma once

#include <optional>
#include <vector>

#include "qsieve/arith.hpp"

namespace qsieve {

/// A⁴ − d·B² = Cᵖ with gcd(A, B) = 1; p unset means every exponent (C = ±1).
struct SolutionRecord {
    Integer A, B, C;
    std::optional<std::int64_t> p;
    std::int64_t d = 0;
    bool trivial = false;  // C = ±1

    std::string exponent_str() const { return p ? std::to_string(*p) : "all"; }
    bool operator==(const SolutionRecord& o) const {
        return A == o.A && B == o.B && C == o.C && p == o.p && d == o.d;
    }
};

bool verify_solution(const SolutionRecord& s);

/// 0 ≤ A, B ≤ H with A⁴ − dB² = ±1, expanded to sign orbits, ordered by A then B.
std::vector<SolutionRecord> search_c_pm1(std::int64_t d, std::int64_t H);

struct CatalogueEntry {
    std::int64_t A, B, C, d;  // positive representatives of (±A, ±B, C, d)
    bool operator==(const CatalogueEntry&) const = default;
};

/// Solutions with B ≠ 0 over squarefree 1 < d < 20.
std::vector<CatalogueEntry> reproduce_catalogue(std::int64_t H);

/// Primitive solutions with |A|, |B| ≤ H: the C = ±1 ones (exponent "all") and those with |C| > 1
/// where A⁴ − dB² is an exact p-th power.
std::vector<SolutionRecord> search_general(std::int64_t d, std::int64_t p, std::int64_t H);

}  // namespace qsieve
