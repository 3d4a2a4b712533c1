#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qsieve/quadfield.hpp"
#include "qsieve/residue.hpp"

namespace qsieve {

// Character values are stored as exponents of i, i.e. elements of Z/4.

enum class LocalCharacter { trivial, quadratic_legendre, order4, delta_minus1 };
std::string to_string(LocalCharacter c);

int delta_minus1(std::int64_t n);  // exponent: 0 or 2
int delta_2(std::int64_t n);
int delta_minus2(std::int64_t n);

struct NebentypusSpec {
    std::int64_t d = 0;
    /// Odd primes of Q3 ∪ Q5, plus key 2 when the component at 2 is δ_{-1}.
    std::map<std::int64_t, LocalCharacter> local_components;
    int two_exponent = 0;
    Integer conductor = 1;
    int order = 1;
    int fixed_field_degree = 1;
    /// Q(√m) is the fixed field (order 2) or its quadratic subfield (order 4); 1 when trivial.
    std::int64_t quadratic_subfield = 1;
    /// p ∈ Q5 -> primitive root sent to i.
    std::map<std::int64_t, std::int64_t> order4_root;
    /// The alternative "e = 2 iff #Q5 + #Q7 odd" reading, kept for comparison.
    int printed_two_exponent = 0;
    Integer printed_conductor = 1;
    std::string fixed_field() const;
};

NebentypusSpec build_nebentypus(const QuadField& field);
/// ε(n) for n coprime to the conductor (full product over all finite components).
int eval_nebentypus(const NebentypusSpec& eps, std::int64_t n);
/// Component at 2 only (ε₂ on Z₂^×).
int eval_nebentypus_at_two(const NebentypusSpec& eps, std::int64_t n);
/// Component at an odd prime p evaluated at n mod p.
int eval_nebentypus_at(const NebentypusSpec& eps, std::int64_t p, std::int64_t n);

struct ChiGenerator {
    std::string label;
    QuadInt element;
    int value = 0;
};

struct ChiLocalData {
    std::int64_t d = 0;
    std::string two_case;
    /// odd ramified p -> "trivial" | "delta_p" | "eps_p*delta_p"
    std::map<std::int64_t, std::string> odd_components;
    std::vector<ChiGenerator> generators;  // on (O/8)^x; empty in the split case
    int conductor_exponent = 0;            // tabulated value (split case: 3 at one prime)
    int conductor_exponent_computed = 0;   // smallest k with χ₂ trivial on 1 + 𝔭^k
    Integer odd_conductor = 1;             // ∏_{Q1 ∪ Q5 ∪ Q7} p
    std::string archimedean = "trivial,sign";
    std::string ramification_note;
    NebentypusSpec nebentypus;
    std::optional<ResidueRing> ring;       // O/8 for the non-split cases
    std::optional<ResidueRing> split_ring; // O/𝔭₂³ with 𝔭₂ = <2, ω>
};

ChiLocalData build_chi_local(const QuadField& field);
/// χ₂(u) for u ∈ O_K of odd norm.
int eval_chi2(const ChiLocalData& chi, const QuadInt& u);
/// χ_𝔭(u) at the odd ramified prime p.
int eval_chi_odd(const ChiLocalData& chi, std::int64_t p, const QuadInt& u);

bool verify_chi2_restriction(const QuadField& field);

struct CompatibilityReport {
    bool at_minus_one = false;
    bool at_epsilon = false;
    bool epsilon_skipped = false;  // fundamental unit of norm −1
    int chi2_epsilon = 0;
    int minus_count = 0;           // #(P_− ∩ (Q5 ∪ Q7))
};

CompatibilityReport verify_compatibility(const QuadField& field);

}  // namespace qsieve
