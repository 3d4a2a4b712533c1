#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qsieve/hecke.hpp"
#include "qsieve/poly.hpp"
#include "qsieve/quadfield.hpp"

namespace qsieve {

/// E_(A,B): y² = x³ + a2·x² + a4·x with a2 = 4A, a4 = 2(A² + B√d).
struct FreyCurve {
    Integer A, B;
    QuadField field;
    QuadInt a2, a4;

    QuadInt discriminant() const;  // 16·a4²·(a2² − 4a4) = 2⁹(A²+rB)²(A²−rB)
    Integer discriminant_norm() const;
    /// The Galois-conjugate curve (r ↦ −r).
    FreyCurve conjugate() const;
    std::string str() const;
};

FreyCurve build_curve(const Integer& A, const Integer& B, const QuadField& field);
QuadRational j_invariant(const FreyCurve& E);

enum class Reduction { good, multiplicative, additive };
std::string to_string(Reduction r);

struct TraceResult {
    std::int64_t q = 0;
    Splitting splitting = Splitting::inert;
    int residue_degree = 1;
    Reduction reduction = Reduction::good;
    std::int64_t a = 0;  // q^f + 1 − #E(F_{q^f}), also filled for bad reduction
    /// Split q: the prime above q given by the other root of d.
    std::optional<Reduction> reduction_conjugate;
    std::optional<std::int64_t> a_conjugate;
};

TraceResult reduce_and_trace(const FreyCurve& E, std::int64_t q);

struct TraceSet {
    std::int64_t q = 0;
    Splitting splitting = Splitting::inert;
    int residue_degree = 1;
    std::set<std::int64_t> good;     // traces at primes of good reduction
    bool multiplicative = false;     // some residue pair gives multiplicative reduction
};

/// Traces over all (A, B) mod q, (A, B) ≢ (0, 0); at ramified q the pairs with q | A are skipped
/// (they force q | gcd(A, C) for a primitive solution).
TraceSet trace_set(const QuadField& field, std::int64_t q);

struct LevelRecipe {
    std::int64_t d = 0;
    Factorization odd_part;
    std::vector<int> e_options;
    std::vector<Integer> levels;
    NebentypusSpec nebentypus;
    std::optional<int> selected_e;  // when the parity of C is specified
    bool conjectural = false;
    std::vector<std::string> flags;
};

/// c_even: parity of C if known; selects the small (even) or large (odd) exponent option.
LevelRecipe level_recipe(const QuadField& field, std::optional<bool> c_even = std::nullopt);

/// ℓ = 3: Δ(ψ₃)/(2⁸·3²·b⁴·(a²−4b)²); ℓ = 5: Δ(ψ₅)/(2⁸⁸·5¹⁰·b⁴⁴·(a²−4b)²²).
QuadRational division_poly_constant(const FreyCurve& E, int ell);
KPoly division_polynomial(const FreyCurve& E, int ell);  // ψ₃ or ψ₅ in x

/// The 2-isogeny (x, y) ↦ (−y²/2x², y(2A²+2rB−x²)/(2√−2·x²)) lands on the conjugate curve.
bool isogeny_identity_check(const FreyCurve& E);

}  // namespace qsieve
