#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "qsieve/quadfield.hpp"

namespace qsieve {

/// Which ideal 𝔪 the quotient O_K/𝔪 is taken by.
struct Modulus {
    enum class Kind {
        two_power,        ///< 2^k O_K
        prime_above_two,  ///< 𝔭^k with 𝔭 | 2 (ramified, inert or split)
        odd_ramified,     ///< 𝔭 | p, p odd and ramified
    };
    Kind kind = Kind::two_power;
    int k = 1;
    int which = 0;        ///< split 2: 0 selects 𝔭 = <2, ω>, 1 selects <2, ω - 1>
    std::int64_t p = 0;   ///< odd_ramified only

    static Modulus two_power(int k) { return {Kind::two_power, k, 0, 0}; }
    static Modulus prime_above_two(int k, int which = 0) { return {Kind::prime_above_two, k, which, 0}; }
    static Modulus odd_ramified(std::int64_t p) { return {Kind::odd_ramified, 1, 0, p}; }
    std::string str() const;
};

/// O_K/𝔪 with every element enumerated. Elements are dense indices in [0, size()).
class ResidueRing {
public:
    using Element = std::uint32_t;

    static ResidueRing build(const QuadField& field, const Modulus& modulus);

    const QuadField& field() const { return field_; }
    const Modulus& modulus() const { return modulus_; }
    std::size_t size() const { return size_; }
    const std::vector<Element>& units() const { return units_; }

    Element reduce(const QuadInt& z) const;
    Element reduce(std::int64_t n) const;
    QuadInt representative(Element e) const;
    Element one() const { return one_; }
    Element mul(Element a, Element b) const;
    Element pow(Element a, unsigned long e) const;
    Element add(Element a, Element b) const;
    bool is_unit(Element e) const { return unit_flag_[e]; }
    std::size_t order(Element unit) const;
    /// Norm map into Z / norm_modulus().
    std::int64_t norm(Element e) const;
    std::int64_t norm_modulus() const { return norm_modulus_; }
    /// Subgroup of the unit group generated by gens (sorted).
    std::vector<Element> closure(const std::vector<Element>& gens) const;

private:
    ResidueRing() = default;
    using Pair = std::pair<std::int64_t, std::int64_t>;
    Element key(std::int64_t x, std::int64_t y) const;
    Pair coords(Element e) const;

    QuadField field_;
    Modulus modulus_;
    std::int64_t lift_ = 1;        // coordinates are reduced modulo lift_
    std::int64_t norm_modulus_ = 1;
    std::int64_t split_root_ = 0;  // image of ω for split 𝔭^k, odd ramified 𝔭
    std::size_t size_ = 0;
    Element one_ = 0;
    std::vector<bool> unit_flag_;
    std::vector<Element> units_;
};

struct ExponentVector {
    std::vector<int> exponents;
    bool operator==(const ExponentVector&) const = default;
    std::string str() const;  // "(1,0,2)"
};

/// u = ∏ gens[i]^e[i]; lexicographically smallest exponent tuple in the box
/// [0, ord(g_i)). Throws "not generated" if the generators miss part of the unit group.
ExponentVector decompose(const ResidueRing& ring, ResidueRing::Element u,
                         const std::vector<ResidueRing::Element>& gens);
ResidueRing::Element evaluate(const ResidueRing& ring, const ExponentVector& e,
                              const std::vector<ResidueRing::Element>& gens);
bool generates_units(const ResidueRing& ring, const std::vector<ResidueRing::Element>& gens);

enum class NormForm { n_equals_norm, two_n_equals_norm };

/// Residues n mod 8 with n = N(α) (n odd) or 2n = N(α) (n odd), α ranging over the ring.
/// Needs a two_power ring with k ≥ 4.
std::set<int> norm_classes_with_constraint(const ResidueRing& ring, NormForm form);

}  // namespace qsieve
