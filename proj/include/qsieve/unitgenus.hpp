#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qsieve/quadfield.hpp"
#include "qsieve/residue.hpp"

namespace qsieve {

enum class GenusCase { d0, two_d0 };
std::string to_string(GenusCase g);

struct UnitGenusReport {
    std::int64_t d = 0;
    QuadInt eps;  // totally positive, norm +1
    std::set<std::int64_t> P_minus, P_plus;
    std::int64_t d0 = 1;
    GenusCase genus_case = GenusCase::d0;
    QuadInt square_root;  // of ε·d0 or ε·2d0
    /// ε ≡ −1 (mod 𝔭₂³); only when 8 | D.
    std::optional<bool> eps_mod_p2cubed;
    /// Valuation criterion at 𝔭₂ agrees with the square test (8 | D only).
    std::optional<bool> valuation_consistent;
};

/// Rejects norm −1 units; a norm +1 unit that is not totally positive is replaced by −ε.
UnitGenusReport classify_unit(const QuadField& field, const FundamentalUnit& eps);
bool verify_genus_congruences(const QuadField& field, const UnitGenusReport& report);

struct TableRow {
    int dtilde_class = 0;
    std::string eps_class;        // "(1,0,0)" or "-(1+sqrt(d))^4"
    ExponentVector exponents;
    std::set<int> raw, refined;  // d0 mod 8 before / after the norm constraint
    std::set<int> d0_residues;   // what the table prints
    std::string note;
};

/// Classes 3, 7, 11, 15 (generators √d̃, 1+2√d̃, and −1 or 5), 2, 6, 10 (−1, 5, 1+√d̃) and
/// 14 (norm constraint only).
std::vector<TableRow> regenerate_table(int dtilde_class);
/// Every row of the three tables in printed order: 3, 7, 11, 15, 2, 10, 6.
std::vector<TableRow> regenerate_all_tables();
std::string format_residues(const std::set<int>& s);  // "{5,7}"
std::string tables_csv(const std::vector<TableRow>& rows);

}  // namespace qsieve
