#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsieve/analytic.hpp"
#include "qsieve/forms.hpp"
#include "qsieve/hecke.hpp"
#include "qsieve/irred.hpp"
#include "qsieve/solutions.hpp"
#include "qsieve/unitgenus.hpp"

namespace qsieve {

struct Config {
    std::optional<std::vector<std::int64_t>> aux_irred;  // unset: per-field preset or default_aux_primes
    std::vector<std::int64_t> aux_sieve = {5, 7, 11, 13, 17, 19};
    std::int64_t p_min = 20, p_max = 1000;
    std::int64_t search_H = 1000;
    Real kappa = 1.0L / 90000;
    std::vector<Real> kappa_grid;
    std::int64_t p_lo = 1000, p_hi = 1000000;
    std::uint64_t seed = 1;
};

/// Keys: aux_irred, aux_sieve, p_min, p_max, search_H, kappa, kappa_grid, p_lo, p_hi, seed.
Config load_config(const std::string& path);
Config parse_config_text(const std::string& text);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CmOutcome {
    std::string label;
    std::int64_t p = 0;
    CmDecision decision = CmDecision::keep;
};

struct PipelineReport {
    std::int64_t d = 0;
    QuadField field;
    FundamentalUnit unit;
    std::optional<UnitGenusReport> genus;
    std::string genus_note;
    ChiLocalData chi;
    CompatibilityReport compatibility;
    LevelRecipe level;
    std::vector<std::int64_t> irred_aux;
    IrredBound irred;
    std::optional<IrredBound> irred_default;  // when a preset differs from the default aux primes
    std::vector<NewformRecord> forms;
    std::vector<SieveVerdict> sieve;
    std::vector<std::string> sieve_open_above;  // labels whose certificates leave primes > p_max open
    std::vector<CmOutcome> cm_outcomes;
    bool gate = false;
    std::optional<ThresholdResult> threshold;
    std::vector<SolutionRecord> unit_solutions;

    std::set<std::int64_t> exceptional_above;  // exceptional primes > p_min − 1
    bool congruence_condition = false;         // CM forms force p ≡ 1,3 (mod 8) (below the threshold if any)
    std::vector<Check> checks;
    std::string status;  // theorem-consistent | partial | inconsistent
    std::string conclusion;
};

/// quadfield → unitgenus → hecke → level → irred → [forms sieve] → [analytic] → solutions.
PipelineReport replay(std::int64_t d, const std::optional<std::string>& forms_path, const Config& config);

}  // namespace qsieve
