#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsieve/frey.hpp"
#include "qsieve/poly.hpp"

namespace qsieve {

struct NewformRecord {
    std::string label;
    Integer level;
    std::int64_t char_conductor = 1;
    int char_order = 1;
    int field_degree = 1;
    std::map<std::int64_t, ZPoly> ap;  // q -> monic minimal polynomial of a_q
    std::optional<std::int64_t> cm;    // CM discriminant, e.g. -8
};

/// Largest |root| of a monic integer polynomial (companion-matrix eigenvalues).
double max_root_modulus(const ZPoly& minpoly);
/// Throws Error("forms", ...) naming the label and prime when a root exceeds 2√q (tolerance 1e-6).
void check_hasse(const NewformRecord& form);

std::vector<NewformRecord> parse_forms_text(const std::string& text, const std::string& source = "<memory>");
std::vector<NewformRecord> parse_forms(const std::string& path);
std::string serialize_forms(const std::vector<NewformRecord>& forms);

enum class PStatus { discarded, survivor_cm, survivor_unknown };
std::string to_string(PStatus s);

struct PVerdict {
    PStatus status = PStatus::survivor_unknown;
    std::int64_t q = 0;  // certificate prime when discarded
    Integer certificate;  // B_q
};

struct SieveVerdict {
    std::string label;
    std::map<std::int64_t, PVerdict> by_exponent;
    std::map<std::int64_t, Integer> certificates;  // every B_q computed
    std::vector<std::int64_t> survivors() const;
};

/// B_q(form) for one auxiliary prime; zero when some admissible trace matches exactly.
Integer mazur_certificate(const QuadField& field, const NewformRecord& form, std::int64_t q);

SieveVerdict mazur_discard(const QuadField& field, const NewformRecord& form, std::vector<std::int64_t> aux_qs,
                           std::int64_t p_min, std::int64_t p_max);

enum class CmDecision { discard_split_cartan, discard_ellenberg, keep };
std::string to_string(CmDecision c);

/// Only CM by Z[√−2] (discriminant −8) is recognised; anything else is `keep`.
CmDecision cm_criterion(const NewformRecord& form, std::int64_t p, std::optional<std::int64_t> ellenberg_threshold);
bool cm_supported(const NewformRecord& form);

/// A record whose a_q are the Frey curve's own Frobenius data at the given primes (degree ≤ 2).
NewformRecord self_match_form(const FreyCurve& E, const std::vector<std::int64_t>& qs, const std::string& label);

}  // namespace qsieve
