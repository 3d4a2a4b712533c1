#include "qsieve/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qsieve {

namespace {

using Json = nlohmann::json;

std::int64_t config_int(const Json& v, const std::string& key) {
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_string()) {
        try {
            std::size_t used = 0;
            const std::int64_t n = std::stoll(v.get<std::string>(), &used);
            if (used == v.get<std::string>().size()) return n;
        } catch (const std::exception&) {
        }
    }
    throw Error("config", key + ": expected an integer");
}

Real config_real(const Json& v, const std::string& key) {
    if (v.is_number()) return static_cast<Real>(v.get<double>());
    if (v.is_string()) {
        // "1/90000" or a decimal literal
        const std::string s = v.get<std::string>();
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return std::stold(s);
            return std::stold(s.substr(0, slash)) / std::stold(s.substr(slash + 1));
        } catch (const std::exception&) {
        }
    }
    throw Error("config", key + ": expected a real number");
}

std::vector<std::int64_t> config_int_list(const Json& v, const std::string& key) {
    if (!v.is_array()) throw Error("config", key + ": expected an array");
    std::vector<std::int64_t> out;
    for (const auto& x : v) out.push_back(config_int(x, key));
    return out;
}

std::string set_str(const std::set<std::int64_t>& s) {
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ",") + std::to_string(*it);
    return out + "}";
}

bool all_factors_at_most(const Integer& B, std::int64_t bound) {
    if (B == 0) return false;
    for (const auto& p : support(factor(B)))
        if (p > bound) return false;
    return true;
}

}  // namespace

Config parse_config_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error("config", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw Error("config", "top level must be an object");
    Config c;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string& k = it.key();
        const Json& v = it.value();
        if (k == "aux_irred") c.aux_irred = config_int_list(v, k);
        else if (k == "aux_sieve") c.aux_sieve = config_int_list(v, k);
        else if (k == "p_min") c.p_min = config_int(v, k);
        else if (k == "p_max") c.p_max = config_int(v, k);
        else if (k == "search_H") c.search_H = config_int(v, k);
        else if (k == "kappa") c.kappa = config_real(v, k);
        else if (k == "kappa_grid") {
            if (!v.is_array()) throw Error("config", "kappa_grid: expected an array");
            c.kappa_grid.clear();
            for (const auto& x : v) c.kappa_grid.push_back(config_real(x, k));
        } else if (k == "p_lo") c.p_lo = config_int(v, k);
        else if (k == "p_hi") c.p_hi = config_int(v, k);
        else if (k == "seed") c.seed = static_cast<std::uint64_t>(config_int(v, k));
        else throw Error("config", "unknown key \"" + k + "\"");
    }
    if (c.p_min < 3 || c.p_max < c.p_min) throw Error("config", "need 3 <= p_min <= p_max");
    return c;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("config", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

PipelineReport replay(std::int64_t d, const std::optional<std::string>& forms_path, const Config& config) {
    if (d < 2 || !is_squarefree(d)) throw Error("cli", "d must be a squarefree integer > 1, got " + std::to_string(d));
    PipelineReport r;
    r.d = d;
    r.field = make_field(d);
    r.unit = fundamental_unit(r.field);
    if (r.unit.norm == 1) r.genus = classify_unit(r.field, r.unit);
    else r.genus_note = "fundamental unit has norm -1; no genus classification";

    r.chi = build_chi_local(r.field);
    r.compatibility = verify_compatibility(r.field);
    r.level = level_recipe(r.field);

    // The d = 6 argument uses q = 3 alone; the default aux set is reported alongside.
    const bool preset = !config.aux_irred && d == 6;
    r.irred_aux = config.aux_irred ? *config.aux_irred : (preset ? std::vector<std::int64_t>{3} : default_aux_primes(r.field));
    r.irred = irreducible_outside(r.field, r.irred_aux);
    if (preset) r.irred_default = irreducible_outside(r.field, {});

    r.gate = two_splits_gate(r.field);
    if (r.gate) {
        const std::int64_t D = std::abs(r.field.disc);
        if (config.kappa_grid.empty()) r.threshold = threshold_search(config.kappa, D, config.p_lo, config.p_hi);
        else r.threshold = kappa_search(D, config.kappa_grid, config.p_lo, config.p_hi).threshold;
    }
    const std::optional<std::int64_t> cutoff = r.threshold ? std::optional<std::int64_t>(r.threshold->p_star - 1) : std::nullopt;

    for (const auto& p : r.irred.excluded_primes)
        if (p >= config.p_min) r.exceptional_above.insert(p.get_si());

    if (forms_path) {
        r.forms = parse_forms(*forms_path);
        for (const auto& f : r.forms) {
            std::vector<std::int64_t> aux;
            for (auto q : config.aux_sieve)
                if (d % q != 0 && f.level % q != 0 && f.ap.count(q)) aux.push_back(q);
            if (aux.empty()) throw Error("forms", f.label + ": no usable auxiliary prime");
            SieveVerdict v = mazur_discard(r.field, f, aux, config.p_min, config.p_max);
            bool closed = false;
            for (const auto& [q, B] : v.certificates) closed = closed || all_factors_at_most(B, config.p_max);
            if (!closed && !f.cm) r.sieve_open_above.push_back(f.label);
            for (const auto& [p, pv] : v.by_exponent) {
                if (pv.status == PStatus::survivor_unknown) r.exceptional_above.insert(p);
                if (pv.status == PStatus::survivor_cm) {
                    const CmDecision c = cm_criterion(f, p, cutoff);
                    r.cm_outcomes.push_back({f.label, p, c});
                    if (c == CmDecision::keep && !cm_supported(f)) r.exceptional_above.insert(p);
                    if (c == CmDecision::keep) r.congruence_condition = true;
                }
            }
            r.sieve.push_back(std::move(v));
        }
    }

    r.unit_solutions = search_c_pm1(d, config.search_H);

    // conclusion
    std::vector<std::string> nontrivial;
    for (const auto& s : r.unit_solutions)
        if (s.A > 0 && s.B > 0) nontrivial.push_back("(±" + s.A.get_str() + ",±" + s.B.get_str() + "," + s.C.get_str() + ")");
    std::string sols = nontrivial.empty() ? "none" : "";
    for (std::size_t i = 0; i < nontrivial.size(); ++i) sols += (i ? ", " : "") + nontrivial[i];
    const std::string equation = "x^4 - " + std::to_string(d) + "y^2 = z^p";
    const std::string outcome = nontrivial.empty() ? "there are no primitive solutions of " + equation + " with y != 0"
                                                   : "the only primitive solutions of " + equation + " with y != 0 are " + sols;

    const std::string small = "{p <= " + std::to_string(config.p_min - 1) + "}";
    std::string exceptional = small;
    if (!r.exceptional_above.empty()) exceptional += " ∪ " + set_str(r.exceptional_above);
    if (forms_path) {
        if (r.congruence_condition && cutoff)
            exceptional += " ∪ {p <= " + std::to_string(*cutoff) + " with p ≢ 1,3 (mod 8)}";
        std::string cond = r.congruence_condition && !cutoff ? " with p ≡ 1,3 (mod 8)" : "";
        r.conclusion = "Exceptional exponents: " + exceptional + ". For every other prime p" + cond +
                       ", " + outcome + ".";
        if (!r.sieve_open_above.empty())
            r.conclusion += " Sieve certificates only cover p <= " + std::to_string(config.p_max) + " for some forms.";
    } else {
        r.conclusion = "Partial: no eigenvalue data supplied, the modular sieve was not run. Residual image irreducible for p outside " +
                       exceptional + ". If every non-CM newform at levels";
        for (std::size_t i = 0; i < r.level.levels.size(); ++i) r.conclusion += (i ? ", " : " ") + r.level.levels[i].get_str();
        r.conclusion += " is discarded, then for p > " + std::to_string(config.p_min - 1) + " outside that set";
        if (cutoff) r.conclusion += " and either p ≡ 1,3 (mod 8) or p > " + std::to_string(*cutoff);
        else r.conclusion += " with p ≡ 1,3 (mod 8)";
        r.conclusion += ", " + outcome + ".";
    }

    // expectations for the two worked fields
    auto check = [&](const std::string& name, bool pass, const std::string& detail = "") { r.checks.push_back({name, pass, detail}); };
    std::vector<Integer> levels = r.level.levels;
    if (d == 6) {
        check("fundamental unit 5+2*sqrt(6)", r.unit.value == QuadInt::from_sqrt(6, 5, 2) && r.unit.norm == 1);
        check("unit lcm 2^7*3^5*5^2*11^2*97^2", to_string(r.irred.unit_lcm_factors) == "2^7*3^5*5^2*11^2*97^2",
              to_string(r.irred.unit_lcm_factors));
        check("levels 768, 1536", levels == std::vector<Integer>{768, 1536});
        check("Nebentypus fixed field Q(sqrt(3))", r.level.nebentypus.fixed_field() == "Q(sqrt(3))", r.level.nebentypus.fixed_field());
        bool inside = true;
        for (const auto& p : r.irred.excluded_primes) inside = inside && (p == 2 || p == 3 || p == 19 || p == 97);
        check("irreducibility exceptions within {2,3,19,97}", inside);
        check("C = ±1 solutions (±7,±20,1)", nontrivial == std::vector<std::string>{"(±7,±20,1)"}, sols);
        if (forms_path) {
            check("exceptional primes above 19 are {97}", r.exceptional_above == std::set<std::int64_t>{97}, set_str(r.exceptional_above));
            check("CM congruence p ≡ 1,3 (mod 8)", r.congruence_condition);
        }
    } else if (d == 129) {
        check("levels 258, 33024", levels == std::vector<Integer>{258, 33024});
        check("Nebentypus fixed field Q(sqrt(129))", r.level.nebentypus.fixed_field() == "Q(sqrt(129))", r.level.nebentypus.fixed_field());
        check("2 splits", r.gate);
        const bool near = r.threshold && std::abs(static_cast<double>(r.threshold->p_star - 64690)) <= 0.10 * 64690;
        check("threshold within 10% of 64690", near, r.threshold ? std::to_string(r.threshold->p_star) : "none");
        if (forms_path) {
            check("no exceptional primes above 19 besides the CM range", r.exceptional_above.empty(), set_str(r.exceptional_above));
            check("CM congruence p ≡ 1,3 (mod 8) below the threshold", r.congruence_condition);
        }
    }
    const bool any_fail = std::any_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return !c.pass; });
    if (any_fail) r.status = "inconsistent";
    else if (!r.checks.empty() && forms_path) r.status = "theorem-consistent";
    else r.status = "partial";
    return r;
}

}  // namespace qsieve
