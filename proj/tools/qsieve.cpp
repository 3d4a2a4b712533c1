#include <CLI11.hpp>

#include <iostream>

#include "qsieve/report.hpp"

using namespace qsieve;

namespace {

struct Globals {
    bool json = false;
    std::string config_path;
    std::optional<std::uint64_t> seed;
};

Real parse_real(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return std::stold(s);
        return std::stold(s.substr(0, slash)) / std::stold(s.substr(slash + 1));
    } catch (const std::exception&) {
        throw Error("cli", "not a real number: " + s);
    }
}

std::vector<std::int64_t> parse_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw Error("cli", "bad list entry \"" + item + "\"");
        }
    }
    return out;
}

// Text mode: one "path: value" line per leaf.
void flatten(const Json& j, const std::string& path, std::ostream& os) {
    if (j.is_object() && !j.empty()) {
        for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
    } else if (j.is_array()) {
        os << path << ": ";
        for (std::size_t i = 0; i < j.size(); ++i) os << (i ? "," : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
        os << "\n";
    } else {
        os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const Globals& g, const std::string& kind, const Json& body) {
    if (g.json) std::cout << dump(envelope(kind, body));
    else flatten(body, "", std::cout);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qsieve: modular-method toolkit for x^4 - d y^2 = z^p"};
    app.require_subcommand(1);
    Globals g;
    std::uint64_t seed = 0;
    app.add_flag("--json", g.json, "JSON output");
    app.add_option("--config", g.config_path, "JSON config file")->check(CLI::ExistingFile);
    app.add_option("--seed", seed, "seed for sampled checks");

    std::int64_t d = 0;
    auto need_d = [&](CLI::App* sub) { sub->add_option("--d", d, "squarefree d > 1")->required(); };

    auto* classify = app.add_subcommand("classify", "field structure and fundamental unit");
    need_d(classify);
    auto* unit_genus = app.add_subcommand("unit-genus", "genus classification of the fundamental unit");
    need_d(unit_genus);
    auto* tables = app.add_subcommand("tables", "regenerate the unit/d0 residue tables as CSV");
    auto* character = app.add_subcommand("character", "Nebentypus, local data of chi, compatibility");
    need_d(character);

    auto* level = app.add_subcommand("level", "level and Nebentypus recipe");
    need_d(level);
    std::string parity;
    level->add_option("--c-parity", parity, "parity of C")->check(CLI::IsMember({"even", "odd"}));

    auto* frey = app.add_subcommand("frey", "reduction type and trace of the Frey curve at q");
    need_d(frey);
    std::string fa, fb;
    std::int64_t fq = 0;
    frey->add_option("--A", fa)->required();
    frey->add_option("--B", fb)->required();
    frey->add_option("--q", fq)->required();

    auto* irred = app.add_subcommand("irred", "primes outside which the residual image is irreducible");
    need_d(irred);
    std::string irred_aux;
    irred->add_option("--aux", irred_aux, "comma-separated auxiliary primes");

    auto* sieve = app.add_subcommand("sieve", "eigenvalue sieve over ingested newform data");
    need_d(sieve);
    std::string forms_path, sieve_aux;
    std::optional<std::int64_t> pmin, pmax;
    sieve->add_option("--forms", forms_path)->required()->check(CLI::ExistingFile);
    sieve->add_option("--pmin", pmin);
    sieve->add_option("--pmax", pmax);
    sieve->add_option("--aux", sieve_aux, "comma-separated auxiliary primes");

    auto* ellenberg = app.add_subcommand("ellenberg", "explicit analytic bound and threshold");
    std::int64_t D = 0;
    std::optional<std::string> kappa_str;
    std::optional<std::int64_t> ell_p, p_lo, p_hi;
    bool do_search = false, trace_terms = false;
    ellenberg->add_option("--D", D, "|discriminant|")->required();
    ellenberg->add_option("--kappa", kappa_str, "x = kappa p^2 (accepts a/b)");
    ellenberg->add_option("--p", ell_p, "evaluate at this prime");
    ellenberg->add_option("--p-lo", p_lo);
    ellenberg->add_option("--p-hi", p_hi);
    ellenberg->add_flag("--search", do_search, "find the least prime with positive right-hand side");
    ellenberg->add_flag("--trace-terms", trace_terms, "print the eight bound terms");

    auto* search = app.add_subcommand("search", "brute-force solution search");
    need_d(search);
    std::optional<std::int64_t> search_p, search_H;
    search->add_option("--p", search_p, "odd prime exponent; omitted: C = ±1 only");
    search->add_option("--H", search_H, "bound on |A|, |B|");

    auto* replay_cmd = app.add_subcommand("replay", "end-to-end pipeline for one field");
    need_d(replay_cmd);
    std::string replay_forms;
    replay_cmd->add_option("--forms", replay_forms)->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);
    if (app.count("--seed")) g.seed = seed;

    try {
        Config cfg = g.config_path.empty() ? Config{} : load_config(g.config_path);
        if (g.seed) cfg.seed = *g.seed;

        if (*classify) {
            const QuadField K = make_field(d);
            emit(g, "classify", Json{{"field", to_json(K)}, {"unit", to_json(fundamental_unit(K))}});
        } else if (*unit_genus) {
            const QuadField K = make_field(d);
            emit(g, "unit-genus", to_json(classify_unit(K, fundamental_unit(K))));
        } else if (*tables) {
            std::cout << tables_csv(regenerate_all_tables());
        } else if (*character) {
            const QuadField K = make_field(d);
            const ChiLocalData chi = build_chi_local(K);
            emit(g, "character", Json{{"nebentypus", to_json(chi.nebentypus)}, {"chi", to_json(chi)}, {"compatibility", to_json(verify_compatibility(K))}});
        } else if (*level) {
            std::optional<bool> c_even;
            if (!parity.empty()) c_even = parity == "even";
            emit(g, "level", to_json(level_recipe(make_field(d), c_even)));
        } else if (*frey) {
            const FreyCurve E = build_curve(Integer(fa), Integer(fb), make_field(d));
            Json body = to_json(reduce_and_trace(E, fq));
            body["curve"] = E.str();
            emit(g, "frey", body);
        } else if (*irred) {
            const QuadField K = make_field(d);
            std::vector<std::int64_t> aux = irred_aux.empty() ? (cfg.aux_irred ? *cfg.aux_irred : default_aux_primes(K)) : parse_list(irred_aux);
            emit(g, "irred", to_json(irreducible_outside(K, aux)));
        } else if (*sieve) {
            const QuadField K = make_field(d);
            std::vector<std::int64_t> aux = sieve_aux.empty() ? cfg.aux_sieve : parse_list(sieve_aux);
            const std::int64_t lo = pmin.value_or(cfg.p_min), hi = pmax.value_or(cfg.p_max);
            Json out = Json::array();
            for (const auto& f : parse_forms(forms_path)) {
                std::vector<std::int64_t> usable;
                for (auto q : aux)
                    if (d % q != 0 && f.level % q != 0 && f.ap.count(q)) usable.push_back(q);
                out.push_back(to_json(mazur_discard(K, f, usable, lo, hi)));
            }
            emit(g, "sieve", out);
        } else if (*ellenberg) {
            const Real kappa = kappa_str ? parse_real(*kappa_str) : cfg.kappa;
            Json body;
            if (do_search) {
                const ThresholdResult t = threshold_search(kappa, D, p_lo.value_or(cfg.p_lo), p_hi.value_or(cfg.p_hi));
                body = to_json(t);
                if (trace_terms) body["at_p_star"] = to_json(rhs_final(t.p_star, kappa, D));
            } else {
                if (!ell_p) throw Error("cli", "ellenberg needs --p or --search");
                body = to_json(rhs_final(*ell_p, kappa, D));
                if (!trace_terms) body.erase("terms");
            }
            emit(g, "ellenberg", body);
        } else if (*search) {
            const std::int64_t H = search_H.value_or(search_p ? 200 : cfg.search_H);
            Json out = Json::array();
            for (const auto& s : search_p ? search_general(d, *search_p, H) : search_c_pm1(d, H)) out.push_back(to_json(s));
            emit(g, "search", out);
        } else if (*replay_cmd) {
            const PipelineReport r = replay(d, replay_forms.empty() ? std::nullopt : std::optional<std::string>(replay_forms), cfg);
            if (g.json) {
                std::cout << dump(envelope("replay", to_json(r)));
            } else {
                std::cout << "d = " << r.d << "\nstatus: " << r.status << "\n";
                for (const auto& c : r.checks)
                    std::cout << (c.pass ? "  pass  " : "  FAIL  ") << c.name << (c.detail.empty() ? "" : " [" + c.detail + "]") << "\n";
                std::cout << r.conclusion << "\n";
            }
        }
    } catch (const Error& e) {
        std::cerr << "error [" << e.module() << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
