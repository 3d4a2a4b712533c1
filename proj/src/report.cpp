#include "qsieve/report.hpp"

namespace qsieve {

namespace {

std::string s(std::int64_t n) { return std::to_string(n); }
std::string s(const Integer& n) { return n.get_str(); }

template <class C>
Json int_array(const C& c) {
    Json a = Json::array();
    for (const auto& x : c) a.push_back(s(x));
    return a;
}

Json factor_json(const Factorization& f) {
    Json o = Json::object();
    for (const auto& [p, e] : f) o[p.get_str()] = s(static_cast<std::int64_t>(e));
    return o;
}

Json real(Real v) { return static_cast<double>(v); }

}  // namespace

Json envelope(const std::string& kind, Json body) {
    Json j;
    j["schema_version"] = schema_version;
    j["kind"] = kind;
    j["result"] = std::move(body);
    return j;
}

std::string dump(const Json& j) { return j.dump(2, ' ', false) + "\n"; }

Json to_json(const QuadField& f) {
    Json j;
    j["d"] = s(f.d);
    j["disc"] = s(f.disc);
    j["two_splitting"] = to_string(f.two_splitting);
    j["ramified_odd_primes"] = int_array(f.ramified_odd_primes);
    Json q;
    for (const auto& [i, ps] : f.Q) q["Q" + std::to_string(i)] = int_array(ps);
    j["Q"] = q;
    return j;
}

Json to_json(const FundamentalUnit& u) {
    Json j;
    j["value"] = u.value.str();
    j["x"] = s(u.value.x());
    j["y"] = s(u.value.y());
    j["norm"] = s(u.norm);
    j["totally_positive"] = u.totally_positive;
    return j;
}

Json to_json(const UnitGenusReport& g) {
    Json j;
    j["d"] = s(g.d);
    j["eps"] = g.eps.str();
    j["P_minus"] = int_array(g.P_minus);
    j["P_plus"] = int_array(g.P_plus);
    j["d0"] = s(g.d0);
    j["genus_case"] = to_string(g.genus_case);
    j["square_root"] = g.square_root.str();
    j["eps_mod_p2cubed"] = g.eps_mod_p2cubed ? Json(*g.eps_mod_p2cubed) : Json(nullptr);
    j["valuation_consistent"] = g.valuation_consistent ? Json(*g.valuation_consistent) : Json(nullptr);
    return j;
}

Json to_json(const NebentypusSpec& e) {
    Json j;
    Json comps = Json::object();
    for (const auto& [p, c] : e.local_components) comps[s(p)] = to_string(c);
    j["local_components"] = comps;
    j["two_exponent"] = s(e.two_exponent);
    j["conductor"] = s(e.conductor);
    j["order"] = s(e.order);
    j["fixed_field"] = e.fixed_field();
    j["fixed_field_degree"] = s(e.fixed_field_degree);
    return j;
}

Json to_json(const ChiLocalData& c) {
    Json j;
    j["two_case"] = c.two_case;
    Json odd = Json::object();
    for (const auto& [p, v] : c.odd_components) odd[s(p)] = v;
    j["odd_components"] = odd;
    Json gens = Json::array();
    for (const auto& g : c.generators) gens.push_back(Json{{"label", g.label}, {"element", g.element.str()}, {"value", s(g.value)}});
    j["generators"] = gens;
    j["conductor_exponent"] = s(c.conductor_exponent);
    j["conductor_exponent_computed"] = s(c.conductor_exponent_computed);
    j["odd_conductor"] = s(c.odd_conductor);
    j["archimedean"] = c.archimedean;
    j["ramification_note"] = c.ramification_note;
    return j;
}

Json to_json(const CompatibilityReport& c) {
    Json j;
    j["at_minus_one"] = c.at_minus_one;
    j["at_epsilon"] = c.at_epsilon;
    j["epsilon_skipped"] = c.epsilon_skipped;
    j["chi2_epsilon"] = s(c.chi2_epsilon);
    j["minus_count"] = s(c.minus_count);
    return j;
}

Json to_json(const TraceResult& t) {
    Json j;
    j["q"] = s(t.q);
    j["splitting"] = to_string(t.splitting);
    j["residue_degree"] = s(t.residue_degree);
    j["reduction"] = to_string(t.reduction);
    j["a"] = s(t.a);
    if (t.reduction_conjugate) j["reduction_conjugate"] = to_string(*t.reduction_conjugate);
    if (t.a_conjugate) j["a_conjugate"] = s(*t.a_conjugate);
    return j;
}

Json to_json(const LevelRecipe& l) {
    Json j;
    j["d"] = s(l.d);
    j["odd_part"] = factor_json(l.odd_part);
    j["e_options"] = int_array(l.e_options);
    j["levels"] = int_array(l.levels);
    j["nebentypus"] = to_json(l.nebentypus);
    j["selected_e"] = l.selected_e ? Json(s(*l.selected_e)) : Json(nullptr);
    j["conjectural"] = l.conjectural;
    j["flags"] = l.flags;
    return j;
}

Json to_json(const IrredBound& b) {
    Json j;
    j["d"] = s(b.d);
    j["unit_lcm"] = s(b.unit_lcm);
    j["unit_lcm_factors"] = factor_json(b.unit_lcm_factors);
    Json aux = Json::array();
    for (const auto& a : b.aux_data) {
        Json x;
        x["q"] = s(a.q);
        x["residue_degree"] = s(a.residue_degree);
        x["traces"] = int_array(a.traces);
        x["multiplicative"] = a.multiplicative;
        Json res = Json::array();
        for (const auto& [t, f] : a.resultants) res.push_back(Json{{"trace", s(t)}, {"factors", factor_json(f)}});
        x["resultants"] = res;
        x["support"] = int_array(a.support);
        aux.push_back(x);
    }
    j["aux"] = aux;
    j["excluded_primes"] = int_array(b.excluded_primes);
    return j;
}

Json to_json(const SieveVerdict& v) {
    Json j;
    j["label"] = v.label;
    Json certs = Json::object();
    for (const auto& [q, B] : v.certificates) certs[s(q)] = s(B);
    j["certificates"] = certs;
    Json per = Json::object();
    for (const auto& [p, pv] : v.by_exponent) {
        Json x;
        x["status"] = to_string(pv.status);
        if (pv.status == PStatus::discarded) x["q"] = s(pv.q);
        per[s(p)] = x;
    }
    j["by_exponent"] = per;
    j["survivors"] = int_array(v.survivors());
    return j;
}

Json to_json(const BoundBreakdown& b) {
    Json j;
    j["p"] = s(b.p);
    j["kappa"] = real(b.kappa);
    j["x"] = real(b.x);
    j["D"] = s(b.D);
    j["main_term"] = real(b.main_term);
    Json terms = Json::object();
    for (const auto& [name, v] : b.terms) terms[name] = real(v);
    j["terms"] = terms;
    j["rhs"] = real(b.rhs);
    return j;
}

Json to_json(const ThresholdResult& t) {
    Json j;
    j["p_star"] = s(t.p_star);
    j["kappa"] = real(t.kappa);
    j["D"] = s(t.D);
    j["monotone_samples"] = s(t.monotone_samples);
    j["checked_above"] = int_array(t.checked_above);
    return j;
}

Json to_json(const SolutionRecord& r) {
    Json j;
    j["A"] = s(r.A);
    j["B"] = s(r.B);
    j["C"] = s(r.C);
    j["p"] = r.exponent_str();
    j["d"] = s(r.d);
    j["trivial"] = r.trivial;
    return j;
}

Json to_json(const PipelineReport& r) {
    Json j;
    j["d"] = s(r.d);
    j["field"] = to_json(r.field);
    j["unit"] = to_json(r.unit);
    j["unit_genus"] = r.genus ? to_json(*r.genus) : Json(nullptr);
    if (!r.genus_note.empty()) j["unit_genus_note"] = r.genus_note;
    j["character"] = Json{{"nebentypus", to_json(r.chi.nebentypus)}, {"chi", to_json(r.chi)}, {"compatibility", to_json(r.compatibility)}};
    j["level"] = to_json(r.level);
    j["irred_aux"] = int_array(r.irred_aux);
    j["irred"] = to_json(r.irred);
    j["irred_default"] = r.irred_default ? to_json(*r.irred_default) : Json(nullptr);
    if (r.forms.empty()) {
        j["sieve"] = nullptr;
    } else {
        Json sv = Json::array();
        for (const auto& v : r.sieve) sv.push_back(to_json(v));
        j["sieve"] = sv;
        j["sieve_open_above_pmax"] = r.sieve_open_above;
        Json cm = Json::array();
        for (const auto& c : r.cm_outcomes) cm.push_back(Json{{"label", c.label}, {"p", s(c.p)}, {"decision", to_string(c.decision)}});
        j["cm"] = cm;
    }
    j["two_splits"] = r.gate;
    j["threshold"] = r.threshold ? to_json(*r.threshold) : Json(nullptr);
    Json sols = Json::array();
    for (const auto& x : r.unit_solutions) sols.push_back(to_json(x));
    j["unit_solutions"] = sols;
    j["exceptional_above"] = int_array(r.exceptional_above);
    j["congruence_condition"] = r.congruence_condition;
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks;
    j["status"] = r.status;
    j["conclusion"] = r.conclusion;
    return j;
}

}  // namespace qsieve
