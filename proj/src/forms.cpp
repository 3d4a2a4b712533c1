#include "qsieve/forms.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <json.hpp>

namespace qsieve {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

std::string to_string(PStatus s) {
    switch (s) {
        case PStatus::discarded: return "discarded";
        case PStatus::survivor_cm: return "survivor_CM";
        case PStatus::survivor_unknown: return "survivor_unknown";
    }
    return "?";
}

std::string to_string(CmDecision c) {
    switch (c) {
        case CmDecision::discard_split_cartan: return "discard_split_cartan";
        case CmDecision::discard_ellenberg: return "discard_ellenberg";
        case CmDecision::keep: return "keep";
    }
    return "?";
}

double max_root_modulus(const ZPoly& minpoly) {
    const ZPoly m = trim(minpoly);
    const int n = degree(m);
    if (n < 1) throw Error("forms", "constant minimal polynomial");
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -m[i].get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> solver(C, false);
    double best = 0;
    for (int i = 0; i < n; ++i) best = std::max(best, std::abs(solver.eigenvalues()[i]));
    return best;
}

void check_hasse(const NewformRecord& form) {
    for (const auto& [q, m] : form.ap) {
        const double bound = 2.0 * std::sqrt(static_cast<double>(q));
        const double r = max_root_modulus(m);
        if (r > bound + 1e-6)
            throw Error("forms", form.label + ": a_" + std::to_string(q) + " violates the Hasse bound (|root| = " +
                                     std::to_string(r) + " > " + std::to_string(bound) + ")");
    }
}

namespace {

Integer json_integer(const Json& v, const std::string& where) {
    if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<unsigned long long>()));
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        Integer z;
        if (s.empty() || z.set_str(s, 10) != 0) throw Error("forms", where + ": not a decimal integer: \"" + s + "\"");
        return z;
    }
    throw Error("forms", where + ": expected an integer");
}

std::int64_t small_integer(const Json& v, const std::string& where) {
    const Integer z = json_integer(v, where);
    if (!z.fits_slong_p()) throw Error("forms", where + ": integer out of range");
    return z.get_si();
}

int line_of(const std::string& text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

NewformRecord parse_record(const Json& obj, std::size_t index, const std::string& source) {
    const std::string at = source + ": record " + std::to_string(index);
    if (!obj.is_object()) throw Error("forms", at + ": expected an object");
    static const std::vector<std::string> keys = {"label", "level", "char_conductor", "char_order",
                                                  "field_degree", "ap", "cm"};
    for (const auto& k : keys)
        if (!obj.contains(k)) throw Error("forms", at + ": missing key \"" + k + "\"");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (std::find(keys.begin(), keys.end(), it.key()) == keys.end())
            throw Error("forms", at + ": unknown key \"" + it.key() + "\"");
    if (!obj["label"].is_string()) throw Error("forms", at + ": label must be a string");

    NewformRecord r;
    r.label = obj["label"].get<std::string>();
    const std::string where = at + " (" + r.label + ")";
    r.level = json_integer(obj["level"], where + " level");
    r.char_conductor = small_integer(obj["char_conductor"], where + " char_conductor");
    r.char_order = static_cast<int>(small_integer(obj["char_order"], where + " char_order"));
    r.field_degree = static_cast<int>(small_integer(obj["field_degree"], where + " field_degree"));
    if (r.level < 1 || r.char_conductor < 1 || r.char_order < 1 || r.field_degree < 1)
        throw Error("forms", where + ": level, character data and field degree must be positive");
    if (!obj["cm"].is_null()) r.cm = small_integer(obj["cm"], where + " cm");

    if (!obj["ap"].is_object()) throw Error("forms", where + ": ap must be an object");
    for (auto it = obj["ap"].begin(); it != obj["ap"].end(); ++it) {
        const std::string key = it.key();
        const std::string here = where + " ap[\"" + key + "\"]";
        if (key.empty() || !std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw Error("forms", here + ": key is not a decimal prime");
        const std::int64_t q = std::stoll(key);
        if (!is_prime(q)) throw Error("forms", here + ": key is not prime");
        if (!it.value().is_array() || it.value().size() < 2)
            throw Error("forms", here + ": expected a coefficient array of length >= 2");
        ZPoly m;
        for (const auto& c : it.value()) m.push_back(json_integer(c, here));
        if (m.back() != 1) throw Error("forms", here + ": minimal polynomial is not monic");
        if (r.field_degree % degree(m) != 0)
            throw Error("forms", here + ": degree " + std::to_string(degree(m)) + " does not divide field_degree");
        r.ap[q] = m;
    }
    check_hasse(r);
    return r;
}

}  // namespace

std::vector<NewformRecord> parse_forms_text(const std::string& text, const std::string& source) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error("forms", source + ":" + std::to_string(line_of(text, e.byte)) + ": malformed JSON: " + e.what());
    }
    if (!doc.is_array()) throw Error("forms", source + ": top level must be an array");
    std::vector<NewformRecord> out;
    for (std::size_t i = 0; i < doc.size(); ++i) out.push_back(parse_record(doc[i], i, source));
    return out;
}

std::vector<NewformRecord> parse_forms(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("forms", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_forms_text(ss.str(), path);
}

std::string serialize_forms(const std::vector<NewformRecord>& forms) {
    auto num = [](const Integer& z) -> OrderedJson {
        if (z.fits_slong_p()) return OrderedJson(static_cast<long long>(z.get_si()));
        return OrderedJson(z.get_str());
    };
    OrderedJson arr = OrderedJson::array();
    for (const auto& f : forms) {
        OrderedJson o;
        o["label"] = f.label;
        o["level"] = num(f.level);
        o["char_conductor"] = f.char_conductor;
        o["char_order"] = f.char_order;
        o["field_degree"] = f.field_degree;
        OrderedJson ap = OrderedJson::object();
        for (const auto& [q, m] : f.ap) {
            OrderedJson coeffs = OrderedJson::array();
            for (const auto& c : m) coeffs.push_back(num(c));
            ap[std::to_string(q)] = coeffs;
        }
        o["ap"] = ap;
        o["cm"] = f.cm ? OrderedJson(*f.cm) : OrderedJson(nullptr);
        arr.push_back(o);
    }
    return arr.dump(2) + "\n";
}

std::vector<std::int64_t> SieveVerdict::survivors() const {
    std::vector<std::int64_t> out;
    for (const auto& [p, v] : by_exponent)
        if (v.status != PStatus::discarded) out.push_back(p);
    return out;
}

namespace {

// x^k − c
ZPoly binomial(unsigned k, const Integer& c) {
    ZPoly p(k + 1, Integer(0));
    p[0] = -c;
    p[k] = 1;
    return p;
}

Integer ipow(const Integer& b, unsigned e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace

Integer mazur_certificate(const QuadField& field, const NewformRecord& form, std::int64_t q) {
    if (q == 2 || !is_prime(q)) throw Error("forms", "aux prime must be an odd prime, got " + std::to_string(q));
    if (field.d % q == 0) throw Error("forms", "aux prime " + std::to_string(q) + " divides d");
    if (form.level % q == 0) throw Error("forms", form.label + ": aux prime " + std::to_string(q) + " divides the level");
    const auto it = form.ap.find(q);
    if (it == form.ap.end()) throw Error("forms", form.label + ": no a_" + std::to_string(q));
    const ZPoly& m = it->second;
    const unsigned n = static_cast<unsigned>(std::max(1, form.char_order));
    const TraceSet ts = trace_set(field, q);
    const Integer Q = q;

    Integer B = q;
    if (ts.residue_degree == 1) {
        // a_q = ζ·t, ζⁿ = 1: ∏_ζ (x − ζt) = xⁿ − tⁿ
        for (auto t : ts.good) B *= resultant(m, binomial(n, ipow(Integer(t), n)));
        if (ts.multiplicative) B *= resultant(m, binomial(2 * n, ipow(Q + 1, 2 * n)));
    } else {
        // a_q² = ζ·(t ± 2q): ∏_ζ (x² − ζc) = x²ⁿ − cⁿ
        for (auto t : ts.good) {
            B *= resultant(m, binomial(2 * n, ipow(Integer(t) + 2 * Q, n)));
            B *= resultant(m, binomial(2 * n, ipow(Integer(t) - 2 * Q, n)));
        }
        if (ts.multiplicative) {
            B *= resultant(m, binomial(2 * n, ipow(Q + 1, 2 * n)));
            B *= resultant(m, binomial(2 * n, ipow(Q - 1, 2 * n)));
        }
    }
    return B;
}

SieveVerdict mazur_discard(const QuadField& field, const NewformRecord& form, std::vector<std::int64_t> aux_qs,
                           std::int64_t p_min, std::int64_t p_max) {
    if (aux_qs.empty()) throw Error("forms", "empty list of auxiliary primes");
    std::sort(aux_qs.begin(), aux_qs.end());
    aux_qs.erase(std::unique(aux_qs.begin(), aux_qs.end()), aux_qs.end());
    SieveVerdict v;
    v.label = form.label;
    for (auto q : aux_qs) v.certificates[q] = mazur_certificate(field, form, q);
    for (auto p : primes_in(p_min, p_max)) {
        PVerdict pv;
        for (const auto& [q, B] : v.certificates) {
            if (B != 0 && mpz_divisible_ui_p(B.get_mpz_t(), static_cast<unsigned long>(p)) == 0) {
                pv.status = PStatus::discarded;
                pv.q = q;
                pv.certificate = B;
                break;
            }
        }
        if (pv.status != PStatus::discarded) pv.status = form.cm ? PStatus::survivor_cm : PStatus::survivor_unknown;
        v.by_exponent[p] = pv;
    }
    return v;
}

bool cm_supported(const NewformRecord& form) { return form.cm && *form.cm == -8; }

CmDecision cm_criterion(const NewformRecord& form, std::int64_t p, std::optional<std::int64_t> ellenberg_threshold) {
    if (!cm_supported(form)) return CmDecision::keep;
    const std::int64_t r = mod(p, 8);
    if (r == 1 || r == 3) return CmDecision::discard_split_cartan;
    if (ellenberg_threshold && p > *ellenberg_threshold) return CmDecision::discard_ellenberg;
    return CmDecision::keep;
}

NewformRecord self_match_form(const FreyCurve& E, const std::vector<std::int64_t>& qs, const std::string& label) {
    NewformRecord f;
    f.label = label;
    f.level = 1;
    f.field_degree = 2;
    for (auto q : qs) {
        const TraceResult r = reduce_and_trace(E, q);
        if (r.reduction == Reduction::multiplicative) {
            f.ap[q] = {Integer(-(q + 1)), Integer(1)};
            continue;
        }
        if (r.reduction == Reduction::additive) throw Error("forms", "additive reduction at " + std::to_string(q));
        if (r.residue_degree == 1) {
            f.ap[q] = {Integer(-r.a), Integer(1)};
        } else {
            const Integer c = Integer(r.a + 2 * q);
            Integer s;
            if (exact_root(c, 2, s)) f.ap[q] = {Integer(-s), Integer(1)};
            else f.ap[q] = {Integer(-c), Integer(0), Integer(1)};
        }
    }
    return f;
}

}  // namespace qsieve
