#include "qsieve/unitgenus.hpp"

#include <algorithm>
#include <sstream>

namespace qsieve {

std::string to_string(GenusCase g) { return g == GenusCase::d0 ? "d0" : "two_d0"; }

namespace {

int v_p2(const QuadInt& z) { return valuation(abs(z.norm()), 2); }

}  // namespace

UnitGenusReport classify_unit(const QuadField& field, const FundamentalUnit& unit) {
    const QuadInt& u = unit.value;
    const Integer n = u.norm();
    if (n == -1) throw Error("unitgenus", "norm -1 unit");
    if (n != 1) throw Error("unitgenus", "not a unit");

    UnitGenusReport r;
    r.d = field.d;
    r.eps = u.totally_positive() ? u : -u;
    for (std::int64_t p : field.ramified_odd_primes) {
        const PrimeIdeal P = splitting_and_trace_data(field, p).primes.front();
        const std::int64_t img = reduce_mod_prime(r.eps, P);
        if (img == 1) r.P_plus.insert(p);
        else if (img == p - 1) r.P_minus.insert(p);
        else throw Error("unitgenus", "unit is not ±1 modulo the prime above " + std::to_string(p));
        if (img == p - 1) r.d0 *= p;
    }

    auto s1 = (Integer(r.d0) * r.eps).sqrt();
    auto s2 = (Integer(2 * r.d0) * r.eps).sqrt();
    if (s1.has_value() == s2.has_value())
        throw Error("unitgenus", "square-class test is ambiguous for d = " + std::to_string(field.d));
    r.genus_case = s1 ? GenusCase::d0 : GenusCase::two_d0;
    r.square_root = s1 ? *s1 : *s2;
    if (r.genus_case == GenusCase::d0 && r.d0 == 1)
        throw Error("unitgenus", "K(sqrt(eps)) = K, impossible for a fundamental unit");

    if (mod(field.d, 4) == 2) {
        const QuadInt one = QuadInt::from_int(field.d, 1);
        const int vp = v_p2(r.eps + one), vm = v_p2(r.eps - one);
        r.eps_mod_p2cubed = vp >= 3;
        const bool crit = vp >= 3 && vm == 2;
        r.valuation_consistent = crit == (r.genus_case == GenusCase::two_d0);
    }
    return r;
}

bool verify_genus_congruences(const QuadField& field, const UnitGenusReport& report) {
    std::int64_t prod = 1;
    for (std::int64_t p : field.ramified_odd_primes) {
        const bool minus = report.P_minus.count(p) > 0, plus = report.P_plus.count(p) > 0;
        if (minus == plus) return false;
        const PrimeIdeal P = splitting_and_trace_data(field, p).primes.front();
        const std::int64_t img = reduce_mod_prime(report.eps, P);
        if (minus && img != p - 1) return false;
        if (plus && img != 1) return false;
        if (minus) prod *= p;
    }
    return prod == report.d0 && report.P_minus.size() + report.P_plus.size() == field.ramified_odd_primes.size();
}

// ------------------------------------------------------------------ tables

namespace {

using Element = ResidueRing::Element;

bool is_square_in(const ResidueRing& ring, Element e) {
    for (Element w = 0; w < ring.size(); ++w)
        if (ring.mul(w, w) == e) return true;
    return false;
}

// d0 mod 8 over odd d0 mod 16 with β²·d0 ≡ 2ε (mod 16) for some β with v_𝔭(β) = 1.
std::set<int> raw_d0(const ResidueRing& r16, const QuadInt& eps) {
    const Element target = r16.reduce(Integer(2) * eps);
    std::set<int> out;
    for (Element b = 0; b < r16.size(); ++b) {
        if (r16.norm(b) % 4 != 2) continue;
        const Element b2 = r16.mul(b, b);
        for (int d0 = 1; d0 < 16; d0 += 2)
            if (r16.mul(b2, r16.reduce(d0)) == target) out.insert(d0 % 8);
    }
    return out;
}

bool delta_minus2_constant(const std::set<int>& s) {
    std::set<bool> vals;
    for (int n : s) vals.insert(n % 8 == 1 || n % 8 == 3);
    return vals.size() <= 1;
}

std::vector<TableRow> table_three_mod_four(int t) {
    const QuadField K = make_field(t);
    const ResidueRing r4 = ResidueRing::build(K, Modulus::two_power(2));
    const ResidueRing r8 = ResidueRing::build(K, Modulus::two_power(3));
    const ResidueRing r16 = ResidueRing::build(K, Modulus::two_power(4));
    const std::int64_t g3 = (t == 3 || t == 11) ? -1 : 5;
    const std::vector<Element> gens = {r8.reduce(QuadInt::sqrt_d(t)), r8.reduce(QuadInt::from_sqrt(t, 1, 2)),
                                       r8.reduce(g3)};
    if (!generates_units(r8, gens)) throw Error("unitgenus", "table generators do not generate (O/8)^x");
    const std::set<int> norm_set = norm_classes_with_constraint(r16, NormForm::two_n_equals_norm);

    std::vector<TableRow> rows;
    const int oa = static_cast<int>(r8.order(gens[0])), ob = static_cast<int>(r8.order(gens[1])),
              oc = static_cast<int>(r8.order(gens[2]));
    for (int a = 0; a < oa; ++a)
        for (int b = 0; b < ob; ++b)
            for (int c = 0; c < oc; ++c) {
                const ExponentVector ev{{a, b, c}};
                const Element e = evaluate(r8, ev, gens);
                if (r8.norm(e) % 8 != 1) continue;
                const QuadInt rep = r8.representative(e);
                if (is_square_in(r4, r4.reduce(rep))) continue;
                TableRow row;
                row.dtilde_class = t;
                row.exponents = ev;
                row.eps_class = ev.str();
                row.raw = raw_d0(r16, rep);
                std::set_intersection(row.raw.begin(), row.raw.end(), norm_set.begin(), norm_set.end(),
                                      std::inserter(row.refined, row.refined.end()));
                row.d0_residues = delta_minus2_constant(row.raw) ? row.raw : row.refined;
                if (!row.d0_residues.empty()) rows.push_back(row);
            }
    return rows;
}

std::string eps_label_even(const ExponentVector& ev) {
    std::ostringstream os;
    if (ev.exponents[0]) os << '-';
    if (ev.exponents[1]) os << '5';
    if (ev.exponents[2]) os << "(1+sqrt(d))^" << ev.exponents[2];
    else if (!ev.exponents[1]) os << '1';
    return os.str();
}

std::vector<TableRow> table_even(int t) {
    const QuadField K = make_field(t);
    const ResidueRing r8 = ResidueRing::build(K, Modulus::two_power(3));
    const ResidueRing r16 = ResidueRing::build(K, Modulus::two_power(4));
    const std::set<int> norm_set = norm_classes_with_constraint(r16, NormForm::two_n_equals_norm);
    if (t == 14) {
        TableRow row;
        row.dtilde_class = 14;
        row.eps_class = "norm-constraint";
        row.d0_residues = row.refined = norm_set;
        row.note = "no table for this class; only the norm condition on d0 is used";
        return {row};
    }
    const std::vector<Element> gens = {r8.reduce(-1), r8.reduce(5), r8.reduce(QuadInt::from_sqrt(t, 1, 1))};
    if (!generates_units(r8, gens)) throw Error("unitgenus", "table generators do not generate (O/8)^x");
    const QuadInt one = QuadInt::from_int(t, 1);

    std::vector<TableRow> rows;
    for (int c1 = 0; c1 < static_cast<int>(r8.order(gens[0])); ++c1)
        for (int c2 = 0; c2 < static_cast<int>(r8.order(gens[1])); ++c2)
            for (int k = 0; k < static_cast<int>(r8.order(gens[2])); ++k) {
                const ExponentVector ev{{c1, c2, k}};
                const Element e = evaluate(r8, ev, gens);
                if (r8.norm(e) % 8 != 1) continue;
                const QuadInt rep = r8.representative(e);
                if (valuation(abs((rep + one).norm()), 2) < 3) continue;  // ε ≡ −1 mod 𝔭³
                TableRow row;
                row.dtilde_class = t;
                row.exponents = ev;
                row.eps_class = eps_label_even(ev);
                row.raw = raw_d0(r16, rep);
                std::set_intersection(row.raw.begin(), row.raw.end(), norm_set.begin(), norm_set.end(),
                                      std::inserter(row.refined, row.refined.end()));
                row.d0_residues = row.refined;
                if (!row.d0_residues.empty()) rows.push_back(row);
            }
    std::stable_sort(rows.begin(), rows.end(), [](const TableRow& x, const TableRow& y) {
        return x.exponents.exponents[2] < y.exponents.exponents[2];
    });
    return rows;
}

}  // namespace

std::vector<TableRow> regenerate_table(int dtilde_class) {
    switch (dtilde_class) {
        case 3: case 7: case 11: case 15: return table_three_mod_four(dtilde_class);
        case 2: case 6: case 10: case 14: return table_even(dtilde_class);
        default:
            throw Error("unitgenus", "class " + std::to_string(dtilde_class) + " mod 16 is not covered");
    }
}

std::vector<TableRow> regenerate_all_tables() {
    std::vector<TableRow> all;
    for (int t : {3, 7, 11, 15, 2, 10, 6}) {
        auto rows = regenerate_table(t);
        all.insert(all.end(), rows.begin(), rows.end());
    }
    return all;
}

std::string format_residues(const std::set<int>& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int n : s) {
        os << (first ? "" : ",") << n;
        first = false;
    }
    os << '}';
    return os.str();
}

std::string tables_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "dtilde_class,eps_class,d0_residues\n";
    for (const auto& r : rows)
        os << r.dtilde_class << ",\"" << r.eps_class << "\",\"" << format_residues(r.d0_residues) << "\"\n";
    return os.str();
}

}  // namespace qsieve
