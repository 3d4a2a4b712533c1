#include "qsieve/hecke.hpp"

#include <sstream>

#include "qsieve/unitgenus.hpp"

namespace qsieve {

std::string to_string(LocalCharacter c) {
    switch (c) {
        case LocalCharacter::trivial: return "trivial";
        case LocalCharacter::quadratic_legendre: return "quadratic_legendre";
        case LocalCharacter::order4: return "order4";
        case LocalCharacter::delta_minus1: return "delta_minus1";
    }
    return "?";
}

int delta_minus1(std::int64_t n) { return mod(n, 4) == 1 ? 0 : 2; }
int delta_2(std::int64_t n) {
    const auto r = mod(n, 8);
    return (r == 1 || r == 7) ? 0 : 2;
}
int delta_minus2(std::int64_t n) {
    const auto r = mod(n, 8);
    return (r == 1 || r == 3) ? 0 : 2;
}

namespace {

int legendre_exp(std::int64_t n, std::int64_t p) {
    const int l = legendre(n, p);
    if (l == 0) throw Error("hecke", "argument not coprime to " + std::to_string(p));
    return l == 1 ? 0 : 2;
}

int discrete_log_mod4(std::int64_t n, std::int64_t g, std::int64_t p) {
    const std::int64_t target = mod(n, p);
    if (target == 0) throw Error("hecke", "argument not coprime to " + std::to_string(p));
    std::int64_t x = 1;
    for (std::int64_t k = 0; k < p - 1; ++k) {
        if (x == target) return static_cast<int>(k % 4);
        x = x * g % p;
    }
    throw Error("hecke", "discrete log failed");
}

}  // namespace

std::string NebentypusSpec::fixed_field() const {
    if (order == 1) return "Q";
    std::string q = "Q(sqrt(" + std::to_string(quadratic_subfield) + "))";
    return order == 2 ? q : "cyclic quartic field containing " + q;
}

NebentypusSpec build_nebentypus(const QuadField& field) {
    NebentypusSpec s;
    s.d = field.d;
    const auto n3 = field.count(3), n5 = field.count(5), n7 = field.count(7);
    s.two_exponent = (n3 + n5) % 2 == 1 ? 2 : 0;
    s.printed_two_exponent = (n5 + n7) % 2 == 1 ? 2 : 0;
    Integer odd = 1;
    for (auto p : field.Q.at(3)) {
        s.local_components[p] = LocalCharacter::quadratic_legendre;
        odd *= p;
    }
    for (auto p : field.Q.at(5)) {
        s.local_components[p] = LocalCharacter::order4;
        s.order4_root[p] = primitive_root(p);
        odd *= p;
    }
    if (s.two_exponent == 2) s.local_components[2] = LocalCharacter::delta_minus1;
    s.conductor = odd * (s.two_exponent == 2 ? 4 : 1);
    s.printed_conductor = odd * (s.printed_two_exponent == 2 ? 4 : 1);
    s.order = n5 > 0 ? 4 : (n3 > 0 ? 2 : 1);
    s.fixed_field_degree = s.order;
    std::int64_t m = 1;
    if (s.order == 2)
        for (auto p : field.Q.at(3)) m *= p;
    if (s.order == 4)
        for (auto p : field.Q.at(5)) m *= p;
    s.quadratic_subfield = m;
    return s;
}

int eval_nebentypus_at_two(const NebentypusSpec& eps, std::int64_t n) {
    if (n % 2 == 0) throw Error("hecke", "even argument at 2");
    return eps.two_exponent == 2 ? delta_minus1(n) : 0;
}

int eval_nebentypus_at(const NebentypusSpec& eps, std::int64_t p, std::int64_t n) {
    auto it = eps.local_components.find(p);
    if (it == eps.local_components.end()) return 0;
    if (it->second == LocalCharacter::quadratic_legendre) return legendre_exp(n, p);
    return discrete_log_mod4(n, eps.order4_root.at(p), p);
}

int eval_nebentypus(const NebentypusSpec& eps, std::int64_t n) {
    int v = 0;
    for (const auto& [p, kind] : eps.local_components) {
        if (p == 2) v += eval_nebentypus_at_two(eps, n);
        else v += eval_nebentypus_at(eps, p, n);
    }
    return v % 4;
}

// ---------------------------------------------------------------------- χ

namespace {

int eval_on_ring(const ChiLocalData& chi, ResidueRing::Element u) {
    const ResidueRing& R = *chi.ring;
    std::vector<ResidueRing::Element> gens;
    for (const auto& g : chi.generators) gens.push_back(R.reduce(g.element));
    const ExponentVector e = decompose(R, u, gens);
    int v = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) v += chi.generators[i].value * e.exponents[i];
    return v % 4;
}

int computed_conductor(const ChiLocalData& chi, const QuadField& field) {
    if (chi.split_ring) {
        const ResidueRing& R = *chi.split_ring;
        for (int k = 0; k <= 3; ++k) {
            const auto Rk = k == 0 ? std::optional<ResidueRing>{}
                                   : ResidueRing::build(field, Modulus::prime_above_two(k, 0));
            bool trivial = true;
            for (auto u : R.units())
                if ((!Rk || Rk->reduce(R.representative(u)) == Rk->one()) && delta_minus2(R.norm(u)) != 0)
                    trivial = false;
            if (trivial) return k;
        }
        throw Error("hecke", "conductor exceeds the split ring");
    }
    const ResidueRing& R = *chi.ring;
    const int kmax = field.two_splitting == Splitting::ramified ? 6 : 3;
    for (int k = 0; k <= kmax; ++k) {
        const auto Rk = k == 0 ? std::optional<ResidueRing>{}
                               : ResidueRing::build(field, Modulus::prime_above_two(k, 0));
        bool trivial = true;
        for (auto u : R.units()) {
            if (Rk && Rk->reduce(R.representative(u)) != Rk->one()) continue;
            if (eval_on_ring(chi, u) != 0) {
                trivial = false;
                break;
            }
        }
        if (trivial) return k;
    }
    throw Error("hecke", "conductor exceeds O/8");
}

}  // namespace

ChiLocalData build_chi_local(const QuadField& field) {
    ChiLocalData chi;
    const std::int64_t d = field.d;
    chi.d = d;
    chi.nebentypus = build_nebentypus(field);
    for (int i : {1, 3, 5, 7})
        for (auto p : field.Q.at(i)) {
            chi.odd_components[p] = i == 3 ? "trivial" : (i == 5 ? "eps_p*delta_p" : "delta_p");
            if (i != 3) chi.odd_conductor *= p;
        }
    {
        std::ostringstream os;
        os << "chi is unramified outside 2";
        for (int i : {1, 5, 7})
            for (auto p : field.Q.at(i)) os << '*' << p;
        os << "; alternative reading: ramified at the odd primes of d";
        chi.ramification_note = os.str();
    }

    const auto n35 = field.count(3) + field.count(5);
    const bool odd_count = n35 % 2 == 1;
    auto elt = [&](std::int64_t a, std::int64_t b) { return QuadInt::from_sqrt(d, a, b); };

    if (mod(d, 8) == 1) {
        chi.two_case = "d = 1 mod 8";
        chi.split_ring = ResidueRing::build(field, Modulus::prime_above_two(3, 0));
        chi.conductor_exponent = 3;
    } else {
        chi.ring = ResidueRing::build(field, Modulus::two_power(3));
        const ResidueRing& R = *chi.ring;
        if (mod(d, 8) == 5) {
            chi.two_case = "d = 5 mod 8";
            ResidueRing::Element z = R.one();
            for (auto u : R.units())
                if (u != R.one() && R.pow(u, 3) == R.one()) {
                    z = u;
                    break;
                }
            chi.generators = {{"zeta3", R.representative(z), 0},
                              {"sqrt(d)", elt(0, 1), 1},
                              {"3+2*sqrt(d)", elt(3, 2), 0},
                              {"-1", elt(-1, 0), 0}};
            chi.conductor_exponent = 3;
        } else if (mod(d, 4) == 3) {
            const std::int64_t t = mod(d, 16);
            chi.two_case = "d = " + std::to_string(t) + " mod 16";
            const bool minus_one = t == 3 || t == 11;
            const int vs = (t == 3 || t == 7) ? 2 : 0;
            chi.generators = {{"sqrt(d)", elt(0, 1), vs},
                              {"1+2*sqrt(d)", elt(1, 2), 0},
                              {minus_one ? "-1" : "5", elt(minus_one ? -1 : 5, 0), 2}};
            chi.conductor_exponent = 5;
        } else {
            const std::int64_t t = mod(d, 16);
            chi.two_case = "d = " + std::to_string(mod(d, 8)) + " mod 8, #Q3+#Q5 " + (odd_count ? "odd" : "even");
            int v_pi = 0, v_m1 = 0;
            if (mod(d, 8) == 6) {
                v_pi = odd_count ? 1 : 0;
                v_m1 = odd_count ? 2 : 0;
            } else {
                v_pi = odd_count ? 1 : 0;
                v_m1 = odd_count ? 0 : 2;
            }
            chi.generators = {{"1+sqrt(d)", elt(1, 1), v_pi}, {"-1", elt(-1, 0), v_m1}, {"5", elt(5, 0), 0}};
            switch (t) {
                case 14: chi.conductor_exponent = 0; break;
                case 6: chi.conductor_exponent = 4; break;
                case 2: chi.conductor_exponent = 3; break;
                default: chi.conductor_exponent = 4; break;  // 10
            }
        }
        std::vector<ResidueRing::Element> gens;
        for (const auto& g : chi.generators) gens.push_back(R.reduce(g.element));
        if (!generates_units(R, gens)) throw Error("hecke", "case generators do not generate (O/8)^x");
    }
    chi.conductor_exponent_computed = computed_conductor(chi, field);
    return chi;
}

int eval_chi2(const ChiLocalData& chi, const QuadInt& u) {
    if (chi.split_ring) {
        const auto e = chi.split_ring->reduce(u);
        if (!chi.split_ring->is_unit(e)) throw Error("hecke", "chi_2 needs a unit at 2");
        return delta_minus2(chi.split_ring->norm(e));
    }
    const auto e = chi.ring->reduce(u);
    if (!chi.ring->is_unit(e)) throw Error("hecke", "chi_2 needs a unit at 2");
    return eval_on_ring(chi, e);
}

int eval_chi_odd(const ChiLocalData& chi, std::int64_t p, const QuadInt& u) {
    auto it = chi.odd_components.find(p);
    if (it == chi.odd_components.end()) return 0;
    const QuadField field = make_field(chi.d);
    const PrimeIdeal P = splitting_and_trace_data(field, p).primes.front();
    const std::int64_t img = reduce_mod_prime(u, P);
    if (img == 0) throw Error("hecke", "argument not a unit at " + std::to_string(p));
    if (it->second == "trivial") return 0;
    int v = legendre_exp(img, p);
    if (it->second == "eps_p*delta_p") v += eval_nebentypus_at(chi.nebentypus, p, img);
    return v % 4;
}

bool verify_chi2_restriction(const QuadField& field) {
    const ChiLocalData chi = build_chi_local(field);
    const int v2D = valuation(Integer(field.disc), 2);
    const auto n57 = static_cast<int>(field.count(5) + field.count(7));
    for (std::int64_t n : {3, 5, 7}) {
        const int lhs = eval_chi2(chi, QuadInt::from_int(field.d, n));
        const int rhs = ((v2D + 1) * delta_2(n) + (n57 + 1) * delta_minus1(n)) % 4;
        if (lhs != rhs) return false;
    }
    return true;
}

CompatibilityReport verify_compatibility(const QuadField& field) {
    CompatibilityReport rep;
    const ChiLocalData chi = build_chi_local(field);
    const QuadInt minus_one = QuadInt::from_int(field.d, -1);
    int at_m1 = eval_chi2(chi, minus_one) + 2;  // archimedean sign at the second place
    for (auto p : field.ramified_odd_primes) at_m1 += eval_chi_odd(chi, p, minus_one);
    rep.at_minus_one = at_m1 % 4 == 0;

    const FundamentalUnit u = fundamental_unit(field);
    if (u.norm == -1) {
        rep.epsilon_skipped = true;
        rep.at_epsilon = true;
        return rep;
    }
    const UnitGenusReport g = classify_unit(field, u);
    rep.chi2_epsilon = eval_chi2(chi, g.eps);
    for (auto p : g.P_minus)
        if (p % 8 == 5 || p % 8 == 7) ++rep.minus_count;
    rep.at_epsilon = (rep.chi2_epsilon + 2 * rep.minus_count) % 4 == 0;
    return rep;
}

}  // namespace qsieve
