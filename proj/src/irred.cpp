#include "qsieve/irred.hpp"

#include <algorithm>

namespace qsieve {

namespace {

// ε¹² − 1 by the binomial theorem in the {1, √d} basis; returns its norm.
Integer binomial_norm(const QuadInt& eps) {
    const auto [a2, b2] = eps.sqrt_coords2();  // ε = (a2 + b2√d)/2
    const Integer d = eps.d();
    Integer rational = 0, irrational = 0, choose = 1;
    for (unsigned k = 0; k <= 12; ++k) {
        Integer a_pow, b_pow, d_pow;
        mpz_pow_ui(a_pow.get_mpz_t(), a2.get_mpz_t(), 12 - k);
        mpz_pow_ui(b_pow.get_mpz_t(), b2.get_mpz_t(), k);
        mpz_pow_ui(d_pow.get_mpz_t(), d.get_mpz_t(), k / 2);
        const Integer term = choose * a_pow * b_pow * d_pow;
        (k % 2 == 0 ? rational : irrational) += term;
        choose = choose * (12 - k) / (k + 1);
    }
    // (rational + irrational·√d)/2¹² − 1
    Rational x(rational, Integer(4096)), y(irrational, Integer(4096));
    x.canonicalize();
    y.canonicalize();
    x -= 1;
    const Rational n = x * x - Rational(d) * y * y;
    if (n.get_den() != 1) throw Error("irred", "non-integral norm in binomial expansion");
    return n.get_num();
}

}  // namespace

Integer unit_lcm_bound(const QuadField& field) {
    const QuadInt eps = fundamental_unit(field).value;
    const QuadInt one = QuadInt::from_int(field.d, 1);
    const Integer n1 = abs((eps.pow(12) - one).norm());
    const Integer n2 = abs((eps.conjugate().pow(12) - one).norm());
    if (n1 != abs(binomial_norm(eps))) throw Error("irred", "expansion paths disagree for N(eps^12 - 1)");
    if (n1 == 0) throw Error("irred", "eps^12 = 1");
    return lcm(n1, n2);
}

Integer trace_resultant(std::int64_t q, int residue_degree, std::int64_t trace) {
    Integer qf;
    mpz_ui_pow_ui(qf.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(residue_degree));
    const ZPoly charpoly = {qf, Integer(-trace), Integer(1)};
    ZPoly x12(13, Integer(0));
    x12[0] = -1;
    x12[12] = 1;
    return resultant(charpoly, x12);
}

std::set<Integer> trace_resultants(std::int64_t q, int residue_degree, const std::set<std::int64_t>& traces) {
    std::set<Integer> out;
    for (auto t : traces) {
        const Integer r = trace_resultant(q, residue_degree, t);
        if (r == 0) throw Error("irred", "zero resultant for trace " + std::to_string(t));
        for (const auto& p : support(factor(r))) out.insert(p);
    }
    return out;
}

std::vector<std::int64_t> default_aux_primes(const QuadField& field) {
    std::vector<std::int64_t> aux;
    if (!field.ramified_odd_primes.empty()) aux.push_back(*field.ramified_odd_primes.begin());
    for (std::int64_t q = 5; aux.size() < (field.ramified_odd_primes.empty() ? 2u : 3u); q = next_prime(q))
        if (field.d % q != 0) aux.push_back(q);
    return aux;
}

IrredBound irreducible_outside(const QuadField& field, std::vector<std::int64_t> aux) {
    IrredBound out;
    out.d = field.d;
    out.unit_lcm = unit_lcm_bound(field);
    out.unit_lcm_factors = factor(out.unit_lcm);
    if (aux.empty()) aux = default_aux_primes(field);
    std::sort(aux.begin(), aux.end());
    aux.erase(std::unique(aux.begin(), aux.end()), aux.end());

    std::set<Integer> candidates = support(out.unit_lcm_factors);
    for (auto q : aux) {
        if (q == 2 || !is_prime(q)) throw Error("irred", "aux prime must be an odd prime, got " + std::to_string(q));
        const TraceSet ts = trace_set(field, q);
        AuxTraceData data;
        data.q = q;
        data.residue_degree = ts.residue_degree;
        data.traces = ts.good;
        data.multiplicative = ts.multiplicative;
        data.support.insert(q);
        for (auto t : ts.good) {
            const Integer r = trace_resultant(q, ts.residue_degree, t);
            const Factorization f = factor(r);
            data.resultants.emplace_back(t, f);
            for (const auto& p : support(f)) data.support.insert(p);
        }
        if (ts.multiplicative) {
            Integer qf;
            mpz_ui_pow_ui(qf.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(12 * ts.residue_degree));
            for (const auto& p : support(factor(qf - 1))) data.support.insert(p);
        }
        std::set<Integer> kept;
        for (const auto& p : candidates)
            if (data.support.count(p)) kept.insert(p);
        candidates = kept;
        out.aux_data.push_back(std::move(data));
    }
    out.excluded_primes = {2, 3};
    out.excluded_primes.insert(candidates.begin(), candidates.end());
    return out;
}

}  // namespace qsieve
