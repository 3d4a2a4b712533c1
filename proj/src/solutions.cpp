#include "qsieve/solutions.hpp"

#include <algorithm>
#include <numeric>

namespace qsieve {

namespace {

Integer quartic_form(const Integer& A, const Integer& B, std::int64_t d) { return A * A * A * A - Integer(d) * B * B; }

void add_orbit(std::vector<SolutionRecord>& out, SolutionRecord s) {
    for (int sa : {1, -1})
        for (int sb : {1, -1}) {
            if ((sa < 0 && s.A == 0) || (sb < 0 && s.B == 0)) continue;
            SolutionRecord r = s;
            r.A = sa * s.A;
            r.B = sb * s.B;
            out.push_back(r);
        }
}

void order(std::vector<SolutionRecord>& v) {
    std::sort(v.begin(), v.end(), [](const SolutionRecord& x, const SolutionRecord& y) {
        if (x.A != y.A) return x.A < y.A;
        if (x.B != y.B) return x.B < y.B;
        return x.C < y.C;
    });
}

}  // namespace

bool verify_solution(const SolutionRecord& s) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), s.A.get_mpz_t(), s.B.get_mpz_t());
    if (g != 1) return false;
    const Integer lhs = quartic_form(s.A, s.B, s.d);
    if (!s.p) return abs(s.C) == 1 && lhs == s.C;
    Integer rhs;
    mpz_pow_ui(rhs.get_mpz_t(), s.C.get_mpz_t(), static_cast<unsigned long>(*s.p));
    return lhs == rhs;
}

std::vector<SolutionRecord> search_c_pm1(std::int64_t d, std::int64_t H) {
    if (H < 1) throw Error("solutions", "search bound H must be >= 1");
    std::vector<SolutionRecord> out;
    for (std::int64_t a = 0; a <= H; ++a) {
        const Integer A = a, A4 = A * A * A * A;
        for (int c : {1, -1}) {
            // d·B² = A⁴ − c
            const Integer num = A4 - c;
            if (num < 0 || num % d != 0) continue;
            Integer B;
            if (!exact_root(num / d, 2, B) || B > H) continue;
            Integer g;
            mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
            if (g != 1) continue;
            add_orbit(out, SolutionRecord{A, B, Integer(c), std::nullopt, d, true});
        }
    }
    order(out);
    for (const auto& s : out)
        if (!verify_solution(s)) throw Error("solutions", "re-verification failed");
    return out;
}

std::vector<CatalogueEntry> reproduce_catalogue(std::int64_t H) {
    if (H < 20) throw Error("solutions", "catalogue needs H >= 20");
    std::vector<CatalogueEntry> out;
    for (std::int64_t d = 2; d < 20; ++d) {
        if (!is_squarefree(d)) continue;
        for (const auto& s : search_c_pm1(d, H))
            if (s.A > 0 && s.B > 0) out.push_back({s.A.get_si(), s.B.get_si(), s.C.get_si(), d});
    }
    return out;
}

std::vector<SolutionRecord> search_general(std::int64_t d, std::int64_t p, std::int64_t H) {
    if (p < 3 || !is_prime(p)) throw Error("solutions", "exponent must be an odd prime");
    if (H < 1) throw Error("solutions", "search bound H must be >= 1");
    std::vector<SolutionRecord> out;
    for (std::int64_t a = 0; a <= H; ++a)
        for (std::int64_t b = 0; b <= H; ++b) {
            if (std::gcd(a, b) != 1) continue;
            const Integer A = a, B = b;
            const Integer value = quartic_form(A, B, d);
            if (abs(value) == 1) {
                add_orbit(out, SolutionRecord{A, B, value, std::nullopt, d, true});
                continue;
            }
            Integer C;
            if (exact_root(value, static_cast<unsigned long>(p), C)) add_orbit(out, SolutionRecord{A, B, C, p, d, false});
        }
    order(out);
    for (const auto& s : out)
        if (!verify_solution(s)) throw Error("solutions", "re-verification failed");
    return out;
}

}  // namespace qsieve
