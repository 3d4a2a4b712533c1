#include "qsieve/residue.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace qsieve {

namespace {

std::int64_t reduce_integer(const Integer& v, std::int64_t m) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(m));
    return r.get_si();
}

std::int64_t ipow2(int k) { return std::int64_t{1} << k; }

}  // namespace

std::string Modulus::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::two_power: os << "2^" << k; break;
        case Kind::prime_above_two: os << "P2^" << k << (which ? "'" : ""); break;
        case Kind::odd_ramified: os << "P" << p; break;
    }
    return os.str();
}

ResidueRing ResidueRing::build(const QuadField& field, const Modulus& modulus) {
    ResidueRing R;
    R.field_ = field;
    R.modulus_ = modulus;
    if (modulus.k < 1 || modulus.k > 12) throw Error("residue", "exponent out of range: " + modulus.str());
    if (modulus.kind == Modulus::Kind::prime_above_two && field.two_splitting == Splitting::inert)
        R.modulus_.kind = Modulus::Kind::two_power;  // 𝔭 = (2)

    const int k = R.modulus_.k;
    switch (R.modulus_.kind) {
        case Modulus::Kind::two_power:
            R.lift_ = ipow2(k);
            R.size_ = static_cast<std::size_t>(R.lift_ * R.lift_);
            R.norm_modulus_ = ipow2(k);
            break;
        case Modulus::Kind::prime_above_two:
            if (field.two_splitting == Splitting::ramified) {
                R.lift_ = ipow2((k + 1) / 2);
                R.size_ = static_cast<std::size_t>(ipow2(k));
                R.norm_modulus_ = ipow2(k / 2 + 1);
            } else {
                // split: O/𝔭^k = Z/2^k via the root of ω² - ω - K lifting `which`
                R.lift_ = ipow2(k);
                R.size_ = static_cast<std::size_t>(R.lift_);
                R.norm_modulus_ = R.lift_;
                const std::int64_t K = mod(field.omega_k(), R.lift_);
                bool found = false;
                for (std::int64_t r = modulus.which & 1; r < R.lift_; r += 2) {
                    if (mod(r * r - r - K, R.lift_) == 0) {
                        R.split_root_ = r;
                        found = true;
                        break;
                    }
                }
                if (!found) throw Error("residue", "no root of the ω polynomial mod 2^k");
            }
            break;
        case Modulus::Kind::odd_ramified: {
            const std::int64_t p = modulus.p;
            if (p < 3 || !is_prime(p) || field.d % p != 0)
                throw Error("residue", std::to_string(p) + " is not an odd ramified prime");
            R.lift_ = p;
            R.size_ = static_cast<std::size_t>(p);
            R.norm_modulus_ = p;
            R.split_root_ = *splitting_and_trace_data(field, p).primes.front().omega_image;
            break;
        }
    }

    R.unit_flag_.assign(R.size_, false);
    for (Element e = 0; e < R.size_; ++e) {
        bool unit = false;
        switch (R.modulus_.kind) {
            case Modulus::Kind::two_power:
                unit = R.norm(e) % 2 != 0;
                break;
            case Modulus::Kind::prime_above_two:
                unit = field.two_splitting == Splitting::ramified ? R.norm(e) % 2 != 0 : e % 2 != 0;
                break;
            case Modulus::Kind::odd_ramified:
                unit = e != 0;
                break;
        }
        R.unit_flag_[e] = unit;
        if (unit) R.units_.push_back(e);
    }
    R.one_ = R.key(1, 0);
    return R;
}

ResidueRing::Element ResidueRing::key(std::int64_t x, std::int64_t y) const {
    switch (modulus_.kind) {
        case Modulus::Kind::two_power:
            return static_cast<Element>(mod(x, lift_) * lift_ + mod(y, lift_));
        case Modulus::Kind::prime_above_two:
            if (field_.two_splitting == Splitting::ramified) {
                // z = a + b·π with π = √d (d ≡ 2) or 1 + √d (d ≡ 3); 𝔭^k ↔ a ≡ 0 (2^⌈k/2⌉), b ≡ 0 (2^⌊k/2⌋)
                const std::int64_t lo = ipow2(modulus_.k / 2);
                std::int64_t a = x, b = y;
                if (mod(field_.d, 4) == 3) a = x - y;
                return static_cast<Element>(mod(a, lift_) * lo + mod(b, lo));
            }
            [[fallthrough]];
        case Modulus::Kind::odd_ramified:
            return static_cast<Element>(mod(mod(x, lift_) + mod(y, lift_) * split_root_, lift_));
    }
    return 0;
}

ResidueRing::Pair ResidueRing::coords(Element e) const {
    switch (modulus_.kind) {
        case Modulus::Kind::two_power:
            return {e / lift_, e % lift_};
        case Modulus::Kind::prime_above_two:
            if (field_.two_splitting == Splitting::ramified) {
                const std::int64_t lo = ipow2(modulus_.k / 2);
                std::int64_t a = e / lo, b = e % lo;
                if (mod(field_.d, 4) == 3) return {a + b, b};
                return {a, b};
            }
            [[fallthrough]];
        case Modulus::Kind::odd_ramified:
            return {static_cast<std::int64_t>(e), 0};
    }
    return {0, 0};
}

ResidueRing::Element ResidueRing::reduce(const QuadInt& z) const {
    if (z.d() != field_.d) throw Error("residue", "element from a different field");
    return key(reduce_integer(z.x(), lift_), reduce_integer(z.y(), lift_));
}

ResidueRing::Element ResidueRing::reduce(std::int64_t n) const { return key(mod(n, lift_), 0); }

QuadInt ResidueRing::representative(Element e) const {
    auto [x, y] = coords(e);
    return QuadInt(field_.d, x, y);
}

ResidueRing::Element ResidueRing::mul(Element a, Element b) const {
    auto [x1, y1] = coords(a);
    auto [x2, y2] = coords(b);
    const std::int64_t K = mod(field_.omega_k(), lift_);
    const std::int64_t yy = mod(y1 * y2, lift_);
    std::int64_t x = x1 * x2 + K * yy;
    std::int64_t y = x1 * y2 + y1 * x2;
    if (field_.half_integral()) y += yy;
    return key(mod(x, lift_), mod(y, lift_));
}

ResidueRing::Element ResidueRing::add(Element a, Element b) const {
    auto [x1, y1] = coords(a);
    auto [x2, y2] = coords(b);
    return key(x1 + x2, y1 + y2);
}

ResidueRing::Element ResidueRing::pow(Element a, unsigned long e) const {
    Element r = one_, b = a;
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::size_t ResidueRing::order(Element u) const {
    if (!is_unit(u)) throw Error("residue", "order of a non-unit");
    std::size_t n = 1;
    for (Element x = u; x != one_; x = mul(x, u)) ++n;
    return n;
}

std::int64_t ResidueRing::norm(Element e) const {
    auto [x, y] = coords(e);
    switch (modulus_.kind) {
        case Modulus::Kind::prime_above_two:
            if (field_.two_splitting != Splitting::ramified) return static_cast<std::int64_t>(e);
            break;
        case Modulus::Kind::odd_ramified:
            return mod(x * x, norm_modulus_);
        default:
            break;
    }
    const std::int64_t K = field_.omega_k();
    const std::int64_t n = field_.half_integral() ? x * x + x * y - mod(K, norm_modulus_) * y * y
                                                  : x * x - mod(K, norm_modulus_) * y * y;
    return mod(n, norm_modulus_);
}

std::vector<ResidueRing::Element> ResidueRing::closure(const std::vector<Element>& gens) const {
    std::vector<bool> seen(size_, false);
    std::deque<Element> todo{one_};
    seen[one_] = true;
    while (!todo.empty()) {
        Element x = todo.front();
        todo.pop_front();
        for (Element g : gens) {
            Element y = mul(x, g);
            if (!seen[y]) {
                seen[y] = true;
                todo.push_back(y);
            }
        }
    }
    std::vector<Element> out;
    for (Element e = 0; e < size_; ++e)
        if (seen[e]) out.push_back(e);
    return out;
}

std::string ExponentVector::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < exponents.size(); ++i) os << (i ? "," : "") << exponents[i];
    os << ')';
    return os.str();
}

bool generates_units(const ResidueRing& ring, const std::vector<ResidueRing::Element>& gens) {
    for (auto g : gens)
        if (!ring.is_unit(g)) return false;
    return ring.closure(gens).size() == ring.units().size();
}

ResidueRing::Element evaluate(const ResidueRing& ring, const ExponentVector& e,
                              const std::vector<ResidueRing::Element>& gens) {
    if (e.exponents.size() != gens.size()) throw Error("residue", "exponent vector length mismatch");
    ResidueRing::Element r = ring.one();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        int x = e.exponents[i];
        if (x < 0) throw Error("residue", "negative exponent");
        r = ring.mul(r, ring.pow(gens[i], static_cast<unsigned long>(x)));
    }
    return r;
}

ExponentVector decompose(const ResidueRing& ring, ResidueRing::Element u,
                         const std::vector<ResidueRing::Element>& gens) {
    if (!ring.is_unit(u)) throw Error("residue", "cannot decompose a non-unit");
    if (!generates_units(ring, gens)) throw Error("residue", "not generated");
    std::vector<int> ord;
    for (auto g : gens) ord.push_back(static_cast<int>(ring.order(g)));
    ExponentVector e{std::vector<int>(gens.size(), 0)};
    while (true) {
        if (evaluate(ring, e, gens) == u) return e;
        // odometer, last index fastest
        std::size_t i = gens.size();
        while (i > 0) {
            --i;
            if (++e.exponents[i] < ord[i]) break;
            e.exponents[i] = 0;
            if (i == 0) throw Error("residue", "not generated");
        }
        if (gens.empty()) throw Error("residue", "not generated");
    }
}

std::set<int> norm_classes_with_constraint(const ResidueRing& ring, NormForm form) {
    if (ring.modulus().kind != Modulus::Kind::two_power || ring.modulus().k < 4)
        throw Error("residue", "norm classes need O/2^k with k >= 4");
    std::set<int> out;
    for (ResidueRing::Element e = 0; e < ring.size(); ++e) {
        const std::int64_t n = ring.norm(e) % 16;
        if (form == NormForm::n_equals_norm && n % 2 == 1) out.insert(static_cast<int>(n % 8));
        if (form == NormForm::two_n_equals_norm && n % 4 == 2) out.insert(static_cast<int>((n / 2) % 8));
    }
    return out;
}

}  // namespace qsieve
