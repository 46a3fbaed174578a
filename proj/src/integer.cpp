#include "moran/integer.hpp"

#include <stdexcept>

namespace moran {

Integer gcd_int(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm_int(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

bool divides(const Integer& d, const Integer& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

Integer pow_int(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

std::optional<Integer> exact_root(const Integer& n, unsigned long k) {
    if (n < 0 || k < 1)
        throw std::domain_error("exact_root: requires n >= 0 and k >= 1");
    Integer r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (exact)
        return r;
    return std::nullopt;
}

Integer pow_mod(const Integer& a, const Integer& e, const Integer& m) {
    if (m < 1)
        throw std::domain_error("pow_mod: modulus must be >= 1");
    Integer r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool is_prime(const Integer& n) {
    if (n < 2)
        return false;
    if (n < 4)
        return true; // 2, 3
    if (divides(2, n) || divides(3, n))
        return false;
    Integer i = 5;
    while (i * i <= n) {
        if (divides(i, n) || divides(i + 2, n))
            return false;
        i += 6;
    }
    return true;
}

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
    if (n < 1)
        throw std::domain_error("factorize: requires n >= 1");
    std::vector<std::pair<Integer, unsigned>> out;
    Integer rest = n;
    auto strip = [&](const Integer& p) {
        unsigned e = 0;
        while (divides(p, rest)) {
            rest /= p;
            ++e;
        }
        if (e > 0)
            out.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    Integer i = 5;
    while (i * i <= rest) {
        strip(i);
        strip(i + 2);
        i += 6;
    }
    if (rest > 1)
        out.emplace_back(rest, 1);
    return out;
}

PerfectPower perfect_power_decompose(const Integer& n) {
    if (n < 2)
        throw std::domain_error("perfect_power_decompose: requires n >= 2");
    // Largest conceivable exponent is floor(log2 n). Scanning downward and
    // returning the first exact root makes the exponent maximal, which in
    // turn means the base cannot be a perfect power.
    auto max_e = static_cast<unsigned long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1;
    for (unsigned long e = max_e; e >= 2; --e) {
        if (auto r = exact_root(n, e))
            return {*r, static_cast<unsigned>(e)};
    }
    return {n, 1};
}

Integer multiplicative_order(const Integer& a, const Integer& m) {
    if (m < 2)
        throw std::domain_error("multiplicative_order: modulus must be >= 2");
    if (gcd_int(a, m) != 1)
        throw std::domain_error("multiplicative_order: undefined for gcd(a, m) > 1");
    // The order divides Euler's totient; start from phi(m) and strip prime
    // factors while the power stays 1.
    Integer phi = 1;
    for (const auto& [p, e] : factorize(m))
        phi *= pow_int(p, e - 1) * (p - 1);
    Integer order = phi;
    for (const auto& [p, e] : factorize(phi)) {
        (void)e;
        while (divides(p, order) && pow_mod(a, order / p, m) == 1)
            order /= p;
    }
    return order;
}

unsigned long padic_valuation(const Integer& n, const Integer& d) {
    if (n == 0)
        throw std::domain_error("padic_valuation: undefined at n = 0");
    if (d < 2)
        throw std::domain_error("padic_valuation: requires d >= 2");
    Integer reduced;
    return mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
}

} // namespace moran
