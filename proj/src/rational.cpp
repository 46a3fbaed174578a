#include "moran/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace moran {

Rational::Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::pow(unsigned long e) const {
    Rational r;
    mpz_pow_ui(mpq_numref(r.v_.get_mpq_t()), mpq_numref(v_.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.v_.get_mpq_t()), mpq_denref(v_.get_mpq_t()), e);
    return r; // powers of a canonical fraction stay canonical
}

std::string Rational::str() const {
    return v_.get_str();
}

std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty())
        return std::nullopt;
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s[0] == '+' || s[0] == '-'))
            s.remove_prefix(1);
        if (s.empty())
            return false;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text))
            return std::nullopt;
        return Rational(Integer(std::string(text)));
    }
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        return std::nullopt;
    Integer d{std::string(den)};
    if (d == 0)
        return std::nullopt;
    return Rational(Integer(std::string(num)), d);
}

std::size_t Rational::hash() const {
    auto mix = [](std::size_t h, const mpz_class& z) {
        std::size_t n = mpz_size(z.get_mpz_t());
        const mp_limb_t* limbs = mpz_limbs_read(z.get_mpz_t());
        for (std::size_t i = 0; i < n; ++i)
            h = h * 1099511628211ull ^ static_cast<std::size_t>(limbs[i]);
        return h * 1099511628211ull ^ static_cast<std::size_t>(sgn(z) + 1);
    };
    std::size_t h = 14695981039346656037ull;
    h = mix(h, v_.get_num());
    h = mix(h, v_.get_den());
    return h;
}

} // namespace moran
