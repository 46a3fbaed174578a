#include "moran/frequency.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "moran/errors.hpp"

namespace moran {

Frequency::Frequency(ContractionRatio tag, std::vector<Rational> coefficients)
    : tag_(std::move(tag)), coeffs_(std::move(coefficients)) {
    if (coeffs_.size() != static_cast<std::size_t>(tag_.r))
        throw std::invalid_argument("frequency: coefficient count must equal r");
}

Frequency Frequency::zero(const ContractionRatio& tag) {
    return Frequency(tag, std::vector<Rational>(static_cast<std::size_t>(tag.r)));
}

bool Frequency::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero())
            return false;
    return true;
}

int Frequency::nonzero_count() const {
    int n = 0;
    for (const auto& c : coeffs_)
        if (!c.is_zero())
            ++n;
    return n;
}

int Frequency::single_branch_index() const {
    int idx = -1;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero())
            continue;
        if (idx >= 0)
            return -1;
        idx = static_cast<int>(i);
    }
    return idx;
}

namespace {
void require_same_ratio(const Frequency& a, const Frequency& b) {
    if (!(a.ratio() == b.ratio()))
        throw std::invalid_argument("frequency arithmetic across different contraction ratios");
}
} // namespace

Frequency operator+(const Frequency& a, const Frequency& b) {
    require_same_ratio(a, b);
    std::vector<Rational> out(a.coefficients());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += b.coefficients()[i];
    return Frequency(a.ratio(), std::move(out));
}

Frequency operator-(const Frequency& a, const Frequency& b) {
    require_same_ratio(a, b);
    std::vector<Rational> out(a.coefficients());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] -= b.coefficients()[i];
    return Frequency(a.ratio(), std::move(out));
}

Frequency Frequency::operator-() const {
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_)
        out.push_back(-c);
    return Frequency(tag_, std::move(out));
}

bool operator==(const Frequency& a, const Frequency& b) {
    return a.tag_ == b.tag_ && a.coeffs_ == b.coeffs_;
}

std::strong_ordering operator<=>(const Frequency& a, const Frequency& b) {
    if (int c = cmp(a.tag_.p, b.tag_.p); c != 0)
        return c > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    if (int c = cmp(a.tag_.q, b.tag_.q); c != 0)
        return c > 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    if (auto c = a.tag_.r <=> b.tag_.r; c != 0)
        return c;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

std::string Frequency::str() const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i)
            out << ':';
        out << coeffs_[i].str();
    }
    return out.str();
}

std::size_t Frequency::hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (const auto& c : coeffs_)
        h = (h << 7 | h >> 57) ^ c.hash();
    return h;
}

Frequency from_zero_form(const MoranMeasure& measure, std::int64_t n, const Integer& a) {
    if (n < 1)
        throw std::domain_error("zero form: level n must be >= 1");
    std::int64_t digit = digit_at(measure.digits, n);
    if (a == 0)
        throw std::domain_error("zero form: numerator a must be nonzero");
    if (divides(Integer(digit), a))
        throw std::domain_error("zero form: a = " + a.get_str() + " is divisible by N_" +
                                std::to_string(n) + " = " + std::to_string(digit) +
                                ", which is not a zero of the transform");

    const auto& ratio = measure.ratio;
    std::int64_t i = n % ratio.r;
    std::int64_t j = n / ratio.r; // rho^-n = (q/p)^j * rho^-i
    Rational coeff = Rational(a, Integer(digit)) *
                     Rational(ratio.q, ratio.p).pow(static_cast<unsigned long>(j));
    std::vector<Rational> coeffs(static_cast<std::size_t>(ratio.r));
    coeffs[static_cast<std::size_t>(i)] = coeff;
    return Frequency(ratio, std::move(coeffs));
}

Frequency parse_frequency(const MoranMeasure& measure, std::string_view text) {
    auto trim = [](std::string_view s) {
        auto b = s.find_first_not_of(" \t");
        if (b == std::string_view::npos)
            return std::string_view{};
        auto e = s.find_last_not_of(" \t");
        return s.substr(b, e - b + 1);
    };
    text = trim(text);
    if (text.empty())
        throw ParseError("empty frequency literal");

    if (auto at = text.find('@'); at != std::string_view::npos) {
        // zero form a/N@n
        auto value = text.substr(0, at);
        auto level_str = text.substr(at + 1);
        auto slash = value.find('/');
        if (slash == std::string_view::npos)
            throw ParseError("zero-form literal must look like a/N@n, got '" + std::string(text) + "'");
        auto a = Rational::parse(value.substr(0, slash));
        auto nn = Rational::parse(value.substr(slash + 1));
        auto lvl = Rational::parse(level_str);
        if (!a || !nn || !lvl || !a->is_integer() || !nn->is_integer() || !lvl->is_integer())
            throw ParseError("malformed zero-form literal '" + std::string(text) + "'");
        if (lvl->numerator() < 1 || lvl->numerator() > 1000000000)
            throw ParseError("zero-form level out of range in '" + std::string(text) + "'");
        std::int64_t n = lvl->numerator().get_si();
        std::int64_t digit = digit_at(measure.digits, n);
        if (nn->numerator() != digit)
            throw ParseError("zero-form literal '" + std::string(text) + "' names digit " +
                             nn->numerator().get_str() + " but N_" + std::to_string(n) + " = " +
                             std::to_string(digit));
        try {
            return from_zero_form(measure, n, a->numerator());
        } catch (const std::domain_error& e) {
            throw ParseError(e.what());
        }
    }

    // vector form c0:c1:...
    std::vector<Rational> coeffs;
    std::size_t pos = 0;
    while (true) {
        auto colon = text.find(':', pos);
        auto item = trim(text.substr(pos, colon == std::string_view::npos ? text.size() - pos : colon - pos));
        auto c = Rational::parse(item);
        if (!c)
            throw ParseError("malformed rational '" + std::string(item) + "' in frequency literal");
        coeffs.push_back(*c);
        if (colon == std::string_view::npos)
            break;
        pos = colon + 1;
    }
    if (coeffs.size() == 1 && coeffs[0].is_zero())
        return Frequency::zero(measure.ratio);
    if (coeffs.size() != static_cast<std::size_t>(measure.ratio.r))
        throw ParseError("frequency literal has " + std::to_string(coeffs.size()) +
                         " coefficients but the measure has r = " + std::to_string(measure.ratio.r));
    return Frequency(measure.ratio, std::move(coeffs));
}

BigReal to_real(const Frequency& f, mpfr_prec_t precision_bits) {
    if (precision_bits < 53)
        throw std::invalid_argument("to_real: precision_bits must be >= 53");
    if (f.is_zero())
        return BigReal(precision_bits);

    const auto& ratio = f.ratio();
    // Evaluate at a higher working precision and certify: the absolute error
    // of the sum is below sum_i |t_i| * (i + 6) * 2^(1-P). Double the working
    // precision until the certified relative error fits the contract; the
    // exact value is a fixed nonzero number, so this terminates.
    for (mpfr_prec_t work = precision_bits + 32;; work *= 2) {
        BigReal rho_inv = (BigReal::from(ratio.q, work) / BigReal::from(ratio.p, work))
                              .rootn(static_cast<unsigned long>(ratio.r));
        BigReal sum(work);
        double err_abs = 0.0;
        for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
            const auto& c = f.coefficients()[i];
            if (c.is_zero())
                continue;
            BigReal term = BigReal::from(c, work) * rho_inv.pow_si(static_cast<long>(i));
            err_abs += term.magnitude_upper() * static_cast<double>(i + 6) *
                       std::ldexp(1.0, static_cast<int>(1 - work));
            sum = sum + term;
        }
        double mag = sum.magnitude_upper();
        if (!sum.is_zero() && err_abs <= mag * std::ldexp(1.0, static_cast<int>(-(precision_bits - 4))) * 0.5)
            return sum.round_to(precision_bits);
        if (work > (mpfr_prec_t{1} << 26))
            throw std::runtime_error("to_real: failed to certify precision");
    }
}

} // namespace moran
