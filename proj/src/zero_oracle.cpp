#include "moran/zero_oracle.hpp"

#include <cassert>
#include <set>
#include <stdexcept>

namespace moran {

namespace {

/// Shared search behind zero_membership / all_zero_witnesses. Invokes
/// `emit(witness)` for each witness in ascending level order; stops early
/// when emit returns false.
template <typename Emit>
void search_witnesses(const MoranMeasure& measure, const Frequency& f, Emit emit) {
    if (!(f.ratio() == measure.ratio))
        throw std::invalid_argument("zero oracle: frequency tagged with a different contraction ratio");

    int idx = f.single_branch_index();
    if (idx < 0)
        return; // zero, or >= 2 nonzero coordinates: not representable as rho^-n * a/N

    const auto& ratio = measure.ratio;
    // p < q forces q >= 2, so the divisibility bound below is finite. Guard
    // against hand-built measures that bypassed validation.
    if (ratio.q < 2)
        throw std::logic_error("zero oracle: contraction ratio with q < 2");

    const Rational& c = f.coefficients()[static_cast<std::size_t>(idx)];
    const Integer u = c.numerator();
    const Integer v = c.denominator();

    // Candidate levels are n = idx + j*r (j >= 1 when idx = 0 so that
    // n >= 1). Matching from_zero_form(n, a) = (q/p)^j * a/N_n at index idx
    // against u/v gives
    //     a = N_n * u * p^j / (v * q^j).
    // gcd(p, q) = 1 and gcd(u, v) = 1, so a integral forces q^j | N_n * u,
    // hence q^j <= M*|u| and j <= log_q(M*|u|): the loop terminates.
    const Integer bound = Integer(sup_digit(measure.digits)) * abs(u);
    Integer q_pow = 1;
    Integer p_pow = 1;
    std::int64_t j = 0;
    if (idx == 0) {
        j = 1;
        q_pow = ratio.q;
        p_pow = ratio.p;
    }
    for (; q_pow <= bound; ++j, q_pow *= ratio.q, p_pow *= ratio.p) {
        std::int64_t n = idx + j * ratio.r;
        Integer digit{digit_at(measure.digits, n)};
        Integer num = digit * u * p_pow;
        Integer den = v * q_pow;
        if (!divides(den, num))
            continue;
        Integer a = num / den;
        if (divides(digit, a))
            continue;
        if (!emit(ZeroWitness{n, a, digit.get_si()}))
            return;
    }
}

} // namespace

std::optional<ZeroWitness> zero_membership(const MoranMeasure& measure, const Frequency& f) {
    std::optional<ZeroWitness> found;
    search_witnesses(measure, f, [&](ZeroWitness w) {
        found = std::move(w);
        return false; // smallest level wins
    });
    return found;
}

std::vector<ZeroWitness> all_zero_witnesses(const MoranMeasure& measure, const Frequency& f) {
    std::vector<ZeroWitness> out;
    search_witnesses(measure, f, [&](ZeroWitness w) {
        out.push_back(std::move(w));
        return true;
    });
    return out;
}

std::vector<Frequency> enumerate_zeros(const MoranMeasure& measure,
                                       std::int64_t n_max, std::int64_t a_max) {
    if (n_max < 1 || a_max < 1)
        throw std::invalid_argument("enumerate_zeros: bounds must be >= 1");
    std::set<Frequency> seen;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        std::int64_t digit = digit_at(measure.digits, n);
        for (std::int64_t a = 1; a <= a_max; ++a) {
            if (a % digit == 0)
                continue;
            seen.insert(from_zero_form(measure, n, Integer(a)));
            seen.insert(from_zero_form(measure, n, Integer(-a)));
        }
    }
    return {seen.begin(), seen.end()};
}

} // namespace moran
