#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "moran/bigreal.hpp"
#include "moran/measure.hpp"
#include "moran/rational.hpp"

namespace moran {

/// Certificate that lambda = rho^-n * a / N lies in the zero set of the
/// measure's Fourier transform: level n >= 1, a nonzero and not divisible by
/// the digit N = N_n at that level.
struct ZeroWitness {
    std::int64_t level = 0;
    Integer numerator;
    std::int64_t digit = 0;
};

/// A frequency in the rational span of {rho^0, rho^-1, ..., rho^-(r-1)},
/// tagged with the contraction ratio it is expressed against. q*x^r - p is
/// the minimal polynomial of rho, so the basis is linearly independent over
/// the rationals and the coefficient vector is unique; rho^-r folds to q/p.
/// Cross-ratio arithmetic is refused.
class Frequency {
public:
    Frequency(ContractionRatio tag, std::vector<Rational> coefficients);

    static Frequency zero(const ContractionRatio& tag);

    const ContractionRatio& ratio() const { return tag_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    int nonzero_count() const;
    /// Index of the single nonzero coefficient, or -1 when there is not
    /// exactly one.
    int single_branch_index() const;

    friend Frequency operator+(const Frequency& a, const Frequency& b);
    friend Frequency operator-(const Frequency& a, const Frequency& b);
    Frequency operator-() const;

    friend bool operator==(const Frequency& a, const Frequency& b);
    /// Canonical total order: ratio tag first, then the coefficient vector
    /// lexicographically by exact rational comparison. Used everywhere a
    /// deterministic ordering or tie-break is needed.
    friend std::strong_ordering operator<=>(const Frequency& a, const Frequency& b);

    /// Literal form: "0" for the zero frequency, otherwise colon-separated
    /// rationals "c0:c1:...:c(r-1)" (a bare rational when r = 1). Every
    /// printed literal re-parses to the identical frequency.
    std::string str() const;

    std::size_t hash() const;

private:
    ContractionRatio tag_;
    std::vector<Rational> coeffs_;
};

/// lambda = rho^-n * a / N_n as a Frequency: single nonzero coefficient
/// (q/p)^floor(n/r) * a / N_n at index n mod r. Rejects a = 0 and a
/// divisible by N_n (such lambda are not zeros) and n < 1.
Frequency from_zero_form(const MoranMeasure& measure, std::int64_t n, const Integer& a);

/// Parses either the vector literal ("0", "2/3", "-3/5:0") or the zero-form
/// literal "a/N@n" (validated against digit_at(n) = N). Throws ParseError.
Frequency parse_frequency(const MoranMeasure& measure, std::string_view text);

/// Sum of c_i * rho^-i at the requested precision; the result's relative
/// error is at most 2^-(precision_bits-4). precision_bits >= 53.
BigReal to_real(const Frequency& f, mpfr_prec_t precision_bits);

} // namespace moran
