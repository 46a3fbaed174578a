#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "moran/bigreal.hpp"
#include "moran/measure.hpp"

namespace moran {

/// A complex value together with a certified absolute error bound covering
/// both product truncation and floating-point rounding.
struct CertifiedComplex {
    BigReal re;
    BigReal im;
    double error_bound = 0.0;

    BigReal abs() const { return hypot(re, im); }
};

/// Mask value of the consecutive digit set {0..N-1}:
/// (1/N) * sum_j exp(-2 pi i j xi). Plain double evaluation; the certified
/// path inside ft_eval re-derives this at working precision.
std::complex<double> mask_value(std::int64_t digit, double xi);

/// Truncated infinite product for the Fourier transform of the measure at
/// xi, with certified total error at most tol. The truncation level K is
/// chosen so the dropped tail satisfies
///   |prod_{n>K} M_n(rho^n xi) - 1| <= exp(pi (M-1) |xi| rho^(K+1) / (1-rho)) - 1 <= tol/2,
/// using |M_D(eta) - 1| <= pi (N-1) |eta| and |M_D| <= 1. Throws
/// PrecisionLimitError when the required working precision would exceed
/// max_precision_bits() (never degrades silently).
CertifiedComplex ft_eval(const MoranMeasure& measure, const BigReal& xi, double tol);
CertifiedComplex ft_eval(const MoranMeasure& measure, double xi, double tol);

struct FtSample {
    double xi = 0.0;
    CertifiedComplex value;
    bool ok = false;
    std::string message; ///< failure reason when !ok
};

/// Uniform grid of `count` points over [xi_min, xi_max], one ft_eval per
/// row; rows that exceed the precision cap are marked failed rather than
/// aborting the sweep.
std::vector<FtSample> sample_ft(const MoranMeasure& measure, double xi_min, double xi_max,
                                std::int64_t count, double tol);

/// CSV with header "xi,re,im,abs,err", >= 17 significant digits, LF line
/// endings. Failed rows carry nan fields and err=inf.
void write_csv(std::ostream& out, const std::vector<FtSample>& samples);

/// Working-precision cap in bits: 4096, or the MORAN_MAX_PRECISION_BITS
/// environment variable when set.
mpfr_prec_t max_precision_bits();

} // namespace moran
