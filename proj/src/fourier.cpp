#include "moran/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <ostream>

#include "moran/errors.hpp"

namespace moran {

mpfr_prec_t max_precision_bits() {
    static const mpfr_prec_t cap = [] {
        if (const char* env = std::getenv("MORAN_MAX_PRECISION_BITS")) {
            long v = std::atol(env);
            if (v >= 64)
                return static_cast<mpfr_prec_t>(v);
        }
        return mpfr_prec_t{4096};
    }();
    return cap;
}

std::complex<double> mask_value(std::int64_t digit, double xi) {
    if (digit < 2)
        throw std::invalid_argument("mask_value: digit cardinality must be >= 2");
    std::complex<double> sum = 0.0;
    for (std::int64_t j = 0; j < digit; ++j)
        sum += std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(j) * xi);
    return sum / static_cast<double>(digit);
}

namespace {

double log2_of(const Integer& z) {
    long e = 0;
    double d = mpz_get_d_2exp(&e, z.get_mpz_t());
    return std::log2(d) + static_cast<double>(e);
}

struct Tail {
    std::int64_t levels;
    double bound;
};

/// Smallest K with the certified tail bound <= tol/2.
Tail choose_truncation(const MoranMeasure& measure, const BigReal& xi, double tol) {
    double log2_rho = (log2_of(measure.ratio.p) - log2_of(measure.ratio.q)) /
                      static_cast<double>(measure.ratio.r);
    double rho = std::exp2(log2_rho);
    double one_minus_rho = -std::expm1(log2_rho * std::numbers::ln2);
    double m = static_cast<double>(sup_digit(measure.digits));
    // |xi| <= 2^exponent2; zero xi has an empty tail argument
    double log2_xi = xi.is_zero() ? -1074.0 : static_cast<double>(xi.exponent2());

    double target = std::log1p(tol / 2) * 0.9;
    double log2_base = std::log2(std::numbers::pi * (m - 1.0) / one_minus_rho) + log2_xi;
    std::int64_t k = 0;
    auto x_of = [&](std::int64_t kk) {
        double l = log2_base + static_cast<double>(kk + 1) * log2_rho;
        return l > 1000 ? std::numeric_limits<double>::infinity() : std::exp2(l);
    };
    while (x_of(k) > target) {
        ++k;
        if (k > 10000000)
            throw PrecisionLimitError("ft_eval: truncation level for tolerance " +
                                      std::to_string(tol) + " is out of reach");
    }
    (void)rho;
    return {k, std::expm1(x_of(k)) * 1.0000001};
}

struct MaskFactor {
    BigReal re;
    BigReal im;
    double rounding_error;
};

/// One mask factor at working precision. theta_rel_err is a bound on the
/// relative rounding error already accumulated in theta.
MaskFactor mask_at(std::int64_t digit, const BigReal& theta, double theta_rel_err,
                   const BigReal& two_pi, mpfr_prec_t prec) {
    BigReal sum_re = BigReal::from(1.0, prec); // j = 0 term
    BigReal sum_im(prec);
    for (std::int64_t j = 1; j < digit; ++j) {
        BigReal w = BigReal::from(static_cast<double>(j), prec) * theta;
        BigReal reduced = w - w.floor();
        BigReal angle = two_pi * reduced;
        sum_re = sum_re + angle.cos();
        sum_im = sum_im - angle.sin();
    }
    BigReal n = BigReal::from(static_cast<double>(digit), prec);
    double theta_mag = theta.magnitude_upper();
    if (!std::isfinite(theta_mag))
        throw PrecisionLimitError("ft_eval: argument magnitude exceeds certifiable range");
    // Each term errs by at most 2 pi * (j * |theta| * rel) plus a few ulps of
    // the reduced-argument trigonometry; summed over j < N and divided by N
    // this is pi * N * |theta| * rel + small ulp terms.
    double err = std::numbers::pi * static_cast<double>(digit) * theta_mag * theta_rel_err +
                 std::ldexp(1.0, static_cast<int>(5 - prec));
    return {sum_re / n, sum_im / n, err};
}

} // namespace

CertifiedComplex ft_eval(const MoranMeasure& measure, const BigReal& xi, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("ft_eval: tolerance must be positive");

    Tail tail = choose_truncation(measure, xi, tol);

    long bits_tol = std::max(1L, static_cast<long>(std::ceil(-std::log2(tol))));
    long bits_xi = std::max(0L, xi.is_zero() ? 0L : xi.exponent2());
    long bits_k = static_cast<long>(std::ceil(std::log2(static_cast<double>(tail.levels + 2))));
    mpfr_prec_t prec = std::max<mpfr_prec_t>(128, bits_tol + bits_xi + bits_k + 64);
    prec = std::max(prec, xi.precision());
    if (prec > max_precision_bits())
        throw PrecisionLimitError("ft_eval: needs " + std::to_string(prec) +
                                  " bits of working precision, above the cap of " +
                                  std::to_string(max_precision_bits()) +
                                  " (set MORAN_MAX_PRECISION_BITS to raise it)");

    BigReal rho = (BigReal::from(measure.ratio.p, prec) / BigReal::from(measure.ratio.q, prec))
                      .rootn(static_cast<unsigned long>(measure.ratio.r));
    BigReal two_pi = BigReal::from(2.0, prec) * BigReal::pi(prec);

    CertifiedComplex acc{BigReal::from(1.0, prec), BigReal(prec), 0.0};
    double factor_err_sum = 0.0;
    BigReal theta = xi.round_to(prec);
    for (std::int64_t n = 1; n <= tail.levels; ++n) {
        theta = theta * rho;
        double theta_rel = static_cast<double>(2 * n + 8) * std::ldexp(1.0, static_cast<int>(-prec));
        MaskFactor f = mask_at(digit_at(measure.digits, n), theta, theta_rel, two_pi, prec);
        factor_err_sum += f.rounding_error;
        BigReal re = acc.re * f.re - acc.im * f.im;
        BigReal im = acc.re * f.im + acc.im * f.re;
        acc.re = std::move(re);
        acc.im = std::move(im);
    }

    // |computed - true partial product| <= (sum of per-factor errors plus a
    // few ulps per multiplication) * exp(sum), since every true factor has
    // modulus <= 1. The 1.05 margin covers the exponential for sums <= 0.01.
    double mult_ulps = static_cast<double>(tail.levels + 2) * std::ldexp(1.0, static_cast<int>(2 - prec));
    double rounding = (factor_err_sum + mult_ulps) * 1.05;
    if (!(factor_err_sum + mult_ulps <= 0.01))
        throw PrecisionLimitError("ft_eval: rounding error could not be certified below tolerance");

    acc.error_bound = tail.bound + rounding;
    if (!(acc.error_bound <= tol))
        throw PrecisionLimitError("ft_eval: certified error exceeds the requested tolerance");
    return acc;
}

CertifiedComplex ft_eval(const MoranMeasure& measure, double xi, double tol) {
    return ft_eval(measure, BigReal::from(xi, 64), tol);
}

std::vector<FtSample> sample_ft(const MoranMeasure& measure, double xi_min, double xi_max,
                                std::int64_t count, double tol) {
    if (!(xi_min < xi_max))
        throw std::invalid_argument("sample_ft: requires xi_min < xi_max");
    if (count < 2)
        throw std::invalid_argument("sample_ft: requires count >= 2");

    std::vector<FtSample> rows;
    rows.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        FtSample row;
        row.xi = xi_min + (xi_max - xi_min) * static_cast<double>(i) / static_cast<double>(count - 1);
        try {
            row.value = ft_eval(measure, row.xi, tol);
            row.ok = true;
        } catch (const PrecisionLimitError& e) {
            row.ok = false;
            row.message = e.what();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<FtSample>& samples) {
    out << "xi,re,im,abs,err\n";
    char buf[64];
    for (const auto& s : samples) {
        std::snprintf(buf, sizeof buf, "%.17g", s.xi);
        out << buf << ',';
        if (s.ok) {
            std::snprintf(buf, sizeof buf, "%.17g", s.value.error_bound);
            out << s.value.re.str(19) << ',' << s.value.im.str(19) << ','
                << s.value.abs().str(19) << ',' << buf << '\n';
        } else {
            out << "nan,nan,nan,inf\n";
        }
    }
}

} // namespace moran
