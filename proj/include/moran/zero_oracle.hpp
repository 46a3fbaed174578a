#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "moran/frequency.hpp"
#include "moran/measure.hpp"

namespace moran {

/// Decides lambda in Z(mu^) exactly. Returns the witness with the smallest
/// level when one exists (for a fixed level the numerator is unique), empty
/// otherwise. Frequencies with zero or with two or more nonzero coefficients
/// are never zeros: the basis powers of rho are linearly independent over
/// the rationals.
std::optional<ZeroWitness> zero_membership(const MoranMeasure& measure, const Frequency& f);

/// All witnesses for f, ascending by level. Same finite search as
/// zero_membership. Nonempty iff zero_membership(f) is.
std::vector<ZeroWitness> all_zero_witnesses(const MoranMeasure& measure, const Frequency& f);

/// The deduplicated set { rho^-n * a / N_n : 1 <= n <= n_max,
/// 0 < |a| <= a_max, N_n does not divide a }, in canonical order.
std::vector<Frequency> enumerate_zeros(const MoranMeasure& measure,
                                       std::int64_t n_max, std::int64_t a_max);

} // namespace moran
