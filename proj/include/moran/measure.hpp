#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "moran/integer.hpp"

namespace moran {

/// Canonical contraction ratio rho = (p/q)^(1/r) in (0, 1):
///   * gcd(p, q) = 1 and 1 <= p < q,
///   * r is minimal: no prime d | r has p/q equal to a d-th power of a
///     rational, so q*x^r - p is the minimal polynomial of rho and
///     {rho^0, ..., rho^-(r-1)} is a basis over the rationals.
struct ContractionRatio {
    Integer p;
    Integer q;
    std::int64_t r = 1;

    friend bool operator==(const ContractionRatio&, const ContractionRatio&) = default;
};

/// Reduces (p/q)^(1/r) to canonical form, e.g. (4/9)^(1/4) -> (2/3)^(1/2).
/// Rejects p >= q, gcd(p, q) > 1, p < 1 and r < 1.
ContractionRatio canonicalize_ratio(Integer p, Integer q, std::int64_t r);

/// Eventually periodic digit-cardinality rule n |-> N_n. Every entry is a
/// prime >= 2 and the period is nonempty, so sup{N_n} is the finite maximum
/// over preperiod and period.
struct DigitSequence {
    std::vector<std::int64_t> preperiod;
    std::vector<std::int64_t> period;

    friend bool operator==(const DigitSequence&, const DigitSequence&) = default;
};

/// Validates primality and non-emptiness of the period.
DigitSequence make_digit_sequence(std::vector<std::int64_t> preperiod,
                                  std::vector<std::int64_t> period);

/// N_n for n >= 1: preperiod entries first, then the period forever.
std::int64_t digit_at(const DigitSequence& seq, std::int64_t n);

/// M = sup{N_n} = max over preperiod and period.
std::int64_t sup_digit(const DigitSequence& seq);

/// Sorted distinct digit values over preperiod and period.
std::vector<std::int64_t> distinct_digits(const DigitSequence& seq);

struct MoranMeasure {
    ContractionRatio ratio;
    DigitSequence digits;

    friend bool operator==(const MoranMeasure&, const MoranMeasure&) = default;
};

/// Parses the line-oriented measure config format:
///
///   # comment
///   p = 2
///   q = 3
///   r = 2
///   preperiod = [3]        (optional, default empty)
///   period = [5, 7]
///
/// Keys in any order; duplicates, unknown keys, non-prime digits, p >= q,
/// gcd(p, q) > 1 and an empty period are all errors (ParseError with
/// line/column).
MoranMeasure parse_measure_config(std::string_view text);

MoranMeasure load_measure_config(const std::filesystem::path& path);

} // namespace moran
