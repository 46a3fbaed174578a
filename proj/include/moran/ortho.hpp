#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moran/frequency.hpp"
#include "moran/measure.hpp"
#include "moran/zero_oracle.hpp"

namespace moran {

/// A verified mutually orthogonal exponential family: pairwise distinct
/// frequencies whose nonzero pairwise differences all lie in Z(mu^).
/// Members are kept sorted in canonical frequency order.
struct OrthogonalFamily {
    std::vector<Frequency> members;

    std::size_t size() const { return members.size(); }
};

struct BizeroResult {
    bool orthogonal = false;
    /// First offending pair in canonical order when not orthogonal.
    std::optional<std::pair<Frequency, Frequency>> counterexample;
};

/// Checks the bi-zero condition (Lambda - Lambda) \ {0} subset Z(mu^) by
/// running the exact membership oracle on every unordered pair difference.
/// Throws std::invalid_argument on duplicate members.
BizeroResult is_bizero_family(const MoranMeasure& measure, std::vector<Frequency> members);

/// Maximum-cardinality family S + {0} with S drawn from the candidates,
/// realized as an exact maximum clique of the orthogonality graph.
/// Deterministic: among maximum families the lexicographically least in
/// canonical frequency order is returned. Families may always be anchored
/// at 0 because orthogonality is translation invariant.
OrthogonalFamily max_orthogonal_family(const MoranMeasure& measure,
                                       std::vector<Frequency> candidates);

/// The size-M family {0} + { j * rho^-t / N_t : 1 <= j <= M-1 } at the
/// first level t carrying the maximal digit M. Requires gcd(q, N) = 1 and
/// gcd(p, N) = 1 for every digit (HypothesisError otherwise). The result is
/// verified against the membership oracle before being returned.
OrthogonalFamily construct_lambda0(const MoranMeasure& measure);

/// The alpha-element family lambda_n = q^((alpha+n)s) / N * rho^-(n*s*r + i)
/// for n = 1..alpha, where s is the multiplicative order of q mod N and
/// i = branch in 1..r. Requires gcd(q, N) = 1 and gcd(p, N) > 1 for every
/// digit. The digit sequence must be constant; pass lcm_order = true to
/// opt into non-constant sequences with s = lcm of the per-digit orders
/// (verified, but outside the guaranteed regime). Result is verified
/// against the membership oracle before being returned.
OrthogonalFamily construct_lambda_star(const MoranMeasure& measure, std::int64_t alpha,
                                       std::int64_t branch, bool lcm_order = false);

enum class Regime {
    Spectral,             ///< r = 1 and q/(N_n p) integral for all n >= 2
    AtMostM,              ///< tail digits coprime to both p and q
    UnboundedFinite,      ///< tail digits coprime to q, sharing a factor with p
    NoInfiniteOrthogonal, ///< gcd(q, N_n) > 1 only finitely often
    PossiblyInfinite,     ///< gcd(q, N_n) > 1 recurs in the period
};

struct DigitGcdEntry {
    std::int64_t digit = 0;
    Integer gcd_with_p;
    Integer gcd_with_q;
    bool in_preperiod = false;
    bool in_period = false;
};

struct RegimeClassification {
    Regime regime = Regime::PossiblyInfinite;
    /// The orthogonal-family bound M for the AtMostM regime (the maximal
    /// digit of the periodic tail, which equals sup{N_n} when no preperiod
    /// exception exists).
    std::int64_t bound_m = 0;
    std::vector<DigitGcdEntry> gcd_table; ///< per distinct digit, ascending
    std::vector<std::string> notes;       ///< preperiod exceptions etc.
};

/// Formats e.g. "AtMostM(3)" or "Spectral".
std::string regime_name(const RegimeClassification& c);

/// Decides the spectral/orthogonality regime from the gcds of every digit
/// with p and q. The regime is determined by the digits that recur forever
/// (the period); digits violating a hypothesis only in the preperiod are
/// reported as exceptions in the notes.
RegimeClassification classify(const MoranMeasure& measure);

struct ExponentCongruence {
    bool identity_holds = false;
    bool congruent = false;
};

/// Evaluates b1*rho^k + b2*rho^j = b3*rho^u exactly in the power basis
/// (rho^r = p/q) and reports whether the identity holds and whether
/// k = j = u (mod r). A true identity forces congruence when q*x^r - p is
/// minimal; callers scan for the impossible combination. Requires r > 1
/// and nonzero b1, b2, b3.
ExponentCongruence check_exponent_congruence(const MoranMeasure& measure,
                                             const Integer& b1, std::int64_t k,
                                             const Integer& b2, std::int64_t j,
                                             const Integer& b3, std::int64_t u);

struct SharedDigitViolation {
    Frequency first;
    Frequency second;
};

/// For every pair of enumerated zeros whose difference is itself a zero,
/// checks that the three witness sets share a digit value. Returns all
/// violating pairs (none are expected: the digits of a bi-zero triple must
/// agree).
std::vector<SharedDigitViolation> check_equal_cardinality_property(const MoranMeasure& measure,
                                                                   std::int64_t n_max,
                                                                   std::int64_t a_max);

} // namespace moran
