#include "moran/ortho.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "moran/clique.hpp"
#include "moran/errors.hpp"

namespace moran {

BizeroResult is_bizero_family(const MoranMeasure& measure, std::vector<Frequency> members) {
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw std::invalid_argument("bi-zero check: duplicate members");

    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            // membership is symmetric in the sign, so one direction suffices
            if (!zero_membership(measure, members[j] - members[i])) {
                return {false, std::make_pair(members[i], members[j])};
            }
        }
    }
    return {true, std::nullopt};
}

namespace {

/// Orthogonality graph, rows computed in parallel. The result does not
/// depend on the thread count: edge membership is a pure function and every
/// thread writes disjoint slots.
AdjacencyMatrix build_orthogonality_graph(const MoranMeasure& measure,
                                          const std::vector<Frequency>& vertices) {
    std::vector<std::vector<std::size_t>> rows(vertices.size());
    std::size_t nthreads = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()),
                                                 vertices.size() + 1);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < vertices.size(); i = next.fetch_add(1))
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                if (zero_membership(measure, vertices[j] - vertices[i]))
                    rows[i].push_back(j);
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < nthreads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    AdjacencyMatrix graph(vertices.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j : rows[i])
            graph.add_edge(i, j);
    return graph;
}

} // namespace

OrthogonalFamily max_orthogonal_family(const MoranMeasure& measure,
                                       std::vector<Frequency> candidates) {
    const Frequency zero = Frequency::zero(measure.ratio);

    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    // Anchor at 0: only candidates that are zeros themselves can join a
    // family containing 0.
    std::vector<Frequency> vertices;
    vertices.reserve(candidates.size());
    for (auto& f : candidates)
        if (!f.is_zero() && zero_membership(measure, f))
            vertices.push_back(std::move(f));

    AdjacencyMatrix graph = build_orthogonality_graph(measure, vertices);

    OrthogonalFamily family;
    family.members.push_back(zero);
    for (std::size_t v : lexmin_max_clique(graph))
        family.members.push_back(vertices[v]);
    std::sort(family.members.begin(), family.members.end());

    auto verdict = is_bizero_family(measure, family.members);
    if (!verdict.orthogonal)
        throw std::logic_error("max_orthogonal_family: clique result failed re-verification");
    return family;
}

namespace {

void require_digit_gcds(const MoranMeasure& measure, bool want_p_coprime) {
    for (auto d : distinct_digits(measure.digits)) {
        Integer digit{d};
        if (gcd_int(measure.ratio.q, digit) != 1)
            throw HypothesisError("digit " + std::to_string(d) +
                                  " shares a factor with q = " + measure.ratio.q.get_str());
        bool p_coprime = gcd_int(measure.ratio.p, digit) == 1;
        if (want_p_coprime && !p_coprime)
            throw HypothesisError("digit " + std::to_string(d) +
                                  " shares a factor with p = " + measure.ratio.p.get_str());
        if (!want_p_coprime && p_coprime)
            throw HypothesisError("digit " + std::to_string(d) +
                                  " is coprime to p = " + measure.ratio.p.get_str() +
                                  "; the unbounded construction needs gcd(p, N) > 1");
    }
}

} // namespace

OrthogonalFamily construct_lambda0(const MoranMeasure& measure) {
    require_digit_gcds(measure, /*want_p_coprime=*/true);

    std::int64_t m = sup_digit(measure.digits);
    std::int64_t horizon = static_cast<std::int64_t>(measure.digits.preperiod.size() +
                                                     measure.digits.period.size());
    std::int64_t t = 0;
    for (std::int64_t n = 1; n <= horizon; ++n) {
        if (digit_at(measure.digits, n) == m) {
            t = n;
            break;
        }
    }
    assert(t >= 1);

    OrthogonalFamily family;
    family.members.push_back(Frequency::zero(measure.ratio));
    for (std::int64_t j = 1; j <= m - 1; ++j)
        family.members.push_back(from_zero_form(measure, t, Integer(j)));
    std::sort(family.members.begin(), family.members.end());

    auto verdict = is_bizero_family(measure, family.members);
    if (!verdict.orthogonal)
        throw std::logic_error("construct_lambda0: family failed exact verification");
    return family;
}

OrthogonalFamily construct_lambda_star(const MoranMeasure& measure, std::int64_t alpha,
                                       std::int64_t branch, bool lcm_order) {
    if (alpha < 1)
        throw std::invalid_argument("construct_lambda_star: alpha must be >= 1");
    if (branch < 1 || branch > measure.ratio.r)
        throw std::invalid_argument("construct_lambda_star: branch must lie in 1..r");
    require_digit_gcds(measure, /*want_p_coprime=*/false);

    auto digits = distinct_digits(measure.digits);
    if (digits.size() > 1 && !lcm_order)
        throw HypothesisError("the unbounded construction requires a constant digit sequence "
                              "(the multiplicative order is per digit); pass the lcm-order mode "
                              "to override");

    Integer s = 1;
    for (auto d : digits)
        s = lcm_int(s, multiplicative_order(measure.ratio.q, Integer(d)));
    if (mpz_fits_slong_p(s.get_mpz_t()) == 0)
        throw HypothesisError("multiplicative order too large");
    std::int64_t s_i = s.get_si();

    OrthogonalFamily family;
    for (std::int64_t n = 1; n <= alpha; ++n) {
        std::int64_t level = n * s_i * measure.ratio.r + branch;
        Integer a = pow_int(measure.ratio.q, static_cast<unsigned long>((alpha + n) * s_i));
        family.members.push_back(from_zero_form(measure, level, a));
    }
    std::sort(family.members.begin(), family.members.end());

    auto verdict = is_bizero_family(measure, family.members);
    if (!verdict.orthogonal)
        throw HypothesisError("constructed family failed the exact bi-zero verification "
                              "(non-constant digit sequence outside the guaranteed regime)");
    return family;
}

std::string regime_name(const RegimeClassification& c) {
    switch (c.regime) {
    case Regime::Spectral: return "Spectral";
    case Regime::AtMostM: return "AtMostM(" + std::to_string(c.bound_m) + ")";
    case Regime::UnboundedFinite: return "UnboundedFinite";
    case Regime::NoInfiniteOrthogonal: return "NoInfiniteOrthogonal";
    case Regime::PossiblyInfinite: return "PossiblyInfinite";
    }
    return "?";
}

RegimeClassification classify(const MoranMeasure& measure) {
    const auto& ratio = measure.ratio;
    const auto& seq = measure.digits;

    RegimeClassification out;
    std::set<std::int64_t> pre_set(seq.preperiod.begin(), seq.preperiod.end());
    std::set<std::int64_t> per_set(seq.period.begin(), seq.period.end());
    for (auto d : distinct_digits(seq)) {
        DigitGcdEntry e;
        e.digit = d;
        e.gcd_with_p = gcd_int(ratio.p, Integer(d));
        e.gcd_with_q = gcd_int(ratio.q, Integer(d));
        e.in_preperiod = pre_set.count(d) > 0;
        e.in_period = per_set.count(d) > 0;
        out.gcd_table.push_back(e);
    }

    // Spectral criterion: 1/(N_n rho) = q/(N_n p) a positive integer for
    // every n >= 2. For r > 1 rho is irrational and the quotient is never an
    // integer. Positions 2 .. |pre| + 2|period| visit every digit the rule
    // quantifies over.
    bool spectral = ratio.r == 1;
    if (spectral) {
        std::int64_t horizon = static_cast<std::int64_t>(seq.preperiod.size() + 2 * seq.period.size());
        for (std::int64_t n = 2; n <= horizon && spectral; ++n) {
            Integer den = Integer(digit_at(seq, n)) * ratio.p;
            spectral = divides(den, ratio.q);
        }
        if (horizon < 2)
            spectral = false; // unreachable: the period is nonempty
    }

    auto tail_ok = [&](auto pred) {
        for (const auto& e : out.gcd_table)
            if (e.in_period && !pred(e))
                return false;
        return true;
    };
    auto note_preperiod_exceptions = [&](auto pred, const std::string& what) {
        for (const auto& e : out.gcd_table) {
            if (e.in_preperiod && !e.in_period && !pred(e)) {
                std::ostringstream note;
                note << "preperiod digit " << e.digit << " violates " << what
                     << " (gcd(p,N)=" << e.gcd_with_p.get_str()
                     << ", gcd(q,N)=" << e.gcd_with_q.get_str()
                     << "); the regime reflects the periodic tail";
                out.notes.push_back(note.str());
            }
        }
    };

    std::int64_t tail_sup = 0;
    for (auto d : seq.period)
        tail_sup = std::max(tail_sup, d);
    bool preperiod_clean = true;
    for (const auto& e : out.gcd_table)
        if (e.in_preperiod && !e.in_period && (e.gcd_with_p != 1 || e.gcd_with_q != 1))
            preperiod_clean = false;

    auto coprime_both = [](const DigitGcdEntry& e) { return e.gcd_with_p == 1 && e.gcd_with_q == 1; };
    auto q_coprime_p_not = [](const DigitGcdEntry& e) { return e.gcd_with_q == 1 && e.gcd_with_p != 1; };
    auto q_coprime = [](const DigitGcdEntry& e) { return e.gcd_with_q == 1; };

    if (spectral) {
        out.regime = Regime::Spectral;
        out.notes.push_back("q/(N_n p) is a positive integer for all n >= 2, so the measure is spectral");
    } else if (tail_ok(coprime_both)) {
        out.regime = Regime::AtMostM;
        // With preperiod exceptions the global sup{N_n} bound is not covered
        // by the coprime-regime argument; bound by the recurring digits.
        out.bound_m = preperiod_clean ? sup_digit(seq) : tail_sup;
        note_preperiod_exceptions(coprime_both, "gcd(p,N)=gcd(q,N)=1");
    } else if (tail_ok(q_coprime_p_not)) {
        out.regime = Regime::UnboundedFinite;
        note_preperiod_exceptions(q_coprime_p_not, "gcd(q,N)=1, gcd(p,N)>1");
        out.notes.push_back("orthogonal families of every finite size exist, but gcd(q,N_n)=1 "
                            "for all recurring digits rules out an infinite one");
    } else if (tail_ok(q_coprime)) {
        out.regime = Regime::NoInfiniteOrthogonal;
        note_preperiod_exceptions(q_coprime, "gcd(q,N)=1");
        out.notes.push_back("gcd(q,N_n)>1 holds only finitely often, which an infinite "
                            "orthogonal family would contradict");
    } else {
        out.regime = Regime::PossiblyInfinite;
        out.notes.push_back("digits sharing a factor with q recur forever; an infinite "
                            "orthogonal family is not ruled out by the gcd test");
    }
    return out;
}

ExponentCongruence check_exponent_congruence(const MoranMeasure& measure,
                                             const Integer& b1, std::int64_t k,
                                             const Integer& b2, std::int64_t j,
                                             const Integer& b3, std::int64_t u) {
    const auto& ratio = measure.ratio;
    if (ratio.r <= 1)
        throw std::domain_error("exponent congruence: vacuous for r = 1");
    if (b1 == 0 || b2 == 0 || b3 == 0)
        throw std::invalid_argument("exponent congruence: coefficients must be nonzero");
    if (k < 0 || j < 0 || u < 0)
        throw std::invalid_argument("exponent congruence: exponents must be >= 0");

    // rho^e = (p/q)^floor(e/r) * rho^(e mod r); collect b*rho^e per residue.
    std::vector<Rational> acc(static_cast<std::size_t>(ratio.r));
    Rational step(ratio.p, ratio.q);
    auto add_term = [&](const Integer& b, std::int64_t e, int sign) {
        Rational contrib = Rational(b) * step.pow(static_cast<unsigned long>(e / ratio.r));
        if (sign < 0)
            contrib = -contrib;
        acc[static_cast<std::size_t>(e % ratio.r)] += contrib;
    };
    add_term(b1, k, +1);
    add_term(b2, j, +1);
    add_term(b3, u, -1);

    ExponentCongruence out;
    out.identity_holds = std::all_of(acc.begin(), acc.end(),
                                     [](const Rational& c) { return c.is_zero(); });
    out.congruent = (k % ratio.r == j % ratio.r) && (j % ratio.r == u % ratio.r);
    return out;
}

std::vector<SharedDigitViolation> check_equal_cardinality_property(const MoranMeasure& measure,
                                                                   std::int64_t n_max,
                                                                   std::int64_t a_max) {
    if (n_max < 1 || a_max < 1)
        throw std::invalid_argument("equal-cardinality check: bounds must be >= 1");

    auto zeros = enumerate_zeros(measure, n_max, a_max);
    auto digit_set = [&](const Frequency& f) {
        std::set<std::int64_t> d;
        for (const auto& w : all_zero_witnesses(measure, f))
            d.insert(w.digit);
        return d;
    };
    std::vector<std::set<std::int64_t>> digits;
    digits.reserve(zeros.size());
    for (const auto& z : zeros)
        digits.push_back(digit_set(z));

    std::vector<SharedDigitViolation> violations;
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        for (std::size_t j = i + 1; j < zeros.size(); ++j) {
            Frequency diff = zeros[j] - zeros[i];
            auto diff_digits = digit_set(diff);
            if (diff_digits.empty())
                continue; // difference not a zero: the property does not apply
            bool shared = false;
            for (auto d : diff_digits) {
                if (digits[i].count(d) && digits[j].count(d)) {
                    shared = true;
                    break;
                }
            }
            if (!shared)
                violations.push_back({zeros[i], zeros[j]});
        }
    }
    return violations;
}

} // namespace moran
