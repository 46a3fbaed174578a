// Test-only brute-force oracles. Each re-derives a result by plain
// enumeration, independent of the library's search logic, so agreement is
// meaningful.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "moran/frequency.hpp"
#include "moran/integer.hpp"
#include "moran/measure.hpp"

namespace oracle {

/// Multiplicative order by stepping powers one at a time.
inline moran::Integer naive_multiplicative_order(const moran::Integer& a, const moran::Integer& m) {
    moran::Integer acc = ((a % m) + m) % m;
    moran::Integer s = 1;
    while (acc != 1) {
        acc = (acc * a) % m;
        if (acc < 0)
            acc += m;
        ++s;
        if (s > m)
            throw std::logic_error("naive order: no cycle found (gcd(a,m) != 1?)");
    }
    return s;
}

/// Euler totient by direct coprimality count.
inline moran::Integer naive_totient(long m) {
    moran::Integer count = 0;
    for (long k = 1; k <= m; ++k)
        if (moran::gcd_int(moran::Integer(k), moran::Integer(m)) == 1)
            ++count;
    return count;
}

/// Integer k-th root by pure binary search on b^k (no mpz_root).
inline std::optional<moran::Integer> naive_exact_root(const moran::Integer& n, unsigned long k) {
    moran::Integer lo = 1, hi = n;
    while (lo <= hi) {
        moran::Integer mid = (lo + hi) / 2;
        moran::Integer p = moran::pow_int(mid, k);
        if (p == n)
            return mid;
        if (p < n)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return std::nullopt;
}

/// Maximal-exponent perfect-power form by scanning exponents upward.
inline std::pair<moran::Integer, unsigned> naive_perfect_power(const moran::Integer& n) {
    std::pair<moran::Integer, unsigned> best{n, 1};
    for (unsigned long e = 2; (moran::Integer(1) << e) <= n; ++e)
        if (auto r = naive_exact_root(n, e))
            best = {*r, static_cast<unsigned>(e)};
    return best;
}

/// Marks each target frequency that the blind (level, numerator) scan can
/// reproduce. Scan bounds follow the membership search space: levels up to
/// n_max + r*ceil(log_q(M*a_max)) and |a| <= M * a_max * p^ceil(n/r).
inline void brute_scan_zero_targets(const moran::MoranMeasure& m, std::int64_t n_max,
                                    std::int64_t a_max,
                                    std::map<moran::Frequency, bool>& targets) {
    using moran::Integer;
    std::int64_t m_sup = moran::sup_digit(m.digits);
    Integer cap = Integer(m_sup) * a_max;
    std::int64_t extra = 0;
    for (Integer qp = 1; qp <= cap; qp *= m.ratio.q)
        ++extra;
    std::int64_t n_bound = n_max + m.ratio.r * extra;

    for (std::int64_t n = 1; n <= n_bound; ++n) {
        std::int64_t digit = moran::digit_at(m.digits, n);
        Integer a_bound = Integer(m_sup) * a_max *
                          moran::pow_int(m.ratio.p, static_cast<unsigned long>((n + m.ratio.r - 1) / m.ratio.r));
        for (Integer a = 1; a <= a_bound; ++a) {
            if (moran::divides(Integer(digit), a))
                continue;
            for (const Integer& signed_a : {a, Integer(-a)}) {
                auto f = moran::from_zero_form(m, n, signed_a);
                auto it = targets.find(f);
                if (it != targets.end())
                    it->second = true;
            }
        }
    }
}

/// Plain DFS clique existence over a bool adjacency matrix.
inline bool naive_has_clique(const std::vector<std::vector<bool>>& adj,
                             std::vector<std::size_t> cands, std::size_t need) {
    if (need == 0)
        return true;
    if (cands.size() < need)
        return false;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        if (cands.size() - i < need)
            return false;
        std::vector<std::size_t> next;
        for (std::size_t j = i + 1; j < cands.size(); ++j)
            if (adj[cands[i]][cands[j]])
                next.push_back(cands[j]);
        if (naive_has_clique(adj, std::move(next), need - 1))
            return true;
    }
    return false;
}

inline bool naive_has_clique(const std::vector<std::vector<bool>>& adj, std::size_t need) {
    std::vector<std::size_t> all(adj.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    return naive_has_clique(adj, std::move(all), need);
}

} // namespace oracle
