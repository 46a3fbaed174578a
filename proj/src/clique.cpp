#include "moran/clique.hpp"

#include <algorithm>

namespace moran {

namespace {

struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(std::size_t words) : w(words, 0) {}

    bool test(std::size_t v) const { return (w[v / 64] >> (v % 64)) & 1u; }
    void set(std::size_t v) { w[v / 64] |= std::uint64_t{1} << (v % 64); }
    void reset(std::size_t v) { w[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
    bool empty() const {
        for (auto x : w)
            if (x)
                return false;
        return true;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto x : w)
            c += static_cast<std::size_t>(__builtin_popcountll(x));
        return c;
    }
    void intersect_row(const std::uint64_t* row) {
        for (std::size_t i = 0; i < w.size(); ++i)
            w[i] &= row[i];
    }
    template <typename F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::uint64_t x = w[i];
            while (x) {
                auto b = static_cast<std::size_t>(__builtin_ctzll(x));
                f(i * 64 + b);
                x &= x - 1;
            }
        }
    }
};

class Solver {
public:
    explicit Solver(const AdjacencyMatrix& g) : g_(g) {}

    std::size_t solve(Bits candidates, std::size_t lower_bound_hint = 0) {
        best_ = lower_bound_hint;
        expand(std::move(candidates), 0);
        return best_;
    }

private:
    // Greedy colouring in ascending vertex order: vertices of colour class k
    // bound any clique through them by k. Candidates come back ordered by
    // colour so the deepest bounds are tried first.
    void colour_sort(const Bits& cand, std::vector<std::size_t>& order, std::vector<std::size_t>& bound) {
        order.clear();
        bound.clear();
        Bits uncoloured = cand;
        std::size_t colour = 0;
        while (!uncoloured.empty()) {
            ++colour;
            Bits cls = uncoloured;
            while (!cls.empty()) {
                std::size_t v = first_of(cls);
                order.push_back(v);
                bound.push_back(colour);
                uncoloured.reset(v);
                cls.reset(v);
                // drop neighbours of v from this colour class
                for (std::size_t i = 0; i < cls.w.size(); ++i)
                    cls.w[i] &= ~g_.row(v)[i];
            }
        }
    }

    static std::size_t first_of(const Bits& b) {
        for (std::size_t i = 0; i < b.w.size(); ++i)
            if (b.w[i])
                return i * 64 + static_cast<std::size_t>(__builtin_ctzll(b.w[i]));
        return ~std::size_t{0};
    }

    void expand(Bits cand, std::size_t depth) {
        if (cand.empty()) {
            best_ = std::max(best_, depth);
            return;
        }
        std::vector<std::size_t> order, bound;
        colour_sort(cand, order, bound);
        for (std::size_t k = order.size(); k-- > 0;) {
            if (depth + bound[k] <= best_)
                return; // colouring bound prunes all remaining candidates
            std::size_t v = order[k];
            Bits next = cand;
            next.intersect_row(g_.row(v));
            expand(std::move(next), depth + 1);
            cand.reset(v);
        }
    }

    const AdjacencyMatrix& g_;
    std::size_t best_ = 0;
};

Bits all_vertices(const AdjacencyMatrix& g) {
    Bits b(g.words());
    for (std::size_t v = 0; v < g.size(); ++v)
        b.set(v);
    return b;
}

} // namespace

std::size_t max_clique_size(const AdjacencyMatrix& g) {
    if (g.size() == 0)
        return 0;
    return Solver(g).solve(all_vertices(g));
}

std::size_t max_clique_size_within(const AdjacencyMatrix& g, const std::vector<std::uint64_t>& allowed) {
    Bits b(g.words());
    b.w = allowed;
    if (b.empty())
        return 0;
    return Solver(g).solve(std::move(b));
}

std::vector<std::size_t> lexmin_max_clique(const AdjacencyMatrix& g) {
    std::vector<std::size_t> clique;
    if (g.size() == 0)
        return clique;
    std::size_t target = max_clique_size(g);
    Bits cand = all_vertices(g);
    for (std::size_t v = 0; v < g.size() && clique.size() < target; ++v) {
        if (!cand.test(v))
            continue;
        Bits next = cand;
        next.intersect_row(g.row(v));
        std::size_t rest = Solver(g).solve(next);
        if (clique.size() + 1 + rest >= target) {
            clique.push_back(v);
            cand = std::move(next);
        }
    }
    return clique;
}

} // namespace moran
