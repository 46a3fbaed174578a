#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace moran {

/// Dense undirected graph on vertices 0..n-1, adjacency kept as bitset rows.
class AdjacencyMatrix {
public:
    explicit AdjacencyMatrix(std::size_t n)
        : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    std::size_t size() const { return n_; }
    std::size_t words() const { return words_; }

    void add_edge(std::size_t u, std::size_t v) {
        set(u, v);
        set(v, u);
    }

    bool adjacent(std::size_t u, std::size_t v) const {
        return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
    }

    const std::uint64_t* row(std::size_t u) const { return &bits_[u * words_]; }

private:
    void set(std::size_t u, std::size_t v) { bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

/// Exact maximum clique order (branch and bound with a greedy colouring
/// bound). Vertices are always scanned in index order, so the result and
/// the work done are deterministic.
std::size_t max_clique_size(const AdjacencyMatrix& g);

/// Exact maximum clique restricted to the vertices in `allowed` (bitset of
/// g.words() words).
std::size_t max_clique_size_within(const AdjacencyMatrix& g, const std::vector<std::uint64_t>& allowed);

/// The lexicographically least maximum clique in vertex-index order:
/// greedily fixes the smallest vertex that still extends to a maximum
/// clique. Ascending vertex list.
std::vector<std::size_t> lexmin_max_clique(const AdjacencyMatrix& g);

} // namespace moran
