#pragma once

#include <cstddef>
#include <vector>

#include "cptree/graph.hpp"

namespace cptree {

/// A complete subgraph, vertices sorted ascending.
struct Clique {
    std::vector<VertexId> vertices;

    std::size_t order() const noexcept { return vertices.size(); }

    friend auto operator<=>(const Clique&, const Clique&) = default;
};

inline constexpr std::size_t kDefaultCliqueCap = 1'000'000;

/// Every maximal clique of `g`, sorted lexicographically by vertex list.
/// Isolated vertices are reported as 1-cliques. Throws ResourceLimit once more
/// than `cap` cliques have been found.
std::vector<Clique> maximal_cliques(const Graph& g, std::size_t cap = kDefaultCliqueCap);

/// Every clique with exactly `k` vertices, sorted lexicographically.
std::vector<Clique> k_cliques(const Graph& g, std::size_t k, std::size_t cap = kDefaultCliqueCap);

/// Order of the largest clique; 0 for the empty graph.
std::size_t max_clique_order(const Graph& g, std::size_t cap = kDefaultCliqueCap);

}  // namespace cptree
