#pragma once

#include <cstddef>
#include <vector>

#include "cptree/cliques.hpp"
#include "cptree/graph.hpp"

namespace cptree {

/// A k-clique community: the union of its constituent cliques.
///
/// On the oracle path the members are k-cliques; on the fast path they are
/// the maximal cliques of order >= k that percolate together. Either way the
/// derived vertex and edge sets coincide for the same community. The order-1
/// community is the whole graph.
struct Community {
    std::size_t order = 0;
    std::vector<Clique> members;    // sorted
    std::vector<VertexId> vertices; // sorted
    std::vector<Edge> edges;        // sorted

    /// True when every vertex and edge of `other` is also in this community.
    bool contains(const Community& other) const;
};

struct CommunitySlice {
    std::size_t order = 0;
    /// Ordered by (smallest vertex id, vertex count, vertex list, edge list).
    std::vector<Community> communities;
};

/// Order-k communities straight from the definition: enumerate every k-clique
/// and join pairs sharing k-1 vertices. k >= 2.
CommunitySlice k_communities_oracle(const Graph& g, std::size_t k, std::size_t cap = kDefaultCliqueCap);

/// Order-k communities from maximal cliques: cliques of order >= k percolate
/// when they share at least k-1 vertices. `maximal` must be maximal_cliques(g).
CommunitySlice k_communities(const Graph& g, std::size_t k, const std::vector<Clique>& maximal);

/// Slices for k = 1 .. max_clique_order(g). Slice 1 holds the whole graph,
/// even when the graph is disconnected or empty.
std::vector<CommunitySlice> all_communities(const Graph& g, std::size_t cap = kDefaultCliqueCap);

/// Same as all_communities but every k >= 2 slice comes from k_communities_oracle.
std::vector<CommunitySlice> all_communities_oracle(const Graph& g, std::size_t cap = kDefaultCliqueCap);

/// The order-1 community: every vertex and edge of g.
Community whole_graph_community(const Graph& g);

}  // namespace cptree
