#pragma once

// Brute-force reference computations. Nothing here calls into the library's
// algorithms beyond the Graph accessors, so they stay independent of the code
// under test.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "cptree/graph.hpp"
#include "cptree/random_graphs.hpp"
#include "cptree/tree.hpp"

namespace cptree::testing {

using VertexSet = std::vector<VertexId>;

inline bool is_clique(const Graph& g, const VertexSet& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (!g.adjacent(vs[i], vs[j])) {
                return false;
            }
        }
    }
    return true;
}

/// Every k-subset of [0, n) that is a clique, lexicographic.
inline std::vector<VertexSet> brute_k_cliques(const Graph& g, std::size_t k) {
    std::vector<VertexSet> out;
    const std::size_t n = g.vertex_count();
    if (k == 0 || k > n) {
        return out;
    }
    VertexSet pick(k);
    for (std::size_t i = 0; i < k; ++i) {
        pick[i] = static_cast<VertexId>(i);
    }
    while (true) {
        if (is_clique(g, pick)) {
            out.push_back(pick);
        }
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1) {
            --i;
        }
        if (i == 0) {
            break;
        }
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

/// All cliques with at most `max_size` vertices, found by trying every subset
/// of each vertex's higher-numbered neighbourhood.
inline std::vector<VertexSet> brute_cliques_up_to(const Graph& g, std::size_t max_size) {
    std::vector<VertexSet> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        VertexSet higher;
        for (VertexId u : g.neighbors(v)) {
            if (u > v) {
                higher.push_back(u);
            }
        }
        VertexSet current{v};
        std::function<void(std::size_t)> grow = [&](std::size_t start) {
            if (is_clique(g, current)) {
                out.push_back(current);
            }
            if (current.size() == max_size) {
                return;
            }
            for (std::size_t i = start; i < higher.size(); ++i) {
                current.push_back(higher[i]);
                grow(i + 1);
                current.pop_back();
            }
        };
        grow(0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct BruteMaximal {
    std::vector<VertexSet> cliques;
    bool complete = true;  // false if some clique of the size cap could be extended
};

inline BruteMaximal brute_maximal_cliques(const Graph& g, std::size_t max_size) {
    BruteMaximal result;
    for (const auto& c : brute_cliques_up_to(g, max_size)) {
        bool extendable = false;
        for (VertexId w = 0; w < g.vertex_count() && !extendable; ++w) {
            if (std::find(c.begin(), c.end(), w) != c.end()) {
                continue;
            }
            extendable = std::all_of(c.begin(), c.end(), [&](VertexId u) { return g.adjacent(u, w); });
        }
        if (!extendable) {
            result.cliques.push_back(c);
        } else if (c.size() == max_size) {
            result.complete = false;
        }
    }
    return result;
}

/// Order-k communities from pairwise comparison of all k-cliques and BFS.
/// Returns (vertex set, edge set) pairs, sorted.
using CommunityKey = std::pair<VertexSet, std::vector<Edge>>;

inline std::vector<std::vector<VertexSet>> brute_percolation_groups(const Graph& g, std::size_t k) {
    auto cliques = brute_k_cliques(g, k);
    const std::size_t m = cliques.size();
    auto shared = [&](std::size_t i, std::size_t j) {
        std::size_t count = 0;
        for (VertexId v : cliques[i]) {
            count += std::count(cliques[j].begin(), cliques[j].end(), v);
        }
        return count;
    };
    std::vector<int> group(m, -1);
    std::vector<std::vector<VertexSet>> groups;
    for (std::size_t s = 0; s < m; ++s) {
        if (group[s] >= 0) {
            continue;
        }
        group[s] = static_cast<int>(groups.size());
        groups.emplace_back();
        std::queue<std::size_t> frontier;
        frontier.push(s);
        while (!frontier.empty()) {
            std::size_t i = frontier.front();
            frontier.pop();
            groups.back().push_back(cliques[i]);
            for (std::size_t j = 0; j < m; ++j) {
                if (group[j] < 0 && shared(i, j) == k - 1) {
                    group[j] = group[s];
                    frontier.push(j);
                }
            }
        }
    }
    return groups;
}

inline std::vector<CommunityKey> brute_communities(const Graph& g, std::size_t k) {
    std::vector<CommunityKey> out;
    for (const auto& members : brute_percolation_groups(g, k)) {
        std::set<VertexId> vs;
        std::set<Edge> es;
        for (const auto& c : members) {
            vs.insert(c.begin(), c.end());
            for (std::size_t i = 0; i < c.size(); ++i) {
                for (std::size_t j = i + 1; j < c.size(); ++j) {
                    es.insert(make_edge(c[i], c[j]));
                }
            }
        }
        out.emplace_back(VertexSet(vs.begin(), vs.end()), std::vector<Edge>(es.begin(), es.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Smallest vertex cover by trying every subset; n must be small.
inline std::size_t brute_min_vertex_cover(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const auto edges = g.edges();
    std::size_t best = n;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        auto size = static_cast<std::size_t>(__builtin_popcount(mask));
        if (size >= best) {
            continue;
        }
        bool covers = std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
            return ((mask >> e.first) & 1u) || ((mask >> e.second) & 1u);
        });
        if (covers) {
            best = size;
        }
    }
    return best;
}

/// Doubled bottleneck distance by exhausting every partial injection from A
/// into B; points left out on either side go to the diagonal.
inline std::int64_t brute_bottleneck_twice(const std::vector<std::pair<std::int64_t, std::int64_t>>& a,
                                           const std::vector<std::pair<std::int64_t, std::int64_t>>& b) {
    auto pair_cost = [](auto p, auto q) -> std::int64_t {
        return 2 * std::max(std::llabs(p.first - q.first), std::llabs(p.second - q.second));
    };
    auto diag_cost = [](auto p) -> std::int64_t { return std::llabs(p.second - p.first); };  // doubled (b-d)/2
    std::int64_t best = INT64_MAX;
    std::vector<char> used(b.size(), 0);
    std::function<void(std::size_t, std::int64_t)> assign = [&](std::size_t i, std::int64_t worst) {
        if (worst >= best) {
            return;
        }
        if (i == a.size()) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                if (!used[j]) {
                    worst = std::max(worst, diag_cost(b[j]));
                }
            }
            best = std::min(best, worst);
            return;
        }
        assign(i + 1, std::max(worst, diag_cost(a[i])));
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (!used[j]) {
                used[j] = 1;
                assign(i + 1, std::max(worst, pair_cost(a[i], b[j])));
                used[j] = 0;
            }
        }
    };
    assign(0, 0);
    return best;
}

inline std::vector<std::pair<std::int64_t, std::int64_t>> points_of(const PersistenceDiagram& pd) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (auto [d, b] : pd.expanded()) {
        out.emplace_back(static_cast<std::int64_t>(d), static_cast<std::int64_t>(b));
    }
    return out;
}

/// Random diagram with up to `max_points` points, 1 <= death <= birth <= max_order.
inline PersistenceDiagram random_diagram(Rng& rng, std::size_t max_points, std::size_t max_order) {
    PersistenceDiagram pd;
    const std::size_t count = uniform_below(rng, max_points + 1);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t death = 1 + uniform_below(rng, max_order);
        std::size_t birth = death + uniform_below(rng, max_order - death + 1);
        pd.add(death, birth);
    }
    return pd;
}

}  // namespace cptree::testing
