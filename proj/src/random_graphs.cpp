#include "cptree/random_graphs.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cptree {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound <= 1) {
        return 0;
    }
    const std::uint64_t limit = Rng::max() - (Rng::max() % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

Graph random_gnp(std::size_t n, double p, Rng& rng) {
    GraphBuilder builder;
    for (std::size_t v = 0; v < n; ++v) {
        builder.add_vertex(std::to_string(v));
    }
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (uniform01(rng) < p) {
                builder.add_edge(u, v);
            }
        }
    }
    return std::move(builder).build();
}

Graph perturb_focused(const Graph& g, std::size_t max_focal, Rng& rng) {
    const std::size_t n = g.vertex_count();
    std::size_t focal_count = 1 + uniform_below(rng, std::max<std::size_t>(max_focal, 1));
    focal_count = std::min(focal_count, std::max<std::size_t>(n, 1));

    std::set<VertexId> focal;
    while (focal.size() < focal_count && focal.size() < n) {
        focal.insert(static_cast<VertexId>(uniform_below(rng, n)));
    }

    std::set<Edge> edges;
    for (const auto& e : g.edges()) {
        edges.insert(e);
    }
    std::set<VertexId> deleted;
    std::vector<std::pair<std::string, std::vector<VertexId>>> fresh;

    for (VertexId f : focal) {
        const double mode = uniform01(rng);
        if (mode < 0.7) {
            const double flip = 0.2 + 0.6 * uniform01(rng);
            for (VertexId u = 0; u < n; ++u) {
                if (u != f && uniform01(rng) < flip) {
                    Edge e = make_edge(u, f);
                    if (!edges.erase(e)) {
                        edges.insert(e);
                    }
                }
            }
        } else if (mode < 0.85) {
            deleted.insert(f);
        } else {
            std::vector<VertexId> attach;
            const double p = uniform01(rng);
            for (VertexId u = 0; u < n; ++u) {
                if (uniform01(rng) < p) {
                    attach.push_back(u);
                }
            }
            fresh.emplace_back("new" + std::to_string(fresh.size()), std::move(attach));
        }
    }

    GraphBuilder builder;
    for (VertexId v = 0; v < n; ++v) {
        if (!deleted.contains(v)) {
            builder.add_vertex(g.label(v));
        }
    }
    for (auto [u, v] : edges) {
        if (!deleted.contains(u) && !deleted.contains(v)) {
            builder.add_edge(g.label(u), g.label(v));
        }
    }
    for (const auto& [label, attach] : fresh) {
        builder.add_vertex(label);
        for (VertexId u : attach) {
            if (!deleted.contains(u)) {
                builder.add_edge(label, g.label(u));
            }
        }
    }
    return std::move(builder).build();
}

}  // namespace cptree
