#include "cptree/cpm.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "cptree/union_find.hpp"

namespace cptree {

bool Community::contains(const Community& other) const {
    return std::includes(vertices.begin(), vertices.end(), other.vertices.begin(), other.vertices.end()) &&
           std::includes(edges.begin(), edges.end(), other.edges.begin(), other.edges.end());
}

namespace {

Community make_community(std::size_t order, std::vector<Clique> members) {
    Community c;
    c.order = order;
    std::sort(members.begin(), members.end());
    for (const auto& clique : members) {
        const auto& vs = clique.vertices;
        c.vertices.insert(c.vertices.end(), vs.begin(), vs.end());
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                c.edges.emplace_back(vs[i], vs[j]);
            }
        }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    c.vertices.erase(std::unique(c.vertices.begin(), c.vertices.end()), c.vertices.end());
    std::sort(c.edges.begin(), c.edges.end());
    c.edges.erase(std::unique(c.edges.begin(), c.edges.end()), c.edges.end());
    c.members = std::move(members);
    return c;
}

bool community_less(const Community& a, const Community& b) {
    auto key = [](const Community& c) {
        VertexId lowest = c.vertices.empty() ? VertexId{0} : c.vertices.front();
        return std::tuple(lowest, c.vertices.size());
    };
    if (key(a) != key(b)) {
        return key(a) < key(b);
    }
    if (a.vertices != b.vertices) {
        return a.vertices < b.vertices;
    }
    return a.edges < b.edges;
}

// Group cliques by union-find component into an ordered slice.
CommunitySlice collect(std::size_t k, const std::vector<Clique>& cliques, const std::vector<std::size_t>& chosen,
                       UnionFind& uf) {
    std::unordered_map<std::size_t, std::vector<Clique>> groups;
    std::vector<std::size_t> roots;
    for (std::size_t i : chosen) {
        std::size_t root = uf.find(i);
        auto [it, inserted] = groups.try_emplace(root);
        if (inserted) {
            roots.push_back(root);
        }
        it->second.push_back(cliques[i]);
    }
    CommunitySlice slice;
    slice.order = k;
    slice.communities.reserve(roots.size());
    for (std::size_t root : roots) {
        slice.communities.push_back(make_community(k, std::move(groups[root])));
    }
    std::sort(slice.communities.begin(), slice.communities.end(), community_less);
    return slice;
}

struct OverlapPair {
    std::size_t a;
    std::size_t b;
    std::size_t shared;
};

// Every pair of cliques (both of order >= 2) sharing at least one vertex.
std::vector<OverlapPair> clique_overlaps(const std::vector<Clique>& cliques) {
    std::unordered_map<VertexId, std::vector<std::size_t>> incidence;
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        if (cliques[i].order() < 2) {
            continue;
        }
        for (VertexId v : cliques[i].vertices) {
            incidence[v].push_back(i);
        }
    }
    std::vector<OverlapPair> pairs;
    std::unordered_map<std::size_t, std::size_t> shared;
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        if (cliques[i].order() < 2) {
            continue;
        }
        shared.clear();
        for (VertexId v : cliques[i].vertices) {
            for (std::size_t j : incidence[v]) {
                if (j > i) {
                    ++shared[j];
                }
            }
        }
        for (auto [j, count] : shared) {
            pairs.push_back({i, j, count});
        }
    }
    std::sort(pairs.begin(), pairs.end(), [](const OverlapPair& x, const OverlapPair& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    return pairs;
}

CommunitySlice percolate_maximal(std::size_t k, const std::vector<Clique>& maximal,
                                 const std::vector<OverlapPair>& overlaps) {
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < maximal.size(); ++i) {
        if (maximal[i].order() >= k) {
            chosen.push_back(i);
        }
    }
    UnionFind uf(maximal.size());
    for (const auto& p : overlaps) {
        if (p.shared + 1 >= k && maximal[p.a].order() >= k && maximal[p.b].order() >= k) {
            uf.unite(p.a, p.b);
        }
    }
    return collect(k, maximal, chosen, uf);
}

void require_order(std::size_t k) {
    if (k < 2) {
        throw std::invalid_argument("community order must be at least 2");
    }
}

}  // namespace

Community whole_graph_community(const Graph& g) {
    Community c;
    c.order = 1;
    c.vertices.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        c.vertices[v] = v;
        c.members.push_back(Clique{{v}});
    }
    c.edges = g.edges();
    return c;
}

CommunitySlice k_communities_oracle(const Graph& g, std::size_t k, std::size_t cap) {
    require_order(k);
    std::vector<Clique> cliques = k_cliques(g, k, cap);

    // Two k-cliques are adjacent when they share a (k-1)-face. Index every
    // face by the clique it came from so adjacency is found without the full
    // pairwise matrix.
    UnionFind uf(cliques.size());
    std::unordered_map<std::string, std::size_t> face_owner;
    std::string key;
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        const auto& vs = cliques[i].vertices;
        for (std::size_t skip = 0; skip < vs.size(); ++skip) {
            key.clear();
            for (std::size_t j = 0; j < vs.size(); ++j) {
                if (j != skip) {
                    key.append(std::to_string(vs[j]));
                    key.push_back(',');
                }
            }
            auto [it, inserted] = face_owner.try_emplace(key, i);
            if (!inserted) {
                uf.unite(it->second, i);
            }
        }
    }
    std::vector<std::size_t> chosen(cliques.size());
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        chosen[i] = i;
    }
    return collect(k, cliques, chosen, uf);
}

CommunitySlice k_communities(const Graph& /*g*/, std::size_t k, const std::vector<Clique>& maximal) {
    require_order(k);
    return percolate_maximal(k, maximal, clique_overlaps(maximal));
}

std::vector<CommunitySlice> all_communities(const Graph& g, std::size_t cap) {
    std::vector<Clique> maximal = maximal_cliques(g, cap);
    std::size_t top = 0;
    for (const auto& c : maximal) {
        top = std::max(top, c.order());
    }
    std::vector<CommunitySlice> slices;
    slices.push_back(CommunitySlice{1, {whole_graph_community(g)}});
    const auto overlaps = clique_overlaps(maximal);
    for (std::size_t k = 2; k <= top; ++k) {
        slices.push_back(percolate_maximal(k, maximal, overlaps));
    }
    return slices;
}

std::vector<CommunitySlice> all_communities_oracle(const Graph& g, std::size_t cap) {
    std::vector<CommunitySlice> slices;
    slices.push_back(CommunitySlice{1, {whole_graph_community(g)}});
    for (std::size_t k = 2;; ++k) {
        CommunitySlice slice = k_communities_oracle(g, k, cap);
        if (slice.communities.empty()) {
            break;
        }
        slices.push_back(std::move(slice));
    }
    return slices;
}

}  // namespace cptree
