#include "cptree/cliques.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "cptree/errors.hpp"

namespace cptree {

namespace {

using VertexList = std::vector<VertexId>;

VertexList intersect(const VertexList& a, std::span<const VertexId> b) {
    VertexList out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Pivoted Bron-Kerbosch over sorted candidate (P) and excluded (X) sets.
class MaximalCliqueSearch {
public:
    MaximalCliqueSearch(const Graph& g, std::size_t cap, std::vector<Clique>& out)
        : g_(g), cap_(cap), out_(out) {}

    void expand(VertexList& r, VertexList p, VertexList x) {
        if (p.empty()) {
            if (x.empty()) {
                emit(r);
            }
            return;
        }
        VertexId pivot = choose_pivot(p, x);
        auto pivot_nbrs = g_.neighbors(pivot);
        VertexList branch;
        std::set_difference(p.begin(), p.end(), pivot_nbrs.begin(), pivot_nbrs.end(),
                            std::back_inserter(branch));
        for (VertexId v : branch) {
            auto nbrs = g_.neighbors(v);
            r.push_back(v);
            expand(r, intersect(p, nbrs), intersect(x, nbrs));
            r.pop_back();
            p.erase(std::lower_bound(p.begin(), p.end(), v));
            x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
    }

private:
    // Pivot maximising |P ∩ N(u)| over u in P ∪ X.
    VertexId choose_pivot(const VertexList& p, const VertexList& x) const {
        VertexId best = p.front();
        std::size_t best_score = 0;
        bool first = true;
        auto consider = [&](VertexId u) {
            auto nbrs = g_.neighbors(u);
            std::size_t score = 0;
            auto i = p.begin();
            auto j = nbrs.begin();
            while (i != p.end() && j != nbrs.end()) {
                if (*i < *j) {
                    ++i;
                } else if (*j < *i) {
                    ++j;
                } else {
                    ++score;
                    ++i;
                    ++j;
                }
            }
            if (first || score > best_score) {
                best = u;
                best_score = score;
                first = false;
            }
        };
        for (VertexId u : p) {
            consider(u);
        }
        for (VertexId u : x) {
            consider(u);
        }
        return best;
    }

    void emit(const VertexList& r) {
        if (out_.size() >= cap_) {
            throw ResourceLimit("maximal clique enumeration exceeded cap of " + std::to_string(cap_));
        }
        Clique c{r};
        std::sort(c.vertices.begin(), c.vertices.end());
        out_.push_back(std::move(c));
    }

    const Graph& g_;
    std::size_t cap_;
    std::vector<Clique>& out_;
};

// Degeneracy ordering by repeated removal of a minimum-degree vertex.
VertexList degeneracy_order(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> degree(n);
    std::size_t max_degree = 0;
    for (VertexId v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        max_degree = std::max(max_degree, degree[v]);
    }
    std::vector<VertexList> buckets(max_degree + 1);
    for (VertexId v = n; v-- > 0;) {
        buckets[degree[v]].push_back(v);
    }
    std::vector<char> removed(n, 0);
    VertexList order;
    order.reserve(n);
    std::size_t cursor = 0;
    while (order.size() < n) {
        cursor = std::min(cursor, max_degree);
        while (buckets[cursor].empty()) {
            ++cursor;
        }
        VertexId v = buckets[cursor].back();
        buckets[cursor].pop_back();
        if (removed[v] || degree[v] != cursor) {
            continue;  // stale bucket entry
        }
        removed[v] = 1;
        order.push_back(v);
        for (VertexId u : g.neighbors(v)) {
            if (!removed[u]) {
                --degree[u];
                buckets[degree[u]].push_back(u);
                if (degree[u] < cursor) {
                    cursor = degree[u];
                }
            }
        }
    }
    return order;
}

void extend_k_cliques(const Graph& g, std::size_t k, VertexList& current, const VertexList& candidates,
                      std::size_t cap, std::vector<Clique>& out) {
    if (current.size() == k) {
        if (out.size() >= cap) {
            throw ResourceLimit("k-clique enumeration exceeded cap of " + std::to_string(cap));
        }
        out.push_back(Clique{current});
        return;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (candidates.size() - i < k - current.size()) {
            break;
        }
        VertexId v = candidates[i];
        auto nbrs = g.neighbors(v);
        VertexList next;
        // candidates are sorted; keep only those after v that are adjacent to v
        std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1, candidates.end(),
                              nbrs.begin(), nbrs.end(), std::back_inserter(next));
        current.push_back(v);
        extend_k_cliques(g, k, current, next, cap, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Clique> maximal_cliques(const Graph& g, std::size_t cap) {
    std::vector<Clique> out;
    MaximalCliqueSearch search(g, cap, out);
    const VertexList order = degeneracy_order(g);
    std::vector<std::size_t> position(g.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) {
        position[order[i]] = i;
    }
    VertexList r;
    for (VertexId v : order) {
        VertexList later;
        VertexList earlier;
        for (VertexId u : g.neighbors(v)) {
            (position[u] > position[v] ? later : earlier).push_back(u);
        }
        r.assign(1, v);
        search.expand(r, std::move(later), std::move(earlier));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Clique> k_cliques(const Graph& g, std::size_t k, std::size_t cap) {
    if (k == 0) {
        throw std::invalid_argument("k_cliques: k must be at least 1");
    }
    std::vector<Clique> out;
    VertexList all(g.vertex_count());
    for (VertexId v = 0; v < all.size(); ++v) {
        all[v] = v;
    }
    VertexList current;
    extend_k_cliques(g, k, current, all, cap, out);
    return out;
}

std::size_t max_clique_order(const Graph& g, std::size_t cap) {
    std::size_t best = 0;
    for (const auto& c : maximal_cliques(g, cap)) {
        best = std::max(best, c.order());
    }
    return best;
}

}  // namespace cptree
