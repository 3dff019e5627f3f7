#include "cptree/stability.hpp"

#include <algorithm>

#include <json.hpp>

#include "cptree/tree.hpp"

namespace cptree {

using nlohmann::json;

std::size_t maximal_matching_size(const Graph& g) {
    return two_approximate_cover(g).vertices.size() / 2;
}

CoverCertificate two_approximate_cover(const Graph& g) {
    std::vector<char> used(g.vertex_count(), 0);
    CoverCertificate cert;
    for (auto [u, v] : g.edges()) {
        if (!used[u] && !used[v]) {
            used[u] = used[v] = 1;
            cert.vertices.push_back(u);
            cert.vertices.push_back(v);
        }
    }
    std::sort(cert.vertices.begin(), cert.vertices.end());
    cert.covered_edge_count = g.edge_count();
    return cert;
}

bool is_vertex_cover(const Graph& g, const std::vector<VertexId>& cover) {
    std::vector<char> in(g.vertex_count(), 0);
    for (VertexId v : cover) {
        in.at(v) = 1;
    }
    for (auto [u, v] : g.edges()) {
        if (!in[u] && !in[v]) {
            return false;
        }
    }
    return true;
}

namespace {

// Branch and bound over the subgraph induced by `alive_` vertices.
class CoverSearch {
public:
    CoverSearch(const Graph& g, std::size_t budget) : g_(g), budget_(budget), alive_(g.vertex_count(), 1) {}

    // Returns false when the node budget was exhausted.
    bool run(std::vector<VertexId> incumbent) {
        best_ = std::move(incumbent);
        std::vector<VertexId> chosen;
        search(chosen);
        return !aborted_;
    }

    const std::vector<VertexId>& best() const { return best_; }
    std::size_t nodes() const { return nodes_; }

private:
    std::size_t live_degree(VertexId v) const {
        std::size_t d = 0;
        for (VertexId u : g_.neighbors(v)) {
            d += alive_[u];
        }
        return d;
    }

    void kill(VertexId v, std::vector<VertexId>& trail) {
        alive_[v] = 0;
        trail.push_back(v);
    }

    // Degree-0 vertices are dropped; a degree-1 vertex forces its neighbour
    // into the cover.
    void reduce(std::vector<VertexId>& chosen, std::vector<VertexId>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (VertexId v = 0; v < g_.vertex_count(); ++v) {
                if (!alive_[v]) {
                    continue;
                }
                std::size_t d = live_degree(v);
                if (d == 0) {
                    kill(v, trail);
                    changed = true;
                } else if (d == 1) {
                    VertexId u = *std::find_if(g_.neighbors(v).begin(), g_.neighbors(v).end(),
                                               [&](VertexId w) { return alive_[w] != 0; });
                    chosen.push_back(u);
                    kill(u, trail);
                    kill(v, trail);
                    changed = true;
                }
            }
        }
    }

    std::size_t matching_bound() const {
        std::vector<char> used(g_.vertex_count(), 0);
        std::size_t size = 0;
        for (VertexId u = 0; u < g_.vertex_count(); ++u) {
            if (!alive_[u] || used[u]) {
                continue;
            }
            for (VertexId v : g_.neighbors(u)) {
                if (v > u && alive_[v] && !used[v]) {
                    used[u] = used[v] = 1;
                    ++size;
                    break;
                }
            }
        }
        return size;
    }

    void restore(std::vector<VertexId>& trail, std::size_t mark) {
        while (trail.size() > mark) {
            alive_[trail.back()] = 1;
            trail.pop_back();
        }
    }

    void search(std::vector<VertexId>& chosen) {
        if (aborted_) {
            return;
        }
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        const std::size_t chosen_mark = chosen.size();
        std::vector<VertexId> trail;
        reduce(chosen, trail);

        if (chosen.size() + matching_bound() >= best_.size()) {
            restore(trail, 0);
            chosen.resize(chosen_mark);
            return;
        }

        VertexId pivot = 0;
        std::size_t pivot_degree = 0;
        for (VertexId v = 0; v < g_.vertex_count(); ++v) {
            if (alive_[v]) {
                std::size_t d = live_degree(v);
                if (d > pivot_degree) {
                    pivot = v;
                    pivot_degree = d;
                }
            }
        }
        if (pivot_degree == 0) {
            // No live edges left: `chosen` is a cover, strictly better by the bound check.
            best_ = chosen;
            restore(trail, 0);
            chosen.resize(chosen_mark);
            return;
        }

        // Branch 1: pivot in the cover.
        {
            const std::size_t mark = trail.size();
            chosen.push_back(pivot);
            kill(pivot, trail);
            search(chosen);
            chosen.pop_back();
            restore(trail, mark);
        }
        // Branch 2: pivot excluded, so all its live neighbours are in.
        if (!aborted_) {
            const std::size_t mark = trail.size();
            const std::size_t before = chosen.size();
            for (VertexId u : g_.neighbors(pivot)) {
                if (alive_[u]) {
                    chosen.push_back(u);
                    kill(u, trail);
                }
            }
            kill(pivot, trail);
            search(chosen);
            chosen.resize(before);
            restore(trail, mark);
        }

        restore(trail, 0);
        chosen.resize(chosen_mark);
    }

    const Graph& g_;
    std::size_t budget_;
    std::vector<char> alive_;
    std::vector<VertexId> best_;
    std::size_t nodes_ = 0;
    bool aborted_ = false;
};

StarValue star_value(const Graph& delta_graph, std::size_t budget) {
    CoverResult r = min_vertex_cover(delta_graph, budget);
    StarValue s;
    s.lower = r.lower;
    s.upper = r.upper;
    for (VertexId v : r.cover.vertices) {
        s.cover.push_back(delta_graph.label(v));
    }
    return s;
}

json star_json(const StarValue& s) {
    if (s.exact()) {
        return s.upper;
    }
    return {{"lower", s.lower}, {"upper", s.upper}};
}

json stars_object(const StarNumbers& stars) {
    json doc;
    doc["rsn"] = star_json(stars.rsn);
    doc["asn"] = star_json(stars.asn);
    if (stars.exact()) {
        doc["tsn"] = stars.tsn_upper();
    } else {
        doc["tsn"] = {{"lower", stars.tsn_lower()}, {"upper", stars.tsn_upper()}};
    }
    doc["exact"] = stars.exact();
    return doc;
}

}  // namespace

CoverResult min_vertex_cover(const Graph& g, std::size_t node_budget) {
    CoverResult result;
    CoverCertificate approx = two_approximate_cover(g);
    result.lower = approx.vertices.size() / 2;

    CoverSearch search(g, node_budget);
    bool finished = search.run(approx.vertices);
    result.nodes_explored = search.nodes();
    result.cover.vertices = search.best();
    std::sort(result.cover.vertices.begin(), result.cover.vertices.end());
    result.cover.covered_edge_count = g.edge_count();
    result.upper = result.cover.vertices.size();
    if (finished) {
        result.lower = result.upper;
    }
    return result;
}

StarValue rsn(const Graph& g, const Graph& g_prime, std::size_t node_budget) {
    return star_value(graph_delta(g, g_prime).removed_graph(), node_budget);
}

StarValue asn(const Graph& g, const Graph& g_prime, std::size_t node_budget) {
    return star_value(graph_delta(g, g_prime).added_graph(), node_budget);
}

StarNumbers tsn(const Graph& g, const Graph& g_prime, std::size_t node_budget) {
    GraphDelta delta = graph_delta(g, g_prime);
    return {star_value(delta.removed_graph(), node_budget), star_value(delta.added_graph(), node_budget)};
}

StabilityReport verify_stability(const Graph& g, const Graph& g_prime, const StabilityOptions& options) {
    StabilityReport report;
    report.stars = tsn(g, g_prime, options.cover_budget);
    report.d_bottleneck =
        tree_distance(community_tree(g, options.clique_cap), community_tree(g_prime, options.clique_cap));
    HalfInt bound = HalfInt::from_int(static_cast<std::int64_t>(report.stars.tsn_upper()));
    report.holds = report.d_bottleneck <= bound;
    report.slack = bound - report.d_bottleneck;
    return report;
}

std::string star_numbers_json(const StarNumbers& stars) { return stars_object(stars).dump(); }

std::string stability_report_json(const StabilityReport& report) {
    json doc = stars_object(report.stars);
    doc["d_bottleneck"] = report.d_bottleneck.to_double();
    doc["holds"] = report.holds;
    doc["slack"] = report.slack.to_double();
    return doc.dump();
}

}  // namespace cptree
