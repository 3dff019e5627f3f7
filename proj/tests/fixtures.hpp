#pragma once

// Named test graphs shared by the unit and acceptance suites.

#include <string>
#include <vector>

#include "cptree/graph.hpp"

namespace cptree::testing {

inline std::vector<LabelPair> clique_edges(const std::vector<std::string>& vs) {
    std::vector<LabelPair> out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            out.emplace_back(vs[i], vs[j]);
        }
    }
    return out;
}

inline std::vector<std::string> names(const std::string& prefix, std::size_t from, std::size_t to) {
    std::vector<std::string> out;
    for (std::size_t i = from; i <= to; ++i) {
        out.push_back(prefix + std::to_string(i));
    }
    return out;
}

inline Graph graph_of(const std::vector<LabelPair>& edges, const std::vector<std::string>& extra = {}) {
    return build_graph(edges, extra);
}

inline Graph complete_graph(std::size_t n, const std::string& prefix = "v") {
    return graph_of(clique_edges(names(prefix, 1, n)), names(prefix, 1, n));
}

inline Graph edgeless_graph(std::size_t n) { return graph_of({}, names("v", 1, n)); }

inline Graph triangle() { return graph_of({{"a", "b"}, {"b", "c"}, {"a", "c"}}); }

inline Graph path_abc() { return graph_of({{"a", "b"}, {"b", "c"}}); }

inline std::vector<LabelPair> concat(std::vector<LabelPair> a, const std::vector<LabelPair>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// K5 on a..e glued to K4 on d..g along the edge d-e.
inline Graph glued_k5_k4() {
    return graph_of(concat(clique_edges({"a", "b", "c", "d", "e"}), clique_edges({"d", "e", "f", "g"})));
}

/// Two disjoint K4s joined by the single edge a4-b1.
inline Graph twin_k4_bridge() {
    auto edges = concat(clique_edges(names("a", 1, 4)), clique_edges(names("b", 1, 4)));
    edges.emplace_back("a4", "b1");
    return graph_of(edges);
}

/// K5 on v1..v5 and K4 on v5..v8 sharing v5, with a tail v8-v9-v10.
inline Graph branching_base() {
    auto edges = concat(clique_edges(names("v", 1, 5)), clique_edges(names("v", 5, 8)));
    edges.emplace_back("v8", "v9");
    edges.emplace_back("v9", "v10");
    return graph_of(edges);
}

/// Removes v1-v3 and v4-v5 (coverable by {v3, v4}, not by one vertex) and
/// attaches a new vertex v11 to v6, v7, v8.
inline Graph branching_new1() {
    std::vector<LabelPair> edges;
    for (const auto& e : concat(clique_edges(names("v", 1, 5)), clique_edges(names("v", 5, 8)))) {
        if (e == LabelPair{"v1", "v3"} || e == LabelPair{"v4", "v5"}) {
            continue;
        }
        edges.push_back(e);
    }
    edges.emplace_back("v8", "v9");
    edges.emplace_back("v9", "v10");
    edges.emplace_back("v11", "v6");
    edges.emplace_back("v11", "v7");
    edges.emplace_back("v11", "v8");
    return graph_of(edges);
}

/// Removes the single edge v1-v2.
inline Graph branching_new2() {
    std::vector<LabelPair> edges;
    for (const auto& e : concat(clique_edges(names("v", 1, 5)), clique_edges(names("v", 5, 8)))) {
        if (e != LabelPair{"v1", "v2"}) {
            edges.push_back(e);
        }
    }
    edges.emplace_back("v8", "v9");
    edges.emplace_back("v9", "v10");
    return graph_of(edges);
}

}  // namespace cptree::testing
