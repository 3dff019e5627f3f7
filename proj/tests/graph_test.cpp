#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cptree/errors.hpp"
#include "cptree/graph.hpp"
#include "cptree/random_graphs.hpp"
#include "fixtures.hpp"

using namespace cptree;
using namespace cptree::testing;

namespace {

std::set<std::pair<std::string, std::string>> labelled_edges(const Graph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (auto [u, v] : g.edges()) {
        out.emplace(std::min(g.label(u), g.label(v)), std::max(g.label(u), g.label(v)));
    }
    return out;
}

void check_invariants(const Graph& g) {
    std::size_t degree_sum = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto nbrs = g.neighbors(v);
        CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
        CHECK(std::adjacent_find(nbrs.begin(), nbrs.end()) == nbrs.end());
        for (VertexId u : nbrs) {
            CHECK(u != v);
            CHECK(g.adjacent(u, v));
        }
        degree_sum += nbrs.size();
    }
    CHECK(degree_sum == 2 * g.edge_count());
}

}  // namespace

TEST_CASE("build_graph collapses duplicates and keeps isolated vertices") {
    Graph tri = build_graph(std::vector<LabelPair>{{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(tri.vertex_count() == 3);
    CHECK(tri.edge_count() == 3);

    Graph lone = build_graph({}, std::vector<std::string>{"x"});
    CHECK(lone.vertex_count() == 1);
    CHECK(lone.edge_count() == 0);

    Graph dup = build_graph(std::vector<LabelPair>{{"a", "b"}, {"b", "a"}});
    CHECK(dup.vertex_count() == 2);
    CHECK(dup.edge_count() == 1);
    check_invariants(dup);
}

TEST_CASE("build_graph rejects self-loops") {
    CHECK_THROWS_AS(build_graph(std::vector<LabelPair>{{"a", "b"}, {"c", "c"}}), SelfLoop);
    try {
        build_graph(std::vector<LabelPair>{{"q", "q"}});
    } catch (const SelfLoop& e) {
        CHECK(e.label() == "q");
    }
}

TEST_CASE("build_graph is idempotent under duplication and orientation flips") {
    Rng rng(99);
    for (int round = 0; round < 20; ++round) {
        Graph g = random_gnp(10, 0.4, rng);
        std::vector<LabelPair> noisy;
        for (auto [u, v] : g.edges()) {
            noisy.emplace_back(g.label(u), g.label(v));
            if (uniform01(rng) < 0.5) {
                noisy.emplace_back(g.label(v), g.label(u));
            }
        }
        Graph rebuilt = build_graph(noisy);
        CHECK(labelled_edges(rebuilt) == labelled_edges(g));
        check_invariants(rebuilt);
    }
}

TEST_CASE("load_edge_list reads pairs and skips comments") {
    Graph tri = load_edge_list("1 2\n2 3\n1 3");
    CHECK(tri.vertex_count() == 3);
    CHECK(tri.edge_count() == 3);

    Graph commented = load_edge_list("# header\n% other header\n\n  a\tb  \r\n  # indented comment\nb c\n");
    CHECK(commented.vertex_count() == 3);
    CHECK(commented.edge_count() == 2);
}

TEST_CASE("load_edge_list reports the failing line") {
    try {
        load_edge_list("1 2\n3\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(load_edge_list("1 2 3\n"), ParseError);
    CHECK_THROWS_AS(load_edge_list("4 4\n"), SelfLoop);
}

TEST_CASE("edge list serialisation round-trips") {
    Rng rng(5);
    for (int round = 0; round < 10; ++round) {
        Graph g = random_gnp(12, 0.3, rng);
        Graph again = load_edge_list(to_edge_list(g));
        CHECK(labelled_edges(again) == labelled_edges(g));
    }
}

TEST_CASE("load_gml reads the node/edge subset") {
    Graph g = load_gml("graph [\n  node [ id 1 label \"one\" ]\n  node [ id 2 ]\n  edge [ source 1 target 2 ]\n]\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.find("1").has_value());

    Graph with_header = load_gml(
        "Creator \"someone\"\ngraph\n[\n  directed 0\n  node\n  [\n    id 0\n    label \"x\"\n    graphics [ w 1.5 ]\n  ]\n"
        "  node [ id 1 ]\n  node [ id 2 ]\n  edge [ source 0 target 1 value -2.5e3 ]\n]\n");
    CHECK(with_header.vertex_count() == 3);
    CHECK(with_header.edge_count() == 1);
}

TEST_CASE("load_gml rejects bad input") {
    CHECK_THROWS_AS(load_gml("graph [ node [ id 1 ] edge [ source 1 target 9 ] ]"), UnknownEndpoint);
    CHECK_THROWS_AS(load_gml("graph [ node [ id 1 ] "), ParseError);
    CHECK_THROWS_AS(load_gml("nodes only"), ParseError);
    CHECK_THROWS_AS(load_gml("graph [ node [ label \"no id\" ] ]"), ParseError);
    try {
        load_gml("graph [\n node [ id 1 ] node [ id 2 ]\n edge [ source 1 target 3 ]\n]");
        FAIL("expected UnknownEndpoint");
    } catch (const UnknownEndpoint& e) {
        CHECK(e.position() > 1);
    }
}

TEST_CASE("canonical JSON dump sorts vertices and edges") {
    Graph g = build_graph(std::vector<LabelPair>{{"c", "a"}, {"b", "a"}});
    auto doc = nlohmann::json::parse(to_json(g));
    CHECK(doc["vertices"] == nlohmann::json({"a", "b", "c"}));
    CHECK(doc["edges"] == nlohmann::json::array({nlohmann::json::array({"a", "b"}), nlohmann::json::array({"a", "c"})}));
}

TEST_CASE("graph_delta") {
    SUBCASE("identical graphs") {
        auto d = graph_delta(triangle(), triangle());
        CHECK(d.empty());
    }
    SUBCASE("path minus an edge") {
        Graph g = path_abc();
        Graph g2 = build_graph(std::vector<LabelPair>{{"a", "b"}});
        auto d = graph_delta(g, g2);
        REQUIRE(d.removed.size() == 1);
        CHECK(d.labels[d.removed[0].first] + d.labels[d.removed[0].second] == "bc");
        CHECK(d.added.empty());
    }
    SUBCASE("K4 minus an edge to K4") {
        Graph k4 = complete_graph(4);
        std::vector<LabelPair> edges;
        for (const auto& e : clique_edges(names("v", 1, 4))) {
            if (e != LabelPair{"v1", "v2"}) {
                edges.push_back(e);
            }
        }
        auto d = graph_delta(graph_of(edges), k4);
        CHECK(d.removed.empty());
        REQUIRE(d.added.size() == 1);
        CHECK(d.labels[d.added[0].first] == "v1");
        CHECK(d.labels[d.added[0].second] == "v2");
    }
    SUBCASE("vertex sets may differ") {
        Graph g = build_graph(std::vector<LabelPair>{{"a", "b"}});
        Graph g2 = build_graph(std::vector<LabelPair>{{"a", "z"}});
        auto d = graph_delta(g, g2);
        CHECK(d.labels.size() == 3);
        CHECK(d.removed.size() == 1);
        CHECK(d.added.size() == 1);
    }
}

TEST_CASE("graph_delta is antisymmetric") {
    Rng rng(17);
    for (int round = 0; round < 20; ++round) {
        Graph g = random_gnp(9, 0.5, rng);
        Graph g2 = perturb_focused(g, 3, rng);
        auto forward = graph_delta(g, g2);
        auto backward = graph_delta(g2, g);
        auto as_labels = [](const GraphDelta& d, const std::vector<Edge>& es) {
            std::set<std::pair<std::string, std::string>> out;
            for (auto [u, v] : es) {
                out.emplace(std::min(d.labels[u], d.labels[v]), std::max(d.labels[u], d.labels[v]));
            }
            return out;
        };
        CHECK(as_labels(forward, forward.removed) == as_labels(backward, backward.added));
        CHECK(as_labels(forward, forward.added) == as_labels(backward, backward.removed));
        CHECK(graph_delta(g, g).empty());
    }
}

TEST_CASE("remove_vertex takes the induced subgraph") {
    Graph edge = remove_vertex(triangle(), "a");
    CHECK(edge.vertex_count() == 2);
    CHECK(edge.edge_count() == 1);

    Graph k4 = remove_vertex(complete_graph(5), "v3");
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);

    std::vector<LabelPair> star;
    for (int i = 1; i <= 5; ++i) {
        star.emplace_back("c", "l" + std::to_string(i));
    }
    Graph leaves = remove_vertex(graph_of(star), "c");
    CHECK(leaves.vertex_count() == 5);
    CHECK(leaves.edge_count() == 0);

    CHECK_THROWS_AS(remove_vertex(triangle(), "zz"), UnknownVertex);
}

TEST_CASE("karate club data file") {
    std::ifstream in(CPTREE_DATA_DIR "/karate.txt");
    REQUIRE(in);
    Graph g = load_edge_list(in);
    CHECK(g.vertex_count() == 34);
    CHECK(g.edge_count() == 78);

    std::ifstream gml(CPTREE_DATA_DIR "/karate.gml");
    REQUIRE(gml);
    Graph g2 = load_gml(gml);
    CHECK(labelled_edges(g2) == labelled_edges(g));
}
