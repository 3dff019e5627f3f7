#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cptree {

using VertexId = std::uint32_t;

/// Undirected edge stored with first < second.
using Edge = std::pair<VertexId, VertexId>;

inline Edge make_edge(VertexId u, VertexId v) { return u < v ? Edge{u, v} : Edge{v, u}; }

using LabelPair = std::pair<std::string, std::string>;

/// Immutable undirected simple graph. Vertices carry external string labels
/// and are addressed internally by dense ids in [0, vertex_count()). Ids are
/// assigned in order of first appearance during construction.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool empty() const noexcept { return adjacency_.empty(); }

    const std::string& label(VertexId v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<VertexId> find(std::string_view label) const;

    /// Sorted neighbour ids.
    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
    std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
    bool adjacent(VertexId u, VertexId v) const;

    /// All edges, each once with first < second, sorted.
    std::vector<Edge> edges() const;

    friend class GraphBuilder;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Incremental construction of a Graph. Duplicate and reversed edges collapse.
class GraphBuilder {
public:
    VertexId add_vertex(std::string_view label);
    /// Throws SelfLoop when both labels are equal.
    void add_edge(std::string_view a, std::string_view b);
    void add_edge(VertexId u, VertexId v);
    Graph build() &&;

private:
    Graph graph_;
    std::vector<Edge> pending_;
};

Graph build_graph(std::span<const LabelPair> edges, std::span<const std::string> extra_vertices = {});

/// Whitespace-separated label pairs, one per line. Lines whose first
/// non-blank character is '#' or '%' are comments; blank lines are skipped.
Graph load_edge_list(std::istream& in);
Graph load_edge_list(std::string_view text);

/// GML subset: graph [ node [ id N ... ] edge [ source A target B ... ] ].
/// Node ids become vertex labels; unrecognised keys are ignored.
Graph load_gml(std::istream& in);
Graph load_gml(std::string_view text);

/// Edge list text that load_edge_list reads back to the same labelled graph.
/// Isolated vertices cannot be expressed in that format and are dropped.
std::string to_edge_list(const Graph& g);

/// {"vertices":[labels...],"edges":[[a,b],...]} with labels sorted and
/// edges sorted lexicographically by label pair (smaller label first).
std::string to_json(const Graph& g);

/// Edge difference between two graphs over their union label space.
/// Labels of `g` keep their ids; labels present only in `g_prime` follow.
struct GraphDelta {
    std::vector<std::string> labels;
    std::vector<Edge> removed;  // in g, not in g_prime
    std::vector<Edge> added;    // in g_prime, not in g

    bool empty() const noexcept { return removed.empty() && added.empty(); }
    Graph removed_graph() const;
    Graph added_graph() const;
};

GraphDelta graph_delta(const Graph& g, const Graph& g_prime);

/// Induced subgraph on every vertex except `label`. Throws UnknownVertex.
Graph remove_vertex(const Graph& g, std::string_view label);

/// Induced subgraph on the given vertex ids (any order, duplicates ignored).
Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep);

}  // namespace cptree
