#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cptree/cpm.hpp"
#include "cptree/graph.hpp"

namespace cptree {

using NodeId = std::size_t;

struct TreeNode {
    NodeId id = 0;
    std::size_t order = 0;
    Community community;
    std::optional<NodeId> parent;
    std::vector<NodeId> children;  // ascending
};

/// One node per (order, community); a k-node hangs under the (k-1)-community
/// containing it. Node ids follow slice order, so the root is node 0.
struct CommunityTree {
    std::vector<TreeNode> nodes;
    NodeId root = 0;
    /// Labels of the graph the tree was built from, for export.
    std::vector<std::string> labels;

    std::size_t size() const noexcept { return nodes.size(); }
    const TreeNode& node(NodeId id) const { return nodes.at(id); }
    std::vector<NodeId> leaves() const;
    std::size_t max_order() const;
};

/// A leaf-to-merge chain under the elder rule.
struct Component {
    NodeId leaf = 0;
    /// Nodes owned by this component, leaf first, orders strictly decreasing.
    std::vector<NodeId> chain;
    std::size_t birth = 0;
    std::size_t death = 0;

    std::size_t persistence() const noexcept { return birth - death; }
};

/// Multiset of (death, birth) points; the diagonal is implicit.
struct PersistenceDiagram {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> points;  // (death, birth) -> multiplicity

    std::size_t total() const;
    void add(std::size_t death, std::size_t birth, std::size_t mult = 1);
    /// Points expanded by multiplicity, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> expanded() const;

    friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;
};

/// Assemble the tree from the complete output of all_communities (or the
/// oracle variant). Throws Inconsistent when a node has no unique parent.
CommunityTree build_tree(std::vector<CommunitySlice> slices, std::vector<std::string> labels = {});

/// Convenience: all_communities + build_tree.
CommunityTree community_tree(const Graph& g, std::size_t clique_cap = kDefaultCliqueCap);

/// One component per leaf. At a merge the component with the larger birth
/// survives; equal births keep the leaf community with the smaller lowest
/// vertex id, then the lexicographically smaller vertex list. The survivor at
/// the root dies at order 1.
std::vector<Component> components(const CommunityTree& tree);

PersistenceDiagram persistence_diagram(const std::vector<Component>& components);
PersistenceDiagram persistence_diagram(const CommunityTree& tree);

enum class TreeFormat { Dot, Json };

std::string export_tree(const CommunityTree& tree, TreeFormat format);

/// Inverse of export_tree(tree, Json) for the structural fields: ids, orders,
/// vertex labels and parent links. Members and edge sets are not exported.
struct TreeSkeleton {
    struct Node {
        NodeId id;
        std::size_t order;
        std::vector<std::string> vertices;
        std::optional<NodeId> parent;
        friend bool operator==(const Node&, const Node&) = default;
    };
    std::vector<Node> nodes;
    NodeId root = 0;
    friend bool operator==(const TreeSkeleton&, const TreeSkeleton&) = default;
};

TreeSkeleton skeleton(const CommunityTree& tree);
TreeSkeleton parse_tree_json(const std::string& text);

std::string diagram_to_json(const PersistenceDiagram& pd);
PersistenceDiagram diagram_from_json(const std::string& text);

}  // namespace cptree
