#include "cptree/tree.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cptree/errors.hpp"

namespace cptree {

using nlohmann::json;

std::vector<NodeId> CommunityTree::leaves() const {
    std::vector<NodeId> out;
    for (const auto& n : nodes) {
        if (n.children.empty()) {
            out.push_back(n.id);
        }
    }
    return out;
}

std::size_t CommunityTree::max_order() const {
    std::size_t top = 0;
    for (const auto& n : nodes) {
        top = std::max(top, n.order);
    }
    return top;
}

std::size_t PersistenceDiagram::total() const {
    std::size_t sum = 0;
    for (const auto& [point, mult] : points) {
        sum += mult;
    }
    return sum;
}

void PersistenceDiagram::add(std::size_t death, std::size_t birth, std::size_t mult) {
    if (mult > 0) {
        points[{death, birth}] += mult;
    }
}

std::vector<std::pair<std::size_t, std::size_t>> PersistenceDiagram::expanded() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& [point, mult] : points) {
        out.insert(out.end(), mult, point);
    }
    return out;
}

namespace {

bool member_covers(const Community& c, const std::vector<VertexId>& face) {
    for (const auto& m : c.members) {
        if (std::includes(m.vertices.begin(), m.vertices.end(), face.begin(), face.end())) {
            return true;
        }
    }
    return false;
}

}  // namespace

CommunityTree build_tree(std::vector<CommunitySlice> slices, std::vector<std::string> labels) {
    if (slices.empty() || slices.front().order != 1 || slices.front().communities.size() != 1) {
        throw Inconsistent("build_tree: slice list must start with the single order-1 community");
    }
    CommunityTree tree;
    tree.labels = std::move(labels);

    std::vector<NodeId> previous;  // node ids of the previous slice, in slice order
    for (std::size_t s = 0; s < slices.size(); ++s) {
        auto& slice = slices[s];
        if (slice.order != s + 1) {
            throw Inconsistent("build_tree: slices must cover orders 1, 2, ... without gaps");
        }
        std::vector<NodeId> current;
        for (auto& community : slice.communities) {
            TreeNode node;
            node.id = tree.nodes.size();
            node.order = slice.order;
            if (slice.order > 1) {
                if (community.members.empty()) {
                    throw Inconsistent("build_tree: community without member cliques");
                }
                const auto& first = community.members.front().vertices;
                std::vector<VertexId> face(first.begin(), first.begin() + static_cast<std::ptrdiff_t>(slice.order - 1));
                std::optional<NodeId> parent;
                for (NodeId candidate : previous) {
                    if (member_covers(tree.nodes[candidate].community, face)) {
                        if (parent) {
                            throw Inconsistent("build_tree: order-" + std::to_string(slice.order) +
                                               " community has several parents");
                        }
                        parent = candidate;
                    }
                }
                if (!parent || !tree.nodes[*parent].community.contains(community)) {
                    throw Inconsistent("build_tree: order-" + std::to_string(slice.order) +
                                       " community has no containing parent");
                }
                node.parent = parent;
                tree.nodes[*parent].children.push_back(node.id);
            }
            node.community = std::move(community);
            current.push_back(node.id);
            tree.nodes.push_back(std::move(node));
        }
        previous = std::move(current);
    }
    tree.root = 0;
    return tree;
}

CommunityTree community_tree(const Graph& g, std::size_t clique_cap) {
    return build_tree(all_communities(g, clique_cap), g.labels());
}

std::vector<Component> components(const CommunityTree& tree) {
    std::vector<Component> comps;
    std::vector<std::size_t> owner(tree.size());  // node -> index of the component alive there

    auto elder_first = [&](std::size_t a, std::size_t b) {
        const auto& ca = comps[a];
        const auto& cb = comps[b];
        if (ca.birth != cb.birth) {
            return ca.birth > cb.birth;
        }
        const auto& va = tree.node(ca.leaf).community.vertices;
        const auto& vb = tree.node(cb.leaf).community.vertices;
        VertexId la = va.empty() ? 0 : va.front();
        VertexId lb = vb.empty() ? 0 : vb.front();
        if (la != lb) {
            return la < lb;
        }
        if (va != vb) {
            return va < vb;
        }
        return ca.leaf < cb.leaf;
    };

    // Children always carry larger ids than their parent.
    for (NodeId id = tree.size(); id-- > 0;) {
        const auto& node = tree.node(id);
        if (node.children.empty()) {
            Component c;
            c.leaf = id;
            c.birth = node.order;
            c.chain.push_back(id);
            owner[id] = comps.size();
            comps.push_back(std::move(c));
            continue;
        }
        std::vector<std::size_t> arriving;
        for (NodeId child : node.children) {
            arriving.push_back(owner[child]);
        }
        std::sort(arriving.begin(), arriving.end(), elder_first);
        for (std::size_t i = 1; i < arriving.size(); ++i) {
            comps[arriving[i]].death = node.order;
        }
        owner[id] = arriving.front();
        comps[arriving.front()].chain.push_back(id);
    }
    if (!tree.nodes.empty()) {
        comps[owner[tree.root]].death = 1;
    }
    std::sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) { return a.leaf < b.leaf; });
    return comps;
}

PersistenceDiagram persistence_diagram(const std::vector<Component>& components) {
    PersistenceDiagram pd;
    for (const auto& c : components) {
        pd.add(c.death, c.birth);
    }
    return pd;
}

PersistenceDiagram persistence_diagram(const CommunityTree& tree) { return persistence_diagram(components(tree)); }

// ---------------------------------------------------------------------------
// Export

namespace {

std::vector<std::string> vertex_labels(const CommunityTree& tree, const TreeNode& node) {
    std::vector<std::string> out;
    out.reserve(node.community.vertices.size());
    for (VertexId v : node.community.vertices) {
        out.push_back(v < tree.labels.size() ? tree.labels[v] : std::to_string(v));
    }
    return out;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    return out;
}

std::string export_dot(const CommunityTree& tree) {
    std::vector<std::string> names(tree.size());
    std::set<std::string> seen;
    for (const auto& node : tree.nodes) {
        std::string name = "k=" + std::to_string(node.order) + "|{";
        auto labels = vertex_labels(tree, node);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i > 0) {
                name += ',';
            }
            name += labels[i];
        }
        name += '}';
        if (!seen.insert(name).second) {
            name += "#" + std::to_string(node.id);
        }
        names[node.id] = dot_escape(name);
    }

    std::ostringstream out;
    out << "digraph community_tree {\n";
    for (const auto& node : tree.nodes) {
        out << "  \"" << names[node.id] << "\" [id=" << node.id << ", order=" << node.order
            << ", size=" << node.community.vertices.size() << "];\n";
    }
    for (const auto& node : tree.nodes) {
        if (node.parent) {
            out << "  \"" << names[node.id] << "\" -> \"" << names[*node.parent] << "\";\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string export_json(const CommunityTree& tree) {
    json doc;
    doc["nodes"] = json::array();
    doc["edges"] = json::array();
    for (const auto& node : tree.nodes) {
        doc["nodes"].push_back({{"id", node.id},
                                {"order", node.order},
                                {"size", node.community.vertices.size()},
                                {"vertices", vertex_labels(tree, node)}});
        if (node.parent) {
            doc["edges"].push_back({node.id, *node.parent});
        }
    }
    doc["root"] = tree.root;
    return doc.dump(2) + "\n";
}

}  // namespace

std::string export_tree(const CommunityTree& tree, TreeFormat format) {
    return format == TreeFormat::Dot ? export_dot(tree) : export_json(tree);
}

TreeSkeleton skeleton(const CommunityTree& tree) {
    TreeSkeleton sk;
    sk.root = tree.root;
    for (const auto& node : tree.nodes) {
        sk.nodes.push_back({node.id, node.order, vertex_labels(tree, node), node.parent});
    }
    return sk;
}

TreeSkeleton parse_tree_json(const std::string& text) {
    json doc = json::parse(text);
    TreeSkeleton sk;
    sk.root = doc.at("root").get<NodeId>();
    for (const auto& n : doc.at("nodes")) {
        sk.nodes.push_back({n.at("id").get<NodeId>(), n.at("order").get<std::size_t>(),
                            n.at("vertices").get<std::vector<std::string>>(), std::nullopt});
    }
    std::sort(sk.nodes.begin(), sk.nodes.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (const auto& e : doc.at("edges")) {
        auto child = e.at(0).get<NodeId>();
        auto parent = e.at(1).get<NodeId>();
        auto it = std::find_if(sk.nodes.begin(), sk.nodes.end(), [&](const auto& n) { return n.id == child; });
        if (it == sk.nodes.end()) {
            throw Inconsistent("tree JSON: edge from unknown node " + std::to_string(child));
        }
        it->parent = parent;
    }
    return sk;
}

std::string diagram_to_json(const PersistenceDiagram& pd) {
    json doc;
    doc["points"] = json::array();
    for (const auto& [point, mult] : pd.points) {
        doc["points"].push_back({{"death", point.first}, {"birth", point.second}, {"mult", mult}});
    }
    return doc.dump(2) + "\n";
}

PersistenceDiagram diagram_from_json(const std::string& text) {
    json doc = json::parse(text);
    PersistenceDiagram pd;
    for (const auto& p : doc.at("points")) {
        pd.add(p.at("death").get<std::size_t>(), p.at("birth").get<std::size_t>(),
               p.value("mult", std::size_t{1}));
    }
    return pd;
}

}  // namespace cptree
