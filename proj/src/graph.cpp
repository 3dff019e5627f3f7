#include "cptree/graph.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <iterator>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "cptree/errors.hpp"

namespace cptree {

std::optional<VertexId> Graph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    const auto& nu = adjacency_.at(u);
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < adjacency_.size(); ++u) {
        for (VertexId v : adjacency_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

VertexId GraphBuilder::add_vertex(std::string_view label) {
    std::string key(label);
    auto [it, inserted] = graph_.index_.try_emplace(key, static_cast<VertexId>(graph_.labels_.size()));
    if (inserted) {
        graph_.labels_.push_back(std::move(key));
    }
    return it->second;
}

void GraphBuilder::add_edge(std::string_view a, std::string_view b) {
    if (a == b) {
        throw SelfLoop(std::string(a));
    }
    VertexId u = add_vertex(a);
    VertexId v = add_vertex(b);
    pending_.push_back(make_edge(u, v));
}

void GraphBuilder::add_edge(VertexId u, VertexId v) {
    if (u >= graph_.labels_.size() || v >= graph_.labels_.size()) {
        throw UnknownVertex(std::to_string(std::max(u, v)));
    }
    if (u == v) {
        throw SelfLoop(graph_.labels_[u]);
    }
    pending_.push_back(make_edge(u, v));
}

Graph GraphBuilder::build() && {
    std::sort(pending_.begin(), pending_.end());
    pending_.erase(std::unique(pending_.begin(), pending_.end()), pending_.end());

    graph_.adjacency_.assign(graph_.labels_.size(), {});
    for (auto [u, v] : pending_) {
        graph_.adjacency_[u].push_back(v);
        graph_.adjacency_[v].push_back(u);
    }
    for (auto& nbrs : graph_.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
    }
    graph_.edge_count_ = pending_.size();
    pending_.clear();
    return std::move(graph_);
}

Graph build_graph(std::span<const LabelPair> edges, std::span<const std::string> extra_vertices) {
    GraphBuilder builder;
    for (const auto& [a, b] : edges) {
        builder.add_edge(a, b);
    }
    for (const auto& label : extra_vertices) {
        builder.add_vertex(label);
    }
    return std::move(builder).build();
}

// ---------------------------------------------------------------------------
// Edge lists

Graph load_edge_list(std::istream& in) {
    GraphBuilder builder;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r\f\v");
        if (first == std::string::npos || line[first] == '#' || line[first] == '%') {
            continue;
        }
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a >> b) || (fields >> extra)) {
            throw ParseError(line_no, "line " + std::to_string(line_no) + ": expected exactly two vertex labels");
        }
        builder.add_edge(a, b);
    }
    return std::move(builder).build();
}

Graph load_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return load_edge_list(in);
}

// ---------------------------------------------------------------------------
// GML

namespace {

struct GmlToken {
    enum class Kind { Key, Number, String, Open, Close, End } kind;
    std::string text;
    std::size_t offset;  // 1-based
};

class GmlLexer {
public:
    explicit GmlLexer(std::string_view src) : src_(src) {}

    GmlToken next() {
        skip_space_and_comments();
        std::size_t start = pos_ + 1;
        if (pos_ >= src_.size()) {
            return {GmlToken::Kind::End, {}, start};
        }
        char c = src_[pos_];
        if (c == '[') {
            ++pos_;
            return {GmlToken::Kind::Open, "[", start};
        }
        if (c == ']') {
            ++pos_;
            return {GmlToken::Kind::Close, "]", start};
        }
        if (c == '"') {
            auto close = src_.find('"', pos_ + 1);
            if (close == std::string_view::npos) {
                throw ParseError(start, "GML: unterminated string at offset " + std::to_string(start));
            }
            std::string text(src_.substr(pos_ + 1, close - pos_ - 1));
            pos_ = close + 1;
            return {GmlToken::Kind::String, std::move(text), start};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) {
                ++end;
            }
            std::string text(src_.substr(pos_, end - pos_));
            pos_ = end;
            return {GmlToken::Kind::Key, std::move(text), start};
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.') {
            std::size_t end = pos_ + 1;
            while (end < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[end])) ||
                                         src_[end] == '.' || src_[end] == '-' || src_[end] == '+')) {
                ++end;
            }
            std::string text(src_.substr(pos_, end - pos_));
            pos_ = end;
            return {GmlToken::Kind::Number, std::move(text), start};
        }
        throw ParseError(start, std::string("GML: unexpected character '") + c + "' at offset " +
                                    std::to_string(start));
    }

private:
    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    ++pos_;
                }
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

// Generic GML value: either a scalar or a bracketed list of key/value pairs.
struct GmlValue {
    std::string scalar;
    std::vector<std::pair<std::string, GmlValue>> children;
    bool is_list = false;
    std::size_t offset = 0;

    const GmlValue* get(std::string_view key) const {
        for (const auto& [k, v] : children) {
            if (k == key) {
                return &v;
            }
        }
        return nullptr;
    }
};

class GmlParser {
public:
    explicit GmlParser(std::string_view src) : lexer_(src) { advance(); }

    // Top level behaves like the body of a list terminated by end of input.
    GmlValue parse_document() {
        GmlValue root;
        root.is_list = true;
        parse_pairs(root, GmlToken::Kind::End);
        return root;
    }

private:
    void advance() { current_ = lexer_.next(); }

    void parse_pairs(GmlValue& into, GmlToken::Kind terminator) {
        while (current_.kind != terminator) {
            if (current_.kind != GmlToken::Kind::Key) {
                throw ParseError(current_.offset, "GML: expected key at offset " + std::to_string(current_.offset));
            }
            std::string key = current_.text;
            advance();
            into.children.emplace_back(std::move(key), parse_value());
        }
        advance();
    }

    GmlValue parse_value() {
        GmlValue value;
        value.offset = current_.offset;
        switch (current_.kind) {
        case GmlToken::Kind::Number:
        case GmlToken::Kind::String:
        case GmlToken::Kind::Key:  // bare words appear in some writers
            value.scalar = current_.text;
            advance();
            return value;
        case GmlToken::Kind::Open:
            advance();
            value.is_list = true;
            parse_pairs(value, GmlToken::Kind::Close);
            return value;
        default:
            throw ParseError(current_.offset,
                             "GML: expected value at offset " + std::to_string(current_.offset));
        }
    }

    GmlLexer lexer_;
    GmlToken current_{};
};

std::string gml_scalar(const GmlValue& owner, std::string_view key) {
    const GmlValue* v = owner.get(key);
    if (v == nullptr || v->is_list) {
        throw ParseError(owner.offset, "GML: missing scalar '" + std::string(key) + "' in block at offset " +
                                           std::to_string(owner.offset));
    }
    return v->scalar;
}

}  // namespace

Graph load_gml(std::string_view text) {
    GmlValue doc = GmlParser(text).parse_document();
    const GmlValue* graph = doc.get("graph");
    if (graph == nullptr || !graph->is_list) {
        throw ParseError(1, "GML: no 'graph [ ... ]' block");
    }

    GraphBuilder builder;
    std::unordered_set<std::string> declared;
    for (const auto& [key, value] : graph->children) {
        if (key == "node") {
            std::string id = gml_scalar(value, "id");
            builder.add_vertex(id);
            declared.insert(std::move(id));
        }
    }
    for (const auto& [key, value] : graph->children) {
        if (key != "edge") {
            continue;
        }
        std::string source = gml_scalar(value, "source");
        std::string target = gml_scalar(value, "target");
        for (const auto* endpoint : {&source, &target}) {
            if (!declared.contains(*endpoint)) {
                throw UnknownEndpoint(value.offset, *endpoint);
            }
        }
        builder.add_edge(source, target);
    }
    return std::move(builder).build();
}

Graph load_gml(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return load_gml(std::string_view(text));
}

// ---------------------------------------------------------------------------
// Serialisation

std::string to_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) {
        out += g.label(u);
        out += ' ';
        out += g.label(v);
        out += '\n';
    }
    return out;
}

std::string to_json(const Graph& g) {
    std::vector<std::string> vertices = g.labels();
    std::sort(vertices.begin(), vertices.end());

    std::vector<std::pair<std::string, std::string>> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) {
        const auto& a = g.label(u);
        const auto& b = g.label(v);
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());

    nlohmann::json doc;
    doc["vertices"] = vertices;
    doc["edges"] = nlohmann::json::array();
    for (const auto& [a, b] : edges) {
        doc["edges"].push_back({a, b});
    }
    return doc.dump();
}

// ---------------------------------------------------------------------------
// Delta and perturbation

namespace {

Graph graph_over(const std::vector<std::string>& labels, const std::vector<Edge>& edges) {
    GraphBuilder builder;
    for (const auto& label : labels) {
        builder.add_vertex(label);
    }
    for (auto [u, v] : edges) {
        builder.add_edge(u, v);
    }
    return std::move(builder).build();
}

}  // namespace

Graph GraphDelta::removed_graph() const { return graph_over(labels, removed); }
Graph GraphDelta::added_graph() const { return graph_over(labels, added); }

GraphDelta graph_delta(const Graph& g, const Graph& g_prime) {
    GraphDelta delta;
    delta.labels = g.labels();
    std::unordered_map<std::string, VertexId> unified;
    for (VertexId v = 0; v < delta.labels.size(); ++v) {
        unified.emplace(delta.labels[v], v);
    }
    std::vector<VertexId> remap(g_prime.vertex_count());
    for (VertexId v = 0; v < g_prime.vertex_count(); ++v) {
        const auto& label = g_prime.label(v);
        auto [it, inserted] = unified.try_emplace(label, static_cast<VertexId>(delta.labels.size()));
        if (inserted) {
            delta.labels.push_back(label);
        }
        remap[v] = it->second;
    }

    std::vector<Edge> before = g.edges();
    std::vector<Edge> after;
    after.reserve(g_prime.edge_count());
    for (auto [u, v] : g_prime.edges()) {
        after.push_back(make_edge(remap[u], remap[v]));
    }
    std::sort(after.begin(), after.end());

    std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                        std::back_inserter(delta.removed));
    std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                        std::back_inserter(delta.added));
    return delta;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
    std::vector<char> kept(g.vertex_count(), 0);
    for (VertexId v : keep) {
        kept.at(v) = 1;
    }
    GraphBuilder builder;
    std::vector<VertexId> remap(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (kept[v]) {
            remap[v] = builder.add_vertex(g.label(v));
        }
    }
    for (auto [u, v] : g.edges()) {
        if (kept[u] && kept[v]) {
            builder.add_edge(remap[u], remap[v]);
        }
    }
    return std::move(builder).build();
}

Graph remove_vertex(const Graph& g, std::string_view label) {
    auto victim = g.find(label);
    if (!victim) {
        throw UnknownVertex(std::string(label));
    }
    std::vector<VertexId> keep;
    keep.reserve(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (v != *victim) {
            keep.push_back(v);
        }
    }
    return induced_subgraph(g, keep);
}

}  // namespace cptree
