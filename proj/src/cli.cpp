#include "cptree/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "cptree/bottleneck.hpp"
#include "cptree/errors.hpp"
#include "cptree/random_graphs.hpp"
#include "cptree/tree.hpp"

namespace cptree::cli {

using nlohmann::json;

Graph load_graph_file(const std::string& path, InputFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    if (format == InputFormat::Auto) {
        std::string lower = path;
        std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
        format = lower.ends_with(".gml") ? InputFormat::Gml : InputFormat::EdgeList;
    }
    return format == InputFormat::Gml ? load_gml(in) : load_edge_list(in);
}

namespace {

struct Failure {
    int code;
    std::string message;
};

std::string point_text(std::pair<std::size_t, std::size_t> p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

std::string star_text(const StarValue& s) {
    std::string out = s.exact() ? std::to_string(s.upper)
                                : "[" + std::to_string(s.lower) + "," + std::to_string(s.upper) + "]";
    out += " {";
    for (std::size_t i = 0; i < s.cover.size(); ++i) {
        out += (i ? "," : "") + s.cover[i];
    }
    return out + "}";
}

std::string tsn_text(const StarNumbers& stars) {
    if (stars.exact()) {
        return std::to_string(stars.tsn_upper());
    }
    return "[" + std::to_string(stars.tsn_lower()) + "," + std::to_string(stars.tsn_upper()) + "]";
}

class Session {
public:
    Session(const RunConfig& config, std::ostream& out) : config_(config), out_(out) {}

    Graph load(std::size_t index) const { return load_graph_file(config_.inputs.at(index), config_.input_format); }

    int tree() {
        Graph g = load(0);
        CommunityTree t = community_tree(g, config_.clique_cap);
        std::ostringstream body;
        switch (config_.output_format) {
        case OutputFormat::Dot:
            body << export_tree(t, TreeFormat::Dot);
            break;
        case OutputFormat::Json:
            body << export_tree(t, TreeFormat::Json);
            break;
        case OutputFormat::Text:
            body << "vertices " << g.vertex_count() << ", edges " << g.edge_count() << "\n";
            body << "tree nodes " << t.size() << ", leaves " << t.leaves().size() << ", k_max " << t.max_order()
                 << "\n";
            body << "node order size parent\n";
            for (const auto& n : t.nodes) {
                body << n.id << ' ' << n.order << ' ' << n.community.vertices.size() << ' '
                     << (n.parent ? std::to_string(*n.parent) : "-") << "\n";
            }
            break;
        }
        return emit(body.str());
    }

    int diagram() {
        Graph g = load(0);
        PersistenceDiagram pd = persistence_diagram(community_tree(g, config_.clique_cap));
        if (config_.output_format == OutputFormat::Json) {
            return emit(diagram_to_json(pd));
        }
        std::ostringstream body;
        body << "death birth mult persistence\n";
        for (const auto& [p, mult] : pd.points) {
            body << p.first << ' ' << p.second << ' ' << mult << ' ' << (p.second - p.first) << "\n";
        }
        body << "points " << pd.total() << "\n";
        return emit(body.str());
    }

    int distance() {
        PersistenceDiagram a = persistence_diagram(community_tree(load(0), config_.clique_cap));
        PersistenceDiagram b = persistence_diagram(community_tree(load(1), config_.clique_cap));
        BottleneckResult r = bottleneck_distance(a, b);
        auto pa = a.expanded();
        auto pb = b.expanded();
        if (config_.output_format == OutputFormat::Json) {
            json doc;
            doc["d_bottleneck"] = r.distance.to_double();
            doc["matching"] = json::array();
            for (const auto& pair : r.matching.pairs) {
                json entry;
                entry["first"] = pair.first ? json{pa[*pair.first].first, pa[*pair.first].second} : json();
                entry["second"] = pair.second ? json{pb[*pair.second].first, pb[*pair.second].second} : json();
                entry["cost"] = pair.cost.to_double();
                doc["matching"].push_back(entry);
            }
            return emit(doc.dump(2) + "\n");
        }
        std::ostringstream body;
        body << "d_B = " << r.distance.to_string() << "\nmatching:\n";
        for (const auto& pair : r.matching.pairs) {
            body << "  " << (pair.first ? point_text(pa[*pair.first]) : "diagonal") << " -> "
                 << (pair.second ? point_text(pb[*pair.second]) : "diagonal") << " cost " << pair.cost.to_string()
                 << "\n";
        }
        return emit(body.str());
    }

    int tsn() {
        StarNumbers stars = cptree::tsn(load(0), load(1), config_.mvc_budget);
        if (config_.output_format == OutputFormat::Json) {
            return emit(star_numbers_json(stars) + "\n");
        }
        std::ostringstream body;
        body << "RSN = " << star_text(stars.rsn) << "\n";
        body << "ASN = " << star_text(stars.asn) << "\n";
        body << "TSN = " << tsn_text(stars) << "\n";
        body << "exact: " << (stars.exact() ? "yes" : "no") << "\n";
        return emit(body.str());
    }

    int verify_pair() {
        StabilityReport report = verify_stability(load(0), load(1), options());
        if (config_.output_format == OutputFormat::Json) {
            emit(stability_report_json(report) + "\n");
        } else {
            std::ostringstream body;
            body << report_line(report) << "\n";
            emit(body.str());
        }
        return report.holds ? kOk : kInvariant;
    }

    int verify_random(std::size_t n, double p, std::size_t trials, std::size_t max_focal) {
        Rng rng(*config_.seed);
        std::size_t held = 0;
        json doc;
        doc["trials"] = json::array();
        std::ostringstream body;
        for (std::size_t t = 1; t <= trials; ++t) {
            std::size_t size = 1 + uniform_below(rng, n);
            Graph g = random_gnp(size, p, rng);
            Graph g2 = perturb_focused(g, max_focal, rng);
            StabilityReport report = verify_stability(g, g2, options());
            held += report.holds;
            doc["trials"].push_back(json::parse(stability_report_json(report)));
            body << "trial " << t << " n=" << size << " " << report_line(report) << "\n";
        }
        doc["held"] = held;
        doc["total"] = trials;
        body << "holds " << held << "/" << trials << "\n";
        emit(config_.output_format == OutputFormat::Json ? doc.dump(2) + "\n" : body.str());
        return held == trials ? kOk : kInvariant;
    }

    // Deletes each vertex in turn; both d_B <= TSN and d_B <= 1 must hold.
    int verify_sweep() {
        Graph g = load(0);
        std::size_t held = 0;
        json doc;
        doc["trials"] = json::array();
        std::ostringstream body;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            Graph g2 = remove_vertex(g, g.label(v));
            StabilityReport report = verify_stability(g, g2, options());
            bool ok = report.holds && report.d_bottleneck <= HalfInt::from_int(1);
            held += ok;
            json entry = json::parse(stability_report_json(report));
            entry["vertex"] = g.label(v);
            entry["within_one"] = report.d_bottleneck <= HalfInt::from_int(1);
            doc["trials"].push_back(entry);
            body << "vertex " << g.label(v) << " " << report_line(report) << "\n";
        }
        doc["held"] = held;
        doc["total"] = g.vertex_count();
        body << "holds " << held << "/" << g.vertex_count() << "\n";
        emit(config_.output_format == OutputFormat::Json ? doc.dump(2) + "\n" : body.str());
        return held == g.vertex_count() ? kOk : kInvariant;
    }

private:
    StabilityOptions options() const { return {config_.clique_cap, config_.mvc_budget}; }

    static std::string report_line(const StabilityReport& r) {
        return "d_B=" + r.d_bottleneck.to_string() + " RSN=" + star_text(r.stars.rsn) +
               " ASN=" + star_text(r.stars.asn) + " TSN=" + tsn_text(r.stars) +
               (r.holds ? " holds" : " VIOLATED") + " slack=" + r.slack.to_string();
    }

    int emit(const std::string& text) {
        if (config_.out_path) {
            std::ofstream file(*config_.out_path, std::ios::binary);
            if (!file) {
                throw Failure{kUsage, "cannot write '" + *config_.out_path + "'"};
            }
            file << text;
        } else {
            out_ << text;
        }
        return kOk;
    }

    const RunConfig& config_;
    std::ostream& out_;
};

void add_common(CLI::App* cmd, RunConfig& config, std::size_t input_count) {
    const std::map<std::string, InputFormat> input_formats{
        {"auto", InputFormat::Auto}, {"edgelist", InputFormat::EdgeList}, {"gml", InputFormat::Gml}};
    const std::map<std::string, OutputFormat> output_formats{
        {"text", OutputFormat::Text}, {"json", OutputFormat::Json}, {"dot", OutputFormat::Dot}};
    auto* inputs = cmd->add_option("inputs", config.inputs, "Graph files (edge list or GML)");
    if (input_count > 0) {
        inputs->expected(static_cast<int>(input_count));
        inputs->required();
    } else {
        inputs->expected(0, 2);
    }
    cmd->add_option("--format", config.output_format, "Output format: text, json or dot")
        ->transform(CLI::CheckedTransformer(output_formats, CLI::ignore_case));
    cmd->add_option("--input-format", config.input_format, "Input format: auto, edgelist or gml")
        ->transform(CLI::CheckedTransformer(input_formats, CLI::ignore_case));
    cmd->add_option("--out", config.out_path, "Write output to this file instead of stdout");
    cmd->add_option("--clique-cap", config.clique_cap, "Maximum number of cliques to enumerate");
    cmd->add_option("--mvc-budget", config.mvc_budget, "Branch-and-bound node budget for vertex covers");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Community trees, persistence diagrams and stability bounds for networks", "cptree"};
    app.require_subcommand(1);

    RunConfig config;
    auto* tree_cmd = app.add_subcommand("tree", "Community tree of a graph");
    add_common(tree_cmd, config, 1);
    auto* diagram_cmd = app.add_subcommand("diagram", "Persistence diagram of a graph's community tree");
    add_common(diagram_cmd, config, 1);
    auto* distance_cmd = app.add_subcommand("distance", "Bottleneck distance between two community trees");
    add_common(distance_cmd, config, 2);
    auto* tsn_cmd = app.add_subcommand("tsn", "Removal, addition and total star numbers of a graph pair");
    add_common(tsn_cmd, config, 2);
    auto* verify_cmd = app.add_subcommand("verify", "Check d_B <= TSN on a pair, a random batch or a vertex sweep");
    add_common(verify_cmd, config, 0);
    std::vector<std::string> random_spec;
    bool sweep = false;
    std::size_t max_focal = 3;
    verify_cmd->add_option("--random", random_spec, "Random trials: n p trials [seed]")->expected(3, 4);
    verify_cmd->add_option("--seed", config.seed, "Seed for --random");
    verify_cmd->add_option("--focal", max_focal, "Most vertices touched by a random perturbation")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--vertex-sweep", sweep, "Delete each vertex of one input in turn");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    Session session(config, out);
    try {
        if (tree_cmd->parsed()) {
            return session.tree();
        }
        if (diagram_cmd->parsed()) {
            return session.diagram();
        }
        if (distance_cmd->parsed()) {
            return session.distance();
        }
        if (tsn_cmd->parsed()) {
            return session.tsn();
        }
        if (!random_spec.empty()) {
            if (random_spec.size() == 4) {
                config.seed = std::stoull(random_spec[3]);
            }
            if (!config.seed) {
                err << "verify --random requires --seed\n";
                return kUsage;
            }
            std::size_t n = std::stoul(random_spec[0]);
            double p = std::stod(random_spec[1]);
            std::size_t trials = std::stoul(random_spec[2]);
            if (n == 0 || p < 0.0 || p > 1.0) {
                err << "verify --random: need n >= 1 and 0 <= p <= 1\n";
                return kUsage;
            }
            return session.verify_random(n, p, trials, max_focal);
        }
        if (sweep) {
            if (config.inputs.size() != 1) {
                err << "verify --vertex-sweep takes exactly one input\n";
                return kUsage;
            }
            return session.verify_sweep();
        }
        if (config.inputs.size() != 2) {
            err << "verify needs two inputs, --random n p trials, or --vertex-sweep with one input\n";
            return kUsage;
        }
        return session.verify_pair();
    } catch (const Failure& f) {
        err << f.message << "\n";
        return f.code;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const SelfLoop& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const UnknownVertex& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << "\n";
        return kResource;
    } catch (const Inconsistent& e) {
        err << "internal invariant breach: " << e.what() << "\n";
        return kInvariant;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "argument out of range: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace cptree::cli
