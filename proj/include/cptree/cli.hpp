#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cptree/cliques.hpp"
#include "cptree/graph.hpp"
#include "cptree/stability.hpp"

namespace cptree::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kResource = 3,
    kInvariant = 4,
};

enum class InputFormat { Auto, EdgeList, Gml };
enum class OutputFormat { Text, Json, Dot };

struct RunConfig {
    std::vector<std::string> inputs;
    InputFormat input_format = InputFormat::Auto;
    OutputFormat output_format = OutputFormat::Text;
    std::optional<std::string> out_path;
    std::size_t clique_cap = kDefaultCliqueCap;
    std::size_t mvc_budget = kDefaultCoverBudget;
    std::optional<std::uint64_t> seed;
};

/// Reads a graph file; `.gml` selects GML under InputFormat::Auto.
Graph load_graph_file(const std::string& path, InputFormat format);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Returns one of ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cptree::cli
