#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cptree/bottleneck.hpp"
#include "cptree/graph.hpp"

namespace cptree {

inline constexpr std::size_t kDefaultCoverBudget = 1'000'000;

/// A vertex set touching every edge of the graph it was computed for.
struct CoverCertificate {
    std::vector<VertexId> vertices;  // sorted
    std::size_t covered_edge_count = 0;
};

/// Minimum vertex cover size, exact or bracketed.
///
/// When the branch-and-bound budget runs out the result is the interval
/// [maximal-matching lower bound, size of the best cover found]; the best
/// cover is never worse than the matching-endpoint 2-approximation.
struct CoverResult {
    std::size_t lower = 0;
    std::size_t upper = 0;
    CoverCertificate cover;  // a cover of size `upper`
    std::size_t nodes_explored = 0;

    bool exact() const noexcept { return lower == upper; }
};

CoverResult min_vertex_cover(const Graph& g, std::size_t node_budget = kDefaultCoverBudget);

/// Size of a greedily built maximal matching, scanning edges in sorted order.
std::size_t maximal_matching_size(const Graph& g);

/// Both endpoints of the greedy maximal matching.
CoverCertificate two_approximate_cover(const Graph& g);

/// True when every edge of g has an endpoint in `cover`.
bool is_vertex_cover(const Graph& g, const std::vector<VertexId>& cover);

/// One star number; `cover` is expressed over the delta's unified labels.
struct StarValue {
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::vector<std::string> cover;

    bool exact() const noexcept { return lower == upper; }
};

struct StarNumbers {
    StarValue rsn;
    StarValue asn;

    std::size_t tsn_lower() const noexcept { return rsn.lower + asn.lower; }
    std::size_t tsn_upper() const noexcept { return rsn.upper + asn.upper; }
    bool exact() const noexcept { return rsn.exact() && asn.exact(); }
};

/// Removal star number: fewest vertices touching every edge of g missing from g_prime.
StarValue rsn(const Graph& g, const Graph& g_prime, std::size_t node_budget = kDefaultCoverBudget);
/// Addition star number: fewest vertices touching every edge of g_prime missing from g.
StarValue asn(const Graph& g, const Graph& g_prime, std::size_t node_budget = kDefaultCoverBudget);
/// rsn + asn. Symmetric in its arguments.
StarNumbers tsn(const Graph& g, const Graph& g_prime, std::size_t node_budget = kDefaultCoverBudget);

struct StabilityReport {
    HalfInt d_bottleneck;
    StarNumbers stars;
    bool holds = false;  // d_bottleneck <= upper TSN
    HalfInt slack;       // upper TSN - d_bottleneck
};

struct StabilityOptions {
    std::size_t clique_cap = kDefaultCliqueCap;
    std::size_t cover_budget = kDefaultCoverBudget;
};

/// Builds both community trees and checks the bottleneck distance against TSN.
StabilityReport verify_stability(const Graph& g, const Graph& g_prime, const StabilityOptions& options = {});

/// {"rsn":..,"asn":..,"tsn":..,"exact":bool}; the report form adds
/// "d_bottleneck", "holds" and "slack". Inexact star numbers are written as
/// {"lower":..,"upper":..}.
std::string star_numbers_json(const StarNumbers& stars);
std::string stability_report_json(const StabilityReport& report);

}  // namespace cptree
