#include "cptree/bottleneck.hpp"

#include <algorithm>
#include <cstdlib>

#include "cptree/matching.hpp"

namespace cptree {

std::string HalfInt::to_string() const {
    std::int64_t magnitude = std::llabs(twice_);
    std::string out = twice_ < 0 ? "-" : "";
    out += std::to_string(magnitude / 2);
    out += (magnitude % 2 == 0) ? ".0" : ".5";
    return out;
}

HalfInt linf(ScaledPoint p, ScaledPoint q) {
    return HalfInt::from_twice(std::max(std::llabs(p.death2 - q.death2), std::llabs(p.birth2 - q.birth2)));
}

HalfInt diagonal_cost(ScaledPoint p) { return HalfInt::from_twice(std::llabs(p.birth2 - p.death2) / 2); }

namespace {

std::vector<ScaledPoint> scaled(const PersistenceDiagram& pd) {
    std::vector<ScaledPoint> out;
    for (auto [death, birth] : pd.expanded()) {
        out.push_back(ScaledPoint::from(death, birth));
    }
    return out;
}

// Left side: a[0..n) then diagonal slots for b[0..m).
// Right side: b[0..m) then diagonal slots for a[0..n).
class ThresholdGraph {
public:
    ThresholdGraph(const std::vector<ScaledPoint>& a, const std::vector<ScaledPoint>& b) : a_(a), b_(b) {}

    std::size_t size() const { return a_.size() + b_.size(); }

    // Perfect matching with every edge cost <= limit, or nullopt.
    std::optional<BipartiteMatcher> match(HalfInt limit) const {
        const std::size_t n = a_.size();
        const std::size_t m = b_.size();
        BipartiteMatcher matcher(n + m, n + m);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                if (linf(a_[i], b_[j]) <= limit) {
                    matcher.add_edge(i, j);
                }
            }
            if (diagonal_cost(a_[i]) <= limit) {
                matcher.add_edge(i, m + i);
            }
        }
        for (std::size_t j = 0; j < m; ++j) {
            if (diagonal_cost(b_[j]) <= limit) {
                matcher.add_edge(n + j, j);
            }
            for (std::size_t i = 0; i < n; ++i) {
                matcher.add_edge(n + j, m + i);
            }
        }
        if (matcher.solve() != n + m) {
            return std::nullopt;
        }
        return matcher;
    }

    Matching witness(const BipartiteMatcher& matcher) const {
        const std::size_t n = a_.size();
        const std::size_t m = b_.size();
        Matching out;
        for (std::size_t left = 0; left < n + m; ++left) {
            std::size_t right = matcher.partner_of_left(left);
            MatchedPair pair;
            if (left < n) {
                pair.first = left;
                if (right < m) {
                    pair.second = right;
                    pair.cost = linf(a_[left], b_[right]);
                } else {
                    pair.cost = diagonal_cost(a_[left]);
                }
            } else if (right < m) {
                pair.second = right;
                pair.cost = diagonal_cost(b_[right]);
            } else {
                continue;  // diagonal to diagonal
            }
            out.cost = std::max(out.cost, pair.cost);
            out.pairs.push_back(pair);
        }
        return out;
    }

private:
    const std::vector<ScaledPoint>& a_;
    const std::vector<ScaledPoint>& b_;
};

}  // namespace

BottleneckResult bottleneck_distance(const PersistenceDiagram& pd1, const PersistenceDiagram& pd2) {
    const auto a = scaled(pd1);
    const auto b = scaled(pd2);

    std::vector<HalfInt> candidates{HalfInt{}};
    for (const auto& p : a) {
        candidates.push_back(diagonal_cost(p));
        for (const auto& q : b) {
            candidates.push_back(linf(p, q));
        }
    }
    for (const auto& q : b) {
        candidates.push_back(diagonal_cost(q));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // Feasibility is monotone in the threshold and the largest candidate
    // (every point to the diagonal) is always feasible.
    ThresholdGraph graph(a, b);
    std::size_t lo = 0;
    std::size_t hi = candidates.size() - 1;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (graph.match(candidates[mid])) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    auto matcher = graph.match(candidates[lo]);
    BottleneckResult result;
    result.distance = candidates[lo];
    result.matching = graph.witness(*matcher);
    return result;
}

HalfInt tree_distance(const CommunityTree& t1, const CommunityTree& t2) {
    return bottleneck_distance(persistence_diagram(t1), persistence_diagram(t2)).distance;
}

}  // namespace cptree
