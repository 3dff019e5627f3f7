#pragma once

#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace cptree {

/// Maximum-cardinality bipartite matching by Hopcroft-Karp.
/// Left vertices are [0, left_count), right vertices [0, right_count).
class BipartiteMatcher {
public:
    static constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();

    BipartiteMatcher(std::size_t left_count, std::size_t right_count)
        : adjacency_(left_count), match_left_(left_count, kFree), match_right_(right_count, kFree),
          level_(left_count) {}

    void add_edge(std::size_t left, std::size_t right) { adjacency_.at(left).push_back(right); }

    std::size_t solve() {
        std::size_t matched = 0;
        while (layer()) {
            for (std::size_t u = 0; u < adjacency_.size(); ++u) {
                if (match_left_[u] == kFree && augment(u)) {
                    ++matched;
                }
            }
        }
        return matched;
    }

    /// Right partner of `left`, or kFree.
    std::size_t partner_of_left(std::size_t left) const { return match_left_.at(left); }

private:
    static constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

    // BFS from free left vertices; true if some free right vertex is reachable.
    bool layer() {
        std::queue<std::size_t> queue;
        for (std::size_t u = 0; u < adjacency_.size(); ++u) {
            if (match_left_[u] == kFree) {
                level_[u] = 0;
                queue.push(u);
            } else {
                level_[u] = kUnreached;
            }
        }
        bool found = false;
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop();
            for (std::size_t v : adjacency_[u]) {
                std::size_t w = match_right_[v];
                if (w == kFree) {
                    found = true;
                } else if (level_[w] == kUnreached) {
                    level_[w] = level_[u] + 1;
                    queue.push(w);
                }
            }
        }
        return found;
    }

    bool augment(std::size_t u) {
        for (std::size_t v : adjacency_[u]) {
            std::size_t w = match_right_[v];
            if (w == kFree || (level_[w] == level_[u] + 1 && augment(w))) {
                match_left_[u] = v;
                match_right_[v] = u;
                return true;
            }
        }
        level_[u] = kUnreached;
        return false;
    }

    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<std::size_t> match_left_;
    std::vector<std::size_t> match_right_;
    std::vector<std::size_t> level_;
};

}  // namespace cptree
