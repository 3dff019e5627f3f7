#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cptree/tree.hpp"

namespace cptree {

/// Exact value with denominator at most 2, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt(twice); }
    static constexpr HalfInt from_int(std::int64_t value) { return HalfInt(2 * value); }

    constexpr std::int64_t twice() const noexcept { return twice_; }
    constexpr double to_double() const noexcept { return static_cast<double>(twice_) / 2.0; }

    /// Decimal with exactly one fractional digit, e.g. "0.5", "3.0", "-1.5".
    std::string to_string() const;

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

private:
    constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}
    std::int64_t twice_ = 0;
};

/// A diagram point in doubled coordinates; halving recovers (death, birth).
struct ScaledPoint {
    std::int64_t death2 = 0;
    std::int64_t birth2 = 0;

    static ScaledPoint from(std::size_t death, std::size_t birth) {
        return {2 * static_cast<std::int64_t>(death), 2 * static_cast<std::int64_t>(birth)};
    }
    friend auto operator<=>(const ScaledPoint&, const ScaledPoint&) = default;
};

/// L-infinity distance between two points.
HalfInt linf(ScaledPoint p, ScaledPoint q);

/// L-infinity distance from a point to its nearest diagonal point: (b - d) / 2.
HalfInt diagonal_cost(ScaledPoint p);

/// One matched pair; an empty side means the diagonal. Indices refer to
/// PersistenceDiagram::expanded() of the respective diagram.
struct MatchedPair {
    std::optional<std::size_t> first;
    std::optional<std::size_t> second;
    HalfInt cost;
};

/// Bijection between the augmented point sets. Diagonal-to-diagonal pairs are
/// omitted since they cost nothing.
struct Matching {
    std::vector<MatchedPair> pairs;
    HalfInt cost;  // largest pair cost
};

struct BottleneckResult {
    HalfInt distance;
    Matching matching;
};

/// Exact bottleneck distance with an optimal witness matching.
BottleneckResult bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b);

/// Bottleneck distance between the persistence diagrams of two trees.
HalfInt tree_distance(const CommunityTree& t1, const CommunityTree& t2);

}  // namespace cptree
