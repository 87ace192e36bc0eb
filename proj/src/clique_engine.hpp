#pragma once

#include <kcross/search.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace kcross::detail {

// Branch-and-bound search for a clique of exactly `target` vertices in a
// CompatibilityGraph whose vertex set reads as a family in normal form:
//
//   * the lexicographically least member has coordinate 1 equal to 0, and the
//     remaining members come later in vertex order (roots are those vectors);
//   * every coordinate i attains 0 and consecutive attained values differ by
//     at most gap[i];
//   * with `coordinate_one_smallest`, every coordinate reaches at least the
//     largest value seen on coordinate 1 (coordinate 1 has the smallest span).
//
// A partial clique C can only grow into such a family if, for each
// coordinate, the number of values still missing is at most target - |C|.
// Candidates failing that test are dropped; greedy colouring bounds the rest.
struct EngineConfig {
    std::int64_t target = 0;
    std::vector<Coord> gap;
    bool coordinate_one_smallest = false;
    SearchLimits limits;
};

struct EngineResult {
    bool found = false;
    std::vector<std::size_t> clique;
    bool truncated = false;
    std::string truncation_reason;
    std::uint64_t nodes = 0;
};

EngineResult find_clique(const CompatibilityGraph &graph, const EngineConfig &config);

} // namespace kcross::detail
