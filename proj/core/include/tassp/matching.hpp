#ifndef TASSP_MATCHING_HPP_
#define TASSP_MATCHING_HPP_

#include <utility>
#include <vector>

namespace tassp {

// Matching strategy for the odd-vertex step of christofides().
// Exact is the default and the only mode under which the 3/2 tour guarantee
// (and everything built on it) holds. GreedyUnsafe trades the guarantee for
// speed and must be surfaced in any report produced from its output.
enum class MatchingMode { Exact, GreedyUnsafe };

// Minimum-weight perfect matching on a complete graph given a full weight
// table (square, symmetric, weights[i][j] = cost of pairing i and j).
// Returns pairs (i, j) with i < j, sorted by i, covering every vertex once.
// Exact: subset dynamic programming for up to 22 vertices, an O(n^3) blossom
// above that. Throws std::invalid_argument on odd cardinality or a non-square
// table.
std::vector<std::pair<int, int>> exact_matching(const std::vector<std::vector<double>>& weights);

// Cheapest-edge-first heuristic matching. Same contract on the input and the
// output shape as exact_matching, no optimality guarantee.
std::vector<std::pair<int, int>> greedy_matching(const std::vector<std::vector<double>>& weights);

// Total weight of a matching under the given table.
double matching_weight(const std::vector<std::vector<double>>& weights,
                       const std::vector<std::pair<int, int>>& matching);

}  // namespace tassp

#endif  // TASSP_MATCHING_HPP_
