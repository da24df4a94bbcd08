#pragma once

#include <utility>
#include <vector>

#include "tww/sequence.hpp"

namespace tww {

struct ExactResult {
  int width = 0;
  ContractionSequence witness;
};

// Minimum width over all full contraction sequences, by iterative deepening
// on the width bound with an infeasible-state cache. States with at most
// seven alive vertices are cached under a canonical relabeling (lexicographic
// minimum of the colored adjacency matrix over all permutations), larger ones
// under their literal encoding. Throws std::invalid_argument above the cap.
ExactResult exact_twinwidth(int n, const std::vector<std::pair<int, int>>& edges, int cap = 9);

// Same value by plain enumeration of every full sequence, no pruning and no
// cache. Exists to keep the solver above honest; the cap is small because the
// sequence count explodes.
int exact_twinwidth_naive(int n, const std::vector<std::pair<int, int>>& edges, int cap = 6);

}  // namespace tww
