#pragma once

#include <vector>

namespace tww {

// One contraction: vertices a and b are replaced by vertex `result`.
// Result ids are always initial_count + number of prior contractions, so a
// step list replays without any side channel.
struct ContractionStep {
  int a = -1;
  int b = -1;
  int result = -1;

  bool operator==(const ContractionStep&) const = default;
};

struct ContractionSequence {
  int initial_count = 0;
  std::vector<ContractionStep> steps;

  bool full() const { return static_cast<int>(steps.size()) + 1 == initial_count; }
};

}  // namespace tww
