#pragma once

#include <cstdint>

namespace specgraph::detail {

// True iff no vertex relabeling of the graph given by row masks yields a
// lexicographically smaller column-major upper-triangle bit string, i.e.
// the labeling at hand is the canonical one.
bool is_min_labeled(const uint64_t* rows, int n);

}  // namespace specgraph::detail
