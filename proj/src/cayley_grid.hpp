#pragma once

// Shared padding/absorption/twist grid used by both the projective and the
// weighted host searches.

#include <optional>
#include <span>
#include <vector>

#include "fanohost/cayley.hpp"

namespace fano::detail {

struct GridProblem {
  int ambient_dim = 0;
  int ambient_index = 0;
  std::vector<int> degrees;  // descending
  bool allow_pad = true;
  bool allow_absorb = false;
  int pad_max = 0;
  int twist_max = 0;
};

struct GridPoint {
  int padding = 0;
  std::vector<int> absorbed;  // descending
  std::vector<int> bundle;    // descending
  int base_dim = 0;
  int base_index = 0;
  int twist = 0;
  int host_dim = 0;
  FanoTestResult test;
};

/// max(sum(d) - index + codim, 2) + 1
int grid_pad_bound(int ambient_index, std::span<const int> degrees);

std::optional<GridPoint> search_grid(const GridProblem& problem);

}  // namespace fano::detail
