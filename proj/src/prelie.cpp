#include "eps/prelie.hpp"

namespace eps {

ForestComb prelie_forest(const Forest& f1, const Forest& f2) {
  const std::size_t n = f2.vertex_count();
  ForestComb out;
  const auto order = vertex_order_indices(f2);
  std::vector<char> upper(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<char> lower(n, 0);
    for (std::size_t j = k + 1; j < n; ++j) lower[order[j]] = 1;
    out.add(restrict_mask(f2, upper) * f1 * restrict_mask(f2, lower), Rat(1));
    upper[order[k]] = 1;
  }
  return out;
}

}  // namespace eps
