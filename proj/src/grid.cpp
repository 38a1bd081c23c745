#include "conjlab/grid.hpp"

#include <string>

#include "conjlab/errors.hpp"

namespace conjlab {

bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

Grid::Grid(Eigen::Index n) : n_(n) {
  if (n < 4 || !is_power_of_two(n)) {
    throw input_error("grid size must be a power of two >= 4, got " +
                      std::to_string(n));
  }
}

Eigen::ArrayXd Grid::points() const {
  Eigen::ArrayXd x(n_);
  for (Eigen::Index j = 0; j < n_; ++j) x[j] = point(j);
  return x;
}

}  // namespace conjlab
