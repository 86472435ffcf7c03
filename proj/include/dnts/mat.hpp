#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace dnts {

// Plain dense row-major matrix of doubles. Used for dataset tensors and
// oracle arithmetic; the autodiff engine has its own tensor type.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> v;

  Mat() = default;
  Mat(int r, int c, double fill = 0.0)
      : rows(r), cols(c), v(static_cast<std::size_t>(r) * c, fill) {}

  double& at(int r, int c) {
    assert(r >= 0 && r < rows && c >= 0 && c < cols);
    return v[static_cast<std::size_t>(r) * cols + c];
  }
  double at(int r, int c) const {
    assert(r >= 0 && r < rows && c >= 0 && c < cols);
    return v[static_cast<std::size_t>(r) * cols + c];
  }
  std::size_t size() const { return v.size(); }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && v == o.v;
  }
};

}  // namespace dnts
