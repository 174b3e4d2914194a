#include "superw/linalg.hpp"

namespace superw {

std::vector<Eigen::Index> rowReduce(RatMatrix& mat) {
  const Eigen::Index rows = mat.rows(), cols = mat.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < rows; ++r) {
      if (!isZero(mat(r, col))) { pivot = r; break; }
    }
    if (pivot < 0) continue;
    if (pivot != row) mat.row(pivot).swap(mat.row(row));
    mat.row(row) /= mat(row, col);
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r != row && !isZero(mat(r, col))) {
        mat.row(r) -= mat(r, col) * mat.row(row);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Eigen::Index rank(RatMatrix mat) {
  return static_cast<Eigen::Index>(rowReduce(mat).size());
}

RatMatrix nullspaceBasis(RatMatrix mat) {
  const Eigen::Index cols = mat.cols();
  const std::vector<Eigen::Index> pivots = rowReduce(mat);
  std::vector<bool> isPivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index p : pivots) isPivot[static_cast<std::size_t>(p)] = true;

  const Eigen::Index freeCount = cols - static_cast<Eigen::Index>(pivots.size());
  RatMatrix basis = RatMatrix::Zero(cols, freeCount);
  Eigen::Index freeIdx = 0;
  for (Eigen::Index col = 0; col < cols; ++col) {
    if (isPivot[static_cast<std::size_t>(col)]) continue;
    basis(col, freeIdx) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis(pivots[r], freeIdx) = -mat(static_cast<Eigen::Index>(r), col);
    }
    ++freeIdx;
  }
  return basis;
}

RatVector solveExact(const RatMatrix& mat, const RatVector& rhs) {
  RatMatrix aug(mat.rows(), mat.cols() + 1);
  aug.leftCols(mat.cols()) = mat;
  aug.col(mat.cols()) = rhs;
  const std::vector<Eigen::Index> pivots = rowReduce(aug);
  if (!pivots.empty() && pivots.back() == mat.cols()) {
    throw std::domain_error("inconsistent linear system");
  }
  RatVector x = RatVector::Zero(mat.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    x(pivots[r]) = aug(static_cast<Eigen::Index>(r), mat.cols());
  }
  return x;
}

} // namespace superw
