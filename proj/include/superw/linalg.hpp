#ifndef SUPERW_LINALG_HPP
#define SUPERW_LINALG_HPP

#include "superw/rational.hpp"

#include <vector>

namespace superw {

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<Eigen::Index> rowReduce(RatMatrix& mat);

Eigen::Index rank(RatMatrix mat);

/// Columns span the kernel {x : mat * x = 0}; empty matrix for trivial kernel.
RatMatrix nullspaceBasis(RatMatrix mat);

/// Solves mat * x = rhs exactly; throws std::domain_error when inconsistent.
RatVector solveExact(const RatMatrix& mat, const RatVector& rhs);

} // namespace superw

#endif // SUPERW_LINALG_HPP
