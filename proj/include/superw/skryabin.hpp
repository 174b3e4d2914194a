#ifndef SUPERW_SKRYABIN_HPP
#define SUPERW_SKRYABIN_HPP

#include "superw/grading.hpp"
#include "superw/pbw.hpp"
#include "superw/whittaker.hpp"

#include <string>
#include <vector>

namespace superw {

/// Paired lists {u_i}, {x_i} with degree offsets d_s: the u's are a candidate
/// basis of m (even ones first), each x_s is grading-homogeneous of degree
/// -2 + d_s with matching parity.
struct SkryabinDatum {
  std::vector<SuperVector> u;
  std::vector<SuperVector> x;
  std::vector<int> d;
  int evenCount = 0; // u[0..evenCount) even, the rest odd

  int size() const { return static_cast<int>(u.size()); }
};

struct SkryabinReport {
  struct Finding {
    std::vector<int> indices;
    std::string expected;
    std::string computed;
  };
  struct Check {
    std::string name;
    bool pass = true;
    std::vector<Finding> witnesses;
  };

  std::vector<Check> checks;

  bool pass() const;
  std::string toJson() const;
};

/// q(n): u = {e_ab, f_ab : a < b}, x pairs e_ab with sum_k e_{b+k,a+k+1} and
/// f_ab with sum_k (-1)^k f_{b+k,a+k+1}, sums truncated to valid indices.
SkryabinDatum qnDatum(const LieSuperalgebra& A);

/// p(n): u = all negative-degree e_ab, s_ab, y_cd; x pairs them with
/// ov e_ab = sum_k e_{b+k,a+k+1}, ov s_ab = sum_k y_{a-k,b+k+1},
/// ov y_cd = sum_k s_{c+k,d-k-1}, truncated to valid indices.
SkryabinDatum pnDatum(const LieSuperalgebra& A);

/// Validates the datum shape, then the three hypotheses: (1) the u's are a
/// basis of m, (2) [u_i,x_i] is even, lies in g(-2) and has zeta-value 1,
/// (3) [u_i,x_j] in g(-2) for i != j has zeta-value 0.
SkryabinReport checkConditions(const LieSuperalgebra& A, const ZGrading& grading,
                               const NilpotentData& nil, const SkryabinDatum& datum);

/// Exhaustive check of the p(n) zeta-bracket tables: zeta([s_ab, y_cd]) is
/// 1 for (c,d) = (a,b+1), -1 for (c,d) = (a+1,b), 0 otherwise (bracket in m),
/// and the four ov-identities zeta([s_ab, ov s_ab]) = zeta([y_cd, ov y_cd]) = 1
/// and zeta([s_{a+l,b-l}, ov s_ab]) = zeta([y_{c+l,d-l}, ov y_cd]) = 0, l != 0.
SkryabinReport checkPnZetaTables(const LieSuperalgebra& A);

/// For every pair (a, b) of multi-indices with wt <= wtBound, reduces
/// u^a x^b 1_zeta in Q_zeta and asserts: a scalar c != 0 when a = b, and zero
/// whenever a > b under "wt descending, then |.| ascending" plus any
/// completion (ties with equal wt and |.| must vanish for all a != b).
/// Diagonal scalars are recorded in the report.
SkryabinReport verifyConclusions(const LieSuperalgebra& A, const ZGrading& grading,
                                 const NilpotentData& nil, const SkryabinDatum& datum,
                                 int wtBound);

/// Exact-rank independence of {x^a 1_zeta : wt(a) <= wtBound} in PBW
/// coordinates of Q_zeta.
SkryabinReport checkFreeness(const LieSuperalgebra& A, const ZGrading& grading,
                             const NilpotentData& nil, const SkryabinDatum& datum, int wtBound);

/// Multi-index enumeration: even slots unbounded, odd slots in {0,1},
/// filtered by wt(a) = sum d_s a_s <= wtBound; sorted ascending.
std::vector<std::vector<int>> multiIndices(const SkryabinDatum& datum, int wtBound);

} // namespace superw

#endif // SUPERW_SKRYABIN_HPP
