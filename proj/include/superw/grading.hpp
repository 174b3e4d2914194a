#ifndef SUPERW_GRADING_HPP
#define SUPERW_GRADING_HPP

#include "superw/superalgebra.hpp"

#include <map>
#include <optional>
#include <vector>

namespace superw {

struct SL2Triple {
  SuperVector e, h, f;
};

/// ad(h) eigenvalue per basis element; the standard bases are eigenvectors.
class ZGrading {
public:
  explicit ZGrading(std::vector<int> degrees) : degrees_(std::move(degrees)) {}

  int degree(int index) const { return degrees_.at(static_cast<std::size_t>(index)); }
  int size() const { return static_cast<int>(degrees_.size()); }

  /// common degree of all terms; nullopt for 0 or inhomogeneous input
  std::optional<int> degreeOf(const SuperVector& x) const;

  std::vector<int> component(int degree) const;

private:
  std::vector<int> degrees_;
};

/// Linear functional on m, stored by basis index of the ambient algebra.
class WhittakerCharacter {
public:
  WhittakerCharacter() = default;
  explicit WhittakerCharacter(std::map<int, Rational> values) : values_(std::move(values)) {}

  Rational value(int index) const;
  Rational evaluate(const SuperVector& x) const;
  void set(int index, const Rational& v);
  const std::map<int, Rational>& values() const { return values_; }

private:
  std::map<int, Rational> values_;
};

struct NilpotentData {
  std::vector<int> mBasis;     // basis indices spanning m, even elements first
  std::vector<int> lagrangian; // subset of mBasis inside g(-1); empty for even gradings
  WhittakerCharacter zeta;
};

/// Explicit principal triple per family; sl(2) relations are
/// verified before returning. gl is supported at (1|2) only.
SL2Triple principalSl2(const LieSuperalgebra& A);

/// Throws if some basis element is not an integer ad(h)-eigenvector.
ZGrading dynkinGrading(const LieSuperalgebra& A, const SuperVector& h);

/// m = (sum of degrees <= -2) plus a Lagrangian of g(-1) when g(-1) != 0.
/// zeta is (e|x) under the family form, rescaled so that simple even root
/// values are exactly 1, and zero on odd elements.
NilpotentData buildNilpotentData(const LieSuperalgebra& A, const ZGrading& grading,
                                 const SuperVector& e,
                                 const std::vector<int>* lagrangian = nullptr);

/// Basis indices of the simple even root spaces that lie inside m.
std::vector<int> simpleEvenRootIndices(const LieSuperalgebra& A);

bool isNonsingular(const LieSuperalgebra& A, const WhittakerCharacter& zeta);

} // namespace superw

#endif // SUPERW_GRADING_HPP
