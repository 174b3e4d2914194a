#ifndef SUPERW_SUPERALGEBRA_HPP
#define SUPERW_SUPERALGEBRA_HPP

#include "superw/linalg.hpp"
#include "superw/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superw {

enum class Parity { Even, Odd };

inline int parityBit(Parity p) { return p == Parity::Odd ? 1 : 0; }

enum class Family { GL, Q, P, OSP12, OSP22 };

std::string familyName(Family family);

/// Sparse element of the algebra in basis coordinates. Zero coefficients
/// are never stored.
class SuperVector {
public:
  SuperVector() = default;

  void add(int index, const Rational& coeff);
  void scale(const Rational& factor);
  SuperVector& operator+=(const SuperVector& other);
  SuperVector operator*(const Rational& factor) const;
  SuperVector operator-() const;
  SuperVector operator+(const SuperVector& other) const;
  SuperVector operator-(const SuperVector& other) const;

  bool operator==(const SuperVector& other) const { return terms_ == other.terms_; }
  bool operator!=(const SuperVector& other) const { return terms_ != other.terms_; }

  bool isZero() const { return terms_.empty(); }
  Rational coeff(int index) const;
  const std::map<int, Rational>& terms() const { return terms_; }

  static SuperVector basis(int index) {
    SuperVector v;
    v.add(index, 1);
    return v;
  }

private:
  std::map<int, Rational> terms_;
};

enum class BilinearFormKind { Supertrace, NegSupertrace, EvenTrace };

struct JacobiReport {
  bool pass = true;
  long checkedTriples = 0;
  // first failing (i,j,k) together with the residual, when pass is false
  int i = -1, j = -1, k = -1;
  SuperVector residual;
};

/// Basis-indexed structure-constant table generated from a block-graded
/// matrix realization; the realization is the single source of truth.
class LieSuperalgebra {
public:
  Family family() const { return family_; }
  const std::vector<int>& params() const { return params_; }
  int dim() const { return static_cast<int>(labels_.size()); }

  const std::string& label(int index) const { return labels_.at(static_cast<std::size_t>(index)); }
  int indexOf(const std::string& label) const;
  Parity parity(int index) const { return parities_.at(static_cast<std::size_t>(index)); }
  int parityBitOf(int index) const { return parityBit(parity(index)); }
  const std::vector<int>& cartan() const { return cartan_; }
  const RatMatrix& realization(int index) const { return matrices_.at(static_cast<std::size_t>(index)); }
  int matrixSize() const { return static_cast<int>(matrices_.front().rows()); }
  /// number of rows in the even (top-left) block of the realization
  int evenBlock() const { return evenBlock_; }

  /// Parity of a vector if it is homogeneous, nullopt otherwise.
  std::optional<Parity> homogeneousParity(const SuperVector& x) const;

  const SuperVector& bracketBasis(int i, int j) const;
  SuperVector bracket(const SuperVector& x, const SuperVector& y) const;

  RatMatrix realize(const SuperVector& x) const;
  /// Expresses a matrix in basis coordinates; throws if not in the span.
  SuperVector coordinates(const RatMatrix& mat) const;
  /// Supercommutator of realizations: xy - (-1)^{|x||y|} yx.
  RatMatrix superCommutator(int i, int j) const;

  JacobiReport checkJacobi() const;
  /// anticommutativity + table-vs-matrix agreement on all basis pairs
  bool checkStructureAgainstMatrices() const;

  Rational bilinearForm(BilinearFormKind kind, const SuperVector& x, const SuperVector& y) const;
  /// The designated invariant form of the family.
  BilinearFormKind designatedForm() const;

  std::string toJson() const;

  /// test hook: additively perturb one stored structure constant
  void perturbStructureConstant(int i, int j, int k, const Rational& delta);

private:
  friend LieSuperalgebra buildAlgebra(Family, const std::vector<int>&);

  void generateStructure();

  Family family_ = Family::GL;
  std::vector<int> params_;
  std::vector<std::string> labels_;
  std::vector<Parity> parities_;
  std::vector<RatMatrix> matrices_;
  std::vector<int> cartan_;
  int evenBlock_ = 0;
  // lazily built left inverse of the vectorized-basis matrix
  mutable RatMatrix coordMap_;
  // stored for i <= j only; the (j,i) entry is derived from
  // super-anticommutativity
  std::map<std::pair<int, int>, SuperVector> structure_;
};

/// Constructs gl(m|n), q(n), p(n), osp(1|2) or osp(2|2) from its matrix
/// realization. Throws std::invalid_argument for bad parameters.
LieSuperalgebra buildAlgebra(Family family, const std::vector<int>& params);

Family familyFromName(const std::string& name);

} // namespace superw

#endif // SUPERW_SUPERALGEBRA_HPP
