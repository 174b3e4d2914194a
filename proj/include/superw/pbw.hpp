#ifndef SUPERW_PBW_HPP
#define SUPERW_PBW_HPP

#include "superw/grading.hpp"
#include "superw/superalgebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace superw {

/// Total order on basis indices used for PBW normal forms.
class PBWOrder {
public:
  /// plain basis-index order
  static PBWOrder identity(const LieSuperalgebra& A);
  /// complement of m first (negative-degree non-m, degree zero, positive
  /// degree), m last; makes reduction modulo I_zeta a right-to-left scan
  static PBWOrder mLast(const LieSuperalgebra& A, const ZGrading& grading,
                        const NilpotentData& nil);
  /// explicit rank-to-index sequence; must list every basis index once
  static PBWOrder fromSequence(const LieSuperalgebra& A, std::vector<int> indexAt);

  int rankOf(int index) const { return rankOf_.at(static_cast<std::size_t>(index)); }
  int indexAt(int rank) const { return indexAt_.at(static_cast<std::size_t>(rank)); }
  int size() const { return static_cast<int>(indexAt_.size()); }
  /// ranks >= this belong to the m-basis (size() when no m was supplied)
  int firstMRank() const { return firstMRank_; }

private:
  std::vector<int> rankOf_;
  std::vector<int> indexAt_;
  int firstMRank_ = 0;
};

/// factors: (rank, exponent), ranks strictly increasing, odd ranks exponent 1
struct PBWMonomial {
  std::vector<std::pair<int, int>> factors;

  bool operator<(const PBWMonomial& other) const { return factors < other.factors; }
  bool operator==(const PBWMonomial& other) const { return factors == other.factors; }
  bool empty() const { return factors.empty(); }
  int totalDegree() const;
};

class UEAElement {
public:
  UEAElement() = default;

  static UEAElement unit();

  void add(const PBWMonomial& mon, const Rational& coeff);
  UEAElement& operator+=(const UEAElement& other);
  UEAElement operator+(const UEAElement& other) const;
  UEAElement operator-(const UEAElement& other) const;
  UEAElement operator*(const Rational& factor) const;
  bool operator==(const UEAElement& other) const { return terms_ == other.terms_; }
  bool isZero() const { return terms_.empty(); }

  const std::map<PBWMonomial, Rational>& terms() const { return terms_; }

private:
  std::map<PBWMonomial, Rational> terms_;
};

/// Normal-ordering and multiplication in U(g) for one fixed order. Rewrites
/// xy = (-1)^{|x||y|}yx + [x,y] and eagerly replaces odd squares by half
/// brackets; intermediate words are memoized.
class PBWEngine {
public:
  PBWEngine(const LieSuperalgebra& A, PBWOrder order) : A_(A), order_(std::move(order)) {}

  const LieSuperalgebra& algebra() const { return A_; }
  const PBWOrder& order() const { return order_; }

  UEAElement normalOrder(const std::vector<int>& wordIndices);
  UEAElement multiply(const UEAElement& u, const UEAElement& v);
  /// super-derivation [x, u]
  UEAElement adjointAct(int xIndex, const UEAElement& u);

  /// degree-1 image of an algebra element
  UEAElement fromVector(const SuperVector& x) const;
  UEAElement generator(int index) const { return fromVector(SuperVector::basis(index)); }

  int parityBitOfMonomial(const PBWMonomial& mon) const;
  std::string toJson(const UEAElement& u) const;

private:
  UEAElement normWord(const std::vector<int>& ranks);

  const LieSuperalgebra& A_;
  PBWOrder order_;
  std::map<std::vector<int>, UEAElement> memo_;
};

} // namespace superw

#endif // SUPERW_PBW_HPP
