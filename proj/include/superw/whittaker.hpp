#ifndef SUPERW_WHITTAKER_HPP
#define SUPERW_WHITTAKER_HPP

#include "superw/grading.hpp"
#include "superw/pbw.hpp"
#include "superw/weights.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace superw {

struct TruncationOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Vector in a type-I induced module, coordinates keyed by (subset of the
/// free odd generators as a bitmask, power of the core element h).
class ModuleVector {
public:
  ModuleVector() = default;

  void add(unsigned mask, int k, const Rational& coeff);
  ModuleVector& operator+=(const ModuleVector& other);
  ModuleVector operator+(const ModuleVector& other) const;
  ModuleVector operator-(const ModuleVector& other) const;
  ModuleVector operator*(const Rational& factor) const;
  bool operator==(const ModuleVector& other) const { return terms_ == other.terms_; }
  bool isZero() const { return terms_.empty(); }
  Rational coeff(unsigned mask, int k) const;
  const std::map<std::pair<unsigned, int>, Rational>& terms() const { return terms_; }

  static ModuleVector basis(unsigned mask, int k);

private:
  std::map<std::pair<unsigned, int>, Rational> terms_;
};

/// Induced module Lambda(free odd layer) (x) rank-1 even core. The core has
/// basis {h^k v} with f v = v and the Casimir h^2 + 2h + 4fe acting by gamma;
/// the complementary odd layer annihilates the core generator.
class TypeIModule {
public:
  static TypeIModule forGl12(const LieSuperalgebra& A, const Weight& lambda);
  static TypeIModule forOsp22(const LieSuperalgebra& A, const Weight& lambda);
  static TypeIModule forP2(const LieSuperalgebra& A, const Weight& lambda);

  const LieSuperalgebra& algebra() const { return *A_; }
  const std::vector<int>& freeOdd() const { return freeOdd_; }
  const Rational& gamma() const { return gamma_; }
  const Weight& weight() const { return lambda_; }

  /// Action of an algebra element; throws TruncationOverflow when a result
  /// would need an h-power above kLimit.
  ModuleVector act(const SuperVector& x, const ModuleVector& vec, int kLimit) const;

  std::string basisLabel(unsigned mask, int k) const;
  std::string describe(const ModuleVector& vec) const;

private:
  ModuleVector actFree(int position, const ModuleVector& vec) const;
  ModuleVector actZeroOdd(int index, unsigned mask, int k, int kLimit) const;
  ModuleVector actEven(const SuperVector& z, const ModuleVector& vec, int kLimit) const;
  ModuleVector actEvenCore(const SuperVector& z, unsigned mask, int k, int kLimit) const;

  const LieSuperalgebra* A_ = nullptr;
  Weight lambda_;
  std::vector<int> freeOdd_;
  std::vector<int> zeroOdd_;
  SuperVector e_, f_, h_;
  std::vector<std::pair<SuperVector, Rational>> centrals_;
  Rational gamma_;
};

struct WhittakerSolution {
  int dimension = 0;
  bool stable = false;
  std::vector<ModuleVector> basis;
};

/// Exact basis of {w : (x - zeta(x))w = 0 for x in the m-basis} in the
/// truncation at K, restricted to even m-elements when evenOnly is set. The
/// stable flag records agreement of the dimensions at K and K + 1.
WhittakerSolution whittakerVectors(const TypeIModule& M, const NilpotentData& nil, bool evenOnly,
                                   int K);

/// Image of u . 1_zeta in Q_zeta = U(g)/I_zeta: the rightmost m-factors of
/// every monomial are replaced by their zeta-values. Requires an engine with
/// an m-last order.
UEAElement reduceInQ(const PBWEngine& engine, const WhittakerCharacter& zeta,
                     const UEAElement& u);

/// a_0 = 1, a_{k+1} = -a_k / ((k+1)(k + lamH)); throws std::domain_error when
/// lamH hits a pole (lambda(h) in {0, -1, ..., -(K-1)}).
std::vector<Rational> osp12WhittakerSeries(const Rational& lamH, int K);

/// PBW check in the truncated Verma completion: w = sum a_k e^k v satisfies
/// f w = w through degree K - 1, and F w != 0.
bool osp12VerifySeries(const LieSuperalgebra& A, const Rational& lamH,
                       const std::vector<Rational>& coeffs);

} // namespace superw

#endif // SUPERW_WHITTAKER_HPP
