#ifndef SUPERW_AUTOMORPHISM_HPP
#define SUPERW_AUTOMORPHISM_HPP

#include "superw/grading.hpp"
#include "superw/superalgebra.hpp"

#include <string>
#include <vector>

namespace superw {

/// Coefficient table a_ij = a_i a_{i+1} ... a_{j-1} for i < j, a_ji = a_ij^-1,
/// a_kk = 1, built from n-1 non-zero entries; satisfies a_ij a_jk = a_ik.
class ScalingSequence {
public:
  explicit ScalingSequence(std::vector<Rational> entries);

  int n() const { return static_cast<int>(entries_.size()) + 1; }
  const std::vector<Rational>& entries() const { return entries_; }
  /// 1-based indices
  Rational at(int i, int j) const;

private:
  std::vector<Rational> entries_;
};

/// Diagonal linear map: basis index -> scalar * basis index.
struct AlgebraMap {
  std::vector<Rational> scalars;

  SuperVector apply(const SuperVector& x) const;
  bool isIdentity() const;
};

struct AutomorphismReport {
  struct Witness {
    int i = 0, j = 0;
    std::string expected;
    std::string computed;
  };
  bool pass = true;
  std::vector<Witness> witnesses;
  std::string toJson() const;
};

/// Scaling automorphism for p(n) or q(n): e_ij -> a_ij e_ij, f_ij -> a_ij f_ij
/// (q), s_pq -> a_pn a_qn s_pq, y_pq -> a_pn^-1 a_qn^-1 y_pq (p). By default
/// the s-rule is applied uniformly, including s_ii -> a_in^2 s_ii, which is
/// what bracket preservation forces; literalDiagonal keeps s_ii fixed instead.
AlgebraMap buildPhi(const LieSuperalgebra& A, const ScalingSequence& a,
                    bool literalDiagonal = false);

/// Exhaustive check of phi([x,y]) = [phi(x), phi(y)] over all basis pairs,
/// plus invertibility of the diagonal.
AutomorphismReport isAutomorphism(const LieSuperalgebra& A, const AlgebraMap& phi);

/// (zeta o phi) restricted to m; diagonal maps always preserve m.
WhittakerCharacter transportCharacter(const LieSuperalgebra& A, const AlgebraMap& phi,
                                      const WhittakerCharacter& zeta);

/// Scaling entries a_i = zeta(e_i)^-1 (1 when zeta(e_i) = 0) over the simple
/// even root vectors, so the transported character has simple values in {0,1}.
std::vector<Rational> normalizationScaling(const LieSuperalgebra& A,
                                           const WhittakerCharacter& zeta);

} // namespace superw

#endif // SUPERW_AUTOMORPHISM_HPP
