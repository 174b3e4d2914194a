#ifndef SUPERW_WEIGHTS_HPP
#define SUPERW_WEIGHTS_HPP

#include "superw/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace superw {

using Weight = std::vector<Rational>;

Weight parseWeight(const std::string& csv);
std::string weightToString(const Weight& w);

/// w(v)_i = sign[i] * v[perm[i]]; plain permutations have all signs +1.
struct WeylElement {
  std::vector<int> perm;
  std::vector<int> sign;

  static WeylElement identityOf(int rank);
};

/// Half sum of positive even roots for gl(m)+gl(n) in the epsilon/delta
/// coordinates; n = 0 gives the plain gl(m) Weyl vector.
Weight rho0Gl(int m, int n);
/// rho = rho0 - rho1 with rho1 the half sum of positive odd roots.
Weight rhoGl(int m, int n);

/// w . lambda = w(lambda + shift) - shift
Weight dotAction(const WeylElement& w, const Weight& lambda, const Weight& shift);

struct LinkageWitness {
  bool linked = false;
  // pairs (p, q) meaning the isotropic odd root eps_p - delta_q (1-based)
  std::vector<std::pair<int, int>> roots;
  std::vector<long> shifts;
};

/// Decides the linkage relation on integral gl(m|n) weights: mu + rho lies in
/// the Weyl orbit of lambda + rho - sum c_i alpha_i for mutually orthogonal
/// isotropic odd roots alpha_i with <lambda + rho, alpha_i> = 0, |c_i| <= bound.
LinkageWitness linkageGl(int m, int n, const Weight& lambda, const Weight& mu, int bound);

/// gamma = (lambda_2 - 1)^2 - 1
Rational casimirScalarOsp22(const Weight& lambda);
/// (lambda_1 - lambda_2)(lambda_1 + lambda_2 - 2) != 0
bool typicalOsp22(const Weight& lambda);

} // namespace superw

#endif // SUPERW_WEIGHTS_HPP
