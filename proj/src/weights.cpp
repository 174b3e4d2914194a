#include "superw/weights.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace superw {

Weight parseWeight(const std::string& csv) {
  Weight out;
  std::stringstream stream(csv);
  std::string piece;
  while (std::getline(stream, piece, ',')) {
    out.push_back(rationalFromString(piece));
  }
  if (out.empty()) throw std::invalid_argument("empty weight");
  return out;
}

std::string weightToString(const Weight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += rationalToString(w[i]);
  }
  return out;
}

WeylElement WeylElement::identityOf(int rank) {
  WeylElement w;
  for (int i = 0; i < rank; ++i) {
    w.perm.push_back(i);
    w.sign.push_back(1);
  }
  return w;
}

Weight rho0Gl(int m, int n) {
  Weight rho;
  for (int i = 1; i <= m; ++i) rho.push_back(makeRational(m + 1 - 2 * i, 2));
  for (int j = 1; j <= n; ++j) rho.push_back(makeRational(n + 1 - 2 * j, 2));
  return rho;
}

Weight rhoGl(int m, int n) {
  Weight rho = rho0Gl(m, n);
  for (int i = 0; i < m; ++i) rho[static_cast<std::size_t>(i)] -= makeRational(n, 2);
  for (int j = 0; j < n; ++j) rho[static_cast<std::size_t>(m + j)] += makeRational(m, 2);
  return rho;
}

Weight dotAction(const WeylElement& w, const Weight& lambda, const Weight& shift) {
  const std::size_t rank = lambda.size();
  if (shift.size() != rank || w.perm.size() != rank || w.sign.size() != rank) {
    throw std::invalid_argument("rank mismatch in dot action");
  }
  std::vector<bool> seen(rank, false);
  for (std::size_t i = 0; i < rank; ++i) {
    const int p = w.perm[i];
    if (p < 0 || static_cast<std::size_t>(p) >= rank || seen[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(p)] = true;
    if (w.sign[i] != 1 && w.sign[i] != -1) throw std::invalid_argument("signs must be +-1");
  }
  Weight shifted(rank);
  for (std::size_t i = 0; i < rank; ++i) shifted[i] = lambda[i] + shift[i];
  Weight out(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    out[i] = Rational(w.sign[i]) * shifted[static_cast<std::size_t>(w.perm[i])] - shift[i];
  }
  return out;
}

namespace {

bool sameBlockOrbits(const Weight& a, const Weight& b, int m, int n) {
  auto sortedSlice = [](const Weight& w, int from, int len) {
    Weight s(w.begin() + from, w.begin() + from + len);
    std::sort(s.begin(), s.end());
    return s;
  };
  return sortedSlice(a, 0, m) == sortedSlice(b, 0, m) &&
         sortedSlice(a, m, n) == sortedSlice(b, m, n);
}

bool searchSubsets(const std::vector<std::pair<int, int>>& candidates, std::size_t from,
                   std::vector<std::pair<int, int>>& chosen, std::size_t maxLen,
                   const Weight& base, const Weight& target, int m, int n, int bound,
                   std::vector<long>& shifts, LinkageWitness& witness) {
  if (sameBlockOrbits(base, target, m, n)) {
    witness.linked = true;
    witness.roots = chosen;
    witness.shifts = shifts;
    return true;
  }
  if (chosen.size() == maxLen) return false;
  for (std::size_t t = from; t < candidates.size(); ++t) {
    const auto [p, q] = candidates[t];
    bool orthogonal = true;
    for (const auto& [cp, cq] : chosen) {
      if (cp == p || cq == q) orthogonal = false;
    }
    if (!orthogonal) continue;
    chosen.push_back(candidates[t]);
    for (long c = -bound; c <= bound; ++c) {
      if (c == 0) continue;
      Weight moved = base;
      // subtract c * (eps_p - delta_q)
      moved[static_cast<std::size_t>(p - 1)] -= c;
      moved[static_cast<std::size_t>(m + q - 1)] += c;
      shifts.push_back(c);
      if (searchSubsets(candidates, t + 1, chosen, maxLen, moved, target, m, n, bound, shifts,
                        witness)) {
        return true;
      }
      shifts.pop_back();
    }
    chosen.pop_back();
  }
  return false;
}

} // namespace

LinkageWitness linkageGl(int m, int n, const Weight& lambda, const Weight& mu, int bound) {
  const std::size_t rank = static_cast<std::size_t>(m + n);
  if (lambda.size() != rank || mu.size() != rank) {
    throw std::invalid_argument("weight length must be m + n");
  }
  for (const Weight* w : {&lambda, &mu}) {
    for (const Rational& c : *w) {
      if (c.get_den() != 1) throw std::invalid_argument("linkage requires integral weights");
    }
  }
  const Weight rho = rhoGl(m, n);
  Weight lamRho(rank), muRho(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    lamRho[i] = lambda[i] + rho[i];
    muRho[i] = mu[i] + rho[i];
  }
  // isotropic odd roots annihilating lambda + rho:
  // <v, eps_p - delta_q> = v_p + v_{m+q}
  std::vector<std::pair<int, int>> candidates;
  for (int p = 1; p <= m; ++p) {
    for (int q = 1; q <= n; ++q) {
      if (isZero(lamRho[static_cast<std::size_t>(p - 1)] +
                 lamRho[static_cast<std::size_t>(m + q - 1)])) {
        candidates.emplace_back(p, q);
      }
    }
  }
  LinkageWitness witness;
  std::vector<std::pair<int, int>> chosen;
  std::vector<long> shifts;
  searchSubsets(candidates, 0, chosen, static_cast<std::size_t>(std::min(m, n)), lamRho, muRho,
                m, n, bound, shifts, witness);
  return witness;
}

Rational casimirScalarOsp22(const Weight& lambda) {
  if (lambda.size() != 2) throw std::invalid_argument("osp(2|2) weights have two coordinates");
  const Rational t = lambda[1] - 1;
  return t * t - 1;
}

bool typicalOsp22(const Weight& lambda) {
  if (lambda.size() != 2) throw std::invalid_argument("osp(2|2) weights have two coordinates");
  return !isZero((lambda[0] - lambda[1]) * (lambda[0] + lambda[1] - 2));
}

} // namespace superw
