#include "superw/whittaker.hpp"

#include "superw/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace superw {

void ModuleVector::add(unsigned mask, int k, const Rational& coeff) {
  if (superw::isZero(coeff)) return;
  const auto key = std::make_pair(mask, k);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (superw::isZero(it->second)) terms_.erase(it);
  }
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& other) {
  for (const auto& [key, c] : other.terms_) add(key.first, key.second, c);
  return *this;
}

ModuleVector ModuleVector::operator+(const ModuleVector& other) const {
  ModuleVector out = *this;
  out += other;
  return out;
}

ModuleVector ModuleVector::operator-(const ModuleVector& other) const {
  return *this + other * Rational(-1);
}

ModuleVector ModuleVector::operator*(const Rational& factor) const {
  ModuleVector out;
  if (superw::isZero(factor)) return out;
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, c * factor);
  return out;
}

Rational ModuleVector::coeff(unsigned mask, int k) const {
  auto it = terms_.find({mask, k});
  return it == terms_.end() ? Rational(0) : it->second;
}

ModuleVector ModuleVector::basis(unsigned mask, int k) {
  ModuleVector v;
  v.add(mask, k, 1);
  return v;
}

namespace {

using Poly = std::vector<Rational>; // coefficient of h^i at position i

Poly shiftedPower(long shift, int k) {
  Poly p{Rational(1)};
  for (int step = 0; step < k; ++step) {
    Poly next(p.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] += p[i] * Rational(shift);
    }
    p = std::move(next);
  }
  return p;
}

Poly multiplyPoly(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

int countBitsBelow(unsigned mask, int position) {
  int count = 0;
  for (int t = 0; t < position; ++t) {
    if (mask & (1u << t)) ++count;
  }
  return count;
}

} // namespace

TypeIModule TypeIModule::forGl12(const LieSuperalgebra& A, const Weight& lambda) {
  if (A.family() != Family::GL || A.params() != std::vector<int>{1, 2}) {
    throw std::invalid_argument("expected gl(1|2)");
  }
  if (lambda.size() != 3) throw std::invalid_argument("gl(1|2) weights have three coordinates");
  TypeIModule M;
  M.A_ = &A;
  M.lambda_ = lambda;
  M.freeOdd_ = {A.indexOf("E_{21}"), A.indexOf("E_{31}")};
  M.zeroOdd_ = {A.indexOf("E_{12}"), A.indexOf("E_{13}")};
  M.e_ = SuperVector::basis(A.indexOf("E_{32}"));
  M.f_ = SuperVector::basis(A.indexOf("E_{23}"));
  M.h_ = SuperVector::basis(A.indexOf("E_{33}")) - SuperVector::basis(A.indexOf("E_{22}"));
  M.centrals_.emplace_back(SuperVector::basis(A.indexOf("E_{11}")), lambda[0]);
  M.centrals_.emplace_back(
      SuperVector::basis(A.indexOf("E_{22}")) + SuperVector::basis(A.indexOf("E_{33}")),
      lambda[1] + lambda[2]);
  const Rational mu = lambda[1] - lambda[2]; // lambda(-h); gamma = mu^2 + 2mu
  M.gamma_ = mu * mu + 2 * mu;
  return M;
}

TypeIModule TypeIModule::forOsp22(const LieSuperalgebra& A, const Weight& lambda) {
  if (A.family() != Family::OSP22) throw std::invalid_argument("expected osp(2|2)");
  if (lambda.size() != 2) throw std::invalid_argument("osp(2|2) weights have two coordinates");
  TypeIModule M;
  M.A_ = &A;
  M.lambda_ = lambda;
  M.freeOdd_ = {A.indexOf("V"), A.indexOf("U")};
  M.zeroOdd_ = {A.indexOf("X"), A.indexOf("Y")};
  M.e_ = SuperVector::basis(A.indexOf("e"));
  M.f_ = SuperVector::basis(A.indexOf("f"));
  M.h_ = SuperVector::basis(A.indexOf("h"));
  M.centrals_.emplace_back(SuperVector::basis(A.indexOf("h'")), lambda[0]);
  M.gamma_ = casimirScalarOsp22(lambda);
  return M;
}

TypeIModule TypeIModule::forP2(const LieSuperalgebra& A, const Weight& lambda) {
  if (A.family() != Family::P || A.params() != std::vector<int>{2}) {
    throw std::invalid_argument("expected p(2)");
  }
  if (lambda.size() != 2) throw std::invalid_argument("p(2) weights have two coordinates");
  TypeIModule M;
  M.A_ = &A;
  M.lambda_ = lambda;
  M.freeOdd_ = {A.indexOf("y_{12}")};
  M.zeroOdd_ = {A.indexOf("s_{11}"), A.indexOf("s_{12}"), A.indexOf("s_{22}")};
  M.e_ = SuperVector::basis(A.indexOf("e_{21}"));
  M.f_ = SuperVector::basis(A.indexOf("e_{12}"));
  M.h_ = SuperVector::basis(A.indexOf("e_{22}")) - SuperVector::basis(A.indexOf("e_{11}"));
  M.centrals_.emplace_back(
      SuperVector::basis(A.indexOf("e_{11}")) + SuperVector::basis(A.indexOf("e_{22}")),
      lambda[0] + lambda[1]);
  const Rational mu = lambda[0] - lambda[1];
  M.gamma_ = mu * mu + 2 * mu;
  return M;
}

ModuleVector TypeIModule::actFree(int position, const ModuleVector& vec) const {
  ModuleVector out;
  for (const auto& [key, c] : vec.terms()) {
    const auto [mask, k] = key;
    if (mask & (1u << position)) continue; // repeated odd factor
    const int sign = countBitsBelow(mask, position) % 2 ? -1 : 1;
    out.add(mask | (1u << position), k, c * sign);
  }
  return out;
}

ModuleVector TypeIModule::actEvenCore(const SuperVector& z, unsigned mask, int k,
                                      int kLimit) const {
  // decompose z over {e, f, h, centrals}
  const int dim = A_->dim();
  const int cols = 3 + static_cast<int>(centrals_.size());
  RatMatrix mat = RatMatrix::Zero(dim, cols);
  auto fill = [&](int col, const SuperVector& v) {
    for (const auto& [idx, c] : v.terms()) mat(idx, col) = c;
  };
  fill(0, e_);
  fill(1, f_);
  fill(2, h_);
  for (std::size_t i = 0; i < centrals_.size(); ++i) fill(3 + static_cast<int>(i),
                                                          centrals_[i].first);
  RatVector rhs = RatVector::Zero(dim);
  for (const auto& [idx, c] : z.terms()) rhs(idx) = c;
  const RatVector coeffs = solveExact(mat, rhs);

  Poly result(static_cast<std::size_t>(k) + 1, Rational(0));
  auto accumulate = [&](const Poly& p, const Rational& scale) {
    if (superw::isZero(scale)) return;
    if (p.size() > result.size()) result.resize(p.size(), Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) result[i] += p[i] * scale;
  };
  // e h^k v = (h-2)^k (gamma - h^2 + 2h)/4 v
  if (!superw::isZero(coeffs(0))) {
    Poly p{gamma_ / 4, Rational(1, 2), Rational(-1, 4)};
    accumulate(multiplyPoly(shiftedPower(-2, k), p), coeffs(0));
  }
  // f h^k v = (h+2)^k v
  accumulate(shiftedPower(2, k), coeffs(1));
  // h h^k v = h^{k+1} v
  {
    Poly p(static_cast<std::size_t>(k) + 2, Rational(0));
    p.back() = 1;
    accumulate(p, coeffs(2));
  }
  Rational centralScale = 0;
  for (std::size_t i = 0; i < centrals_.size(); ++i) {
    centralScale += coeffs(3 + static_cast<int>(i)) * centrals_[i].second;
  }
  {
    Poly p(static_cast<std::size_t>(k) + 1, Rational(0));
    p.back() = 1;
    accumulate(p, centralScale);
  }

  ModuleVector out;
  for (std::size_t i = 0; i < result.size(); ++i) {
    if (superw::isZero(result[i])) continue;
    if (static_cast<int>(i) > kLimit) {
      throw TruncationOverflow("h-power above the truncation bound");
    }
    out.add(mask, static_cast<int>(i), result[i]);
  }
  return out;
}

ModuleVector TypeIModule::actEven(const SuperVector& z, const ModuleVector& vec,
                                  int kLimit) const {
  ModuleVector out;
  for (const auto& [key, c] : vec.terms()) {
    const auto [mask, k] = key;
    // commute z through each free odd factor: z xi = xi z + [z, xi]
    for (int t = 0; t < static_cast<int>(freeOdd_.size()); ++t) {
      if (!(mask & (1u << t))) continue;
      const SuperVector br =
          A_->bracket(z, SuperVector::basis(freeOdd_[static_cast<std::size_t>(t)]));
      const unsigned rest = mask & ~(1u << t);
      const int slotT = countBitsBelow(mask, t);
      for (const auto& [idx, bc] : br.terms()) {
        const auto pos = std::find(freeOdd_.begin(), freeOdd_.end(), idx);
        if (pos == freeOdd_.end()) {
          throw std::logic_error("even bracket leaves the free odd layer");
        }
        const int q = static_cast<int>(pos - freeOdd_.begin());
        if (rest & (1u << q)) continue;
        const int slotQ = countBitsBelow(rest, q);
        const int sign = (slotT - slotQ) % 2 ? -1 : 1;
        out.add(rest | (1u << q), k, c * bc * sign);
      }
    }
    out += actEvenCore(z, mask, k, kLimit) * c;
  }
  return out;
}

ModuleVector TypeIModule::actZeroOdd(int index, unsigned mask, int k, int kLimit) const {
  if (mask == 0) return {}; // the layer annihilates the core generator
  int s1 = 0;
  while (!(mask & (1u << s1))) ++s1;
  const unsigned rest = mask & ~(1u << s1);
  // x xi_s R = [x, xi_s] R - xi_s x R
  const SuperVector br = A_->bracket(SuperVector::basis(index),
                                     SuperVector::basis(freeOdd_[static_cast<std::size_t>(s1)]));
  ModuleVector out = actEven(br, ModuleVector::basis(rest, k), kLimit);
  out += actFree(s1, actZeroOdd(index, rest, k, kLimit)) * Rational(-1);
  return out;
}

ModuleVector TypeIModule::act(const SuperVector& x, const ModuleVector& vec, int kLimit) const {
  ModuleVector out;
  SuperVector even;
  for (const auto& [idx, c] : x.terms()) {
    if (A_->parity(idx) == Parity::Even) {
      even.add(idx, c);
      continue;
    }
    const auto freePos = std::find(freeOdd_.begin(), freeOdd_.end(), idx);
    if (freePos != freeOdd_.end()) {
      out += actFree(static_cast<int>(freePos - freeOdd_.begin()), vec) * c;
      continue;
    }
    if (std::find(zeroOdd_.begin(), zeroOdd_.end(), idx) == zeroOdd_.end()) {
      throw std::logic_error("odd element outside both layers");
    }
    for (const auto& [key, vc] : vec.terms()) {
      out += actZeroOdd(idx, key.first, key.second, kLimit) * (c * vc);
    }
  }
  if (!even.isZero()) out += actEven(even, vec, kLimit);
  return out;
}

std::string TypeIModule::basisLabel(unsigned mask, int k) const {
  std::ostringstream out;
  for (int t = 0; t < static_cast<int>(freeOdd_.size()); ++t) {
    if (mask & (1u << t)) out << A_->label(freeOdd_[static_cast<std::size_t>(t)]) << " ";
  }
  if (k == 1) out << "h ";
  if (k > 1) out << "h^" << k << " ";
  out << "v";
  return out.str();
}

std::string TypeIModule::describe(const ModuleVector& vec) const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : vec.terms()) {
    if (!first) out << " + ";
    first = false;
    out << rationalToString(c) << "*" << basisLabel(key.first, key.second);
  }
  if (first) out << "0";
  return out.str();
}

namespace {

struct TruncatedSolve {
  int dimension = 0;
  std::vector<ModuleVector> basis;
};

TruncatedSolve solveAtTruncation(const TypeIModule& M, const NilpotentData& nil, bool evenOnly,
                                 int K) {
  const LieSuperalgebra& A = M.algebra();
  const int maskCount = 1 << static_cast<int>(M.freeOdd().size());
  const int margin = K + 3;
  const int cols = maskCount * (K + 1);
  auto colOf = [&](unsigned mask, int k) { return static_cast<int>(mask) * (K + 1) + k; };
  auto rowOf = [&](int constraint, unsigned mask, int k) {
    return constraint * maskCount * (margin + 1) + static_cast<int>(mask) * (margin + 1) + k;
  };

  std::vector<int> generators;
  for (int i : nil.mBasis) {
    if (evenOnly && A.parity(i) == Parity::Odd) continue;
    generators.push_back(i);
  }

  RatMatrix mat =
      RatMatrix::Zero(static_cast<Eigen::Index>(generators.size()) * maskCount * (margin + 1),
                      cols);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const SuperVector x = SuperVector::basis(generators[g]);
    const Rational zv = nil.zeta.value(generators[g]);
    for (unsigned mask = 0; mask < static_cast<unsigned>(maskCount); ++mask) {
      for (int k = 0; k <= K; ++k) {
        ModuleVector w = M.act(x, ModuleVector::basis(mask, k), margin);
        w.add(mask, k, -zv);
        for (const auto& [key, c] : w.terms()) {
          mat(rowOf(static_cast<int>(g), key.first, key.second), colOf(mask, k)) = c;
        }
      }
    }
  }

  const RatMatrix kernel = nullspaceBasis(std::move(mat));
  TruncatedSolve out;
  out.dimension = static_cast<int>(kernel.cols());
  for (Eigen::Index j = 0; j < kernel.cols(); ++j) {
    ModuleVector v;
    for (unsigned mask = 0; mask < static_cast<unsigned>(maskCount); ++mask) {
      for (int k = 0; k <= K; ++k) {
        v.add(mask, k, kernel(colOf(mask, k), j));
      }
    }
    out.basis.push_back(std::move(v));
  }
  return out;
}

} // namespace

WhittakerSolution whittakerVectors(const TypeIModule& M, const NilpotentData& nil, bool evenOnly,
                                   int K) {
  TruncatedSolve atK = solveAtTruncation(M, nil, evenOnly, K);
  TruncatedSolve atNext = solveAtTruncation(M, nil, evenOnly, K + 1);

  WhittakerSolution sol;
  sol.dimension = atK.dimension;
  sol.stable = atK.dimension == atNext.dimension;
  sol.basis = std::move(atK.basis);

  // re-verify every returned vector exactly
  for (const ModuleVector& w : sol.basis) {
    for (int i : nil.mBasis) {
      if (evenOnly && M.algebra().parity(i) == Parity::Odd) continue;
      ModuleVector r = M.act(SuperVector::basis(i), w, K + 3) - w * nil.zeta.value(i);
      if (!r.isZero()) throw std::logic_error("solver returned a non-Whittaker vector");
    }
  }
  return sol;
}

UEAElement reduceInQ(const PBWEngine& engine, const WhittakerCharacter& zeta,
                     const UEAElement& u) {
  const PBWOrder& order = engine.order();
  UEAElement out;
  for (const auto& [mon, c] : u.terms()) {
    Rational scale = c;
    PBWMonomial head;
    for (const auto& [rank, exp] : mon.factors) {
      if (rank >= order.firstMRank()) {
        const Rational zv = zeta.value(order.indexAt(rank));
        for (int t = 0; t < exp && !superw::isZero(scale); ++t) scale *= zv;
      } else {
        head.factors.emplace_back(rank, exp);
      }
    }
    out.add(head, scale);
  }
  return out;
}

std::vector<Rational> osp12WhittakerSeries(const Rational& lamH, int K) {
  if (K < 0) throw std::invalid_argument("negative truncation");
  std::vector<Rational> a{Rational(1)};
  for (int k = 0; k < K; ++k) {
    const Rational denom = Rational(k) + lamH;
    if (superw::isZero(denom)) {
      throw std::domain_error("singular weight: lambda(h) = " + rationalToString(Rational(-k)));
    }
    a.push_back(-a.back() / (Rational(k + 1) * denom));
  }
  return a;
}

namespace {

// coordinates of an element of U({E, e, h, f, F}) applied to the highest
// weight vector: f and F annihilate it, h acts by lamH
std::map<std::pair<int, int>, Rational> evaluateOnVerma(const PBWEngine& engine,
                                                        const UEAElement& u,
                                                        const Rational& lamH) {
  std::map<std::pair<int, int>, Rational> out;
  for (const auto& [mon, c] : u.terms()) {
    int s = 0, t = 0;
    Rational scale = c;
    bool alive = true;
    for (const auto& [rank, exp] : mon.factors) {
      switch (rank) {
        case 0: s = exp; break;
        case 1: t = exp; break;
        case 2:
          for (int i = 0; i < exp; ++i) scale *= lamH;
          break;
        default: alive = false; break;
      }
      if (!alive) break;
    }
    if (!alive || superw::isZero(scale)) continue;
    auto key = std::make_pair(s, t);
    auto it = out.find(key);
    if (it == out.end()) {
      out.emplace(key, scale);
    } else {
      it->second += scale;
      if (superw::isZero(it->second)) out.erase(it);
    }
  }
  return out;
}

} // namespace

bool osp12VerifySeries(const LieSuperalgebra& A, const Rational& lamH,
                       const std::vector<Rational>& coeffs) {
  if (A.family() != Family::OSP12) throw std::invalid_argument("expected osp(1|2)");
  PBWEngine engine(A, PBWOrder::fromSequence(A, {A.indexOf("E"), A.indexOf("e"), A.indexOf("h"),
                                                 A.indexOf("f"), A.indexOf("F")}));
  const int K = static_cast<int>(coeffs.size()) - 1;

  auto applyToSeries = [&](int genIndex) {
    std::map<std::pair<int, int>, Rational> acc;
    for (int k = 0; k <= K; ++k) {
      if (superw::isZero(coeffs[static_cast<std::size_t>(k)])) continue;
      UEAElement ek;
      PBWMonomial mon;
      if (k > 0) mon.factors.emplace_back(1, k);
      ek.add(mon, coeffs[static_cast<std::size_t>(k)]);
      const UEAElement moved = engine.multiply(engine.generator(genIndex), ek);
      for (const auto& [key, c] : evaluateOnVerma(engine, moved, lamH)) {
        acc[key] += c;
        if (superw::isZero(acc[key])) acc.erase(key);
      }
    }
    return acc;
  };

  // f w = w through degree K - 1
  const auto fw = applyToSeries(A.indexOf("f"));
  for (int t = 0; t < K; ++t) {
    Rational got = 0;
    if (auto it = fw.find({0, t}); it != fw.end()) got = it->second;
    if (got != coeffs[static_cast<std::size_t>(t)]) return false;
  }
  for (const auto& [key, c] : fw) {
    if (key.first != 0 && key.second < K) return false;
  }

  // F w != 0
  return !applyToSeries(A.indexOf("F")).empty();
}

} // namespace superw
